//! End-to-end checks of the command line surface: exit codes, output
//! shapes, and byte-level determinism of the JSON reports.

use std::process::{Command, Output};

fn dercat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dercat"))
        .args(args)
        .env_remove("DERCAT_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn verify_single_check_passes() {
    let out = dercat(&["verify", "--check", "prop.gldim", "--mu", "4"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("PASS prop.gldim"));
}

#[test]
fn verify_all_at_mu_four_passes() {
    let out = dercat(&["verify", "--all", "--mu", "4"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("checks passed"));
}

#[test]
fn verify_json_is_byte_identical_across_runs() {
    let args = ["verify", "--all", "--mu", "4", "--json", "--seed", "9"];
    let a = dercat(&args);
    let b = dercat(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let doc: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["all_pass"], true);
}

#[test]
fn rhom_prints_the_fingerprint() {
    let out = dercat(&["rhom", "--mu", "4", "S+", "P(2)"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "{3: 1}");
    let out = dercat(&["rhom", "--mu", "4", "--json", "S+", "P(2)"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["rhom"], serde_json::json!({"3": 1}));
}

#[test]
fn act_prints_tables() {
    let out = dercat(&["act", "--mu", "5", "--word", "s1 s1^-1", "--print-table"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("strong: true"));
    assert!(text.contains("(1, 2): {0: 2}"));
}

#[test]
fn act_on_named_collections() {
    let out = dercat(&["act", "--mu", "5", "--collection", "Eprime(1)", "--word", ""]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("exceptional: true"));
    assert!(text.contains("strong: false"));

    let out = dercat(&["act", "--mu", "4", "--collection", "(P(4), P(3), P(2), P(1))", "--word", "s1 s1^-1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("strong: true"));

    assert_eq!(dercat(&["act", "--mu", "4", "--collection", "(P(1), P(2))", "--word", ""]).status.code(), Some(2));
}

#[test]
fn act_with_shift_vector_breaks_strongness() {
    let out = dercat(&["act", "--mu", "4", "--word", "", "--shift", "1,0,0,0"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("strong: false"));
}

#[test]
fn twist_moves_the_projective() {
    let out = dercat(&["twist", "--mu", "4", "cone(P4 -(a3+b3)-> P3)", "1", "P(4)"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "degree 0: P3");
    // negative powers run the inverse twist
    let out = dercat(&["twist", "--mu", "4", "cone(P4 -(a3+b3)-> P3)", "-1", "P(3)"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "degree 0: P4");
}

#[test]
fn resolve_prints_the_strand() {
    let out = dercat(&["resolve", "--mu", "4", "S+"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("degree -3: P4"));
    assert!(text.contains("d(-1) = [[b1]]"));
}

#[test]
fn fixtures_selfcheck_passes() {
    let out = dercat(&["fixtures", "selfcheck"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("PASS s_plus.projective-exact"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        dercat(&["verify", "--check", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(
        dercat(&["verify", "--check", "sec32.rhom-2k", "--mu", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        dercat(&["rhom", "--mu", "4", "Zork", "P(1)"]).status.code(),
        Some(2)
    );
    assert_eq!(
        dercat(&["rhom", "--mu", "0", "P(1)", "P(1)"]).status.code(),
        Some(2)
    );
    assert_eq!(dercat(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        dercat(&["twist", "--mu", "4", "S+", "notanint", "P(1)"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn seed_environment_variable_is_honored() {
    let with_env = Command::new(env!("CARGO_BIN_EXE_dercat"))
        .args(["verify", "--all", "--mu", "4", "--json"])
        .env("DERCAT_SEED", "7")
        .output()
        .expect("binary runs");
    assert!(with_env.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&with_env.stdout).unwrap();
    assert_eq!(doc["seed"], 7);
    // an unparseable value falls back to the built-in default
    let bad_env = Command::new(env!("CARGO_BIN_EXE_dercat"))
        .args(["verify", "--check", "prop.gldim", "--json"])
        .env("DERCAT_SEED", "not-a-number")
        .output()
        .expect("binary runs");
    assert!(bad_env.status.success());
}

#[test]
fn list_shows_registry_ids() {
    let out = dercat(&["list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for id in [
        "prop.path-basis",
        "sec32.not-strong",
        "props.braid-relations",
    ] {
        assert!(text.contains(id));
    }
}
