//! Command line front end: named verification checks, RHom fingerprints,
//! braid actions on the standard collection, twists and resolutions.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check fails,
//! 2 for usage and parse errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use dercat::checks::{self, CheckParams, CheckReport, CheckStatus};
use dercat::dsl;
use dercat::json as djson;
use dercat::{build_algebra, Error, ExecMode, GroupWord, ProjComplex};

#[derive(Parser)]
#[command(
    name = "dercat",
    version,
    about = "exact computations in the derived category of a doubled-arrow gentle algebra",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Number of vertices of the quiver.
    #[arg(long)]
    mu: i64,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run named checks from the registry.
    Verify {
        /// Run every applicable check (default when no --check is given).
        #[arg(long)]
        all: bool,
        /// Run a single check by id.
        #[arg(long, value_name = "ID")]
        check: Option<String>,
        /// Restrict the sweep to one mu.
        #[arg(long)]
        mu: Option<usize>,
        /// Restrict the twist-power sweep to one k.
        #[arg(long)]
        k: Option<i64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
        /// Run the checks on the calling thread only.
        #[arg(long)]
        sequential: bool,
        /// List the available check ids and exit.
        #[arg(long)]
        list: bool,
    },
    /// Print the RHom fingerprint of a pair of objects.
    Rhom {
        #[command(flatten)]
        common: Common,
        /// Source object (e.g. "S+", "P(2)", "cone(P4 -(a3+b3)-> P3)").
        x: String,
        /// Target object.
        y: String,
    },
    /// Act on the standard collection by a braid word and shift vector.
    Act {
        #[command(flatten)]
        common: Common,
        /// Braid word such as "s1 s2^-1 s3".
        #[arg(long, default_value = "")]
        word: String,
        /// Comma-separated shift vector such as "0,1,0,0".
        #[arg(long)]
        shift: Option<String>,
        /// Base collection: "EP", "Eprime(k)", or an explicit tuple of
        /// object expressions.
        #[arg(long, default_value = "EP")]
        collection: String,
        /// Print the full RHom table of the resulting collection.
        #[arg(long)]
        print_table: bool,
    },
    /// Apply the k-fold twist along a (spherical) object to another object.
    Twist {
        #[command(flatten)]
        common: Common,
        /// The twisting object.
        s: String,
        /// The twist power (negative for inverse twists).
        #[arg(allow_negative_numbers = true)]
        k: i64,
        /// The object being twisted.
        x: String,
    },
    /// Print the minimal projective resolution of a module expression.
    Resolve {
        #[command(flatten)]
        common: Common,
        /// Module expression such as "S+", "I(3)", "Simp(1)".
        module: String,
    },
    /// Operations on the stored matrix fixtures.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
    /// Print the check ids together with their claims.
    List,
}

#[derive(Subcommand)]
enum FixturesAction {
    /// Recompute everything derivable and diff against the stored data.
    Selfcheck {
        #[arg(long)]
        json: bool,
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn seed_or_env(seed: Option<u64>) -> u64 {
    seed.or_else(|| {
        std::env::var("DERCAT_SEED")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(checks::DEFAULT_SEED)
}

fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse(_)
            | Error::UnknownCheck(_)
            | Error::NotApplicable { .. }
            | Error::InvalidMu(_)
            | Error::VertexOutOfRange { .. }
            | Error::RequiresMuFour(_)
            | Error::RequiresMuAtLeastFour(_)
    )
}

fn complex_text(x: &ProjComplex) -> String {
    if x.is_zero() {
        return "0 (the zero complex)".into();
    }
    let mut out = String::new();
    for n in x.degrees() {
        let terms: Vec<String> = x.term(n).iter().map(|v| format!("P{v}")).collect();
        out.push_str(&format!("degree {n}: {}\n", terms.join(" (+) ")));
    }
    for n in x.degrees() {
        let d = x.diff(n);
        if d.is_zero() {
            continue;
        }
        let rows: Vec<String> = (0..d.rows())
            .map(|r| {
                let cols: Vec<String> = (0..d.cols())
                    .map(|c| d.get(r, c).map_or_else(|| "0".into(), |e| e.to_string()))
                    .collect();
                format!("[{}]", cols.join(", "))
            })
            .collect();
        out.push_str(&format!("d({n}) = [{}]\n", rows.join("; ")));
    }
    out
}

fn print_report_line(r: &CheckReport) {
    let tag = match r.status {
        CheckStatus::Pass => "PASS",
        CheckStatus::Fail => "FAIL",
        CheckStatus::Inconclusive => "INCONCLUSIVE",
    };
    println!("{tag} {} ({} ms) - {}", r.id, r.wall.as_millis(), r.anchor);
}

fn run() -> Result<u8, Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            all,
            check,
            mu,
            k,
            seed,
            json,
            sequential,
            list,
        } => {
            if list {
                for id in checks::check_ids() {
                    println!("{id}");
                }
                return Ok(0);
            }
            let params = CheckParams {
                mu,
                k,
                seed: seed_or_env(seed),
            };
            let mode = if sequential {
                ExecMode::Sequential
            } else {
                ExecMode::Parallel
            };
            let reports = match (&check, all) {
                (Some(id), _) => vec![checks::run_check(id, &params)?],
                (None, _) => checks::run_all(&params, mode),
            };
            let ok = reports.iter().all(CheckReport::passed);
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&checks::report_to_json(&reports, params.seed))
                        .expect("reports serialize")
                );
            } else {
                for r in &reports {
                    print_report_line(r);
                }
                println!(
                    "{}: {} of {} checks passed",
                    if ok { "ok" } else { "FAILED" },
                    reports.iter().filter(|r| r.passed()).count(),
                    reports.len()
                );
            }
            Ok(if ok { 0 } else { 1 })
        }
        Command::Rhom { common, x, y } => {
            let alg = build_algebra(common.mu)?;
            let xv = dsl::parse_object(&x, &alg)?.into_complex();
            let yv = dsl::parse_object(&y, &alg)?.into_complex();
            let dims = dercat::rhom_dims(&xv, &yv);
            if common.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "schema": 1,
                        "x": x,
                        "y": y,
                        "rhom": djson::graded_dims_to_json(&dims),
                    }))
                    .expect("serializes")
                );
            } else {
                println!("{dims}");
            }
            Ok(0)
        }
        Command::Act {
            common,
            word,
            shift,
            collection,
            print_table,
        } => {
            let alg = build_algebra(common.mu)?;
            let mu = alg.mu();
            let mut w = GroupWord::parse(&word, mu)?;
            if let Some(text) = shift {
                let parts: Result<Vec<i64>, _> =
                    text.split(',').map(|p| p.trim().parse::<i64>()).collect();
                let v = parts.map_err(|_| Error::Parse(format!("bad shift vector `{text}`")))?;
                w = w.with_shift(v)?;
            }
            let base = dsl::parse_collection(&collection, &alg)?;
            let acted = base.act(&w)?;
            if common.json {
                let mut doc = json!({
                    "schema": 1,
                    "provenance": acted.provenance(),
                    "exceptional": acted.is_exceptional(),
                    "strong": acted.is_strong(),
                    "objects": acted.objects().iter().map(djson::complex_to_json).collect::<Vec<_>>(),
                });
                if print_table {
                    doc["table"] = djson::table_to_json(acted.rhom_table());
                }
                println!(
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("serializes")
                );
            } else {
                println!("collection: {}", acted.provenance());
                println!("exceptional: {}", acted.is_exceptional());
                println!("strong: {}", acted.is_strong());
                if print_table {
                    for i in 0..acted.len() {
                        for j in 0..acted.len() {
                            let e = acted.rhom(i, j);
                            if !e.is_empty() {
                                println!("({}, {}): {e}", i + 1, j + 1);
                            }
                        }
                    }
                }
            }
            Ok(0)
        }
        Command::Twist { common, s, k, x } => {
            let alg = build_algebra(common.mu)?;
            let sv = dsl::parse_object(&s, &alg)?.into_complex();
            let xv = dsl::parse_object(&x, &alg)?.into_complex();
            let t = dercat::twist_iter(&sv, k, &xv);
            if common.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "schema": 1,
                        "result": djson::complex_to_json(&t),
                    }))
                    .expect("serializes")
                );
            } else {
                print!("{}", complex_text(&t));
            }
            Ok(0)
        }
        Command::Resolve { common, module } => {
            let alg = build_algebra(common.mu)?;
            let m = dsl::parse_object(&module, &alg)?.into_module()?;
            let res = dercat::from_module(&m);
            if common.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "schema": 1,
                        "module": djson::rep_to_json(&m),
                        "resolution": djson::complex_to_json(&res),
                    }))
                    .expect("serializes")
                );
            } else {
                print!("{}", complex_text(&res));
            }
            Ok(0)
        }
        Command::Fixtures { action } => match action {
            FixturesAction::Selfcheck { json, seed } => {
                let alg = build_algebra(4)?;
                let items = checks::fixtures::selfcheck(&alg, seed_or_env(seed))?;
                let ok = items.iter().all(|it| it.ok);
                if json {
                    let doc = json!({
                        "schema": 1,
                        "all_pass": ok,
                        "items": items
                            .iter()
                            .map(|it| json!({ "name": it.name, "ok": it.ok, "detail": it.detail }))
                            .collect::<Vec<_>>(),
                    });
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&doc).expect("serializes")
                    );
                } else {
                    for it in &items {
                        println!("{} {}", if it.ok { "PASS" } else { "FAIL" }, it.name);
                    }
                }
                Ok(if ok { 0 } else { 1 })
            }
        },
        Command::List => {
            for id in checks::check_ids() {
                println!("{id}");
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    // dying quietly on a closed pipe beats a panic backtrace under `| head`
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if is_usage_error(&e) { 2 } else { 1 })
        }
    }
}
