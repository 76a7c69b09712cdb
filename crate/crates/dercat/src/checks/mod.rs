//! The registry of named verification checks. Every computational claim
//! the library is organized around has a check id here; `run_all` is the
//! acceptance gate and the CLI front end for `verify`. Reports are
//! deterministic given the parameters and seed (wall time is kept out of
//! the JSON payload for that reason).

pub mod fixtures;

use std::time::{Duration, Instant};

use serde_json::{json, Map, Value};

use crate::algebra::{build_algebra, path_count};
use crate::braid::{
    standard_collection, twisted_collection, GroupWord, ShiftDecision, ShiftWitness,
};
use crate::complex::{from_module, rhom_dims, GradedDims, ProjComplex};
use crate::exec::{map_indexed, ExecMode};
use crate::functors::{is_spherical, nakayama, one_spherical, twist, twist_inverse};
use crate::json::{graded_dims_to_json, shift_decision_to_json};
use crate::rep::{
    fixture_s_minus, fixture_s_plus, hom_space, injective, is_isomorphic, projective,
};
use crate::{Error, Result};

/// Default seed for the randomized isomorphism search; overridable via the
/// `DERCAT_SEED` environment variable in the CLI.
pub const DEFAULT_SEED: u64 = 0xd15c0;

#[derive(Clone, Debug)]
pub struct CheckParams {
    /// Restrict to a single number of vertices (default: the check's range).
    pub mu: Option<usize>,
    /// Restrict to a single twist power for the checks that sweep one.
    pub k: Option<i64>,
    pub seed: u64,
}

impl Default for CheckParams {
    fn default() -> Self {
        CheckParams {
            mu: None,
            k: None,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckStatus {
    Pass,
    Fail,
    Inconclusive,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub id: &'static str,
    pub anchor: &'static str,
    pub status: CheckStatus,
    pub data: Value,
    pub wall: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    /// Deterministic JSON view (no timing data).
    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "anchor": self.anchor,
            "status": self.status.as_str(),
            "data": self.data,
        })
    }
}

struct RunCtx {
    mus: Vec<usize>,
    ks: Vec<i64>,
    seed: u64,
}

struct Entry {
    id: &'static str,
    anchor: &'static str,
    mus: &'static [usize],
    ks: &'static [i64],
    run: fn(&RunCtx) -> (CheckStatus, Value),
}

const K_RANGE: &[i64] = &[-3, -2, -1, 0, 1, 2, 3];
const K_NONZERO: &[i64] = &[-3, -2, -1, 1, 2, 3];

static REGISTRY: &[Entry] = &[
    Entry {
        id: "prop.path-basis",
        anchor: "Hom(P(i), P(j)) has the paths j -> i as a basis; dimensions match path counts",
        mus: &[1, 2, 3, 4, 5, 6, 7, 8],
        ks: &[],
        run: check_path_basis,
    },
    Entry {
        id: "prop.ep-strong",
        anchor: "the standard collection (P(mu), ..., P(1)) is a full strong exceptional collection",
        mus: &[4, 5, 6, 7, 8],
        ks: &[],
        run: check_ep_strong,
    },
    Entry {
        id: "prop.gldim",
        anchor: "the algebra has global dimension mu - 1",
        mus: &[2, 3, 4, 5, 6, 7, 8],
        ks: &[],
        run: check_gldim,
    },
    Entry {
        id: "prop.serre-proj",
        anchor: "the Serre functor sends P(i) to I(i)",
        mus: &[4, 5, 6],
        ks: &[],
        run: check_serre_proj,
    },
    Entry {
        id: "prop.s_i-spherical",
        anchor: "the cones S_i over a+b are 1-spherical with the four-case RHom(S_i, S_j) table",
        mus: &[4, 5, 6],
        ks: &[],
        run: check_si_spherical,
    },
    Entry {
        id: "prop.braid-identification",
        anchor: "acting by the braid letter s_i equals applying the inverse twist along S_i",
        mus: &[4, 5, 6],
        ks: &[],
        run: check_braid_identification,
    },
    Entry {
        id: "lemma.spm-resolutions",
        anchor: "the stored projective and injective resolutions of the thin modules are exact and reproducible",
        mus: &[4],
        ks: &[],
        run: check_spm_resolutions,
    },
    Entry {
        id: "lemma.spm-3spherical",
        anchor: "the thin modules are 3-spherical; RHom into P(i) is one-dimensional in degree 3; RHom into the S_i and into each other vanishes",
        mus: &[4],
        ks: &[],
        run: check_spm_3spherical,
    },
    Entry {
        id: "eq.ses",
        anchor: "the four stored sequences 0 -> P(i) -> S+ (+) S- -> I(i) -> 0 are exact",
        mus: &[4],
        ks: &[],
        run: check_ses,
    },
    Entry {
        id: "sec31.commute",
        anchor: "the twists along the thin modules commute with the twists along the S_i on generators",
        mus: &[4],
        ks: &[],
        run: check_commute,
    },
    Entry {
        id: "sec31.serre-factor",
        anchor: "generator-level factorization: the shifted Serre image of P(i) matches the composite of the inverse twists along the thin modules, in either order (checked objectwise only)",
        mus: &[4],
        ks: &[],
        run: check_serre_factor,
    },
    Entry {
        id: "sec32.rhom-2k",
        anchor: "RHom(P(j), T^k P(i)) is one-dimensional in degrees 0 and 2k for j >= 5, i <= 4",
        mus: &[5, 6],
        ks: K_RANGE,
        run: check_rhom_2k,
    },
    Entry {
        id: "sec32.not-strong",
        anchor: "the twisted collections with k != 0 are not strong and no shift vector can make them strong",
        mus: &[5, 6],
        ks: K_NONZERO,
        run: check_not_strong,
    },
    Entry {
        id: "props.braid-relations",
        anchor: "object-level braid group relations on the standard collection: braid and far commutation, cancellation of inverse letters, strongness along pure braid words",
        mus: &[4, 5],
        ks: &[],
        run: check_braid_relations,
    },
];

/// Tags each in-scope claim family and the checks that cover it; the suite
/// asserts that `verify --all` exercises every tag.
pub static COVERAGE: &[(&str, &[&str])] = &[
    ("hom-basis-paths", &["prop.path-basis"]),
    ("ep-full-strong", &["prop.ep-strong"]),
    ("global-dimension", &["prop.gldim"]),
    ("serre-on-projectives", &["prop.serre-proj"]),
    ("one-spherical-generators", &["prop.s_i-spherical"]),
    ("braid-twist-identification", &["prop.braid-identification"]),
    ("mutation-group-action", &["props.braid-relations"]),
    ("spm-resolutions", &["lemma.spm-resolutions"]),
    ("spm-3-spherical", &["lemma.spm-3spherical"]),
    ("spm-ses", &["eq.ses"]),
    ("twist-commutation", &["sec31.commute"]),
    ("serre-factorization", &["sec31.serre-factor"]),
    ("twisted-rhom-2k", &["sec32.rhom-2k"]),
    ("twisted-not-strong", &["sec32.not-strong"]),
];

pub fn check_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|e| e.id).collect()
}

fn make_ctx(entry: &Entry, params: &CheckParams) -> Result<RunCtx> {
    let mus = match params.mu {
        Some(mu) => {
            if !entry.mus.contains(&mu) {
                return Err(Error::NotApplicable {
                    id: entry.id.to_string(),
                    mu,
                });
            }
            vec![mu]
        }
        None => entry.mus.to_vec(),
    };
    let ks = match (entry.ks.is_empty(), params.k) {
        (true, _) => vec![],
        (false, Some(k)) => {
            if !entry.ks.contains(&k) {
                return Err(Error::Parse(format!(
                    "check `{}` does not sweep k = {k}",
                    entry.id
                )));
            }
            vec![k]
        }
        (false, None) => entry.ks.to_vec(),
    };
    Ok(RunCtx {
        mus,
        ks,
        seed: params.seed,
    })
}

pub fn run_check(id: &str, params: &CheckParams) -> Result<CheckReport> {
    let entry = REGISTRY
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))?;
    let ctx = make_ctx(entry, params)?;
    let start = Instant::now();
    let (status, data) = (entry.run)(&ctx);
    Ok(CheckReport {
        id: entry.id,
        anchor: entry.anchor,
        status,
        data,
        wall: start.elapsed(),
    })
}

/// Runs every check applicable to the parameters, in registry order.
pub fn run_all(params: &CheckParams, mode: ExecMode) -> Vec<CheckReport> {
    let entries: Vec<&Entry> = REGISTRY
        .iter()
        .filter(|e| params.mu.is_none_or(|mu| e.mus.contains(&mu)))
        .collect();
    map_indexed(mode, entries.len(), |i| {
        let entry = entries[i];
        let ctx = make_ctx(entry, params).expect("filtered entries are applicable");
        let start = Instant::now();
        let (status, data) = (entry.run)(&ctx);
        CheckReport {
            id: entry.id,
            anchor: entry.anchor,
            status,
            data,
            wall: start.elapsed(),
        }
    })
}

/// Deterministic JSON report for a batch of checks.
pub fn report_to_json(reports: &[CheckReport], seed: u64) -> Value {
    json!({
        "schema": 1,
        "seed": seed,
        "all_pass": reports.iter().all(CheckReport::passed),
        "checks": reports.iter().map(CheckReport::to_json).collect::<Vec<_>>(),
    })
}

fn status_of(ok: bool) -> CheckStatus {
    if ok {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    }
}

// ---------------------------------------------------------------------
// the individual checks

fn check_path_basis(ctx: &RunCtx) -> (CheckStatus, Value) {
    let mut ok = true;
    let mut data = Map::new();
    for &mu in &ctx.mus {
        let alg = build_algebra(mu as i64).unwrap();
        let mut dims = Map::new();
        for i in 1..=mu {
            for j in 1..=mu {
                let h = hom_space(&projective(&alg, i).unwrap(), &projective(&alg, j).unwrap());
                let expected = path_count(j, i);
                if h.len() != expected {
                    ok = false;
                }
                if !h.is_empty() {
                    dims.insert(format!("{i},{j}"), json!(h.len()));
                }
            }
        }
        data.insert(format!("mu={mu}"), Value::Object(dims));
    }
    (status_of(ok), Value::Object(data))
}

fn check_ep_strong(ctx: &RunCtx) -> (CheckStatus, Value) {
    let mut ok = true;
    let mut data = Map::new();
    for &mu in &ctx.mus {
        let alg = build_algebra(mu as i64).unwrap();
        let ep = standard_collection(&alg);
        let good = ep.is_exceptional() && ep.is_strong() && ep.k_unimodular();
        ok &= good;
        data.insert(
            format!("mu={mu}"),
            json!({
                "exceptional": ep.is_exceptional(),
                "strong": ep.is_strong(),
                "k_unimodular": ep.k_unimodular(),
            }),
        );
    }
    (status_of(ok), Value::Object(data))
}

fn check_gldim(ctx: &RunCtx) -> (CheckStatus, Value) {
    let mut ok = true;
    let mut data = Map::new();
    for &mu in &ctx.mus {
        let alg = build_algebra(mu as i64).unwrap();
        let d = crate::complex::global_dimension(&alg);
        ok &= d == mu - 1;
        data.insert(format!("mu={mu}"), json!(d));
    }
    (status_of(ok), Value::Object(data))
}

fn check_serre_proj(ctx: &RunCtx) -> (CheckStatus, Value) {
    let mut ok = true;
    let mut data = Map::new();
    for &mu in &ctx.mus {
        let alg = build_algebra(mu as i64).unwrap();
        for i in 1..=mu {
            let nk = nakayama(&ProjComplex::single(mu, i, 0));
            let h = nk.cohomology_modules();
            let good = h.len() == 1
                && h.contains_key(&0)
                && is_isomorphic(&h[&0], &injective(&alg, i).unwrap(), ctx.seed);
            ok &= good;
            data.insert(format!("mu={mu},i={i}"), json!(good));
        }
    }
    (status_of(ok), Value::Object(data))
}

fn expected_si_table(d: i64) -> GradedDims {
    match d {
        0 => GradedDims::from_pairs(&[(0, 1), (1, 1)]),
        1 => GradedDims::from_pairs(&[(0, 1)]),
        -1 => GradedDims::from_pairs(&[(1, 1)]),
        _ => GradedDims::empty(),
    }
}

fn check_si_spherical(ctx: &RunCtx) -> (CheckStatus, Value) {
    let mut ok = true;
    let mut inconclusive = false;
    let mut data = Map::new();
    for &mu in &ctx.mus {
        let sph: Vec<ProjComplex> = (1..mu).map(|i| one_spherical(mu, i)).collect();
        let mut table = Map::new();
        for i in 1..mu {
            let cert = is_spherical(&sph[i - 1], 1, ctx.seed);
            match cert.status {
                crate::functors::SphericalStatus::Certified => {}
                crate::functors::SphericalStatus::Inconclusive(_) => inconclusive = true,
                crate::functors::SphericalStatus::NotSpherical(_) => ok = false,
            }
            for j in 1..mu {
                let dims = rhom_dims(&sph[i - 1], &sph[j - 1]);
                if dims != expected_si_table(j as i64 - i as i64) {
                    ok = false;
                }
                if !dims.is_empty() {
                    table.insert(format!("{i},{j}"), graded_dims_to_json(&dims));
                }
            }
        }
        data.insert(format!("mu={mu}"), Value::Object(table));
    }
    let status = if !ok {
        CheckStatus::Fail
    } else if inconclusive {
        CheckStatus::Inconclusive
    } else {
        CheckStatus::Pass
    };
    (status, Value::Object(data))
}

fn check_braid_identification(ctx: &RunCtx) -> (CheckStatus, Value) {
    let mut ok = true;
    let mut data = Map::new();
    for &mu in &ctx.mus {
        let alg = build_algebra(mu as i64).unwrap();
        let ep = standard_collection(&alg);
        for i in 1..mu {
            let word =
                GroupWord::from_letters(mu, vec![crate::braid::BraidLetter::Pos(i)]).unwrap();
            let acted = match ep.act(&word) {
                Ok(c) => c,
                Err(_) => {
                    ok = false;
                    continue;
                }
            };
            let s = one_spherical(mu, i);
            let twisted: Vec<ProjComplex> =
                ep.objects().iter().map(|x| twist_inverse(&s, x)).collect();
            let good = acted
                .objects()
                .iter()
                .zip(&twisted)
                .all(|(a, b)| crate::complex::is_derived_iso(a, b, ctx.seed));
            ok &= good;
            data.insert(format!("mu={mu},i={i}"), json!(good));
        }
    }
    (status_of(ok), Value::Object(data))
}

fn check_spm_resolutions(ctx: &RunCtx) -> (CheckStatus, Value) {
    let alg = build_algebra(4).unwrap();
    match fixtures::selfcheck(&alg, ctx.seed) {
        Ok(items) => {
            let ok = items.iter().all(|it| it.ok);
            let data: Map<String, Value> = items
                .into_iter()
                .map(|it| (it.name, json!(it.ok)))
                .collect();
            (status_of(ok), Value::Object(data))
        }
        Err(e) => (CheckStatus::Fail, json!({ "error": e.to_string() })),
    }
}

fn check_spm_3spherical(ctx: &RunCtx) -> (CheckStatus, Value) {
    let alg = build_algebra(4).unwrap();
    let sp = from_module(&fixture_s_plus(&alg).unwrap());
    let sm = from_module(&fixture_s_minus(&alg).unwrap());
    let mut ok = true;
    let mut data = Map::new();

    for (name, s) in [("s_plus", &sp), ("s_minus", &sm)] {
        let cert = is_spherical(s, 3, ctx.seed);
        ok &= cert.is_certified();
        data.insert(format!("{name}.endo"), graded_dims_to_json(&cert.endo));
        data.insert(format!("{name}.certified"), json!(cert.is_certified()));
        let expected = GradedDims::from_pairs(&[(3, 1)]);
        for i in 1..=4 {
            let dims = rhom_dims(s, &ProjComplex::single(4, i, 0));
            ok &= dims == expected;
            data.insert(format!("{name}.P{i}"), graded_dims_to_json(&dims));
        }
        for i in 1..4 {
            let dims = rhom_dims(s, &one_spherical(4, i));
            ok &= dims.is_empty();
            data.insert(format!("{name}.S{i}"), graded_dims_to_json(&dims));
        }
    }
    let plus_minus = rhom_dims(&sp, &sm);
    ok &= plus_minus.is_empty();
    data.insert("s_plus.s_minus".into(), graded_dims_to_json(&plus_minus));
    data.insert(
        "s_minus.s_plus".into(),
        graded_dims_to_json(&rhom_dims(&sm, &sp)),
    );
    (status_of(ok), Value::Object(data))
}

fn check_ses(_ctx: &RunCtx) -> (CheckStatus, Value) {
    let alg = build_algebra(4).unwrap();
    match fixtures::ses_fixtures(&alg) {
        Ok(list) => {
            let mut ok = true;
            let mut data = Map::new();
            for ses in list {
                let good = crate::rep::verify_short_exact(&ses.incl, &ses.proj).unwrap_or(false);
                ok &= good;
                data.insert(format!("i={}", ses.i), json!(good));
            }
            (status_of(ok), Value::Object(data))
        }
        Err(e) => (CheckStatus::Fail, json!({ "error": e.to_string() })),
    }
}

fn check_commute(ctx: &RunCtx) -> (CheckStatus, Value) {
    let alg = build_algebra(4).unwrap();
    let sp = from_module(&fixture_s_plus(&alg).unwrap());
    let sm = from_module(&fixture_s_minus(&alg).unwrap());
    let mut ok = true;
    let mut data = Map::new();
    for (name, s) in [("s_plus", &sp), ("s_minus", &sm)] {
        for i in 1..4 {
            let si = one_spherical(4, i);
            for p in 1..=4 {
                let x = ProjComplex::single(4, p, 0);
                let a = twist(s, &twist(&si, &x));
                let b = twist(&si, &twist(s, &x));
                let good = crate::complex::is_derived_iso(&a, &b, ctx.seed);
                ok &= good;
                data.insert(format!("{name},S{i},P{p}"), json!(good));
            }
        }
    }
    (status_of(ok), Value::Object(data))
}

fn check_serre_factor(ctx: &RunCtx) -> (CheckStatus, Value) {
    let alg = build_algebra(4).unwrap();
    let sp = from_module(&fixture_s_plus(&alg).unwrap());
    let sm = from_module(&fixture_s_minus(&alg).unwrap());
    let mut ok = true;
    let mut data = Map::new();
    for i in 1..=4 {
        let p = ProjComplex::single(4, i, 0);
        let target = injective(&alg, i).unwrap();
        for (name, first, second) in [("plus_minus", &sm, &sp), ("minus_plus", &sp, &sm)] {
            let doubled = twist_inverse(second, &twist_inverse(first, &p));
            let h = doubled.cohomology_modules();
            // the Serre image of P(i) shifted by [-1] lives in degree 1
            let good =
                h.len() == 1 && h.contains_key(&1) && is_isomorphic(&h[&1], &target, ctx.seed);
            ok &= good;
            data.insert(format!("i={i},{name}"), json!(good));
        }
    }
    (status_of(ok), Value::Object(data))
}

fn expected_twist_dims(k: i64) -> GradedDims {
    let mut g = GradedDims::empty();
    g.add(0, 1);
    g.add(2 * k, 1);
    g
}

fn check_rhom_2k(ctx: &RunCtx) -> (CheckStatus, Value) {
    let mut ok = true;
    let mut data = Map::new();
    for &mu in &ctx.mus {
        let alg = build_algebra(mu as i64).unwrap();
        for &k in &ctx.ks {
            let coll = match twisted_collection(&alg, k) {
                Ok(c) => c,
                Err(_) => {
                    ok = false;
                    continue;
                }
            };
            let expected = expected_twist_dims(k);
            let mut table = Map::new();
            for j in 5..=mu {
                let row = mu - j; // position of P(j)
                for i in 1..=4 {
                    let col = mu - i; // position of T^k P(i)
                    let dims = coll.rhom(row, col);
                    if dims != &expected {
                        ok = false;
                    }
                    table.insert(format!("P{j},T^{k}P{i}"), graded_dims_to_json(dims));
                }
            }
            data.insert(format!("mu={mu},k={k}"), Value::Object(table));
        }
    }
    (status_of(ok), Value::Object(data))
}

fn check_not_strong(ctx: &RunCtx) -> (CheckStatus, Value) {
    let mut ok = true;
    let mut data = Map::new();
    for &mu in &ctx.mus {
        let alg = build_algebra(mu as i64).unwrap();
        for &k in &ctx.ks {
            if k == 0 {
                continue;
            }
            let coll = match twisted_collection(&alg, k) {
                Ok(c) => c,
                Err(_) => {
                    ok = false;
                    continue;
                }
            };
            let not_strong = !coll.is_strong();
            let decision = coll.shift_strongness_obstruction();
            let witness_valid = match &decision {
                ShiftDecision::Unachievable(ShiftWitness::MultiDegree { row, col, dims }) => {
                    coll.rhom(*row, *col) == dims && dims.support().len() >= 2
                }
                ShiftDecision::Unachievable(ShiftWitness::InconsistentCycle { .. }) => true,
                ShiftDecision::Achievable(_) => false,
            };
            ok &= not_strong && witness_valid && coll.is_exceptional();
            data.insert(
                format!("mu={mu},k={k}"),
                json!({
                    "exceptional": coll.is_exceptional(),
                    "strong": coll.is_strong(),
                    "shift_decision": shift_decision_to_json(&decision),
                }),
            );
        }
    }
    (status_of(ok), Value::Object(data))
}

fn check_braid_relations(ctx: &RunCtx) -> (CheckStatus, Value) {
    let mut ok = true;
    let mut data = Map::new();
    for &mu in &ctx.mus {
        let alg = build_algebra(mu as i64).unwrap();
        let ep = standard_collection(&alg);
        let act = |word: &str| -> Option<crate::braid::ExcCollection> {
            GroupWord::parse(word, mu)
                .ok()
                .and_then(|w| ep.act(&w).ok())
        };
        let mut record = |name: String, good: bool, ok: &mut bool| {
            *ok &= good;
            data.insert(format!("mu={mu},{name}"), json!(good));
        };

        for i in 1..mu - 1 {
            let lhs = act(&format!("s{i} s{} s{i}", i + 1));
            let rhs = act(&format!("s{} s{i} s{}", i + 1, i + 1));
            let good = matches!((lhs, rhs), (Some(a), Some(b)) if a.isomorphic_to(&b, ctx.seed));
            record(format!("braid:{i}"), good, &mut ok);
        }
        for i in 1..mu {
            for j in i + 2..mu {
                let lhs = act(&format!("s{i} s{j}"));
                let rhs = act(&format!("s{j} s{i}"));
                let good =
                    matches!((lhs, rhs), (Some(a), Some(b)) if a.isomorphic_to(&b, ctx.seed));
                record(format!("commute:{i},{j}"), good, &mut ok);
            }
        }
        for i in 1..mu {
            let good =
                matches!(act(&format!("s{i} s{i}^-1")), Some(c) if c.isomorphic_to(&ep, ctx.seed));
            record(format!("cancel:{i}"), good, &mut ok);
        }
        // pure braid words keep the collection strong
        for word in ["s1 s1", "s1 s3 s1^-1 s3^-1", "s2 s2"] {
            if GroupWord::parse(word, mu).is_err() {
                continue;
            }
            let good = matches!(act(word), Some(c) if c.is_strong());
            record(format!("pure-strong:{word}"), good, &mut ok);
        }
    }
    (status_of(ok), Value::Object(data))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_are_unique_and_covered() {
        let ids = check_ids();
        let mut dedup = ids.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), ids.len());
        for (tag, checks) in COVERAGE {
            assert!(!checks.is_empty(), "tag {tag} has no checks");
            for c in *checks {
                assert!(
                    ids.contains(c),
                    "coverage tag {tag} references unknown check {c}"
                );
            }
        }
        // every registered check backs some coverage tag
        for id in &ids {
            assert!(
                COVERAGE.iter().any(|(_, cs)| cs.contains(id)),
                "check {id} not claimed by any coverage tag"
            );
        }
    }

    #[test]
    fn unknown_and_inapplicable_checks_error() {
        assert!(matches!(
            run_check("nope", &CheckParams::default()),
            Err(Error::UnknownCheck(_))
        ));
        let params = CheckParams {
            mu: Some(4),
            ..Default::default()
        };
        assert!(matches!(
            run_check("sec32.rhom-2k", &params),
            Err(Error::NotApplicable { .. })
        ));
    }

    #[test]
    fn single_checks_pass_quickly() {
        let params = CheckParams {
            mu: Some(4),
            ..Default::default()
        };
        for id in [
            "prop.gldim",
            "eq.ses",
            "lemma.spm-3spherical",
            "sec31.serre-factor",
        ] {
            let report = run_check(id, &params).unwrap();
            assert_eq!(report.status, CheckStatus::Pass, "{id}: {:?}", report.data);
        }
    }

    #[test]
    fn rhom_2k_with_restricted_k() {
        let params = CheckParams {
            mu: Some(5),
            k: Some(1),
            ..Default::default()
        };
        let report = run_check("sec32.rhom-2k", &params).unwrap();
        assert_eq!(report.status, CheckStatus::Pass);
        let table = &report.data["mu=5,k=1"];
        assert_eq!(table["P5,T^1P2"], serde_json::json!({"0": 1, "2": 1}));
        // at k = 0 the two dimensions collapse into degree zero
        let params = CheckParams {
            mu: Some(5),
            k: Some(0),
            ..Default::default()
        };
        let report = run_check("sec32.rhom-2k", &params).unwrap();
        assert_eq!(report.status, CheckStatus::Pass);
        assert_eq!(
            report.data["mu=5,k=0"]["P5,T^0P3"],
            serde_json::json!({"0": 2})
        );
    }

    #[test]
    fn gldim_data_records_the_dimension() {
        let params = CheckParams {
            mu: Some(6),
            ..Default::default()
        };
        let report = run_check("prop.gldim", &params).unwrap();
        assert_eq!(report.status, CheckStatus::Pass);
        assert_eq!(report.data["mu=6"], serde_json::json!(5));
    }

    #[test]
    fn reports_are_deterministic() {
        let params = CheckParams {
            mu: Some(4),
            ..Default::default()
        };
        let a = run_check("prop.s_i-spherical", &params).unwrap();
        let b = run_check("prop.s_i-spherical", &params).unwrap();
        assert_eq!(
            serde_json::to_string(&a.to_json()).unwrap(),
            serde_json::to_string(&b.to_json()).unwrap()
        );
    }
}
