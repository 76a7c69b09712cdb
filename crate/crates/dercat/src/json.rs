//! JSON views of the domain values. Degrees are string keys of signed
//! integers and rationals are `"p/q"` strings, so every payload is lossless
//! and language-neutral. All maps are ordered, which keeps reports
//! byte-identical across runs.

use num_traits::{One, Signed, Zero};
use serde_json::{json, Map, Value};

use crate::algebra::PathKind;
use crate::complex::{GradedDims, ProjComplex};
use crate::rep::{Rep, RepMap};
use crate::{Error, Rat, Result};

pub fn rat_to_string(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((num, den)) => {
            let n: num_bigint::BigInt = num.trim().parse().map_err(|_| bad())?;
            let d: num_bigint::BigInt = den.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => {
            let n: num_bigint::BigInt = s.trim().parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(n))
        }
    }
}

pub fn graded_dims_to_json(g: &GradedDims) -> Value {
    let mut map = Map::new();
    for (d, n) in g.iter() {
        map.insert(d.to_string(), json!(n));
    }
    Value::Object(map)
}

pub fn matrix_to_json(m: &crate::qmat::QMat) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|r| {
            Value::Array(
                (0..m.cols())
                    .map(|c| json!(rat_to_string(m.get(r, c))))
                    .collect(),
            )
        })
        .collect();
    Value::Array(rows)
}

pub fn rep_to_json(m: &Rep) -> Value {
    let mut arrows = Map::new();
    for i in 1..m.mu() {
        arrows.insert(format!("a{i}"), matrix_to_json(m.arrow(PathKind::Alpha, i)));
        arrows.insert(format!("b{i}"), matrix_to_json(m.arrow(PathKind::Beta, i)));
    }
    json!({
        "dim_vector": m.dim_vector(),
        "arrows": Value::Object(arrows),
    })
}

pub fn repmap_to_json(f: &RepMap) -> Value {
    Value::Array(
        (1..=f.source.mu())
            .map(|v| matrix_to_json(f.at(v)))
            .collect(),
    )
}

/// Degree-indexed terms (projective multiplicities) and differentials
/// (entries as rational-coefficient path sums such as `"a1*a2 - b1*b2"`).
pub fn complex_to_json(x: &ProjComplex) -> Value {
    let mut terms = Map::new();
    for n in x.degrees() {
        terms.insert(
            n.to_string(),
            Value::Array(x.term(n).iter().map(|v| json!(format!("P{v}"))).collect()),
        );
    }
    let mut diffs = Map::new();
    for n in x.degrees() {
        let d = x.diff(n);
        if d.is_zero() {
            continue;
        }
        let rows: Vec<Value> = (0..d.rows())
            .map(|r| {
                Value::Array(
                    (0..d.cols())
                        .map(|c| match d.get(r, c) {
                            Some(e) => json!(e.to_string()),
                            None => json!("0"),
                        })
                        .collect(),
                )
            })
            .collect();
        diffs.insert(n.to_string(), Value::Array(rows));
    }
    json!({ "terms": Value::Object(terms), "diffs": Value::Object(diffs) })
}

pub fn shift_decision_to_json(d: &crate::braid::ShiftDecision) -> Value {
    match d {
        crate::braid::ShiftDecision::Achievable(n) => json!({ "achievable": n }),
        crate::braid::ShiftDecision::Unachievable(w) => match w {
            crate::braid::ShiftWitness::MultiDegree { row, col, dims } => json!({
                "unachievable": {
                    "kind": "multi_degree",
                    "row": row,
                    "col": col,
                    "dims": graded_dims_to_json(dims),
                }
            }),
            crate::braid::ShiftWitness::InconsistentCycle {
                row,
                col,
                expected,
                got,
            } => json!({
                "unachievable": {
                    "kind": "inconsistent_cycle",
                    "row": row,
                    "col": col,
                    "expected": expected,
                    "got": got,
                }
            }),
        },
    }
}

pub fn table_to_json(table: &[Vec<GradedDims>]) -> Value {
    let mut map = Map::new();
    for (i, row) in table.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            if !e.is_empty() {
                map.insert(format!("{},{}", i + 1, j + 1), graded_dims_to_json(e));
            }
        }
    }
    Value::Object(map)
}

/// Guard against accidentally emitting non-integral "rationals" that would
/// round-trip badly.
pub fn assert_rat_round_trip(x: &Rat) -> bool {
    parse_rat(&rat_to_string(x))
        .map(|y| &y == x)
        .unwrap_or(false)
        && !x.denom().is_negative()
}
