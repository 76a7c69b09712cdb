//! The explicit matrix fixtures: the four-term projective and injective
//! resolutions of the thin modules and the four short exact sequences
//! `0 -> P(i) -> S+ (+) S- -> I(i) -> 0`. The matrices are stored as data
//! (`fixtures.json`) and never regenerated silently; `selfcheck`
//! recomputes everything derivable and diffs it against the stored values.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::algebra::PathAlgebra;
use crate::complex::{from_module, is_derived_iso, PathMat, ProjComplex};
use crate::dsl::parse_alg_elem;
use crate::functors::nakayama;
use crate::json::parse_rat;
use crate::qmat::QMat;
use crate::rep::{
    fixture_s_minus, fixture_s_plus, injective, projective, verify_short_exact, Rep, RepMap,
};
use crate::{Error, Result};

const FIXTURE_JSON: &str = include_str!("fixtures.json");

type JsonMat = Option<Vec<Vec<String>>>;
type JsonRepMap = Vec<JsonMat>;

#[derive(Deserialize)]
struct FixtureFile {
    schema: u32,
    mu: usize,
    resolutions: BTreeMap<String, ResolutionRaw>,
    ses: Vec<SesRaw>,
}

#[derive(Deserialize)]
struct ResolutionRaw {
    anchor: String,
    projective_terms: Vec<usize>,
    projective_entries: Vec<String>,
    projective_maps: Vec<JsonRepMap>,
    cover: JsonRepMap,
    injective_terms: Vec<usize>,
    unit: JsonRepMap,
    injective_maps: Vec<JsonRepMap>,
}

#[derive(Deserialize)]
struct SesRaw {
    i: usize,
    anchor: String,
    incl: JsonRepMap,
    proj: JsonRepMap,
}

fn parse_file() -> Result<FixtureFile> {
    let file: FixtureFile = serde_json::from_str(FIXTURE_JSON)
        .map_err(|e| Error::Fixture(format!("fixtures.json does not parse: {e}")))?;
    if file.schema != 1 || file.mu != 4 {
        return Err(Error::Fixture("unexpected fixture schema".into()));
    }
    Ok(file)
}

fn build_matrix(data: &JsonMat, rows: usize, cols: usize) -> Result<QMat> {
    let Some(rows_data) = data else {
        return Ok(QMat::zero(rows, cols));
    };
    if rows_data.len() != rows || rows_data.iter().any(|r| r.len() != cols) {
        return Err(Error::Fixture(format!(
            "matrix does not have shape {rows}x{cols}"
        )));
    }
    let mut m = QMat::zero(rows, cols);
    for (r, row) in rows_data.iter().enumerate() {
        for (c, s) in row.iter().enumerate() {
            m.set(r, c, parse_rat(s)?);
        }
    }
    Ok(m)
}

fn build_repmap(source: Rep, target: Rep, data: &JsonRepMap) -> Result<RepMap> {
    if data.len() != source.mu() {
        return Err(Error::Fixture(
            "map data has wrong number of vertices".into(),
        ));
    }
    let maps = (1..=source.mu())
        .map(|v| build_matrix(&data[v - 1], target.dim_at(v), source.dim_at(v)))
        .collect::<Result<Vec<_>>>()?;
    RepMap::new(source, target, maps)
        .map_err(|e| Error::Fixture(format!("stored map is not a homomorphism: {e}")))
}

/// One thin module with its two stored resolutions.
pub struct ResolutionFixture {
    pub name: String,
    pub anchor: String,
    pub module: Rep,
    /// `P(4) -> P(3) -> P(2) -> P(1) -> module`
    pub projective_chain: Vec<RepMap>,
    /// `module -> I(4) -> I(3) -> I(2) -> I(1)`
    pub injective_chain: Vec<RepMap>,
    /// The same projective strand as a complex with path entries, in
    /// degrees -3..0.
    pub proj_complex: ProjComplex,
}

pub struct SesFixture {
    pub i: usize,
    pub anchor: String,
    pub incl: RepMap,
    pub proj: RepMap,
}

pub fn resolution_fixtures(algebra: &PathAlgebra) -> Result<Vec<ResolutionFixture>> {
    if algebra.mu() != 4 {
        return Err(Error::RequiresMuFour(algebra.mu()));
    }
    let file = parse_file()?;
    let mut out = Vec::new();
    for (name, raw) in &file.resolutions {
        let module = match name.as_str() {
            "s_plus" => fixture_s_plus(algebra)?,
            "s_minus" => fixture_s_minus(algebra)?,
            other => return Err(Error::Fixture(format!("unknown fixture module `{other}`"))),
        };
        let terms = &raw.projective_terms;
        if raw.projective_maps.len() + 1 != terms.len() {
            return Err(Error::Fixture("wrong number of projective maps".into()));
        }
        let mut projective_chain = Vec::new();
        for (k, data) in raw.projective_maps.iter().enumerate() {
            let src = projective(algebra, terms[k])?;
            let tgt = projective(algebra, terms[k + 1])?;
            projective_chain.push(build_repmap(src, tgt, data)?);
        }
        projective_chain.push(build_repmap(
            projective(algebra, *terms.last().unwrap())?,
            module.clone(),
            &raw.cover,
        )?);

        let iterms = &raw.injective_terms;
        let mut injective_chain = vec![build_repmap(
            module.clone(),
            injective(algebra, iterms[0])?,
            &raw.unit,
        )?];
        for (k, data) in raw.injective_maps.iter().enumerate() {
            let src = injective(algebra, iterms[k])?;
            let tgt = injective(algebra, iterms[k + 1])?;
            injective_chain.push(build_repmap(src, tgt, data)?);
        }

        // the projective strand as a complex of projectives with path entries
        let mut cterms = BTreeMap::new();
        let mut cdiffs = BTreeMap::new();
        for (k, &v) in terms.iter().enumerate() {
            let deg = -(terms.len() as i64 - 1 - k as i64);
            cterms.insert(deg, vec![v]);
        }
        for (k, entry) in raw.projective_entries.iter().enumerate() {
            let deg = -(terms.len() as i64 - 1 - k as i64);
            let mut m = PathMat::zero(1, 1);
            m.set(0, 0, parse_alg_elem(entry, algebra)?);
            cdiffs.insert(deg, m);
        }
        let proj_complex = ProjComplex::from_parts(4, cterms, cdiffs)?;

        out.push(ResolutionFixture {
            name: name.clone(),
            anchor: raw.anchor.clone(),
            module,
            projective_chain,
            injective_chain,
            proj_complex,
        });
    }
    Ok(out)
}

pub fn ses_fixtures(algebra: &PathAlgebra) -> Result<Vec<SesFixture>> {
    if algebra.mu() != 4 {
        return Err(Error::RequiresMuFour(algebra.mu()));
    }
    let file = parse_file()?;
    let middle = fixture_s_plus(algebra)?.direct_sum(&fixture_s_minus(algebra)?);
    file.ses
        .iter()
        .map(|raw| {
            let incl = build_repmap(projective(algebra, raw.i)?, middle.clone(), &raw.incl)?;
            let proj = build_repmap(middle.clone(), injective(algebra, raw.i)?, &raw.proj)?;
            Ok(SesFixture {
                i: raw.i,
                anchor: raw.anchor.clone(),
                incl,
                proj,
            })
        })
        .collect()
}

/// True iff `0 -> A_0 -> A_1 -> ... -> A_k -> 0` is exact: consecutive
/// composites vanish, ranks complement dimensions at every middle term, the
/// first map is injective and the last surjective.
pub fn verify_exact_sequence(maps: &[RepMap]) -> bool {
    if maps.is_empty() {
        return true;
    }
    let mu = maps[0].source.mu();
    for w in maps.windows(2) {
        if w[0].target != w[1].source || !w[0].compose(&w[1]).is_zero() {
            return false;
        }
        for v in 1..=mu {
            if w[0].at(v).rank() + w[1].at(v).rank() != w[0].target.dim_at(v) {
                return false;
            }
        }
    }
    let first = &maps[0];
    let last = &maps[maps.len() - 1];
    (1..=mu).all(|v| {
        first.at(v).rank() == first.source.dim_at(v) && last.at(v).rank() == last.target.dim_at(v)
    })
}

pub struct SelfcheckItem {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

/// Recomputes everything derivable from the stored fixtures and diffs:
/// exactness of both stored resolutions, agreement of the stored matrices
/// with the evaluated path complex, agreement of the stored injective
/// strand with the Nakayama dual, exactness of the stored short exact
/// sequences, and derived-equivalence of the stored strand with a freshly
/// computed minimal resolution.
pub fn selfcheck(algebra: &PathAlgebra, seed: u64) -> Result<Vec<SelfcheckItem>> {
    let mut items = Vec::new();
    let mut push = |name: String, ok: bool, detail: String| {
        items.push(SelfcheckItem { name, ok, detail });
    };

    for fix in resolution_fixtures(algebra)? {
        push(
            format!("{}.projective-exact", fix.name),
            verify_exact_sequence(&fix.projective_chain),
            "stored projective resolution is exact".into(),
        );
        push(
            format!("{}.injective-exact", fix.name),
            verify_exact_sequence(&fix.injective_chain),
            "stored injective resolution is exact".into(),
        );

        let evaluated = fix.proj_complex.eval();
        let mut eval_ok = true;
        for (k, stored) in fix.projective_chain.iter().take(3).enumerate() {
            let deg = -3 + k as i64;
            match evaluated.diff(deg) {
                Some(d) => {
                    if d.maps != stored.maps {
                        eval_ok = false;
                    }
                }
                None => eval_ok = false,
            }
        }
        push(
            format!("{}.matrices-match-paths", fix.name),
            eval_ok,
            "stored matrices equal the evaluated path entries".into(),
        );

        let dualized = nakayama(&fix.proj_complex);
        let mut nak_ok = true;
        for (k, stored) in fix.injective_chain.iter().skip(1).enumerate() {
            let deg = -3 + k as i64;
            match dualized.diff(deg) {
                Some(d) => {
                    if d.maps != stored.maps {
                        nak_ok = false;
                    }
                }
                None => nak_ok = false,
            }
        }
        push(
            format!("{}.injectives-match-nakayama", fix.name),
            nak_ok,
            "stored injective strand equals the Nakayama dual of the projective strand".into(),
        );

        push(
            format!("{}.derived-matches", fix.name),
            is_derived_iso(&from_module(&fix.module), &fix.proj_complex, seed),
            "freshly computed minimal resolution is isomorphic to the stored strand".into(),
        );
    }

    for ses in ses_fixtures(algebra)? {
        push(
            format!("ses.{}", ses.i),
            verify_short_exact(&ses.incl, &ses.proj)?,
            ses.anchor.clone(),
        );
    }
    Ok(items)
}
