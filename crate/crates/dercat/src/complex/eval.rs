//! Evaluation of complexes of projectives to complexes of modules, and
//! vertex-wise cohomology with its induced arrow maps.

use std::collections::BTreeMap;

use crate::algebra::paths_between;
use crate::complex::ProjComplex;
use crate::qmat::QMat;
use crate::rep::{cokernel, kernel, proj_sum, Rep, RepMap};
use crate::{Error, Result};

/// A bounded complex of representations.
#[derive(Clone, Debug)]
pub struct RepComplex {
    mu: usize,
    terms: BTreeMap<i64, Rep>,
    diffs: BTreeMap<i64, RepMap>,
    zero: Rep,
}

impl RepComplex {
    pub fn new(mu: usize, terms: BTreeMap<i64, Rep>, diffs: BTreeMap<i64, RepMap>) -> Result<Self> {
        let mut terms = terms;
        terms.retain(|_, t| !t.is_zero());
        let mut diffs = diffs;
        diffs.retain(|_, d| !d.is_zero());
        let c = RepComplex {
            mu,
            terms,
            diffs,
            zero: Rep::zero(mu),
        };
        c.validate()?;
        Ok(c)
    }

    pub fn zero_complex(mu: usize) -> Self {
        RepComplex {
            mu,
            terms: BTreeMap::new(),
            diffs: BTreeMap::new(),
            zero: Rep::zero(mu),
        }
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.terms.keys().copied().collect()
    }

    pub fn term(&self, n: i64) -> &Rep {
        self.terms.get(&n).unwrap_or(&self.zero)
    }

    pub fn diff(&self, n: i64) -> Option<&RepMap> {
        self.diffs.get(&n)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        for (&n, d) in &self.diffs {
            d.validate()?;
            if d.source != *self.term(n) || d.target != *self.term(n + 1) {
                return Err(Error::Endpoints(format!(
                    "module complex differential at degree {n} has wrong endpoints"
                )));
            }
            if let Some(next) = self.diff(n + 1) {
                if !d.compose(next).is_zero() {
                    return Err(Error::Shape(format!(
                        "module complex fails d.d = 0 at degree {n}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Degreewise cohomology with induced arrow maps. Only nonzero modules
    /// appear in the output.
    pub fn cohomology_modules(&self) -> BTreeMap<i64, Rep> {
        let mut out = BTreeMap::new();
        for &n in self.terms.keys() {
            let term = self.term(n);
            let (cycles, incl) = match self.diff(n) {
                Some(d) => kernel(d),
                None => (term.clone(), RepMap::identity(term)),
            };
            let h = match self.diff(n - 1) {
                Some(prev) => {
                    // boundaries land in the cycles; express them there and quotient
                    let maps: Vec<QMat> = (1..=self.mu)
                        .map(|v| {
                            incl.at(v)
                                .solve(prev.at(v))
                                .expect("boundaries are cycles because d.d = 0")
                        })
                        .collect();
                    let into_cycles = RepMap::new(prev.source.clone(), cycles.clone(), maps)
                        .expect("induced map to cycles intertwines");
                    cokernel(&into_cycles).0
                }
                None => cycles,
            };
            if !h.is_zero() {
                out.insert(n, h);
            }
        }
        out
    }
}

impl ProjComplex {
    /// The underlying complex of modules, with the canonical path bases of
    /// the projective sums.
    pub fn eval(&self) -> RepComplex {
        let mu = self.mu();
        let terms: BTreeMap<i64, Rep> = self
            .degrees()
            .iter()
            .map(|&n| (n, proj_sum(mu, self.term(n))))
            .collect();
        let mut diffs = BTreeMap::new();
        for &n in self.degrees().iter() {
            let d = self.diff(n);
            if d.is_zero() {
                continue;
            }
            let src = terms[&n].clone();
            let tgt = terms
                .get(&(n + 1))
                .cloned()
                .unwrap_or_else(|| Rep::zero(mu));
            let src_verts = self.term(n);
            let tgt_verts = self.term(n + 1);
            let maps: Vec<QMat> = (1..=mu)
                .map(|v| {
                    let mut m = QMat::zero(tgt.dim_at(v), src.dim_at(v));
                    let src_off = crate::rep::proj_offsets(src_verts, v);
                    let tgt_off = crate::rep::proj_offsets(tgt_verts, v);
                    for (r, c, e) in d.entries() {
                        let (b, a) = (tgt_verts[r], src_verts[c]);
                        let src_paths = paths_between(a, v);
                        let tgt_paths = paths_between(b, v);
                        for (path, coef) in e.terms() {
                            // phi_path : P(a) -> P(b) acts by prepending the path
                            for (ci, p) in src_paths.iter().enumerate() {
                                if let Some(q) = path.compose(p) {
                                    let ri = tgt_paths.iter().position(|t| t == &q).unwrap();
                                    m.add_to(tgt_off[r] + ri, src_off[c] + ci, coef);
                                }
                            }
                        }
                    }
                    m
                })
                .collect();
            let f = RepMap::new(src, tgt, maps).expect("evaluated differential intertwines");
            diffs.insert(n, f);
        }
        RepComplex::new(mu, terms, diffs).expect("evaluation preserves d.d = 0")
    }

    /// Vertex-wise cohomology of the evaluated complex.
    pub fn cohomology_modules(&self) -> BTreeMap<i64, Rep> {
        self.eval().cohomology_modules()
    }
}
