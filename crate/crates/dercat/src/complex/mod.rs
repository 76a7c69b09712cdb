//! Bounded complexes of direct sums of indecomposable projectives, with
//! cohomological indexing: `X[n]^p = X^{n+p}` and differentials raising the
//! degree. Differential entries are algebra elements: the `(r, c)` entry of
//! `d^n` is an element of `Hom(P(a_c), P(b_r))`, spanned by the paths
//! `b_r -> a_c`.

mod diso;
mod eval;
mod hom;
mod resolve;

pub use diso::{chain_map_space, is_derived_iso};
pub use eval::RepComplex;
pub use hom::{
    hom_complex, hom_complex_rep, rhom_dims, tensor_vect, HomBasis, HomComplex, VectComplex,
};
pub use resolve::{from_module, global_dimension};

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{path_count, AlgElem};
use crate::{Error, Rat, Result};
use num_traits::Zero;

/// Finitely supported map from cohomological degree to dimension: the
/// convention-free fingerprint `p -> dim Hom(X, Y[p])` of an RHom object.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GradedDims(BTreeMap<i64, usize>);

impl GradedDims {
    pub fn empty() -> Self {
        GradedDims::default()
    }

    pub fn from_pairs(pairs: &[(i64, usize)]) -> Self {
        let mut g = GradedDims::empty();
        for &(d, n) in pairs {
            g.add(d, n);
        }
        g
    }

    pub fn add(&mut self, degree: i64, dim: usize) {
        if dim > 0 {
            *self.0.entry(degree).or_insert(0) += dim;
        }
    }

    pub fn get(&self, degree: i64) -> usize {
        self.0.get(&degree).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.0.iter().map(|(&d, &n)| (d, n))
    }

    pub fn support(&self) -> Vec<i64> {
        self.0.keys().copied().collect()
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    /// The single `(degree, dim)` pair when concentrated in one degree.
    pub fn single_degree(&self) -> Option<(i64, usize)> {
        if self.0.len() == 1 {
            self.iter().next()
        } else {
            None
        }
    }

    /// Fingerprint of the same Hom target shifted by `[s]`:
    /// `Hom(X, Y[s][p]) = Hom(X, Y[s+p])`, so mass at degree `d` moves to
    /// `d - s`.
    pub fn translated(&self, s: i64) -> GradedDims {
        GradedDims(self.0.iter().map(|(&d, &n)| (d - s, n)).collect())
    }

    /// Alternating sum of dimensions.
    pub fn euler(&self) -> i64 {
        self.0
            .iter()
            .map(|(&d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }
}

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (d, n)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}: {n}")?;
        }
        write!(f, "}}")
    }
}

/// Sparse matrix of algebra elements.
#[derive(Clone, PartialEq, Debug)]
pub struct PathMat {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), AlgElem>,
}

impl PathMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        PathMat {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &AlgElem)> {
        self.entries.iter().map(|(&(r, c), e)| (r, c, e))
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&AlgElem> {
        self.entries.get(&(r, c))
    }

    pub fn set(&mut self, r: usize, c: usize, e: AlgElem) {
        assert!(r < self.rows && c < self.cols, "entry out of range");
        if e.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), e);
        }
    }

    pub fn add_entry(&mut self, r: usize, c: usize, e: &AlgElem) {
        if e.is_zero() {
            return;
        }
        let cur = self.entries.remove(&(r, c)).unwrap_or_default();
        self.set(r, c, cur.add(e));
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Matrix product `self ∘ other`; entries compose by left-to-right path
    /// concatenation.
    pub fn mul(&self, other: &PathMat) -> PathMat {
        assert_eq!(
            self.cols, other.rows,
            "shape mismatch in path matrix product"
        );
        let mut out = PathMat::zero(self.rows, other.cols);
        for (&(r, k), e) in &self.entries {
            for (&(k2, c), f) in other.entries.range((k, 0)..(k + 1, 0)) {
                debug_assert_eq!(k, k2);
                out.add_entry(r, c, &e.mul(f));
            }
        }
        out
    }

    pub fn add(&self, other: &PathMat) -> PathMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (&(r, c), e) in &other.entries {
            out.add_entry(r, c, e);
        }
        out
    }

    pub fn neg(&self) -> PathMat {
        PathMat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|(&k, e)| (k, e.neg())).collect(),
        }
    }

    pub fn scale_sign(&self, sign: i64) -> PathMat {
        if sign >= 0 {
            self.clone()
        } else {
            self.neg()
        }
    }
}

/// A bounded complex of finite direct sums of projectives.
#[derive(Clone, PartialEq, Debug)]
pub struct ProjComplex {
    mu: usize,
    terms: BTreeMap<i64, Vec<usize>>,
    diffs: BTreeMap<i64, PathMat>,
}

impl ProjComplex {
    pub fn zero(mu: usize) -> Self {
        ProjComplex {
            mu,
            terms: BTreeMap::new(),
            diffs: BTreeMap::new(),
        }
    }

    /// `P(vertex)` concentrated in one degree.
    pub fn single(mu: usize, vertex: usize, degree: i64) -> Self {
        assert!(1 <= vertex && vertex <= mu);
        let mut terms = BTreeMap::new();
        terms.insert(degree, vec![vertex]);
        ProjComplex {
            mu,
            terms,
            diffs: BTreeMap::new(),
        }
    }

    pub fn from_parts(
        mu: usize,
        terms: BTreeMap<i64, Vec<usize>>,
        diffs: BTreeMap<i64, PathMat>,
    ) -> Result<Self> {
        let mut x = ProjComplex { mu, terms, diffs };
        x.normalize();
        x.validate()?;
        Ok(x)
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.terms.keys().copied().collect()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Projective multiplicities in degree `n`, one vertex per summand.
    pub fn term(&self, n: i64) -> &[usize] {
        self.terms.get(&n).map_or(&[], Vec::as_slice)
    }

    pub fn summand_count(&self) -> usize {
        self.terms.values().map(Vec::len).sum()
    }

    /// The differential `d^n : X^n -> X^{n+1}` (zero matrix when absent).
    pub fn diff(&self, n: i64) -> PathMat {
        self.diffs
            .get(&n)
            .cloned()
            .unwrap_or_else(|| PathMat::zero(self.term(n + 1).len(), self.term(n).len()))
    }

    fn normalize(&mut self) {
        self.terms.retain(|_, v| !v.is_empty());
        let terms = &self.terms;
        self.diffs.retain(|n, m| {
            !m.is_zero()
                && terms.get(n).map_or(0, Vec::len) == m.cols()
                && terms.get(&(n + 1)).map_or(0, Vec::len) == m.rows()
        });
    }

    pub fn validate(&self) -> Result<()> {
        for (&n, verts) in &self.terms {
            if verts.is_empty() {
                return Err(Error::Shape(format!("empty term stored in degree {n}")));
            }
            for &v in verts {
                if v < 1 || v > self.mu {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        mu: self.mu,
                    });
                }
            }
        }
        for (&n, d) in &self.diffs {
            if d.rows() != self.term(n + 1).len() || d.cols() != self.term(n).len() {
                return Err(Error::Shape(format!(
                    "differential at degree {n} has wrong shape"
                )));
            }
            for (r, c, e) in d.entries() {
                let (rv, cv) = (self.term(n + 1)[r], self.term(n)[c]);
                if e.endpoints() != Some((rv, cv)) {
                    return Err(Error::Shape(format!(
                        "entry ({r},{c}) at degree {n} is not a hom P({cv}) -> P({rv})"
                    )));
                }
                if path_count(rv, cv) == 0 {
                    return Err(Error::Shape(format!(
                        "nonzero entry between unconnected projectives at degree {n}"
                    )));
                }
            }
            let next = self.diff(n + 1);
            if !next.mul(d).is_zero() {
                return Err(Error::Shape(format!(
                    "d.d != 0 between degrees {n} and {}",
                    n + 1
                )));
            }
        }
        Ok(())
    }

    /// Translation: `X[s]^p = X^{s+p}`, differential scaled by `(-1)^s`.
    pub fn shift(&self, s: i64) -> ProjComplex {
        let terms = self
            .terms
            .iter()
            .map(|(&n, v)| (n - s, v.clone()))
            .collect();
        let sign = if s.rem_euclid(2) == 0 { 1 } else { -1 };
        let diffs = self
            .diffs
            .iter()
            .map(|(&n, d)| (n - s, d.scale_sign(sign)))
            .collect();
        ProjComplex {
            mu: self.mu,
            terms,
            diffs,
        }
    }

    pub fn direct_sum(&self, other: &ProjComplex) -> ProjComplex {
        assert_eq!(self.mu, other.mu);
        let mut terms: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        let degrees: std::collections::BTreeSet<i64> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .copied()
            .collect();
        for &n in &degrees {
            let mut v = self.term(n).to_vec();
            v.extend_from_slice(other.term(n));
            terms.insert(n, v);
        }
        let mut diffs = BTreeMap::new();
        for &n in &degrees {
            let (a, b) = (self.diff(n), other.diff(n));
            if a.is_zero() && b.is_zero() {
                continue;
            }
            let rows = self.term(n + 1).len() + other.term(n + 1).len();
            let cols = self.term(n).len() + other.term(n).len();
            let mut m = PathMat::zero(rows, cols);
            for (r, c, e) in a.entries() {
                m.set(r, c, e.clone());
            }
            let (ro, co) = (self.term(n + 1).len(), self.term(n).len());
            for (r, c, e) in b.entries() {
                m.set(ro + r, co + c, e.clone());
            }
            diffs.insert(n, m);
        }
        let mut out = ProjComplex {
            mu: self.mu,
            terms,
            diffs,
        };
        out.normalize();
        out
    }

    /// `(V ⊗ X)^n = ⊕_p V^p ⊗ X^{n-p}` for a graded vector space `V` with
    /// zero differential; the `p`-block carries the sign `(-1)^p` on `d_X`.
    pub fn tensor_graded(v: &GradedDims, x: &ProjComplex) -> ProjComplex {
        let mut out = ProjComplex::zero(x.mu);
        for (p, mult) in v.iter() {
            let sign = if p.rem_euclid(2) == 0 { 1 } else { -1 };
            for _ in 0..mult {
                let block = ProjComplex {
                    mu: x.mu,
                    terms: x.terms.iter().map(|(&n, t)| (n + p, t.clone())).collect(),
                    diffs: x
                        .diffs
                        .iter()
                        .map(|(&n, d)| (n + p, d.scale_sign(sign)))
                        .collect(),
                };
                out = out.direct_sum(&block);
            }
        }
        out
    }

    /// Class in `K_0` with respect to the basis `[P(1)], ..., [P(mu)]`.
    pub fn k_class(&self) -> Vec<i64> {
        let mut out = vec![0i64; self.mu];
        for (&n, verts) in &self.terms {
            let sign = if n.rem_euclid(2) == 0 { 1 } else { -1 };
            for &v in verts {
                out[v - 1] += sign;
            }
        }
        out
    }

    /// Rereads the complex over the algebra with `new_mu` vertices. Valid
    /// whenever every vertex fits: the projectives `P(i)` for `i <= min(mu,
    /// new_mu)` and the paths between them correspond literally under the
    /// inclusion of subcategories.
    pub fn reinterpret(&self, new_mu: usize) -> Result<ProjComplex> {
        for verts in self.terms.values() {
            for &v in verts {
                if v > new_mu {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        mu: new_mu,
                    });
                }
            }
        }
        Ok(ProjComplex {
            mu: new_mu,
            terms: self.terms.clone(),
            diffs: self.diffs.clone(),
        })
    }

    /// Homotopy-equivalent complex whose differential entries all lie in the
    /// radical, obtained by cancelling invertible scalar entries one at a
    /// time. For this algebra an entry between equal projectives is a pure
    /// scalar, so minimality means those entries all vanish.
    pub fn minimize(&self) -> ProjComplex {
        let mut alive: BTreeMap<i64, Vec<bool>> = self
            .terms
            .iter()
            .map(|(&n, v)| (n, vec![true; v.len()]))
            .collect();
        let mut diffs: BTreeMap<i64, BTreeMap<(usize, usize), AlgElem>> = self
            .diffs
            .iter()
            .map(|(&n, d)| (n, d.entries.clone()))
            .collect();

        loop {
            let mut pivot = None;
            'scan: for (&n, es) in &diffs {
                for (&(r, c), e) in es {
                    let cv = self.terms[&n][c];
                    let rv = self.terms[&(n + 1)][r];
                    if cv == rv {
                        let s = e.trivial_coeff(cv);
                        if !s.is_zero() {
                            pivot = Some((n, r, c, s));
                            break 'scan;
                        }
                    }
                }
            }
            let Some((n, r, c, scalar)) = pivot else {
                break;
            };

            let es = diffs.get(&n).unwrap();
            let col: Vec<(usize, AlgElem)> = es
                .iter()
                .filter(|(&(r2, c2), _)| c2 == c && r2 != r)
                .map(|(&(r2, _), e)| (r2, e.clone()))
                .collect();
            let row: Vec<(usize, AlgElem)> = es
                .range((r, 0)..(r + 1, 0))
                .filter(|(&(_, c2), _)| c2 != c)
                .map(|(&(_, c2), e)| (c2, e.clone()))
                .collect();

            let es = diffs.entry(n).or_default();
            let inv = Rat::from_integer(1.into()) / scalar;
            for (r2, gamma) in &col {
                for (c2, rho) in &row {
                    let corr = gamma.mul(rho).scale(&inv).neg();
                    let cur = es.remove(&(*r2, *c2)).unwrap_or_default();
                    let new = cur.add(&corr);
                    if !new.is_zero() {
                        es.insert((*r2, *c2), new);
                    }
                }
            }
            es.retain(|&(r2, c2), _| r2 != r && c2 != c);
            alive.get_mut(&n).unwrap()[c] = false;
            alive.get_mut(&(n + 1)).unwrap()[r] = false;
            if let Some(prev) = diffs.get_mut(&(n - 1)) {
                prev.retain(|&(r2, _), _| r2 != c);
            }
            if let Some(next) = diffs.get_mut(&(n + 1)) {
                next.retain(|&(_, c2), _| c2 != r);
            }
        }

        // compact the surviving summands
        let mut remap: BTreeMap<i64, Vec<Option<usize>>> = BTreeMap::new();
        let mut terms: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (&n, flags) in &alive {
            let mut map = Vec::with_capacity(flags.len());
            let mut kept = Vec::new();
            for (i, &ok) in flags.iter().enumerate() {
                if ok {
                    map.push(Some(kept.len()));
                    kept.push(self.terms[&n][i]);
                } else {
                    map.push(None);
                }
            }
            remap.insert(n, map);
            if !kept.is_empty() {
                terms.insert(n, kept);
            }
        }
        let mut new_diffs = BTreeMap::new();
        for (&n, es) in &diffs {
            let rows = terms.get(&(n + 1)).map_or(0, Vec::len);
            let cols = terms.get(&n).map_or(0, Vec::len);
            if rows == 0 || cols == 0 {
                continue;
            }
            let mut m = PathMat::zero(rows, cols);
            for (&(r, c), e) in es {
                let (Some(r2), Some(c2)) = (remap[&(n + 1)][r], remap[&n][c]) else {
                    unreachable!("entries of cancelled summands were removed")
                };
                m.set(r2, c2, e.clone());
            }
            if !m.is_zero() {
                new_diffs.insert(n, m);
            }
        }
        let mut out = ProjComplex {
            mu: self.mu,
            terms,
            diffs: new_diffs,
        };
        out.normalize();
        debug_assert!(out.validate().is_ok(), "minimize must preserve d.d = 0");
        out
    }

    /// True when no differential entry has an invertible scalar part.
    pub fn is_minimal(&self) -> bool {
        for (&n, d) in &self.diffs {
            for (r, c, e) in d.entries() {
                let cv = self.term(n)[c];
                if self.term(n + 1)[r] == cv && !e.trivial_coeff(cv).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// A degree-zero chain map between complexes of projectives.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub source: ProjComplex,
    pub target: ProjComplex,
    pub mats: BTreeMap<i64, PathMat>,
}

impl ChainMap {
    pub fn new(
        source: ProjComplex,
        target: ProjComplex,
        mats: BTreeMap<i64, PathMat>,
    ) -> Result<Self> {
        let f = ChainMap {
            source,
            target,
            mats,
        };
        f.validate()?;
        Ok(f)
    }

    pub fn zero(source: &ProjComplex, target: &ProjComplex) -> Self {
        ChainMap {
            source: source.clone(),
            target: target.clone(),
            mats: BTreeMap::new(),
        }
    }

    pub fn identity(x: &ProjComplex) -> Self {
        let mut mats = BTreeMap::new();
        for (&n, verts) in &x.terms {
            let mut m = PathMat::zero(verts.len(), verts.len());
            for (i, &v) in verts.iter().enumerate() {
                m.set(i, i, AlgElem::from_path(crate::algebra::Path::trivial(v)));
            }
            mats.insert(n, m);
        }
        ChainMap {
            source: x.clone(),
            target: x.clone(),
            mats,
        }
    }

    pub fn at(&self, n: i64) -> PathMat {
        self.mats
            .get(&n)
            .cloned()
            .unwrap_or_else(|| PathMat::zero(self.target.term(n).len(), self.source.term(n).len()))
    }

    pub fn validate(&self) -> Result<()> {
        for (&n, m) in &self.mats {
            if m.rows() != self.target.term(n).len() || m.cols() != self.source.term(n).len() {
                return Err(Error::Shape(format!(
                    "chain map has wrong shape in degree {n}"
                )));
            }
            for (r, c, e) in m.entries() {
                let (rv, cv) = (self.target.term(n)[r], self.source.term(n)[c]);
                if e.endpoints() != Some((rv, cv)) {
                    return Err(Error::Shape(format!(
                        "chain map entry ({r},{c}) in degree {n} has wrong endpoints"
                    )));
                }
            }
        }
        let degrees: std::collections::BTreeSet<i64> = self
            .source
            .terms
            .keys()
            .chain(self.target.terms.keys())
            .copied()
            .collect();
        for &n in &degrees {
            let lhs = self.target.diff(n).mul(&self.at(n));
            let rhs = self.at(n + 1).mul(&self.source.diff(n));
            if lhs != rhs {
                return Err(Error::Shape(format!(
                    "chain map fails to commute with d at {n}"
                )));
            }
        }
        Ok(())
    }
}

/// Mapping cone together with its canonical triangle maps
/// `Y -> cone(f) -> X[1]`.
pub fn cone_with_maps(f: &ChainMap) -> (ProjComplex, ChainMap, ChainMap) {
    let c = cone(f);
    let (x, y) = (&f.source, &f.target);
    let mut incl = BTreeMap::new();
    let mut proj = BTreeMap::new();
    for &n in c.terms.keys() {
        let (xc, yc) = (x.term(n + 1).len(), y.term(n).len());
        if yc > 0 {
            let mut m = PathMat::zero(xc + yc, yc);
            for (i, &v) in y.term(n).iter().enumerate() {
                m.set(
                    xc + i,
                    i,
                    AlgElem::from_path(crate::algebra::Path::trivial(v)),
                );
            }
            incl.insert(n, m);
        }
        if xc > 0 {
            let mut m = PathMat::zero(xc, xc + yc);
            for (i, &v) in x.term(n + 1).iter().enumerate() {
                m.set(i, i, AlgElem::from_path(crate::algebra::Path::trivial(v)));
            }
            proj.insert(n, m);
        }
    }
    let incl = ChainMap {
        source: y.clone(),
        target: c.clone(),
        mats: incl,
    };
    let proj = ChainMap {
        source: c.clone(),
        target: x.shift(1),
        mats: proj,
    };
    debug_assert!(incl.validate().is_ok() && proj.validate().is_ok());
    (c, incl, proj)
}

/// Mapping cone with the fixed sign convention: `cone(f)^n = X^{n+1} ⊕ Y^n`
/// and differential `[[-d_X, 0], [f, d_Y]]`.
pub fn cone(f: &ChainMap) -> ProjComplex {
    let (x, y) = (&f.source, &f.target);
    assert_eq!(x.mu, y.mu);
    let degrees: std::collections::BTreeSet<i64> = x
        .terms
        .keys()
        .map(|&n| n - 1)
        .chain(y.terms.keys().copied())
        .collect();
    let mut terms: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for &n in &degrees {
        let mut v = x.term(n + 1).to_vec();
        v.extend_from_slice(y.term(n));
        if !v.is_empty() {
            terms.insert(n, v);
        }
    }
    let mut diffs = BTreeMap::new();
    for &n in &degrees {
        let (xr, yr) = (x.term(n + 2).len(), y.term(n + 1).len());
        let (xc, yc) = (x.term(n + 1).len(), y.term(n).len());
        if (xr + yr) == 0 || (xc + yc) == 0 {
            continue;
        }
        let mut m = PathMat::zero(xr + yr, xc + yc);
        for (r, c, e) in x.diff(n + 1).entries() {
            m.set(r, c, e.neg());
        }
        for (r, c, e) in f.at(n + 1).entries() {
            m.set(xr + r, c, e.clone());
        }
        for (r, c, e) in y.diff(n).entries() {
            m.set(xr + r, xc + c, e.clone());
        }
        if !m.is_zero() {
            diffs.insert(n, m);
        }
    }
    let mut out = ProjComplex {
        mu: x.mu,
        terms,
        diffs,
    };
    out.normalize();
    debug_assert!(
        out.validate().is_ok(),
        "cone of a chain map satisfies d.d = 0"
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Path, PathKind};

    fn s1_complex(mu: usize) -> ProjComplex {
        // P(mu) -(a+b)-> P(mu-1), cokernel model of the 1-spherical object
        let mut terms = BTreeMap::new();
        terms.insert(-1, vec![mu]);
        terms.insert(0, vec![mu - 1]);
        let mut d = PathMat::zero(1, 1);
        let f = AlgElem::from_path(Path::arrow(PathKind::Alpha, mu - 1))
            .add(&AlgElem::from_path(Path::arrow(PathKind::Beta, mu - 1)));
        d.set(0, 0, f);
        let mut diffs = BTreeMap::new();
        diffs.insert(-1, d);
        ProjComplex::from_parts(mu, terms, diffs).unwrap()
    }

    #[test]
    fn shift_round_trip() {
        let x = s1_complex(4);
        assert_eq!(x.shift(1).shift(-1), x);
        assert_eq!(x.shift(2).term(-3), &[4]);
        // X[1]^p = X^{1+p}: the degree-0 part moves to degree -1
        assert_eq!(x.shift(1).term(-1), &[3]);
        x.shift(3).validate().unwrap();
    }

    #[test]
    fn tensor_graded_places_blocks() {
        let p1 = ProjComplex::single(4, 1, 0);
        let v = GradedDims::from_pairs(&[(0, 1), (3, 1)]);
        let t = ProjComplex::tensor_graded(&v, &p1);
        assert_eq!(t.term(0), &[1]);
        assert_eq!(t.term(3), &[1]);
        assert_eq!(t.summand_count(), 2);
        let one = GradedDims::from_pairs(&[(0, 1)]);
        assert_eq!(
            ProjComplex::tensor_graded(&one, &s1_complex(4)),
            s1_complex(4)
        );
    }

    #[test]
    fn cone_of_identity_is_contractible() {
        let p1 = ProjComplex::single(4, 1, 0);
        let c = cone(&ChainMap::identity(&p1));
        assert_eq!(c.summand_count(), 2);
        assert!(c.minimize().is_zero());

        let x = s1_complex(5);
        let cx = cone(&ChainMap::identity(&x));
        cx.validate().unwrap();
        assert!(cx.minimize().is_zero());
    }

    #[test]
    fn cone_triangle_maps_validate() {
        let x = ProjComplex::single(4, 4, 0);
        let y = ProjComplex::single(4, 3, 0);
        let maps = crate::complex::chain_map_space(&x, &y);
        assert_eq!(maps.len(), 2);
        let f = maps.into_iter().next().unwrap();
        let (c, incl, proj) = cone_with_maps(&f);
        incl.validate().unwrap();
        proj.validate().unwrap();
        assert_eq!(incl.target, c);
        assert_eq!(proj.target, x.shift(1));
        // the composite Y -> cone -> X[1] vanishes
        for &n in &c.degrees() {
            assert!(proj.at(n).mul(&incl.at(n)).is_zero());
        }
    }

    #[test]
    fn cone_of_zero_map_is_sum_with_shift() {
        let x = ProjComplex::single(4, 2, 0);
        let y = s1_complex(4);
        let c = cone(&ChainMap::zero(&x, &y));
        // cone(0)^n = X^{n+1} ⊕ Y^n on the nose
        assert_eq!(c, x.shift(1).direct_sum(&y));
    }

    #[test]
    fn minimize_drops_contractible_summands() {
        let x = s1_complex(4);
        let padded = x.direct_sum(&cone(&ChainMap::identity(&ProjComplex::single(4, 2, 0))));
        let min = padded.minimize();
        assert_eq!(min, x);
        assert!(min.is_minimal());
        // idempotent
        assert_eq!(min.minimize(), min);
    }

    #[test]
    fn k_classes() {
        let x = s1_complex(4);
        assert_eq!(x.k_class(), vec![0, 0, 1, -1]);
        assert_eq!(x.shift(1).k_class(), vec![0, 0, -1, 1]);
    }

    #[test]
    fn reinterpret_checks_vertices() {
        let x = s1_complex(4);
        assert!(x.reinterpret(6).is_ok());
        assert!(x.reinterpret(3).is_err());
        assert_eq!(x.reinterpret(6).unwrap().mu(), 6);
    }

    #[test]
    fn validate_rejects_broken_differentials() {
        let mut terms = BTreeMap::new();
        terms.insert(0, vec![1]);
        terms.insert(1, vec![3]);
        let mut d = PathMat::zero(1, 1);
        // entry must be a hom P(1) -> P(3), i.e. spanned by paths 3 -> 1 (none)
        d.set(0, 0, AlgElem::from_path(Path::run(PathKind::Alpha, 1, 3)));
        let mut diffs = BTreeMap::new();
        diffs.insert(0, d);
        assert!(ProjComplex::from_parts(4, terms, diffs).is_err());
    }
}
