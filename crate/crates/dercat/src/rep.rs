//! Finite dimensional modules over `CQ/I`, presented as quiver
//! representations: one vector space per vertex and one matrix per arrow,
//! subject to the relations. Projectives, injectives and simples come with
//! their canonical path bases (ordered the same way as the algebra basis),
//! which makes `Hom(P(i), P(j)) = span of paths j -> i` an identity of
//! matrices, not just of dimensions.

use crate::algebra::{path_count, paths_between, Path, PathAlgebra, PathKind};
use crate::iso::span_contains_invertible;
use crate::qmat::QMat;
use crate::{Error, Rat, Result};
use num_traits::{One, Zero};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rep {
    mu: usize,
    dims: Vec<usize>,
    alpha: Vec<QMat>,
    beta: Vec<QMat>,
}

impl Rep {
    pub fn new(mu: usize, dims: Vec<usize>, alpha: Vec<QMat>, beta: Vec<QMat>) -> Result<Self> {
        let rep = Rep {
            mu,
            dims,
            alpha,
            beta,
        };
        rep.validate()?;
        Ok(rep)
    }

    pub fn zero(mu: usize) -> Self {
        Rep {
            mu,
            dims: vec![0; mu],
            alpha: (0..mu.saturating_sub(1))
                .map(|_| QMat::zero(0, 0))
                .collect(),
            beta: (0..mu.saturating_sub(1))
                .map(|_| QMat::zero(0, 0))
                .collect(),
        }
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    /// Dimension at the 1-based vertex `v`.
    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v - 1]
    }

    pub fn dim_vector(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Matrix of the arrow of the given kind out of vertex `i` (so `i ->
    /// i+1`), for `i = 1..mu-1`.
    pub fn arrow(&self, kind: PathKind, i: usize) -> &QMat {
        match kind {
            PathKind::Alpha => &self.alpha[i - 1],
            PathKind::Beta => &self.beta[i - 1],
            PathKind::Trivial => panic!("trivial paths are not arrows"),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.dims.len() != self.mu
            || self.alpha.len() + 1 != self.mu.max(1)
            || self.beta.len() + 1 != self.mu.max(1)
        {
            return Err(Error::Shape(
                "representation has wrong number of components".into(),
            ));
        }
        for i in 1..self.mu {
            self.alpha[i - 1].require_shape(self.dims[i], self.dims[i - 1], "alpha arrow")?;
            self.beta[i - 1].require_shape(self.dims[i], self.dims[i - 1], "beta arrow")?;
        }
        for i in 1..self.mu.saturating_sub(1) {
            // a_i b_{i+1} = 0 and b_i a_{i+1} = 0
            if !self.beta[i].mul(&self.alpha[i - 1]).is_zero()
                || !self.alpha[i].mul(&self.beta[i - 1]).is_zero()
            {
                return Err(Error::Shape(format!("relations fail at arrow pair {i}")));
            }
        }
        Ok(())
    }

    /// Action of a reduced path as a matrix `M_source -> M_target`.
    pub fn path_action(&self, p: &Path) -> QMat {
        if p.is_trivial() {
            return QMat::identity(self.dim_at(p.source()));
        }
        let mut m = self.arrow(p.kind(), p.source()).clone();
        for i in p.source() + 1..p.target() {
            m = self.arrow(p.kind(), i).mul(&m);
        }
        m
    }

    pub fn direct_sum(&self, other: &Rep) -> Rep {
        assert_eq!(self.mu, other.mu);
        let dims: Vec<usize> = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(a, b)| a + b)
            .collect();
        let block = |a: &QMat, b: &QMat| -> QMat {
            QMat::from_fn(a.rows() + b.rows(), a.cols() + b.cols(), |r, c| {
                if r < a.rows() && c < a.cols() {
                    a.get(r, c).clone()
                } else if r >= a.rows() && c >= a.cols() {
                    b.get(r - a.rows(), c - a.cols()).clone()
                } else {
                    Rat::zero()
                }
            })
        };
        Rep {
            mu: self.mu,
            dims,
            alpha: self
                .alpha
                .iter()
                .zip(&other.alpha)
                .map(|(a, b)| block(a, b))
                .collect(),
            beta: self
                .beta
                .iter()
                .zip(&other.beta)
                .map(|(a, b)| block(a, b))
                .collect(),
        }
    }
}

/// Basis offsets of the summands of a direct sum of projectives `P(a)` at a
/// given vertex. The basis of `P(a)` at `v` is `paths_between(a, v)` in the
/// canonical order, summand-major.
pub fn proj_offsets(verts: &[usize], v: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(verts.len());
    let mut acc = 0;
    for &a in verts {
        out.push(acc);
        acc += path_count(a, v);
    }
    out
}

/// Same for sums of injectives `I(a)`, whose basis at `v` is (the dual of)
/// `paths_between(v, a)`.
pub fn inj_offsets(verts: &[usize], v: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(verts.len());
    let mut acc = 0;
    for &a in verts {
        out.push(acc);
        acc += path_count(v, a);
    }
    out
}

/// Direct sum of indecomposable projectives with the canonical path basis.
pub fn proj_sum(mu: usize, verts: &[usize]) -> Rep {
    let dims: Vec<usize> = (1..=mu)
        .map(|v| verts.iter().map(|&a| path_count(a, v)).sum())
        .collect();
    let arrows = |kind: PathKind| -> Vec<QMat> {
        (1..mu)
            .map(|v| {
                let mut m = QMat::zero(dims[v], dims[v - 1]);
                let off_src = proj_offsets(verts, v);
                let off_tgt = proj_offsets(verts, v + 1);
                let x = Path::arrow(kind, v);
                for (s, &a) in verts.iter().enumerate() {
                    let src_paths = paths_between(a, v);
                    let tgt_paths = paths_between(a, v + 1);
                    for (ci, p) in src_paths.iter().enumerate() {
                        if let Some(q) = p.compose(&x) {
                            let ri = tgt_paths.iter().position(|t| t == &q).unwrap();
                            m.set(off_tgt[s] + ri, off_src[s] + ci, Rat::one());
                        }
                    }
                }
                m
            })
            .collect()
    };
    let alpha = arrows(PathKind::Alpha);
    let beta = arrows(PathKind::Beta);
    Rep {
        mu,
        dims,
        alpha,
        beta,
    }
}

/// Direct sum of indecomposable injectives with the dual path basis.
pub fn inj_sum(mu: usize, verts: &[usize]) -> Rep {
    let dims: Vec<usize> = (1..=mu)
        .map(|v| verts.iter().map(|&a| path_count(v, a)).sum())
        .collect();
    let arrows = |kind: PathKind| -> Vec<QMat> {
        (1..mu)
            .map(|v| {
                let mut m = QMat::zero(dims[v], dims[v - 1]);
                let off_src = inj_offsets(verts, v);
                let off_tgt = inj_offsets(verts, v + 1);
                let x = Path::arrow(kind, v);
                for (s, &a) in verts.iter().enumerate() {
                    // transpose of prepending the arrow: paths(v+1 -> a) -> paths(v -> a)
                    let src_paths = paths_between(v, a);
                    let tgt_paths = paths_between(v + 1, a);
                    for (ri, q) in tgt_paths.iter().enumerate() {
                        if let Some(p) = x.compose(q) {
                            let ci = src_paths.iter().position(|t| t == &p).unwrap();
                            m.set(off_tgt[s] + ri, off_src[s] + ci, Rat::one());
                        }
                    }
                }
                m
            })
            .collect()
    };
    let alpha = arrows(PathKind::Alpha);
    let beta = arrows(PathKind::Beta);
    Rep {
        mu,
        dims,
        alpha,
        beta,
    }
}

/// The indecomposable projective `P(i)`.
pub fn projective(algebra: &PathAlgebra, i: usize) -> Result<Rep> {
    algebra.check_vertex(i)?;
    Ok(proj_sum(algebra.mu(), &[i]))
}

/// The indecomposable injective `I(i)`.
pub fn injective(algebra: &PathAlgebra, i: usize) -> Result<Rep> {
    algebra.check_vertex(i)?;
    Ok(inj_sum(algebra.mu(), &[i]))
}

/// The simple module at vertex `i`.
pub fn simple(algebra: &PathAlgebra, i: usize) -> Result<Rep> {
    algebra.check_vertex(i)?;
    let mu = algebra.mu();
    let dims: Vec<usize> = (1..=mu).map(|v| usize::from(v == i)).collect();
    let arrows: Vec<QMat> = (1..mu).map(|v| QMat::zero(dims[v], dims[v - 1])).collect();
    Ok(Rep {
        mu,
        dims,
        alpha: arrows.clone(),
        beta: arrows,
    })
}

/// The thin module supported everywhere with all a-arrows acting by 1 and
/// all b-arrows by 0 (mu = 4 only; this is the module the 3-spherical
/// machinery is built around).
pub fn fixture_s_plus(algebra: &PathAlgebra) -> Result<Rep> {
    thin_fixture(algebra, true)
}

/// The mirror of `fixture_s_plus`: b-arrows act by 1, a-arrows by 0.
pub fn fixture_s_minus(algebra: &PathAlgebra) -> Result<Rep> {
    thin_fixture(algebra, false)
}

fn thin_fixture(algebra: &PathAlgebra, plus: bool) -> Result<Rep> {
    let mu = algebra.mu();
    if mu != 4 {
        return Err(Error::RequiresMuFour(mu));
    }
    let one = QMat::identity(1);
    let zero = QMat::zero(1, 1);
    let ones: Vec<QMat> = (1..mu).map(|_| one.clone()).collect();
    let zeros: Vec<QMat> = (1..mu).map(|_| zero.clone()).collect();
    let (alpha, beta) = if plus { (ones, zeros) } else { (zeros, ones) };
    Rep::new(mu, vec![1; mu], alpha, beta)
}

/// A homomorphism of representations: one matrix per vertex, intertwining
/// every arrow.
#[derive(Clone, PartialEq, Debug)]
pub struct RepMap {
    pub source: Rep,
    pub target: Rep,
    pub maps: Vec<QMat>,
}

impl RepMap {
    pub fn new(source: Rep, target: Rep, maps: Vec<QMat>) -> Result<Self> {
        let f = RepMap {
            source,
            target,
            maps,
        };
        f.validate()?;
        Ok(f)
    }

    pub fn identity(m: &Rep) -> Self {
        RepMap {
            source: m.clone(),
            target: m.clone(),
            maps: m.dims.iter().map(|&d| QMat::identity(d)).collect(),
        }
    }

    pub fn zero(source: &Rep, target: &Rep) -> Self {
        let maps = (1..=source.mu)
            .map(|v| QMat::zero(target.dim_at(v), source.dim_at(v)))
            .collect();
        RepMap {
            source: source.clone(),
            target: target.clone(),
            maps,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.source.mu != self.target.mu || self.maps.len() != self.source.mu {
            return Err(Error::Shape("map has wrong number of components".into()));
        }
        for v in 1..=self.source.mu {
            self.maps[v - 1].require_shape(
                self.target.dim_at(v),
                self.source.dim_at(v),
                "vertex component",
            )?;
        }
        for kind in [PathKind::Alpha, PathKind::Beta] {
            for i in 1..self.source.mu {
                let lhs = self.target.arrow(kind, i).mul(&self.maps[i - 1]);
                let rhs = self.maps[i].mul(self.source.arrow(kind, i));
                if lhs != rhs {
                    return Err(Error::Shape(format!("map fails to intertwine arrow {i}")));
                }
            }
        }
        Ok(())
    }

    pub fn at(&self, v: usize) -> &QMat {
        &self.maps[v - 1]
    }

    pub fn compose(&self, then: &RepMap) -> RepMap {
        assert_eq!(self.target, then.source, "composition endpoint mismatch");
        RepMap {
            source: self.source.clone(),
            target: then.target.clone(),
            maps: self
                .maps
                .iter()
                .zip(&then.maps)
                .map(|(f, g)| g.mul(f))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(QMat::is_zero)
    }

    pub fn scale(&self, s: &Rat) -> RepMap {
        RepMap {
            source: self.source.clone(),
            target: self.target.clone(),
            maps: self.maps.iter().map(|m| m.scale(s)).collect(),
        }
    }

    pub fn add(&self, other: &RepMap) -> RepMap {
        RepMap {
            source: self.source.clone(),
            target: self.target.clone(),
            maps: self
                .maps
                .iter()
                .zip(&other.maps)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }
}

/// A basis of `Hom(M, N)`, found by solving the intertwining constraints.
pub fn hom_space(m: &Rep, n: &Rep) -> Vec<RepMap> {
    assert_eq!(m.mu, n.mu, "modules over different algebras");
    let mu = m.mu;
    let mut offsets = Vec::with_capacity(mu);
    let mut total = 0usize;
    for v in 1..=mu {
        offsets.push(total);
        total += n.dim_at(v) * m.dim_at(v);
    }
    if total == 0 {
        return vec![];
    }
    let flat = |v: usize, r: usize, c: usize| offsets[v - 1] + r * m.dim_at(v) + c;

    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for kind in [PathKind::Alpha, PathKind::Beta] {
        for i in 1..mu {
            let na = n.arrow(kind, i);
            let ma = m.arrow(kind, i);
            for r in 0..n.dim_at(i + 1) {
                for c in 0..m.dim_at(i) {
                    let mut row = vec![Rat::zero(); total];
                    for k in 0..n.dim_at(i) {
                        row[flat(i, k, c)] += na.get(r, k);
                    }
                    for k in 0..m.dim_at(i + 1) {
                        row[flat(i + 1, r, k)] -= ma.get(k, c);
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        QMat::identity(total)
    } else {
        QMat::from_rows(rows).kernel_basis()
    };

    (0..kernel.cols())
        .map(|b| {
            let maps = (1..=mu)
                .map(|v| {
                    QMat::from_fn(n.dim_at(v), m.dim_at(v), |r, c| {
                        kernel.get(flat(v, r, c), b).clone()
                    })
                })
                .collect();
            RepMap {
                source: m.clone(),
                target: n.clone(),
                maps,
            }
        })
        .collect()
}

/// Vertex-wise kernel with its inclusion.
pub fn kernel(f: &RepMap) -> (Rep, RepMap) {
    let mu = f.source.mu;
    let bases: Vec<QMat> = (1..=mu).map(|v| f.at(v).kernel_basis()).collect();
    let dims: Vec<usize> = bases.iter().map(QMat::cols).collect();
    let arrows = |kind: PathKind| -> Vec<QMat> {
        (1..mu)
            .map(|v| {
                let moved = f.source.arrow(kind, v).mul(&bases[v - 1]);
                bases[v]
                    .solve(&moved)
                    .expect("kernel is preserved by the arrows of an intertwining map")
            })
            .collect()
    };
    let alpha = arrows(PathKind::Alpha);
    let beta = arrows(PathKind::Beta);
    let ker = Rep {
        mu,
        dims,
        alpha,
        beta,
    };
    debug_assert!(ker.validate().is_ok());
    let incl = RepMap {
        source: ker.clone(),
        target: f.source.clone(),
        maps: bases,
    };
    debug_assert!(incl.validate().is_ok());
    (ker, incl)
}

/// Vertex-wise cokernel with its projection.
pub fn cokernel(f: &RepMap) -> (Rep, RepMap) {
    let mu = f.target.mu;
    let mut projections = Vec::with_capacity(mu);
    let mut sections = Vec::with_capacity(mu);
    for v in 1..=mu {
        let dim = f.target.dim_at(v);
        let fv = f.at(v);
        // independent columns of f_v span the image
        let pivots = {
            let mut m = fv.clone();
            m.rref()
        };
        let mut span = QMat::zero(dim, 0);
        for &p in &pivots {
            span = span.hstack(&QMat::from_fn(dim, 1, |r, _| fv.get(r, p).clone()));
        }
        let rank = span.cols();
        // extend to a basis with standard vectors
        let mut comp_cols = Vec::new();
        let mut current = span.clone();
        for e in 0..dim {
            if current.cols() == dim {
                break;
            }
            let cand = QMat::from_fn(dim, 1, |r, _| if r == e { Rat::one() } else { Rat::zero() });
            let widened = current.hstack(&cand);
            if widened.rank() == current.cols() + 1 {
                comp_cols.push(e);
                current = widened;
            }
        }
        let basis = current;
        let inv = basis
            .solve(&QMat::identity(dim))
            .expect("basis matrix is invertible");
        let cok = dim - rank;
        let proj = QMat::from_fn(cok, dim, |r, c| inv.get(rank + r, c).clone());
        let section = QMat::from_fn(dim, cok, |r, c| {
            if r == comp_cols[c] {
                Rat::one()
            } else {
                Rat::zero()
            }
        });
        projections.push(proj);
        sections.push(section);
    }
    let dims: Vec<usize> = projections.iter().map(QMat::rows).collect();
    let arrows = |kind: PathKind| -> Vec<QMat> {
        (1..mu)
            .map(|v| {
                projections[v]
                    .mul(f.target.arrow(kind, v))
                    .mul(&sections[v - 1])
            })
            .collect()
    };
    let alpha = arrows(PathKind::Alpha);
    let beta = arrows(PathKind::Beta);
    let cok = Rep {
        mu,
        dims,
        alpha,
        beta,
    };
    debug_assert!(cok.validate().is_ok());
    let proj = RepMap {
        source: f.target.clone(),
        target: cok.clone(),
        maps: projections,
    };
    debug_assert!(proj.validate().is_ok());
    (cok, proj)
}

/// True iff `0 -> A -incl-> B -proj-> C -> 0` is exact.
pub fn verify_short_exact(incl: &RepMap, proj: &RepMap) -> Result<bool> {
    if incl.target != proj.source {
        return Err(Error::Endpoints(
            "middle terms of the short exact sequence differ".into(),
        ));
    }
    let mu = incl.source.mu;
    for v in 1..=mu {
        let (a, b, c) = (
            incl.source.dim_at(v),
            incl.target.dim_at(v),
            proj.target.dim_at(v),
        );
        if a + c != b
            || incl.at(v).rank() != a
            || proj.at(v).rank() != c
            || !proj.at(v).mul(incl.at(v)).is_zero()
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Isomorphism test: equal dimension vectors plus an invertible element of
/// the hom space, found by seeded sampling with a symbolic fallback.
pub fn is_isomorphic(m: &Rep, n: &Rep, seed: u64) -> bool {
    if m.dims != n.dims {
        return false;
    }
    let total = m.total_dim();
    if total == 0 {
        return true;
    }
    let homs = hom_space(m, n);
    if homs.is_empty() {
        return false;
    }
    // necessary condition: an isomorphism identifies all four hom spaces
    let end_m = hom_space(m, m).len();
    if homs.len() != end_m || hom_space(n, n).len() != end_m || hom_space(n, m).len() != end_m {
        return false;
    }
    let blocks: Vec<QMat> = homs
        .iter()
        .map(|f| {
            let mut big = QMat::zero(total, total);
            let mut off = 0;
            for v in 1..=m.mu {
                let fv = f.at(v);
                for r in 0..fv.rows() {
                    for c in 0..fv.cols() {
                        big.set(off + r, off + c, fv.get(r, c).clone());
                    }
                }
                off += m.dim_at(v);
            }
            big
        })
        .collect();
    span_contains_invertible(&blocks, total, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_algebra;
    use crate::rat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn projective_dim_vectors() {
        let alg = build_algebra(4).unwrap();
        assert_eq!(projective(&alg, 1).unwrap().dim_vector(), &[1, 2, 2, 2]);
        assert_eq!(projective(&alg, 4).unwrap().dim_vector(), &[0, 0, 0, 1]);
        let p4 = projective(&alg, 4).unwrap();
        let s4 = simple(&alg, 4).unwrap();
        assert_eq!(p4, s4);
        assert!(projective(&alg, 5).is_err());
    }

    #[test]
    fn injective_dim_vectors() {
        let alg = build_algebra(4).unwrap();
        assert_eq!(injective(&alg, 3).unwrap().dim_vector(), &[2, 2, 1, 0]);
        assert_eq!(injective(&alg, 1).unwrap().dim_vector(), &[1, 0, 0, 0]);
        assert_eq!(injective(&alg, 4).unwrap().dim_vector(), &[2, 2, 2, 1]);
        for i in 1..=4 {
            injective(&alg, i).unwrap().validate().unwrap();
        }
    }

    #[test]
    fn simple_modules() {
        let alg = build_algebra(4).unwrap();
        assert_eq!(simple(&alg, 1).unwrap().dim_vector(), &[1, 0, 0, 0]);
        assert!(is_isomorphic(
            &injective(&alg, 1).unwrap(),
            &simple(&alg, 1).unwrap(),
            1
        ));
    }

    #[test]
    fn fixtures_require_mu_four() {
        let alg = build_algebra(4).unwrap();
        let sp = fixture_s_plus(&alg).unwrap();
        let sm = fixture_s_minus(&alg).unwrap();
        assert_eq!(sp.dim_vector(), &[1, 1, 1, 1]);
        sp.validate().unwrap();
        sm.validate().unwrap();
        assert!(hom_space(&sp, &sm).is_empty());
        assert!(!is_isomorphic(&sp, &sm, 3));
        let alg5 = build_algebra(5).unwrap();
        assert!(fixture_s_plus(&alg5).is_err());
    }

    #[test]
    fn hom_spaces_count_paths() {
        let alg = build_algebra(4).unwrap();
        let p3 = projective(&alg, 3).unwrap();
        let p1 = projective(&alg, 1).unwrap();
        assert_eq!(hom_space(&p3, &p1).len(), 2);
        assert_eq!(hom_space(&p1, &p3).len(), 0);
        for i in 1..=4 {
            for j in 1..=4 {
                let pi = projective(&alg, i).unwrap();
                let pj = projective(&alg, j).unwrap();
                assert_eq!(hom_space(&pi, &pj).len(), path_count(j, i), "i={i} j={j}");
            }
        }
    }

    #[test]
    fn identity_lies_in_endomorphisms() {
        let alg = build_algebra(4).unwrap();
        let m = projective(&alg, 2)
            .unwrap()
            .direct_sum(&simple(&alg, 1).unwrap());
        let id = RepMap::identity(&m);
        let basis = hom_space(&m, &m);
        // the identity is a combination of the basis: solve the linear system
        let total: usize = (1..=4).map(|v| m.dim_at(v) * m.dim_at(v)).sum();
        let flatten = |f: &RepMap| -> Vec<Rat> {
            let mut out = Vec::with_capacity(total);
            for v in 1..=4 {
                for r in 0..m.dim_at(v) {
                    for c in 0..m.dim_at(v) {
                        out.push(f.at(v).get(r, c).clone());
                    }
                }
            }
            out
        };
        let mat = QMat::from_fn(total, basis.len(), |r, c| flatten(&basis[c])[r].clone());
        let rhs = QMat::from_fn(total, 1, |r, _| flatten(&id)[r].clone());
        assert!(mat.solve(&rhs).is_some());
    }

    #[test]
    fn kernels_and_cokernels() {
        let alg = build_algebra(4).unwrap();
        let p4 = projective(&alg, 4).unwrap();
        let p3 = projective(&alg, 3).unwrap();

        // cokernel(0 -> M) is M
        let m = projective(&alg, 2).unwrap();
        let z = RepMap::zero(&Rep::zero(4), &m);
        let (cok, _) = cokernel(&z);
        assert!(is_isomorphic(&cok, &m, 5));

        // the map P(4) -> P(3) given by b3 is injective
        let b3 = p3.clone();
        let f = RepMap::new(
            p4.clone(),
            b3,
            vec![
                QMat::zero(0, 0),
                QMat::zero(0, 0),
                QMat::zero(1, 0),
                QMat::from_i64(vec![vec![0], vec![1]]),
            ],
        )
        .unwrap();
        let (ker, _) = kernel(&f);
        assert!(ker.is_zero());

        // cokernel of a3 + b3 : P(4) -> P(3) has dimension vector (0,0,1,1)
        let g = RepMap::new(
            p4,
            p3,
            vec![
                QMat::zero(0, 0),
                QMat::zero(0, 0),
                QMat::zero(1, 0),
                QMat::from_i64(vec![vec![1], vec![1]]),
            ],
        )
        .unwrap();
        let (cok, proj) = cokernel(&g);
        assert_eq!(cok.dim_vector(), &[0, 0, 1, 1]);
        proj.validate().unwrap();
        cok.validate().unwrap();
    }

    #[test]
    fn short_exactness_detects_failures() {
        let alg = build_algebra(4).unwrap();
        let m = projective(&alg, 1).unwrap();
        let n = simple(&alg, 4).unwrap();
        let mn = m.direct_sum(&n);
        // 0 -> M -(id,0)-> M + N -pr1-> M -> 0 is not exact (composite nonzero)
        let incl = RepMap::new(
            m.clone(),
            mn.clone(),
            (1..=4)
                .map(|v| {
                    QMat::from_fn(mn.dim_at(v), m.dim_at(v), |r, c| {
                        if r == c {
                            rat(1)
                        } else {
                            rat(0)
                        }
                    })
                })
                .collect(),
        )
        .unwrap();
        let pr1 = RepMap::new(
            mn.clone(),
            m.clone(),
            (1..=4)
                .map(|v| {
                    QMat::from_fn(m.dim_at(v), mn.dim_at(v), |r, c| {
                        if r == c {
                            rat(1)
                        } else {
                            rat(0)
                        }
                    })
                })
                .collect(),
        )
        .unwrap();
        assert!(!verify_short_exact(&incl, &pr1).unwrap());

        // mismatched middle terms are an error, not `false`
        let other = RepMap::identity(&n);
        assert!(verify_short_exact(&incl, &other).is_err());
    }

    #[test]
    fn iso_is_reflexive_symmetric_and_base_change_invariant() {
        let alg = build_algebra(4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mods: Vec<Rep> = vec![
            projective(&alg, 1).unwrap(),
            injective(&alg, 3).unwrap(),
            fixture_s_plus(&alg).unwrap(),
            projective(&alg, 2)
                .unwrap()
                .direct_sum(&simple(&alg, 3).unwrap()),
        ];
        for m in &mods {
            assert!(is_isomorphic(m, m, 1));
        }
        for m in &mods {
            for n in &mods {
                assert_eq!(is_isomorphic(m, n, 2), is_isomorphic(n, m, 3));
            }
        }
        // conjugating by random invertible matrices preserves the iso class
        for m in &mods {
            let gs: Vec<QMat> = (1..=4)
                .map(|v| loop {
                    let d = m.dim_at(v);
                    let g = QMat::from_fn(d, d, |_, _| rat(rng.gen_range(-3..=3)));
                    if g.is_invertible() {
                        break g;
                    }
                })
                .collect();
            let inv: Vec<QMat> = gs
                .iter()
                .map(|g| g.solve(&QMat::identity(g.rows())).unwrap())
                .collect();
            let twisted = Rep {
                mu: 4,
                dims: m.dims.clone(),
                alpha: (1..4)
                    .map(|i| gs[i].mul(&m.alpha[i - 1]).mul(&inv[i - 1]))
                    .collect(),
                beta: (1..4)
                    .map(|i| gs[i].mul(&m.beta[i - 1]).mul(&inv[i - 1]))
                    .collect(),
            };
            twisted.validate().unwrap();
            assert!(is_isomorphic(m, &twisted, 17));
        }
    }

    #[test]
    fn iso_properties_over_a_corpus() {
        let mods = crate::corpus::modules(4, 14, 61);
        for m in &mods {
            assert!(is_isomorphic(m, m, 19), "reflexivity");
        }
        for (n, m) in mods.iter().enumerate() {
            let other = &mods[(n + 3) % mods.len()];
            assert_eq!(
                is_isomorphic(m, other, 20),
                is_isomorphic(other, m, 21),
                "symmetry at corpus index {n}"
            );
        }
    }

    #[test]
    fn simple_is_top_of_projective() {
        // radical-quotient oracle: include the span of the length >= 1
        // paths as a submodule and take the cokernel
        let alg = build_algebra(5).unwrap();
        for i in 1..=5 {
            let p = projective(&alg, i).unwrap();
            let bases: Vec<QMat> = (1..=5)
                .map(|v| {
                    let paths = crate::algebra::paths_between(i, v);
                    let nontrivial: Vec<usize> = paths
                        .iter()
                        .enumerate()
                        .filter(|(_, q)| !q.is_trivial())
                        .map(|(n, _)| n)
                        .collect();
                    QMat::from_fn(p.dim_at(v), nontrivial.len(), |r, c| {
                        if r == nontrivial[c] {
                            rat(1)
                        } else {
                            rat(0)
                        }
                    })
                })
                .collect();
            let dims: Vec<usize> = bases.iter().map(QMat::cols).collect();
            let arrows = |kind: PathKind| -> Vec<QMat> {
                (1..5)
                    .map(|v| {
                        let moved = p.arrow(kind, v).mul(&bases[v - 1]);
                        bases[v].solve(&moved).expect("radical is a submodule")
                    })
                    .collect()
            };
            let rad = Rep::new(5, dims, arrows(PathKind::Alpha), arrows(PathKind::Beta)).unwrap();
            let incl = RepMap::new(rad, p.clone(), bases).unwrap();
            let (top, _) = cokernel(&incl);
            assert!(
                is_isomorphic(&top, &simple(&alg, i).unwrap(), 41),
                "top P({i})"
            );
        }
    }

    #[test]
    fn serre_probe_hom_from_projective() {
        let alg = build_algebra(5).unwrap();
        for i in 1..=5 {
            let pi = projective(&alg, i).unwrap();
            for m in [
                injective(&alg, 3).unwrap(),
                projective(&alg, 2).unwrap(),
                simple(&alg, 4).unwrap(),
            ] {
                assert_eq!(hom_space(&pi, &m).len(), m.dim_at(i));
            }
        }
    }
}
