//! Total Hom-complexes. For a bounded complex of projectives `X` and any
//! complex `Y`, `Hom^p(X, Y) = ⊕_q Hom(X^q, Y^{q+p})` with the Koszul
//! differential `D(f) = d_Y ∘ f - (-1)^p f ∘ d_X`; because `X` is a bounded
//! complex of projectives this computes `RHom(X, Y)`, so the cohomology
//! dimensions are the numbers `dim Hom(X, Y[p])`.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::{paths_between, AlgElem, Path};
use crate::complex::{GradedDims, PathMat, ProjComplex, RepComplex};
use crate::qmat::QMat;
use crate::{rat, Rat};
use num_traits::Zero;

/// A bounded complex of rational vector spaces given by dimensions and
/// differential matrices `d^p : V^p -> V^{p+1}`.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct VectComplex {
    dims: BTreeMap<i64, usize>,
    diffs: BTreeMap<i64, QMat>,
}

impl VectComplex {
    pub fn new(dims: BTreeMap<i64, usize>, diffs: BTreeMap<i64, QMat>) -> Self {
        let mut v = VectComplex { dims, diffs };
        v.dims.retain(|_, &mut d| d > 0);
        let dims = &v.dims;
        v.diffs.retain(|p, m| {
            !m.is_zero()
                && m.cols() == dims.get(p).copied().unwrap_or(0)
                && m.rows() == dims.get(&(p + 1)).copied().unwrap_or(0)
        });
        debug_assert!(
            v.d_squared_zero(),
            "vector space complex must satisfy d.d = 0"
        );
        v
    }

    pub fn dim(&self, p: i64) -> usize {
        self.dims.get(&p).copied().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.dims.keys().copied().collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn diff(&self, p: i64) -> QMat {
        self.diffs
            .get(&p)
            .cloned()
            .unwrap_or_else(|| QMat::zero(self.dim(p + 1), self.dim(p)))
    }

    pub fn d_squared_zero(&self) -> bool {
        self.dims
            .keys()
            .all(|&p| self.diff(p + 1).mul(&self.diff(p)).is_zero())
    }

    pub fn cohomology_dims(&self) -> GradedDims {
        let mut out = GradedDims::empty();
        for &p in self.dims.keys() {
            let h = self.dim(p) - self.diff(p).rank() - self.diff(p - 1).rank();
            out.add(p, h);
        }
        out
    }

    /// Linear dual: `(V*)^u = (V^{-u})*` with `d(ξ) = (-1)^u ξ ∘ d_V`, the
    /// sign that makes coevaluation maps into duals chain maps.
    pub fn dual(&self) -> VectComplex {
        let dims = self.dims.iter().map(|(&p, &d)| (-p, d)).collect();
        let diffs = self
            .diffs
            .iter()
            .map(|(&p, m)| {
                // d* : (V*)^{-p-1} -> (V*)^{-p} pairs with d^p
                let u = -p - 1;
                let sign = if u.rem_euclid(2) == 0 {
                    rat(1)
                } else {
                    rat(-1)
                };
                (u, m.transpose().scale(&sign))
            })
            .collect();
        VectComplex::new(dims, diffs)
    }
}

/// An elementary degree-`p` homogeneous map: the summand `col` of `X^q`
/// mapped to the summand `row` of `Y^{q+p}` by the path `path` (a path from
/// the target projective's vertex to the source projective's vertex).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct HomBasis {
    pub q: i64,
    pub col: usize,
    pub row: usize,
    pub path: Path,
}

/// The Hom-complex together with its elementary basis in each degree.
#[derive(Clone, Debug)]
pub struct HomComplex {
    pub vc: VectComplex,
    pub basis: BTreeMap<i64, Vec<HomBasis>>,
    index: HashMap<(i64, HomBasis), usize>,
}

impl HomComplex {
    pub fn index_of(&self, p: i64, elem: &HomBasis) -> Option<usize> {
        self.index.get(&(p, *elem)).copied()
    }
}

/// `RHom(X, Y)` as an explicit complex of vector spaces with basis.
pub fn hom_complex(x: &ProjComplex, y: &ProjComplex) -> HomComplex {
    assert_eq!(x.mu(), y.mu(), "complexes over different algebras");
    let mut basis: BTreeMap<i64, Vec<HomBasis>> = BTreeMap::new();
    for &q in &x.degrees() {
        for &m in &y.degrees() {
            let p = m - q;
            let list = basis.entry(p).or_default();
            for (c, &a) in x.term(q).iter().enumerate() {
                for (r, &b) in y.term(m).iter().enumerate() {
                    for path in paths_between(b, a) {
                        list.push(HomBasis {
                            q,
                            col: c,
                            row: r,
                            path,
                        });
                    }
                }
            }
        }
    }
    basis.retain(|_, v| !v.is_empty());
    let index: HashMap<(i64, HomBasis), usize> = basis
        .iter()
        .flat_map(|(&p, v)| v.iter().enumerate().map(move |(i, e)| ((p, *e), i)))
        .collect();
    let dims: BTreeMap<i64, usize> = basis.iter().map(|(&p, v)| (p, v.len())).collect();

    let mut diffs = BTreeMap::new();
    for (&p, elems) in &basis {
        let rows = basis.get(&(p + 1)).map_or(0, Vec::len);
        if rows == 0 {
            continue;
        }
        let mut d = QMat::zero(rows, elems.len());
        let sign = if p.rem_euclid(2) == 0 {
            rat(-1)
        } else {
            rat(1)
        };
        for (i, e) in elems.iter().enumerate() {
            let phi = AlgElem::from_path(e.path);
            // d_Y ∘ f
            for (r2, r, dy) in y.diff(e.q + p).entries() {
                if r != e.row {
                    continue;
                }
                for (path2, coef) in dy.mul(&phi).terms() {
                    let target = HomBasis {
                        q: e.q,
                        col: e.col,
                        row: r2,
                        path: *path2,
                    };
                    if let Some(j) = index.get(&(p + 1, target)) {
                        d.add_to(*j, i, coef);
                    }
                }
            }
            // -(-1)^p f ∘ d_X
            for (r, c2, dx) in x.diff(e.q - 1).entries() {
                if r != e.col {
                    continue;
                }
                for (path2, coef) in phi.mul(dx).terms() {
                    let target = HomBasis {
                        q: e.q - 1,
                        col: c2,
                        row: e.row,
                        path: *path2,
                    };
                    if let Some(j) = index.get(&(p + 1, target)) {
                        let v = coef * &sign;
                        d.add_to(*j, i, &v);
                    }
                }
            }
        }
        if !d.is_zero() {
            diffs.insert(p, d);
        }
    }
    HomComplex {
        vc: VectComplex::new(dims, diffs),
        basis,
        index,
    }
}

/// Cohomology dimensions of `RHom(X, Y)`.
pub fn rhom_dims(x: &ProjComplex, y: &ProjComplex) -> GradedDims {
    hom_complex(x, y).vc.cohomology_dims()
}

/// `RHom(X, N)` for a complex of modules `N` (valid because `X` consists of
/// projectives). A map out of a projective summand `P(a)` is a vector in the
/// module's fibre at `a`.
pub fn hom_complex_rep(x: &ProjComplex, n: &RepComplex) -> VectComplex {
    #[derive(Clone, Copy, PartialEq, Eq, Hash)]
    struct B {
        q: i64,
        col: usize,
        idx: usize,
    }
    let mut basis: BTreeMap<i64, Vec<B>> = BTreeMap::new();
    for &q in &x.degrees() {
        for &m in &n.degrees() {
            let p = m - q;
            let term = n.term(m);
            let list = basis.entry(p).or_default();
            for (c, &a) in x.term(q).iter().enumerate() {
                for idx in 0..term.dim_at(a) {
                    list.push(B { q, col: c, idx });
                }
            }
        }
    }
    basis.retain(|_, v| !v.is_empty());
    let index: HashMap<(i64, B), usize> = basis
        .iter()
        .flat_map(|(&p, v)| v.iter().enumerate().map(move |(i, e)| ((p, *e), i)))
        .collect();
    let dims: BTreeMap<i64, usize> = basis.iter().map(|(&p, v)| (p, v.len())).collect();

    let mut diffs = BTreeMap::new();
    for (&p, elems) in &basis {
        let rows = basis.get(&(p + 1)).map_or(0, Vec::len);
        if rows == 0 {
            continue;
        }
        let mut d = QMat::zero(rows, elems.len());
        let sign = if p.rem_euclid(2) == 0 {
            rat(-1)
        } else {
            rat(1)
        };
        for (i, e) in elems.iter().enumerate() {
            let a = x.term(e.q)[e.col];
            // d_N ∘ f: apply the module-complex differential at vertex a
            if let Some(dn) = n.diff(e.q + p) {
                let m = dn.at(a);
                for r in 0..m.rows() {
                    let coef = m.get(r, e.idx);
                    if !coef.is_zero() {
                        let target = B {
                            q: e.q,
                            col: e.col,
                            idx: r,
                        };
                        if let Some(j) = index.get(&(p + 1, target)) {
                            d.add_to(*j, i, coef);
                        }
                    }
                }
            }
            // -(-1)^p f ∘ d_X: precompose with the path entries of d_X
            for (r, c2, dx) in x.diff(e.q - 1).entries() {
                if r != e.col {
                    continue;
                }
                let term = n.term(e.q + p);
                for (path, coef) in dx.terms() {
                    let act = term.path_action(path);
                    for r2 in 0..act.rows() {
                        let v = act.get(r2, e.idx);
                        if !v.is_zero() {
                            let target = B {
                                q: e.q - 1,
                                col: c2,
                                idx: r2,
                            };
                            if let Some(j) = index.get(&(p + 1, target)) {
                                let w: Rat = coef * v * &sign;
                                d.add_to(*j, i, &w);
                            }
                        }
                    }
                }
            }
        }
        if !d.is_zero() {
            diffs.insert(p, d);
        }
    }
    VectComplex::new(dims, diffs)
}

/// Labels of the summands of `V ⊗ S` in each degree: `(p, a, j)` means the
/// `a`-th basis vector of `V^p` tensored with the `j`-th summand of
/// `S^{n-p}`.
pub type TensorLabels = BTreeMap<i64, Vec<(i64, usize, usize)>>;

/// `V ⊗ S` for a vector-space complex `V` and a complex of projectives `S`,
/// with differential `d(v ⊗ s) = D(v) ⊗ s + (-1)^p v ⊗ d_S(s)`.
pub fn tensor_vect(v: &VectComplex, s: &ProjComplex) -> (ProjComplex, TensorLabels) {
    let mut labels: TensorLabels = BTreeMap::new();
    for &p in &v.degrees() {
        for &q in &s.degrees() {
            let n = p + q;
            let list = labels.entry(n).or_default();
            for a in 0..v.dim(p) {
                for j in 0..s.term(q).len() {
                    list.push((p, a, j));
                }
            }
        }
    }
    labels.retain(|_, v| !v.is_empty());
    let index: HashMap<(i64, i64, usize, usize), usize> = labels
        .iter()
        .flat_map(|(&n, v)| {
            v.iter()
                .enumerate()
                .map(move |(i, &(p, a, j))| ((n, p, a, j), i))
        })
        .collect();
    let terms: BTreeMap<i64, Vec<usize>> = labels
        .iter()
        .map(|(&n, v)| (n, v.iter().map(|&(p, _, j)| s.term(n - p)[j]).collect()))
        .collect();

    let mut diffs = BTreeMap::new();
    for (&n, cols) in &labels {
        let rows = labels.get(&(n + 1)).map_or(0, Vec::len);
        if rows == 0 {
            continue;
        }
        let mut m = PathMat::zero(rows, cols.len());
        for (ci, &(p, a, j)) in cols.iter().enumerate() {
            let vertex = s.term(n - p)[j];
            // D(v) ⊗ s
            let dv = v.diff(p);
            for a2 in 0..dv.rows() {
                let coef = dv.get(a2, a);
                if !coef.is_zero() {
                    if let Some(&ri) = index.get(&(n + 1, p + 1, a2, j)) {
                        m.add_entry(ri, ci, &AlgElem::term(Path::trivial(vertex), coef.clone()));
                    }
                }
            }
            // (-1)^p v ⊗ d_S(s)
            let sign = if p.rem_euclid(2) == 0 { 1 } else { -1 };
            for (j2, jc, e) in s.diff(n - p).entries() {
                if jc != j {
                    continue;
                }
                if let Some(&ri) = index.get(&(n + 1, p, a, j2)) {
                    m.add_entry(ri, ci, &e.scale_sign(sign));
                }
            }
        }
        if !m.is_zero() {
            diffs.insert(n, m);
        }
    }
    let out = ProjComplex::from_parts(s.mu(), terms, diffs)
        .expect("tensor of a complex with a graded space is a complex");
    (out, labels)
}
