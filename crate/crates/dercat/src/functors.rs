//! The Nakayama functor (termwise model of the Serre functor on perfect
//! complexes), sphericity certificates, spherical twists and their
//! inverses, and left/right mutations.
//!
//! Twists and mutations are cones over evaluation or coevaluation maps
//! built from the full Hom-complex, not from a chosen quasi-isomorphism
//! representative of its cohomology; minimization normalizes the result
//! afterwards.

use std::collections::BTreeMap;

use crate::algebra::{paths_between, AlgElem, Path, PathKind};
use crate::complex::{
    cone, hom_complex, rhom_dims, tensor_vect, ChainMap, GradedDims, PathMat, ProjComplex,
    RepComplex,
};
use crate::qmat::QMat;
use crate::rep::{inj_offsets, inj_sum, is_isomorphic, RepMap};
use num_traits::Zero;

/// Matrix of right multiplication by a path: `paths(v -> source) ->
/// paths(v -> target)` is the wrong way around for a module map, so the
/// Nakayama functor uses its transpose.
fn path_rightmul_matrix(path: &Path, v: usize) -> QMat {
    let cols = paths_between(v, path.source());
    let rows = paths_between(v, path.target());
    let mut m = QMat::zero(rows.len(), cols.len());
    for (c, p) in cols.iter().enumerate() {
        if let Some(q) = p.compose(path) {
            let r = rows.iter().position(|t| t == &q).unwrap();
            m.set(r, c, crate::rat(1));
        }
    }
    m
}

/// Applies the Nakayama functor termwise: each `P(i)` becomes `I(i)`, each
/// path entry becomes its dual action. The functor is additive and exact on
/// projectives, so the result is again a complex.
pub fn nakayama(x: &ProjComplex) -> RepComplex {
    let mu = x.mu();
    let terms: BTreeMap<i64, crate::Rep> = x
        .degrees()
        .iter()
        .map(|&n| (n, inj_sum(mu, x.term(n))))
        .collect();
    let mut diffs = BTreeMap::new();
    for &n in x.degrees().iter() {
        let d = x.diff(n);
        if d.is_zero() {
            continue;
        }
        let src_verts = x.term(n);
        let tgt_verts = x.term(n + 1);
        let src = terms[&n].clone();
        let tgt = terms
            .get(&(n + 1))
            .cloned()
            .unwrap_or_else(|| crate::Rep::zero(mu));
        let maps: Vec<QMat> = (1..=mu)
            .map(|v| {
                let mut m = QMat::zero(tgt.dim_at(v), src.dim_at(v));
                let src_off = inj_offsets(src_verts, v);
                let tgt_off = inj_offsets(tgt_verts, v);
                for (r, c, e) in d.entries() {
                    for (path, coef) in e.terms() {
                        let block = path_rightmul_matrix(path, v).transpose();
                        for br in 0..block.rows() {
                            for bc in 0..block.cols() {
                                let val = block.get(br, bc);
                                if !val.is_zero() {
                                    let w = val * coef;
                                    m.add_to(tgt_off[r] + br, src_off[c] + bc, &w);
                                }
                            }
                        }
                    }
                }
                m
            })
            .collect();
        diffs.insert(
            n,
            RepMap::new(src, tgt, maps).expect("dualized differential intertwines"),
        );
    }
    RepComplex::new(mu, terms, diffs).expect("the Nakayama functor preserves d.d = 0")
}

#[derive(Clone, PartialEq, Debug)]
pub enum SphericalStatus {
    Certified,
    NotSpherical(String),
    Inconclusive(String),
}

/// Certificate for the `m`-sphericity of an object: endomorphism
/// fingerprint plus the Serre condition `S_D(S) ≅ S[m]`, compared through
/// degreewise cohomology modules.
#[derive(Clone, Debug)]
pub struct SphericalCert {
    pub m: i64,
    pub endo: GradedDims,
    pub status: SphericalStatus,
}

impl SphericalCert {
    pub fn is_certified(&self) -> bool {
        self.status == SphericalStatus::Certified
    }
}

pub fn is_spherical(s: &ProjComplex, m: i64, seed: u64) -> SphericalCert {
    let endo = rhom_dims(s, s);
    if s.minimize().is_zero() {
        return SphericalCert {
            m,
            endo,
            status: SphericalStatus::NotSpherical("object is zero".into()),
        };
    }
    let mut expected = GradedDims::empty();
    expected.add(0, 1);
    expected.add(m, 1);
    if endo != expected {
        return SphericalCert {
            m,
            endo: endo.clone(),
            status: SphericalStatus::NotSpherical(format!(
                "endomorphism dims {endo} differ from {expected}"
            )),
        };
    }

    let lhs = nakayama(s).cohomology_modules();
    let rhs = s.shift(m).cohomology_modules();
    let ldeg: Vec<i64> = lhs.keys().copied().collect();
    let rdeg: Vec<i64> = rhs.keys().copied().collect();
    if ldeg != rdeg {
        return SphericalCert {
            m,
            endo,
            status: SphericalStatus::NotSpherical(format!(
                "Serre image lives in degrees {ldeg:?}, shift in {rdeg:?}"
            )),
        };
    }
    for (n, l) in &lhs {
        if !is_isomorphic(l, &rhs[n], seed) {
            return SphericalCert {
                m,
                endo,
                status: SphericalStatus::NotSpherical(format!(
                    "cohomology modules differ in degree {n}"
                )),
            };
        }
    }
    if lhs.len() > 1 {
        return SphericalCert {
            m,
            endo,
            status: SphericalStatus::Inconclusive(
                "cohomology is spread over several degrees; degreewise module comparison is necessary but not sufficient".into(),
            ),
        };
    }
    SphericalCert {
        m,
        endo,
        status: SphericalStatus::Certified,
    }
}

/// The evaluation chain map `RHom(S, X) ⊗ S -> X`, `φ ⊗ s -> φ(s)`.
pub fn ev_map(s: &ProjComplex, x: &ProjComplex) -> ChainMap {
    let h = hom_complex(s, x);
    let (tensor, labels) = tensor_vect(&h.vc, s);
    let mut mats: BTreeMap<i64, PathMat> = BTreeMap::new();
    for (&n, cols) in &labels {
        let rows = x.term(n).len();
        if rows == 0 {
            continue;
        }
        let mut m = PathMat::zero(rows, cols.len());
        for (ci, &(p, a, j)) in cols.iter().enumerate() {
            let e = h.basis[&p][a];
            if e.q == n - p && e.col == j {
                m.add_entry(e.row, ci, &AlgElem::from_path(e.path));
            }
        }
        if !m.is_zero() {
            mats.insert(n, m);
        }
    }
    let f = ChainMap {
        source: tensor,
        target: x.clone(),
        mats,
    };
    debug_assert!(f.validate().is_ok(), "evaluation is a chain map");
    f
}

/// The coevaluation chain map `X -> RHom(X, S)* ⊗ S`,
/// `x -> Σ_a φ_a* ⊗ φ_a(x)` over a homogeneous basis of the Hom-complex.
pub fn coev_map(x: &ProjComplex, s: &ProjComplex) -> ChainMap {
    let h = hom_complex(x, s);
    let dual = h.vc.dual();
    let (tensor, labels) = tensor_vect(&dual, s);
    let mut mats: BTreeMap<i64, PathMat> = BTreeMap::new();
    for (&n, rows) in &labels {
        let cols = x.term(n).len();
        if cols == 0 {
            continue;
        }
        let mut m = PathMat::zero(rows.len(), cols);
        for (ri, &(u, a, j)) in rows.iter().enumerate() {
            let e = h.basis[&(-u)][a];
            if e.q == n && e.row == j {
                m.add_entry(ri, e.col, &AlgElem::from_path(e.path));
            }
        }
        if !m.is_zero() {
            mats.insert(n, m);
        }
    }
    let f = ChainMap {
        source: x.clone(),
        target: tensor,
        mats,
    };
    debug_assert!(f.validate().is_ok(), "coevaluation is a chain map");
    f
}

/// Spherical twist `T_S(X)`: cone of the evaluation map, minimized.
pub fn twist(s: &ProjComplex, x: &ProjComplex) -> ProjComplex {
    cone(&ev_map(s, x)).minimize()
}

/// Inverse twist: cone of the coevaluation into `RHom(X, S)* ⊗ S`, shifted
/// by `[-1]` and minimized.
pub fn twist_inverse(s: &ProjComplex, x: &ProjComplex) -> ProjComplex {
    cone(&coev_map(x, s)).shift(-1).minimize()
}

/// `k`-fold twist by `S` (negative `k` applies the inverse twist).
pub fn twist_iter(s: &ProjComplex, k: i64, x: &ProjComplex) -> ProjComplex {
    let mut out = x.minimize();
    for _ in 0..k.unsigned_abs() {
        out = if k > 0 {
            twist(s, &out)
        } else {
            twist_inverse(s, &out)
        };
    }
    out
}

/// Left mutation: the triangle `L_E F -> RHom(E, F) ⊗ E -> F -> L_E F[1]`,
/// so `L_E F = cone(ev)[-1]`.
pub fn left_mutation(e: &ProjComplex, f: &ProjComplex) -> ProjComplex {
    cone(&ev_map(e, f)).shift(-1).minimize()
}

/// Right mutation: the triangle `R_F E[-1] -> E -> RHom(E, F)* ⊗ F -> R_F E`,
/// so `R_F E = cone(coev)`.
pub fn right_mutation(e: &ProjComplex, f: &ProjComplex) -> ProjComplex {
    cone(&coev_map(e, f)).minimize()
}

/// The 1-spherical object `S_i`, presented as the two-term complex
/// `P(mu-i+1) -(a+b)-> P(mu-i)` in degrees `-1, 0`.
pub fn one_spherical(mu: usize, i: usize) -> ProjComplex {
    assert!(1 <= i && i < mu, "spherical generators need 1 <= i <= mu-1");
    let (src, tgt) = (mu - i + 1, mu - i);
    let mut terms = BTreeMap::new();
    terms.insert(-1, vec![src]);
    terms.insert(0, vec![tgt]);
    let f = AlgElem::from_path(Path::arrow(PathKind::Alpha, tgt))
        .add(&AlgElem::from_path(Path::arrow(PathKind::Beta, tgt)));
    let mut d = PathMat::zero(1, 1);
    d.set(0, 0, f);
    let mut diffs = BTreeMap::new();
    diffs.insert(-1, d);
    ProjComplex::from_parts(mu, terms, diffs).expect("two-term complex is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_algebra;
    use crate::complex::{from_module, is_derived_iso};
    use crate::rep::{cokernel, fixture_s_plus, injective, projective};

    #[test]
    fn nakayama_of_projective_is_injective() {
        let alg = build_algebra(4).unwrap();
        for i in 1..=4 {
            let nk = nakayama(&ProjComplex::single(4, i, 0));
            let h = nk.cohomology_modules();
            assert_eq!(h.len(), 1);
            assert!(is_isomorphic(&h[&0], &injective(&alg, i).unwrap(), 1));
        }
        assert!(nakayama(&ProjComplex::zero(4)).is_zero());
    }

    #[test]
    fn nakayama_shifts_the_one_spherical_object() {
        // S(S_1) ≅ S_1[1]: cohomology concentrated in degree -1, isomorphic
        // to the cokernel of a3 + b3
        let alg = build_algebra(4).unwrap();
        let s1 = one_spherical(4, 1);
        let nk = nakayama(&s1);
        let h = nk.cohomology_modules();
        assert_eq!(h.keys().copied().collect::<Vec<_>>(), vec![-1]);
        let p4 = projective(&alg, 4).unwrap();
        let p3 = projective(&alg, 3).unwrap();
        let f = RepMap::new(
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
        let (cok, _) = cokernel(&f);
        assert!(is_isomorphic(&h[&-1], &cok, 7));
    }

    #[test]
    fn spherical_certificates() {
        for mu in 4..=5 {
            for i in 1..mu {
                let cert = is_spherical(&one_spherical(mu, i), 1, 11);
                assert!(cert.is_certified(), "S_{i} at mu={mu}: {:?}", cert.status);
            }
        }
        let alg = build_algebra(4).unwrap();
        let sp = from_module(&fixture_s_plus(&alg).unwrap());
        assert!(is_spherical(&sp, 3, 11).is_certified());
        // a projective is exceptional, not spherical
        let p1 = ProjComplex::single(4, 1, 0);
        for m in -1..=4 {
            assert!(!is_spherical(&p1, m, 11).is_certified());
        }
        // and S_1 is not m-spherical for the wrong m
        assert!(!is_spherical(&one_spherical(4, 1), 2, 11).is_certified());
    }

    #[test]
    fn twist_moves_the_last_projective() {
        for mu in 4..=5 {
            let s1 = one_spherical(mu, 1);
            let pmu = ProjComplex::single(mu, mu, 0);
            let t = twist(&s1, &pmu);
            assert!(is_derived_iso(&t, &ProjComplex::single(mu, mu - 1, 0), 3));
            for k in 1..=mu - 2 {
                let pk = ProjComplex::single(mu, k, 0);
                assert!(is_derived_iso(&twist(&s1, &pk), &pk, 3), "P({k}) is fixed");
            }
        }
    }

    #[test]
    fn twist_of_spherical_by_itself() {
        // T_S(S) ≅ S[1-m]; for the 1-spherical generators this is S itself
        let s1 = one_spherical(4, 1);
        assert!(is_derived_iso(&twist(&s1, &s1), &s1, 13));
    }

    #[test]
    fn twist_and_inverse_cancel() {
        let s1 = one_spherical(4, 1);
        for x in [
            ProjComplex::single(4, 4, 0),
            ProjComplex::single(4, 3, 0),
            one_spherical(4, 2).shift(1),
        ] {
            let round = twist_inverse(&s1, &twist(&s1, &x));
            assert!(is_derived_iso(&round, &x, 17));
            let round2 = twist(&s1, &twist_inverse(&s1, &x));
            assert!(is_derived_iso(&round2, &x, 17));
        }
        // and the iterate API agrees
        let p4 = ProjComplex::single(4, 4, 0);
        assert!(is_derived_iso(
            &twist_iter(&s1, -1, &twist_iter(&s1, 1, &p4)),
            &p4,
            19
        ));
    }

    #[test]
    fn inverse_twist_recovers_the_last_projective() {
        let s1 = one_spherical(4, 1);
        let t = twist_inverse(&s1, &ProjComplex::single(4, 3, 0));
        assert!(is_derived_iso(&t, &ProjComplex::single(4, 4, 0), 23));
    }

    #[test]
    fn mutations_over_vanishing_hom_only_shift() {
        // RHom(P(1), P(3)) = 0, so the defining triangles degenerate
        let p1 = ProjComplex::single(4, 1, 0);
        let p3 = ProjComplex::single(4, 3, 0);
        let l = left_mutation(&p1, &p3);
        assert!(is_derived_iso(&l, &p3.shift(-1), 29));
        let r = right_mutation(&p1, &p3);
        assert!(is_derived_iso(&r, &p1.shift(1), 29));
    }

    #[test]
    fn adjacent_mutations_invert_each_other() {
        // R recovers what L consumed on the standard adjacent pair
        let p4 = ProjComplex::single(4, 4, 0);
        let p3 = ProjComplex::single(4, 3, 0);
        let l = left_mutation(&p4, &p3);
        let back = right_mutation(&l, &p4);
        assert!(is_derived_iso(&back, &p3, 31));
    }
}
