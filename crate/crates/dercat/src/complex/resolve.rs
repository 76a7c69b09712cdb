//! Minimal projective resolutions via iterated projective covers, and the
//! global dimension computed from them. The algebra has finite global
//! dimension, so the iteration always terminates.

use std::collections::BTreeMap;

use crate::algebra::{paths_between, PathAlgebra, PathKind};
use crate::complex::{PathMat, ProjComplex};
use crate::qmat::QMat;
use crate::rep::{kernel, proj_offsets, proj_sum, simple, Rep, RepMap};
use crate::{AlgElem, Rat};
use num_traits::{One, Zero};

/// The projective cover `P -> M`: one copy of `P(v)` for every basis vector
/// of the top at `v`, mapped to lifts of that basis.
fn projective_cover(m: &Rep) -> (Vec<usize>, RepMap) {
    let mu = m.mu();
    let mut verts = Vec::new();
    let mut gens: Vec<(usize, Vec<Rat>)> = Vec::new();
    for v in 1..=mu {
        let dim = m.dim_at(v);
        if dim == 0 {
            continue;
        }
        // radical columns, then greedily extend by standard vectors
        let mut span = if v == 1 {
            QMat::zero(dim, 0)
        } else {
            m.arrow(PathKind::Alpha, v - 1)
                .hstack(m.arrow(PathKind::Beta, v - 1))
        };
        let mut rank = span.rank();
        for e in 0..dim {
            if rank == dim {
                break;
            }
            let cand = QMat::from_fn(dim, 1, |r, _| if r == e { Rat::one() } else { Rat::zero() });
            let widened = span.hstack(&cand);
            let wr = widened.rank();
            if wr > rank {
                rank = wr;
                span = widened;
                verts.push(v);
                gens.push((
                    v,
                    (0..dim)
                        .map(|r| if r == e { Rat::one() } else { Rat::zero() })
                        .collect(),
                ));
            }
        }
    }
    // re-sort summands by vertex (they already are; keep the invariant explicit)
    debug_assert!(verts.windows(2).all(|w| w[0] <= w[1]));

    let p = proj_sum(mu, &verts);
    let maps: Vec<QMat> = (1..=mu)
        .map(|u| {
            let mut mat = QMat::zero(m.dim_at(u), p.dim_at(u));
            let offs = proj_offsets(&verts, u);
            for (s, &(a, ref gen)) in gens.iter().enumerate() {
                for (pi, path) in paths_between(a, u).iter().enumerate() {
                    let act = m.path_action(path);
                    for r in 0..m.dim_at(u) {
                        let mut acc = Rat::zero();
                        for (k, g) in gen.iter().enumerate() {
                            acc += act.get(r, k) * g;
                        }
                        mat.set(r, offs[s] + pi, acc);
                    }
                }
            }
            mat
        })
        .collect();
    let cover = RepMap::new(p, m.clone(), maps).expect("projective cover intertwines");
    debug_assert!(
        (1..=mu).all(|v| cover.at(v).rank() == m.dim_at(v)),
        "cover must be onto"
    );
    (verts, cover)
}

/// Reads a map between sums of projectives off its generator images, as a
/// matrix of algebra elements.
fn repmap_to_pathmat(f: &RepMap, src_verts: &[usize], tgt_verts: &[usize]) -> PathMat {
    let mut d = PathMat::zero(tgt_verts.len(), src_verts.len());
    for (c, &a) in src_verts.iter().enumerate() {
        let col = proj_offsets(src_verts, a)[c]; // index of the generator e_a
        let image = f.at(a);
        let tgt_offs = proj_offsets(tgt_verts, a);
        for (r, &b) in tgt_verts.iter().enumerate() {
            let mut e = AlgElem::zero();
            for (pi, path) in paths_between(b, a).iter().enumerate() {
                let coef = image.get(tgt_offs[r] + pi, col).clone();
                if !coef.is_zero() {
                    e.add_term(*path, coef);
                }
            }
            d.set(r, c, e);
        }
    }
    d
}

/// Minimal projective resolution of a module, placed in degrees `<= 0`.
pub fn from_module(m: &Rep) -> ProjComplex {
    let mu = m.mu();
    if m.is_zero() {
        return ProjComplex::zero(mu);
    }
    let mut layers: Vec<Vec<usize>> = Vec::new();
    let mut pathmats: Vec<PathMat> = Vec::new();

    let (verts0, cover0) = projective_cover(m);
    let (mut syzygy, mut incl) = kernel(&cover0);
    layers.push(verts0);

    while !syzygy.is_zero() {
        assert!(
            layers.len() <= mu,
            "resolution exceeds the global dimension bound"
        );
        let (verts, cover) = projective_cover(&syzygy);
        let diff = cover.compose(&incl);
        pathmats.push(repmap_to_pathmat(&diff, &verts, layers.last().unwrap()));
        layers.push(verts);
        let (next, next_incl) = kernel(&cover);
        syzygy = next;
        incl = next_incl;
    }

    let mut terms = BTreeMap::new();
    let mut diffs = BTreeMap::new();
    for (s, verts) in layers.iter().enumerate() {
        terms.insert(-(s as i64), verts.clone());
    }
    for (s, d) in pathmats.into_iter().enumerate() {
        // d : P_{s+1} -> P_s sits at degree -(s+1)
        diffs.insert(-(s as i64) - 1, d);
    }
    let out =
        ProjComplex::from_parts(mu, terms, diffs).expect("projective resolution is a complex");
    debug_assert!(
        out.is_minimal(),
        "iterated covers give a minimal resolution"
    );
    out
}

/// Maximal length of a minimal projective resolution of a simple module.
pub fn global_dimension(algebra: &PathAlgebra) -> usize {
    (1..=algebra.mu())
        .map(|i| {
            let res = from_module(&simple(algebra, i).unwrap());
            (-res.min_degree().unwrap_or(0)) as usize
        })
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, Path};
    use crate::rep::{fixture_s_plus, injective, projective};

    #[test]
    fn resolution_of_s_plus_is_the_alternating_strand() {
        let alg = build_algebra(4).unwrap();
        let res = from_module(&fixture_s_plus(&alg).unwrap());
        assert_eq!(res.degrees(), vec![-3, -2, -1, 0]);
        assert_eq!(res.term(0), &[1]);
        assert_eq!(res.term(-1), &[2]);
        assert_eq!(res.term(-2), &[3]);
        assert_eq!(res.term(-3), &[4]);
        // differentials are b1, a2, b3 up to normalization of the cover
        let entry = |n: i64| res.diff(n).get(0, 0).unwrap().clone();
        assert_eq!(entry(-1).terms().len(), 1);
        assert_eq!(entry(-1).terms()[0].0, Path::arrow(PathKind::Beta, 1));
        assert_eq!(entry(-2).terms()[0].0, Path::arrow(PathKind::Alpha, 2));
        assert_eq!(entry(-3).terms()[0].0, Path::arrow(PathKind::Beta, 3));
    }

    #[test]
    fn resolution_of_zero_module_is_empty() {
        assert!(from_module(&Rep::zero(4)).is_zero());
    }

    #[test]
    fn resolution_of_projective_is_itself() {
        let alg = build_algebra(5).unwrap();
        for i in 1..=5 {
            let res = from_module(&projective(&alg, i).unwrap());
            assert_eq!(res.degrees(), vec![0]);
            assert_eq!(res.term(0), &[i]);
        }
    }

    #[test]
    fn resolution_of_first_simple_attains_global_dimension() {
        let alg = build_algebra(4).unwrap();
        let res = from_module(&simple(&alg, 1).unwrap());
        assert_eq!(res.min_degree(), Some(-3));
        // syzygies double up: P(1) <- P(2)^2 <- P(3)^2 <- P(4)^2
        assert_eq!(res.term(-1), &[2, 2]);
        assert_eq!(res.term(-2), &[3, 3]);
        assert_eq!(res.term(-3), &[4, 4]);
    }

    #[test]
    fn global_dimensions() {
        assert_eq!(global_dimension(&build_algebra(1).unwrap()), 0);
        assert_eq!(global_dimension(&build_algebra(4).unwrap()), 3);
        assert_eq!(global_dimension(&build_algebra(6).unwrap()), 5);
    }

    #[test]
    fn resolution_recovers_the_module() {
        let alg = build_algebra(4).unwrap();
        for m in [
            fixture_s_plus(&alg).unwrap(),
            injective(&alg, 3).unwrap(),
            simple(&alg, 2).unwrap(),
            injective(&alg, 4).unwrap(),
        ] {
            let res = from_module(&m);
            res.validate().unwrap();
            let h = res.cohomology_modules();
            assert_eq!(h.len(), 1, "resolution is exact away from degree 0");
            assert!(crate::rep::is_isomorphic(&h[&0], &m, 23));
        }
    }
}
