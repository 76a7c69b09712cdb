//! Seeded corpora of random modules and complexes for property tests and
//! benchmarks. Objects are built from the canonical generators by random
//! shifts, sums, cones over random chain maps, kernels and cokernels, so
//! everything stays inside the bounded derived category and sizes stay
//! small. The same seed always produces the same corpus.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::build_algebra;
use crate::complex::{chain_map_space, cone, from_module, ProjComplex};
use crate::functors::one_spherical;
use crate::rep::{
    cokernel, fixture_s_minus, fixture_s_plus, hom_space, injective, kernel, projective, simple,
    Rep, RepMap,
};

const MAX_SUMMANDS: usize = 10;
const MAX_MODULE_DIM: usize = 12;

/// A deterministic corpus of bounded complexes of projectives.
pub fn complexes(mu: usize, size: usize, seed: u64) -> Vec<ProjComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<ProjComplex> = Vec::new();
    for i in 1..=mu {
        pool.push(ProjComplex::single(mu, i, 0));
    }
    for i in 1..mu {
        pool.push(one_spherical(mu, i));
    }
    if mu == 4 {
        let alg = build_algebra(4).unwrap();
        pool.push(from_module(&fixture_s_plus(&alg).unwrap()));
        pool.push(from_module(&fixture_s_minus(&alg).unwrap()));
    }

    let mut out = Vec::with_capacity(size);
    while out.len() < size {
        let pick = |rng: &mut ChaCha8Rng, pool: &Vec<ProjComplex>| {
            pool[rng.gen_range(0..pool.len())].clone()
        };
        let candidate = match rng.gen_range(0..4u8) {
            0 => pick(&mut rng, &pool).shift(rng.gen_range(-2..=2)),
            1 => {
                let a = pick(&mut rng, &pool);
                let b = pick(&mut rng, &pool);
                a.direct_sum(&b)
            }
            2 => {
                let a = pick(&mut rng, &pool);
                let b = pick(&mut rng, &pool).shift(rng.gen_range(-1..=1));
                let maps = chain_map_space(&a, &b);
                if maps.is_empty() {
                    a.direct_sum(&b.shift(1))
                } else {
                    // random small combination of the chain-map basis
                    let mut f = crate::complex::ChainMap::zero(&a, &b);
                    let mut mats = std::collections::BTreeMap::new();
                    for g in &maps {
                        let c = rng.gen_range(-2..=2i64);
                        if c == 0 {
                            continue;
                        }
                        for (&n, m) in &g.mats {
                            let entry = mats.entry(n).or_insert_with(|| {
                                crate::complex::PathMat::zero(m.rows(), m.cols())
                            });
                            for (r, cc, e) in m.entries() {
                                entry.add_entry(r, cc, &e.scale(&crate::rat(c)));
                            }
                        }
                    }
                    f.mats = mats;
                    debug_assert!(f.validate().is_ok());
                    cone(&f).minimize()
                }
            }
            _ => pick(&mut rng, &pool).minimize(),
        };
        if candidate.summand_count() == 0 || candidate.summand_count() > MAX_SUMMANDS {
            continue;
        }
        pool.push(candidate.clone());
        out.push(candidate);
    }
    out
}

/// A deterministic corpus of modules.
pub fn modules(mu: usize, size: usize, seed: u64) -> Vec<Rep> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let alg = build_algebra(mu as i64).unwrap();
    let mut pool: Vec<Rep> = Vec::new();
    for i in 1..=mu {
        pool.push(projective(&alg, i).unwrap());
        pool.push(injective(&alg, i).unwrap());
        pool.push(simple(&alg, i).unwrap());
    }
    if mu == 4 {
        pool.push(fixture_s_plus(&alg).unwrap());
        pool.push(fixture_s_minus(&alg).unwrap());
    }

    let mut out = Vec::with_capacity(size);
    while out.len() < size {
        let pick =
            |rng: &mut ChaCha8Rng, pool: &Vec<Rep>| pool[rng.gen_range(0..pool.len())].clone();
        let candidate = match rng.gen_range(0..3u8) {
            0 => {
                let a = pick(&mut rng, &pool);
                let b = pick(&mut rng, &pool);
                a.direct_sum(&b)
            }
            other => {
                let a = pick(&mut rng, &pool);
                let b = pick(&mut rng, &pool);
                let homs = hom_space(&a, &b);
                if homs.is_empty() {
                    a
                } else {
                    let mut f = RepMap::zero(&a, &b);
                    for g in &homs {
                        let c = rng.gen_range(-2..=2i64);
                        if c != 0 {
                            f = f.add(&g.scale(&crate::rat(c)));
                        }
                    }
                    if other == 1 {
                        kernel(&f).0
                    } else {
                        cokernel(&f).0
                    }
                }
            }
        };
        if candidate.is_zero() || candidate.total_dim() > MAX_MODULE_DIM {
            continue;
        }
        debug_assert!(candidate.validate().is_ok());
        pool.push(candidate.clone());
        out.push(candidate);
    }
    out
}
