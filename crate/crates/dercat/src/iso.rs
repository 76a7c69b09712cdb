//! Decides whether a linear span of square matrices contains an invertible
//! element. Invertible combinations form the complement of the zero set of
//! `det(sum x_a M_a)`, a Zariski-open set, so seeded random sampling finds a
//! witness almost immediately whenever one exists. When every sample is
//! singular the determinant polynomial is expanded symbolically, which
//! settles the question exactly (the dimensions that reach this branch are
//! tiny).

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::qmat::QMat;
use crate::{rat, Rat};

const SAMPLE_ROUNDS: usize = 32;
const SYMBOLIC_DIM_LIMIT: usize = 12;
const SYMBOLIC_SPAN_LIMIT: usize = 6;
const WIDE_ROUNDS: usize = 256;

/// `mats` are `n x n`; returns true iff some rational combination is
/// invertible.
pub fn span_contains_invertible(mats: &[QMat], n: usize, seed: u64) -> bool {
    if n == 0 {
        return true;
    }
    if mats.is_empty() {
        return false;
    }
    for m in mats {
        assert_eq!((m.rows(), m.cols()), (n, n));
    }
    if mats.len() == 1 {
        return mats[0].is_invertible();
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if sample_rounds(mats, n, &mut rng, SAMPLE_ROUNDS, 8) {
        return true;
    }

    if n <= SYMBOLIC_DIM_LIMIT && mats.len() <= SYMBOLIC_SPAN_LIMIT {
        return !symbolic_det(mats, n).is_zero();
    }

    // Degree bound exceeded; decide by wide sampling instead.
    sample_rounds(mats, n, &mut rng, WIDE_ROUNDS, 1 << 24)
}

fn sample_rounds(mats: &[QMat], n: usize, rng: &mut ChaCha8Rng, rounds: usize, base: i64) -> bool {
    for round in 0..rounds {
        let bound = base << (round / 4).min(16);
        let mut combo = QMat::zero(n, n);
        for m in mats {
            let c = rat(rng.gen_range(-bound..=bound));
            combo = combo.add(&m.scale(&c));
        }
        if combo.is_invertible() {
            return true;
        }
    }
    false
}

/// Sparse multivariate polynomial over Q, exponent vectors keyed.
#[derive(Clone, Debug, Default)]
struct MPoly {
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MPoly {
    fn zero() -> Self {
        MPoly::default()
    }

    fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = MPoly::zero();
        p.add_term(vec![0; nvars], c);
        p
    }

    fn variable_scaled(nvars: usize, var: usize, c: Rat) -> Self {
        let mut exp = vec![0; nvars];
        exp[var] = 1;
        let mut p = MPoly::zero();
        p.add_term(exp, c);
        p
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, exp: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    fn add_assign(&mut self, other: &MPoly) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    fn mul(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exp: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exp, c1 * c2);
            }
        }
        out
    }
}

/// det(sum_a x_a M_a) via subset dynamic programming over used columns.
fn symbolic_det(mats: &[QMat], n: usize) -> MPoly {
    let nvars = mats.len();
    let entry = |r: usize, c: usize| -> MPoly {
        let mut p = MPoly::zero();
        for (a, m) in mats.iter().enumerate() {
            let coeff = m.get(r, c);
            if !coeff.is_zero() {
                p.add_assign(&MPoly::variable_scaled(nvars, a, coeff.clone()));
            }
        }
        p
    };

    let mut dp: HashMap<u32, MPoly> = HashMap::new();
    dp.insert(0, MPoly::constant(nvars, rat(1)));
    for row in 0..n {
        let mut next: HashMap<u32, MPoly> = HashMap::new();
        for (mask, poly) in dp {
            for col in 0..n {
                let bit = 1u32 << col;
                if mask & bit != 0 {
                    continue;
                }
                let e = entry(row, col);
                if e.is_zero() {
                    continue;
                }
                // parity of inversions added by assigning this column
                let above = (mask >> (col + 1)).count_ones();
                let mut contrib = poly.mul(&e);
                if above % 2 == 1 {
                    contrib = contrib.mul(&MPoly::constant(nvars, rat(-1)));
                }
                next.entry(mask | bit)
                    .or_insert_with(MPoly::zero)
                    .add_assign(&contrib);
            }
        }
        dp = next;
    }
    dp.remove(&((1u32 << n) - 1)).unwrap_or_else(MPoly::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_invertible_combination() {
        // neither matrix invertible, but their sum is
        let a = QMat::from_i64(vec![vec![1, 0], vec![0, 0]]);
        let b = QMat::from_i64(vec![vec![0, 0], vec![0, 1]]);
        assert!(span_contains_invertible(&[a, b], 2, 7));
    }

    #[test]
    fn rejects_singular_span() {
        // all combinations have a common kernel vector
        let a = QMat::from_i64(vec![vec![1, 1], vec![1, 1]]);
        let b = QMat::from_i64(vec![vec![2, 2], vec![0, 0]]);
        assert!(!span_contains_invertible(&[a, b], 2, 7));
    }

    #[test]
    fn symbolic_branch_rejects_identically_singular() {
        // skew-symmetric pencil in odd dimension: det vanishes identically
        // although the kernels of the individual combinations vary
        let a = QMat::from_i64(vec![vec![0, 1, 0], vec![-1, 0, 0], vec![0, 0, 0]]);
        let b = QMat::from_i64(vec![vec![0, 0, 1], vec![0, 0, 0], vec![-1, 0, 0]]);
        assert!(!span_contains_invertible(&[a, b], 3, 99));
    }

    #[test]
    fn zero_dimension_is_invertible() {
        assert!(span_contains_invertible(&[], 0, 1));
        assert!(!span_contains_invertible(&[], 2, 1));
    }

    #[test]
    fn symbolic_det_expands_correctly() {
        // det(x*I2) = x^2
        let id = QMat::identity(2);
        let p = symbolic_det(&[id], 2);
        assert_eq!(p.terms.len(), 1);
        let (exp, c) = p.terms.iter().next().unwrap();
        assert_eq!(exp, &vec![2]);
        assert_eq!(c, &rat(1));
    }
}
