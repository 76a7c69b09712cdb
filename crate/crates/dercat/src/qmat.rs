//! Dense exact-rational matrices and the little linear algebra the rest of
//! the crate needs: rank, kernel bases, solving, row reduction. Dimensions
//! stay small (a few hundred at most), so dense Gaussian elimination over
//! `BigRational` is the simplest thing that is always right.

use crate::{Rat, Result};
use num_traits::{One, Zero};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl QMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        QMat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMat {
            rows: r,
            cols: c,
            data: rows.into_concat(),
        }
    }

    pub fn from_i64(rows: Vec<Vec<i64>>) -> Self {
        Self::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(crate::rat).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &Rat) {
        self.data[r * self.cols + c] += v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> QMat {
        QMat::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &Rat) -> QMat {
        QMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        QMat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &QMat) -> QMat {
        QMat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out = QMat::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let v = a * b;
                        out.add_to(r, c, &v);
                    }
                }
            }
        }
        out
    }

    pub fn column(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// Stack columns of `self` and `other` side by side.
    pub fn hstack(&self, other: &QMat) -> QMat {
        assert_eq!(self.rows, other.rows);
        QMat::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = Rat::one() / self.get(row, col).clone();
            for c in col..self.cols {
                let v = self.get(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).clone();
                    for c in col..self.cols {
                        let v = self.get(r, c) - &factor * self.get(row, c);
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Rat::zero();
            };
            if p != col {
                for c in 0..n {
                    m.data.swap(p * n + c, col * n + c);
                }
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            for r in col + 1..n {
                if !m.get(r, col).is_zero() {
                    let factor = m.get(r, col) / &pivot;
                    for c in col..n {
                        let v = m.get(r, c) - &factor * m.get(col, c);
                        m.set(r, c, v);
                    }
                }
            }
        }
        det
    }

    /// Columns spanning the null space.
    pub fn kernel_basis(&self) -> QMat {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = QMat::zero(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, Rat::one());
            for (prow, &pc) in pivots.iter().enumerate() {
                out.set(pc, k, -m.get(prow, fc).clone());
            }
        }
        out
    }

    /// Solves `self * X = rhs` column by column; `None` if inconsistent.
    pub fn solve(&self, rhs: &QMat) -> Option<QMat> {
        assert_eq!(self.rows, rhs.rows);
        let mut aug = self.hstack(rhs);
        let pivots = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = QMat::zero(self.cols, rhs.cols);
        for (prow, &pc) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x.set(pc, c, aug.get(prow, self.cols + c).clone());
            }
        }
        Some(x)
    }

    /// A square invertible matrix must stay away from shape bugs downstream.
    pub fn require_shape(&self, rows: usize, cols: usize, what: &str) -> Result<()> {
        if self.rows == rows && self.cols == cols {
            Ok(())
        } else {
            Err(crate::Error::Shape(format!(
                "{what}: expected {rows}x{cols}, got {}x{}",
                self.rows, self.cols
            )))
        }
    }
}

trait IntoConcat {
    fn into_concat(self) -> Vec<Rat>;
}

impl IntoConcat for Vec<Vec<Rat>> {
    fn into_concat(self) -> Vec<Rat> {
        self.into_iter().flatten().collect()
    }
}
