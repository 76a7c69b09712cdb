//! The path algebra `CQ/I` of the doubled-arrow A_mu quiver.
//!
//! Arrows are `a_i, b_i : i -> i+1` for `i = 1..mu-1`; the relation ideal is
//! `I = <a_i b_{i+1}, b_i a_{i+1}>`. Words compose left to right: `a1*a2`
//! means first `a_1 : 1 -> 2`, then `a_2 : 2 -> 3`. Every reduced path is
//! therefore either a trivial path `e_i` or a pure run of `a`-arrows or of
//! `b`-arrows, so a path is determined by its endpoints and its kind.

use std::collections::BTreeMap;
use std::fmt;

use crate::{Error, Rat, Result};
use num_traits::{One, Zero};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum PathKind {
    Trivial,
    Alpha,
    Beta,
}

/// A reduced path of the quiver with relations.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Path {
    source: usize,
    target: usize,
    kind: PathKind,
}

impl Path {
    pub fn trivial(vertex: usize) -> Self {
        Path {
            source: vertex,
            target: vertex,
            kind: PathKind::Trivial,
        }
    }

    /// The run of arrows of one kind from `source` to `target`.
    pub fn run(kind: PathKind, source: usize, target: usize) -> Self {
        assert!(source < target, "arrow runs must increase the vertex");
        assert!(kind != PathKind::Trivial);
        Path {
            source,
            target,
            kind,
        }
    }

    pub fn arrow(kind: PathKind, i: usize) -> Self {
        Self::run(kind, i, i + 1)
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn kind(&self) -> PathKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.target - self.source
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.kind == PathKind::Trivial
    }

    pub fn is_valid_for(&self, mu: usize) -> bool {
        1 <= self.source && self.target <= mu && self.source <= self.target
    }

    /// Left-to-right composition. `None` is the zero element of the algebra:
    /// either the endpoints do not match or a relation factor appears at the
    /// junction.
    pub fn compose(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        if self.is_trivial() {
            return Some(*other);
        }
        if other.is_trivial() {
            return Some(*self);
        }
        if self.kind == other.kind {
            Some(Path {
                source: self.source,
                target: other.target,
                kind: self.kind,
            })
        } else {
            // a_i b_{i+1} = b_i a_{i+1} = 0 in CQ/I.
            None
        }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            PathKind::Trivial => write!(f, "e{}", self.source),
            PathKind::Alpha | PathKind::Beta => {
                let c = if self.kind == PathKind::Alpha {
                    'a'
                } else {
                    'b'
                };
                let word: Vec<String> = (self.source..self.target)
                    .map(|i| format!("{c}{i}"))
                    .collect();
                write!(f, "{}", word.join("*"))
            }
        }
    }
}

/// All reduced paths from `j` to `i`, in the fixed order (trivial, a-run,
/// b-run). Size 1 if `i == j`, 2 if `j < i`, 0 otherwise.
pub fn paths_between(j: usize, i: usize) -> Vec<Path> {
    match j.cmp(&i) {
        std::cmp::Ordering::Equal => vec![Path::trivial(j)],
        std::cmp::Ordering::Less => {
            vec![
                Path::run(PathKind::Alpha, j, i),
                Path::run(PathKind::Beta, j, i),
            ]
        }
        std::cmp::Ordering::Greater => vec![],
    }
}

pub fn path_count(j: usize, i: usize) -> usize {
    match j.cmp(&i) {
        std::cmp::Ordering::Equal => 1,
        std::cmp::Ordering::Less => 2,
        std::cmp::Ordering::Greater => 0,
    }
}

/// The finite dimensional algebra `CQ/I` for a fixed number of vertices,
/// with its reduced-path basis in a deterministic total order (source, then
/// target, then a-before-b) and the full multiplication table on that basis.
#[derive(Clone, Debug)]
pub struct PathAlgebra {
    mu: usize,
    basis: Vec<Path>,
    index: BTreeMap<Path, usize>,
    mult: Vec<Vec<Option<usize>>>,
}

/// Builds `CQ/I` on `mu` vertices. Rejects `mu < 1`.
pub fn build_algebra(mu: i64) -> Result<PathAlgebra> {
    if mu < 1 {
        return Err(Error::InvalidMu(mu));
    }
    let mu = mu as usize;
    let mut basis = Vec::new();
    for source in 1..=mu {
        for target in source..=mu {
            basis.extend(paths_between(source, target));
        }
    }
    basis.sort();
    let index: BTreeMap<Path, usize> = basis.iter().enumerate().map(|(n, p)| (*p, n)).collect();
    let mult = basis
        .iter()
        .map(|p| {
            basis
                .iter()
                .map(|q| p.compose(q).map(|r| index[&r]))
                .collect()
        })
        .collect();
    Ok(PathAlgebra {
        mu,
        basis,
        index,
        mult,
    })
}

impl PathAlgebra {
    pub fn mu(&self) -> usize {
        self.mu
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn path_index(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    fn check_member(&self, p: &Path) -> Result<usize> {
        self.path_index(p).ok_or_else(|| Error::ForeignPath {
            path: p.to_string(),
            mu: self.mu,
        })
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if 1 <= v && v <= self.mu {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                mu: self.mu,
            })
        }
    }

    /// Entry of the multiplication table on basis indices; `None` is zero.
    pub fn product_index(&self, p: usize, q: usize) -> Option<usize> {
        self.mult[p][q]
    }

    /// Product of basis paths via the precomputed table; `None` is zero.
    pub fn multiply(&self, p: &Path, q: &Path) -> Result<Option<Path>> {
        let (pi, qi) = (self.check_member(p)?, self.check_member(q)?);
        Ok(self.mult[pi][qi].map(|n| self.basis[n]))
    }

    /// All reduced paths from `j` to `i`. This doubles as a basis of
    /// `Hom(P(i), P(j))`.
    pub fn path_basis(&self, j: usize, i: usize) -> Result<Vec<Path>> {
        self.check_vertex(j)?;
        self.check_vertex(i)?;
        Ok(paths_between(j, i))
    }
}

/// A rational linear combination of basis paths. Matrix entries between
/// projective summands are always endpoint-homogeneous combinations (all
/// terms share source and target).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AlgElem {
    terms: Vec<(Path, Rat)>,
}

impl AlgElem {
    pub fn zero() -> Self {
        AlgElem::default()
    }

    pub fn from_path(p: Path) -> Self {
        AlgElem {
            terms: vec![(p, Rat::one())],
        }
    }

    pub fn term(p: Path, c: Rat) -> Self {
        let mut e = AlgElem::zero();
        e.add_term(p, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Path, Rat)] {
        &self.terms
    }

    pub fn add_term(&mut self, p: Path, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.binary_search_by(|(q, _)| q.cmp(&p)) {
            Ok(i) => {
                self.terms[i].1 += c;
                if self.terms[i].1.is_zero() {
                    self.terms.remove(i);
                }
            }
            Err(i) => self.terms.insert(i, (p, c)),
        }
    }

    pub fn coeff(&self, p: &Path) -> Rat {
        self.terms
            .binary_search_by(|(q, _)| q.cmp(p))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rat::zero())
    }

    /// Coefficient of the trivial path at `v`; the "scalar part" of an
    /// endomorphism entry.
    pub fn trivial_coeff(&self, v: usize) -> Rat {
        self.coeff(&Path::trivial(v))
    }

    pub fn add(&self, other: &AlgElem) -> AlgElem {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(*p, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &AlgElem) -> AlgElem {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(*p, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> AlgElem {
        AlgElem {
            terms: self.terms.iter().map(|(p, c)| (*p, -c.clone())).collect(),
        }
    }

    pub fn scale_sign(&self, sign: i64) -> AlgElem {
        if sign >= 0 {
            self.clone()
        } else {
            self.neg()
        }
    }

    pub fn scale(&self, s: &Rat) -> AlgElem {
        if s.is_zero() {
            return AlgElem::zero();
        }
        AlgElem {
            terms: self.terms.iter().map(|(p, c)| (*p, c * s)).collect(),
        }
    }

    /// Left-to-right algebra multiplication (first `self`, then `other`).
    pub fn mul(&self, other: &AlgElem) -> AlgElem {
        let mut out = AlgElem::zero();
        for (p, c) in &self.terms {
            for (q, d) in &other.terms {
                if let Some(r) = p.compose(q) {
                    out.add_term(r, c * d);
                }
            }
        }
        out
    }

    /// Endpoints shared by all terms, if the element is nonzero and
    /// endpoint-homogeneous.
    pub fn endpoints(&self) -> Option<(usize, usize)> {
        let (first, _) = self.terms.first()?;
        let ends = (first.source(), first.target());
        self.terms
            .iter()
            .all(|(p, _)| (p.source(), p.target()) == ends)
            .then_some(ends)
    }
}

impl fmt::Display for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (p, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rat::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if abs.is_one() {
                write!(f, "{p}")?;
            } else {
                write!(f, "{abs}*{p}")?;
            }
        }
        Ok(())
    }
}
