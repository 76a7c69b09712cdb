//! The right `B_mu ⋉ Z^mu` action on full exceptional collections: braid
//! letters act by mutations of adjacent pairs, the lattice acts by
//! objectwise shifts, and the braid-to-symmetric-group homomorphism twists
//! the lattice. Collections carry their full RHom cache and a provenance
//! string recording how they were produced from the standard collection.

use crate::algebra::PathAlgebra;
use crate::complex::{is_derived_iso, rhom_dims, GradedDims, ProjComplex};
use crate::exec::{map_indexed, ExecMode};
use crate::functors::{left_mutation, right_mutation, twist_iter};
use crate::qmat::QMat;
use crate::{rat, Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BraidLetter {
    /// `σ_i`: replaces `(E_i, E_{i+1})` by `(L_{E_i} E_{i+1}, E_i)`.
    Pos(usize),
    /// `σ_i^{-1}`: replaces `(E_i, E_{i+1})` by `(E_{i+1}, R_{E_{i+1}} E_i)`.
    Neg(usize),
}

impl BraidLetter {
    pub fn index(&self) -> usize {
        match self {
            BraidLetter::Pos(i) | BraidLetter::Neg(i) => *i,
        }
    }

    pub fn inverse(&self) -> BraidLetter {
        match self {
            BraidLetter::Pos(i) => BraidLetter::Neg(*i),
            BraidLetter::Neg(i) => BraidLetter::Pos(*i),
        }
    }
}

impl std::fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BraidLetter::Pos(i) => write!(f, "s{i}"),
            BraidLetter::Neg(i) => write!(f, "s{i}^-1"),
        }
    }
}

/// An element of `B_mu ⋉ Z^mu`: braid letters applied left to right,
/// followed by the shift vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupWord {
    pub letters: Vec<BraidLetter>,
    pub shift: Vec<i64>,
}

impl GroupWord {
    pub fn identity(mu: usize) -> Self {
        GroupWord {
            letters: vec![],
            shift: vec![0; mu],
        }
    }

    pub fn from_letters(mu: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        for l in &letters {
            if l.index() < 1 || l.index() >= mu {
                return Err(Error::Parse(format!(
                    "braid letter index {} out of range 1..{}",
                    l.index(),
                    mu
                )));
            }
        }
        Ok(GroupWord {
            letters,
            shift: vec![0; mu],
        })
    }

    pub fn with_shift(mut self, shift: Vec<i64>) -> Result<Self> {
        if shift.len() != self.shift.len() {
            return Err(Error::Parse(format!(
                "shift vector has length {}, expected {}",
                shift.len(),
                self.shift.len()
            )));
        }
        self.shift = shift;
        Ok(self)
    }

    /// Parses words like `s1 s2^-1 s3`.
    pub fn parse(text: &str, mu: usize) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let (body, neg) = match tok.strip_suffix("^-1") {
                Some(b) => (b, true),
                None => (tok, false),
            };
            let idx: usize = body
                .strip_prefix('s')
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad braid letter `{tok}`")))?;
            letters.push(if neg {
                BraidLetter::Neg(idx)
            } else {
                BraidLetter::Pos(idx)
            });
        }
        Self::from_letters(mu, letters)
    }

    /// The permutation action of the letters on a shift vector: moving a
    /// shift past `σ_i^{±1}` swaps its entries at positions `i, i+1`.
    pub fn permute_shift(&self, n: &[i64]) -> Vec<i64> {
        let mut m = n.to_vec();
        for l in &self.letters {
            m.swap(l.index() - 1, l.index());
        }
        m
    }

    /// Product in `B_mu ⋉ Z^mu`: acting by `self`, then by `other`.
    pub fn compose(&self, other: &GroupWord) -> GroupWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        let moved = other.permute_shift(&self.shift);
        let shift = moved.iter().zip(&other.shift).map(|(a, b)| a + b).collect();
        GroupWord { letters, shift }
    }

    pub fn inverse(&self) -> GroupWord {
        let inv_letters: Vec<BraidLetter> = self
            .letters
            .iter()
            .rev()
            .map(BraidLetter::inverse)
            .collect();
        let inv_braid = GroupWord {
            letters: inv_letters,
            shift: vec![0; self.shift.len()],
        };
        // (b, n)^{-1} = (b^{-1}, -perm_{b^{-1}}(n))
        let moved = inv_braid.permute_shift(&self.shift);
        let shift = moved.iter().map(|a| -a).collect();
        GroupWord { shift, ..inv_braid }
    }
}

impl std::fmt::Display for GroupWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        if self.shift.iter().any(|&n| n != 0) {
            if !self.letters.is_empty() {
                write!(f, " ")?;
            }
            let parts: Vec<String> = self.shift.iter().map(i64::to_string).collect();
            write!(f, "[{}]", parts.join(","))?;
        }
        Ok(())
    }
}

/// A failing pair and its RHom fingerprint.
pub type PairWitness = (usize, usize, GradedDims);

/// Either a shift vector making every nonempty RHom entry sit in degree
/// zero, or a witness that none exists.
#[derive(Clone, PartialEq, Debug)]
pub enum ShiftDecision {
    Achievable(Vec<i64>),
    Unachievable(ShiftWitness),
}

#[derive(Clone, PartialEq, Debug)]
pub enum ShiftWitness {
    /// An entry spread over several degrees; no shift can concentrate it.
    MultiDegree {
        row: usize,
        col: usize,
        dims: GradedDims,
    },
    /// Degree constraints around a cycle are inconsistent.
    InconsistentCycle {
        row: usize,
        col: usize,
        expected: i64,
        got: i64,
    },
}

/// An ordered tuple of complexes with its cached pairwise RHom fingerprints
/// (`cache[i][j] = rhom_dims(E_i, E_j)` on 0-based positions).
#[derive(Clone, Debug)]
pub struct ExcCollection {
    mu: usize,
    objects: Vec<ProjComplex>,
    cache: Vec<Vec<GradedDims>>,
    provenance: String,
}

fn compute_cache(objects: &[ProjComplex], mode: ExecMode) -> Vec<Vec<GradedDims>> {
    let n = objects.len();
    let flat = map_indexed(mode, n * n, |k| rhom_dims(&objects[k / n], &objects[k % n]));
    flat.chunks(n).map(<[GradedDims]>::to_vec).collect()
}

impl ExcCollection {
    pub fn from_objects(mu: usize, objects: Vec<ProjComplex>, provenance: String) -> Self {
        Self::from_objects_with(mu, objects, provenance, ExecMode::default())
    }

    pub fn from_objects_with(
        mu: usize,
        objects: Vec<ProjComplex>,
        provenance: String,
        mode: ExecMode,
    ) -> Self {
        let cache = compute_cache(&objects, mode);
        ExcCollection {
            mu,
            objects,
            cache,
            provenance,
        }
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn objects(&self) -> &[ProjComplex] {
        &self.objects
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn rhom(&self, i: usize, j: usize) -> &GradedDims {
        &self.cache[i][j]
    }

    /// The full table of RHom fingerprints.
    pub fn rhom_table(&self) -> &Vec<Vec<GradedDims>> {
        &self.cache
    }

    /// Recomputes the table from scratch (the benchmarks use this to compare
    /// execution modes; the result must equal the cache).
    pub fn recompute_table(&self, mode: ExecMode) -> Vec<Vec<GradedDims>> {
        compute_cache(&self.objects, mode)
    }

    /// Exceptionality and semi-orthogonality from the cache: diagonal
    /// entries are one-dimensional in degree 0 and entries below the
    /// diagonal vanish.
    pub fn exceptionality_witness(&self) -> Option<PairWitness> {
        let scalar = GradedDims::from_pairs(&[(0, 1)]);
        for i in 0..self.len() {
            if self.cache[i][i] != scalar {
                return Some((i, i, self.cache[i][i].clone()));
            }
            for j in 0..i {
                if !self.cache[i][j].is_empty() {
                    return Some((i, j, self.cache[i][j].clone()));
                }
            }
        }
        None
    }

    pub fn is_exceptional(&self) -> bool {
        self.exceptionality_witness().is_none()
    }

    /// Strongness: every nonempty entry is concentrated in degree 0.
    pub fn strongness_witness(&self) -> Option<PairWitness> {
        for i in 0..self.len() {
            for j in 0..self.len() {
                let e = &self.cache[i][j];
                if !e.is_empty() && e.support() != vec![0] {
                    return Some((i, j, e.clone()));
                }
            }
        }
        None
    }

    pub fn is_strong(&self) -> bool {
        self.is_exceptional() && self.strongness_witness().is_none()
    }

    /// K-theory sanity check backing the provenance-based fullness claim:
    /// the matrix of classes `[E_i]` in the basis `[P(1..mu)]` is
    /// unimodular.
    pub fn k_unimodular(&self) -> bool {
        if self.len() != self.mu {
            return false;
        }
        let m = QMat::from_fn(self.mu, self.mu, |r, c| rat(self.objects[r].k_class()[c]));
        let d = m.det();
        d == rat(1) || d == rat(-1)
    }

    /// Componentwise comparison up to derived isomorphism.
    pub fn isomorphic_to(&self, other: &ExcCollection, seed: u64) -> bool {
        self.len() == other.len()
            && self
                .objects
                .iter()
                .zip(&other.objects)
                .all(|(a, b)| is_derived_iso(a, b, seed))
    }

    /// Applies a group word, letters left to right, then the shift vector.
    /// Fails if any intermediate collection loses semi-orthogonality, which
    /// would indicate a bug rather than a user error.
    pub fn act(&self, word: &GroupWord) -> Result<ExcCollection> {
        self.act_with(word, ExecMode::default())
    }

    pub fn act_with(&self, word: &GroupWord, mode: ExecMode) -> Result<ExcCollection> {
        if word.shift.len() != self.len() {
            return Err(Error::Parse(format!(
                "shift vector length {} does not match collection length {}",
                word.shift.len(),
                self.len()
            )));
        }
        let mut current = self.clone();
        for letter in &word.letters {
            let i = letter.index();
            if i < 1 || i >= current.len() {
                return Err(Error::Parse(format!("letter {letter} out of range")));
            }
            let (a, b) = (current.objects[i - 1].clone(), current.objects[i].clone());
            let (left, right) = match letter {
                BraidLetter::Pos(_) => (left_mutation(&a, &b), a),
                BraidLetter::Neg(_) => (b.clone(), right_mutation(&a, &b)),
            };
            current.objects[i - 1] = left;
            current.objects[i] = right;
            current.refresh_cache_rows(&[i - 1, i], mode);
            current.provenance = format!("{} {letter}", current.provenance);
            if let Some((row, col, _)) = current.exceptionality_witness() {
                return Err(Error::SemiOrthogonality { row, col });
            }
        }
        if word.shift.iter().any(|&n| n != 0) {
            let n = &word.shift;
            for (i, obj) in current.objects.iter_mut().enumerate() {
                *obj = obj.shift(n[i]);
            }
            for i in 0..current.len() {
                for j in 0..current.len() {
                    current.cache[i][j] = current.cache[i][j].translated(n[j] - n[i]);
                }
            }
            current.provenance = format!(
                "{} [{}]",
                current.provenance,
                n.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
            );
        }
        Ok(current)
    }

    fn refresh_cache_rows(&mut self, positions: &[usize], mode: ExecMode) {
        let n = self.len();
        for &p in positions {
            let row = map_indexed(mode, n, |j| rhom_dims(&self.objects[p], &self.objects[j]));
            self.cache[p] = row;
            let col = map_indexed(mode, n, |i| rhom_dims(&self.objects[i], &self.objects[p]));
            for (i, e) in col.into_iter().enumerate() {
                self.cache[i][p] = e;
            }
        }
    }

    /// Searches for a shift vector that makes the collection strong: every
    /// nonempty entry must be concentrated in one degree `d(i,j)`, and the
    /// difference constraints `n_j - n_i = d(i,j)` must be consistent over
    /// the nonempty-entry graph (union-find with offsets).
    pub fn shift_strongness_obstruction(&self) -> ShiftDecision {
        let n = self.len();
        let mut parent: Vec<usize> = (0..n).collect();
        let mut pot: Vec<i64> = vec![0; n]; // n_x - n_{parent(x)}

        fn find(parent: &mut Vec<usize>, pot: &mut Vec<i64>, x: usize) -> (usize, i64) {
            if parent[x] == x {
                return (x, 0);
            }
            let (root, p) = find(parent, pot, parent[x]);
            parent[x] = root;
            pot[x] += p;
            (root, pot[x])
        }

        for i in 0..n {
            for j in 0..n {
                let e = &self.cache[i][j];
                if e.is_empty() {
                    continue;
                }
                let Some((d, _)) = e.single_degree() else {
                    return ShiftDecision::Unachievable(ShiftWitness::MultiDegree {
                        row: i,
                        col: j,
                        dims: e.clone(),
                    });
                };
                // constraint: n_j - n_i = d
                let (ri, pi) = find(&mut parent, &mut pot, i);
                let (rj, pj) = find(&mut parent, &mut pot, j);
                if ri == rj {
                    if pj - pi != d {
                        return ShiftDecision::Unachievable(ShiftWitness::InconsistentCycle {
                            row: i,
                            col: j,
                            expected: d,
                            got: pj - pi,
                        });
                    }
                } else {
                    // attach rj under ri with n_{rj} - n_{ri} = pi + d - pj
                    parent[rj] = ri;
                    pot[rj] = pi + d - pj;
                }
            }
        }
        let shift: Vec<i64> = (0..n).map(|x| find(&mut parent, &mut pot, x).1).collect();
        ShiftDecision::Achievable(shift)
    }
}

/// The standard collection `E_P = (P(mu), ..., P(1))`.
pub fn standard_collection(algebra: &PathAlgebra) -> ExcCollection {
    standard_collection_with(algebra, ExecMode::default())
}

pub fn standard_collection_with(algebra: &PathAlgebra, mode: ExecMode) -> ExcCollection {
    let mu = algebra.mu();
    let objects = (1..=mu)
        .rev()
        .map(|i| ProjComplex::single(mu, i, 0))
        .collect();
    ExcCollection::from_objects_with(mu, objects, "EP".into(), mode)
}

/// The twisted collections: the last four projectives are replaced by their
/// `k`-fold twists along the 3-spherical thin module, computed in the
/// subcategory they generate (a copy of the mu = 4 category) and read back.
pub fn twisted_collection(algebra: &PathAlgebra, k: i64) -> Result<ExcCollection> {
    twisted_collection_with(algebra, k, ExecMode::default())
}

pub fn twisted_collection_with(
    algebra: &PathAlgebra,
    k: i64,
    mode: ExecMode,
) -> Result<ExcCollection> {
    let mu = algebra.mu();
    if mu < 4 {
        return Err(Error::RequiresMuAtLeastFour(mu));
    }
    let alg4 = crate::algebra::build_algebra(4).expect("mu = 4 is valid");
    let s_plus = crate::complex::from_module(&crate::rep::fixture_s_plus(&alg4)?);
    let mut objects: Vec<ProjComplex> = (5..=mu)
        .rev()
        .map(|i| ProjComplex::single(mu, i, 0))
        .collect();
    for i in (1..=4).rev() {
        let twisted = twist_iter(&s_plus, k, &ProjComplex::single(4, i, 0));
        objects.push(twisted.reinterpret(mu)?);
    }
    Ok(ExcCollection::from_objects_with(
        mu,
        objects,
        format!("Eprime({k})"),
        mode,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_algebra;
    use crate::functors::{one_spherical, twist_inverse};

    #[test]
    fn standard_collection_cache() {
        let alg = build_algebra(4).unwrap();
        let ep = standard_collection(&alg);
        let scalar = GradedDims::from_pairs(&[(0, 1)]);
        let two = GradedDims::from_pairs(&[(0, 2)]);
        for i in 0..4 {
            assert_eq!(ep.rhom(i, i), &scalar);
            for j in 0..4 {
                if i < j {
                    assert_eq!(ep.rhom(i, j), &two, "upper entries count two paths");
                } else if i > j {
                    assert!(ep.rhom(i, j).is_empty());
                }
            }
        }
        assert!(ep.is_exceptional());
        assert!(ep.is_strong());
        assert!(ep.k_unimodular());
    }

    #[test]
    fn inverse_letters_cancel() {
        let alg = build_algebra(4).unwrap();
        let ep = standard_collection(&alg);
        for i in 1..4 {
            let w =
                GroupWord::from_letters(4, vec![BraidLetter::Pos(i), BraidLetter::Neg(i)]).unwrap();
            let back = ep.act(&w).unwrap();
            assert!(
                back.isomorphic_to(&ep, 5),
                "s{i} s{i}^-1 must be the identity"
            );
        }
    }

    #[test]
    fn braid_letter_matches_inverse_twist() {
        let alg = build_algebra(4).unwrap();
        let ep = standard_collection(&alg);
        let w = GroupWord::parse("s1", 4).unwrap();
        let acted = ep.act(&w).unwrap();
        let s1 = one_spherical(4, 1);
        let twisted = ExcCollection::from_objects(
            4,
            ep.objects().iter().map(|x| twist_inverse(&s1, x)).collect(),
            "T(S1)^-1 EP".into(),
        );
        assert!(acted.isomorphic_to(&twisted, 7));
    }

    #[test]
    fn braid_and_far_commutation_relations() {
        let alg = build_algebra(4).unwrap();
        let ep = standard_collection(&alg);
        let lhs = ep.act(&GroupWord::parse("s1 s2 s1", 4).unwrap()).unwrap();
        let rhs = ep.act(&GroupWord::parse("s2 s1 s2", 4).unwrap()).unwrap();
        assert!(lhs.isomorphic_to(&rhs, 11));
        let lhs = ep.act(&GroupWord::parse("s1 s3", 4).unwrap()).unwrap();
        let rhs = ep.act(&GroupWord::parse("s3 s1", 4).unwrap()).unwrap();
        assert!(lhs.isomorphic_to(&rhs, 11));
    }

    #[test]
    fn semidirect_product_law() {
        let alg = build_algebra(4).unwrap();
        let ep = standard_collection(&alg);
        let w1 = GroupWord::parse("s1 s2^-1", 4)
            .unwrap()
            .with_shift(vec![1, 0, -1, 2])
            .unwrap();
        let w2 = GroupWord::parse("s3 s1", 4)
            .unwrap()
            .with_shift(vec![0, 1, 1, 0])
            .unwrap();
        let a = ep.act(&w1).unwrap().act(&w2).unwrap();
        let b = ep.act(&w1.compose(&w2)).unwrap();
        assert!(a.isomorphic_to(&b, 13));
        // inverses compose to the identity
        let w = w1.compose(&w1.inverse());
        let back = ep.act(&w).unwrap();
        assert!(back.isomorphic_to(&ep, 13));
    }

    #[test]
    fn shift_vectors_break_and_restore_strongness() {
        let alg = build_algebra(4).unwrap();
        let ep = standard_collection(&alg);
        match ep.shift_strongness_obstruction() {
            ShiftDecision::Achievable(n) => assert_eq!(n, vec![0, 0, 0, 0]),
            d => panic!("expected achievable, got {d:?}"),
        }
        let n = vec![1, 0, 0, -2];
        let shifted = ep
            .act(&GroupWord::identity(4).with_shift(n.clone()).unwrap())
            .unwrap();
        assert!(!shifted.is_strong());
        match shifted.shift_strongness_obstruction() {
            ShiftDecision::Achievable(m) => {
                let back = shifted
                    .act(&GroupWord::identity(4).with_shift(m).unwrap())
                    .unwrap();
                assert!(back.is_strong());
            }
            d => panic!("expected achievable, got {d:?}"),
        }
    }

    #[test]
    fn twisted_collection_at_mu_four_stays_strong() {
        // with every object twisted the collection is the image of EP under
        // an autoequivalence, so all fingerprints survive
        let alg = build_algebra(4).unwrap();
        let ep = standard_collection(&alg);
        for k in [-2i64, 1, 3] {
            let e = twisted_collection(&alg, k).unwrap();
            assert!(e.is_exceptional());
            assert!(e.is_strong(), "k={k}");
            assert!(e.k_unimodular());
            assert_eq!(e.rhom_table(), ep.rhom_table(), "k={k}");
        }
    }

    #[test]
    fn shift_cache_translation_matches_recomputation() {
        let alg = build_algebra(4).unwrap();
        let ep = standard_collection(&alg);
        let w = GroupWord::parse("s2", 4).unwrap().with_shift(vec![1, -1, 0, 2]).unwrap();
        let acted = ep.act(&w).unwrap();
        assert_eq!(acted.rhom_table(), &acted.recompute_table(ExecMode::Sequential));
    }

    #[test]
    fn twisted_collection_basics() {
        let alg5 = build_algebra(5).unwrap();
        let e0 = twisted_collection(&alg5, 0).unwrap();
        let ep = standard_collection(&alg5);
        assert!(e0.isomorphic_to(&ep, 17));

        let e1 = twisted_collection(&alg5, 1).unwrap();
        assert!(e1.is_exceptional());
        assert!(!e1.is_strong());
        assert_eq!(e1.rhom(0, 1), &GradedDims::from_pairs(&[(0, 1), (2, 1)]));
        assert!(matches!(
            e1.shift_strongness_obstruction(),
            ShiftDecision::Unachievable(ShiftWitness::MultiDegree { .. })
        ));

        let em2 = twisted_collection(&alg5, -2).unwrap();
        assert_eq!(em2.rhom(0, 4), &GradedDims::from_pairs(&[(-4, 1), (0, 1)]));

        let alg3 = build_algebra(3).unwrap();
        assert!(twisted_collection(&alg3, 1).is_err());
    }

    #[test]
    fn single_object_collection_table() {
        let e = ExcCollection::from_objects(4, vec![ProjComplex::single(4, 2, 0)], "(P2)".into());
        assert_eq!(e.rhom_table(), &vec![vec![GradedDims::from_pairs(&[(0, 1)])]]);
        assert!(e.is_exceptional());
        // a single object is not a full collection of length mu
        assert!(!e.k_unimodular());
    }

    #[test]
    fn word_parsing_and_display() {
        let w = GroupWord::parse("s1 s2^-1 s3", 5).unwrap();
        assert_eq!(w.letters.len(), 3);
        assert_eq!(w.to_string(), "s1 s2^-1 s3");
        assert!(GroupWord::parse("s9", 4).is_err());
        assert!(GroupWord::parse("x1", 4).is_err());
        let shifted = GroupWord::identity(3).with_shift(vec![1, 0, -1]).unwrap();
        assert_eq!(shifted.to_string(), "[1,0,-1]");
    }
}
