//! Exact-arithmetic computations in the bounded derived category of the
//! gentle algebras `CQ/I`, where `Q` is the A_mu quiver with doubled arrows
//! `a_i, b_i : i -> i+1` and `I` kills the mixed compositions `a_i b_{i+1}`
//! and `b_i a_{i+1}`.
//!
//! The crate provides the path algebra itself, quiver representations and
//! their homological calculus, bounded complexes of projectives (cones,
//! Hom-complexes, minimal models), the Nakayama/Serre functor, spherical
//! twists and mutations, and the right `B_mu ⋉ Z^mu` action on full
//! exceptional collections. A registry of named checks (see [`checks`])
//! re-verifies every computational statement the library is built around.
//!
//! All arithmetic is over exact rationals: every structure constant of the
//! algebra lies in `{0, ±1}`, and dimension statements over a field of
//! characteristic zero are insensitive to the base field, so nothing is
//! lost and no tolerances are needed.

pub mod algebra;
pub mod braid;
pub mod checks;
pub mod complex;
pub mod corpus;
pub mod dsl;
pub mod exec;
pub mod functors;
mod iso;
pub mod json;
pub mod qmat;
pub mod rep;

pub use algebra::{build_algebra, AlgElem, Path, PathAlgebra, PathKind};
pub use braid::{standard_collection, twisted_collection, ExcCollection, GroupWord, ShiftDecision};
pub use complex::{
    from_module, global_dimension, hom_complex, rhom_dims, ChainMap, GradedDims, ProjComplex,
    RepComplex,
};
pub use exec::ExecMode;
pub use functors::{
    is_spherical, left_mutation, nakayama, right_mutation, twist, twist_inverse, twist_iter,
    SphericalCert, SphericalStatus,
};
pub use qmat::QMat;
pub use rep::{Rep, RepMap};

/// Exact rational scalar used throughout the crate.
pub type Rat = num_rational::BigRational;

/// Shorthand for small integer rationals.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("mu must be at least 1 (got {0})")]
    InvalidMu(i64),
    #[error("vertex {vertex} out of range 1..={mu}")]
    VertexOutOfRange { vertex: usize, mu: usize },
    #[error("path {path} does not belong to the mu={mu} algebra")]
    ForeignPath { path: String, mu: usize },
    #[error("operation requires mu = 4 (got {0})")]
    RequiresMuFour(usize),
    #[error("twisted collections require mu >= 4 (got {0})")]
    RequiresMuAtLeastFour(usize),
    #[error("mismatched shapes: {0}")]
    Shape(String),
    #[error("map endpoints do not match: {0}")]
    Endpoints(String),
    #[error("collection lost semi-orthogonality at position pair ({row}, {col}); this indicates a bug, not a user error")]
    SemiOrthogonality { row: usize, col: usize },
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
    #[error("check `{id}` is not applicable at mu = {mu}")]
    NotApplicable { id: String, mu: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid fixture data: {0}")]
    Fixture(String),
}

pub type Result<T> = std::result::Result<T, Error>;
