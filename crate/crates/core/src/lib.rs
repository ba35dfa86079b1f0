//! Free-field realisation of chiral de Rham type vertex algebras over the
//! polynomial ring in N variables: Fock spaces, n-th products, the
//! vector-field and arc-algebra actions, the Hermitian form and invariant
//! subspaces, all over exact scalars.

pub mod action;
pub mod error;
pub mod fock;
pub mod hermitian;
pub mod invariants;
pub mod linalg;
pub mod scalar;
pub mod vecfields;
pub mod verify;
pub mod vertex;

pub use error::{Error, Result};
pub use fock::{Flavor, Grade, Mode, Monomial, SpaceCache, Species, State, WeightSpace};
pub use scalar::Scalar;

/// Arbitrary-precision rationals, the default scalar type.
pub type Rational = num_rational::BigRational;
/// States with rational coefficients.
pub type RState = State<Rational>;
/// Sparse matrices with rational entries.
pub type RMatrix = linalg::SparseMatrix<Rational>;
