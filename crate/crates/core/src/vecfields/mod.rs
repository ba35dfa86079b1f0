//! Polynomial vector fields on `V = C^N`, constant forms, and the graded
//! Lie algebras of divergence-free and symplectic fields.

mod algebra;
mod field;
mod forms;
mod poly;

pub use algebra::{
    basis_graded, default_g1, generation_check, random_element, AlgebraType, DegreeRank, FieldCoordinates,
    GenerationReport,
};
pub use field::{parse_vector_field, PolyVectorField};
pub use forms::{lie_derivative, ConstantForm, PolyForm};
pub use poly::{MultiIndex, Polynomial};

#[cfg(test)]
mod tests;
