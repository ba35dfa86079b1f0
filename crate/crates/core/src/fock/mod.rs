//! Fock-space monomials, states, mode actions and graded bases.

mod mode;
mod monomial;
mod space;
mod state;
pub mod text;

pub use mode::{Mode, Species};
pub use monomial::Monomial;
pub use space::{enumerate_basis, enumerate_weight, SpaceCache, WeightSpace};
pub use state::{apply_mode, translate, Flavor, Grade, State};
pub use text::parse_state;
