//! Symbolic Pauli operators `ω^ℓ X(a) Z(b)` and stabilizer groups.

mod group;
mod operator;
mod syntax;

pub use group::{code_to_stabilizer, StabilizerGroup};
pub use operator::{PauliOperator, PauliRepr};
pub use syntax::parse_pauli;
