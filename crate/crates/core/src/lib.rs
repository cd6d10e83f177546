//! Symplectic isometries of stabilizer codes over `F_p` and `Z/dZ`.
//!
//! The classical side works with self-orthogonal submodules of `R^{2n}` and their
//! isometry groups viewed inside `GL_k`. The quantum side realizes the same codes as
//! stabilizer groups, states, and local Clifford maps with exact cyclotomic arithmetic,
//! so every identity is checked without floating point.

pub mod algebra;
mod error;
pub mod isometry;
pub mod matrix;
pub mod pauli;
pub mod quantum;
pub mod stabcode;
pub mod worked;

pub use error::{Error, Limits, Result, DEFAULT_MAX_ENUM};
