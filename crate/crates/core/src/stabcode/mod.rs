//! Stabilizer codes as submodules of `R^{2n}` under the symplectic form.

mod code;
mod constructions;
mod io;
mod vector;

pub use code::StabilizerCode;
pub use constructions::CosetWeightTable;
pub use io::{parse_code, CodeFile, Layout};
pub use vector::{gamma, gamma_columns, gamma_inv, gamma_inv_columns, pair_hamming_weight, symp_inner, symp_weight};
