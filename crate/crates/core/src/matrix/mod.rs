//! Exact dense linear algebra over residue rings and cyclotomic fields.

mod cyclotomic_matrix;
mod dense;
mod enumerate;
mod howell;

pub use cyclotomic_matrix::CycMatrix;
pub use dense::{Matrix, MatrixRepr};
pub use enumerate::{all_vectors, enumerate_group, general_linear, gl2, gl_order, permutations, sl2, GroupElement, GroupShape};
pub use howell::{canonicalize, inverse, kernel, solve_left, CanonicalForm, SpanIter};
