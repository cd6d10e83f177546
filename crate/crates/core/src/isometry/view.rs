//! A code seen as `F_q^k` embedded in `F_q^{2n}` through a full-rank generator matrix.

use crate::algebra::RingSpec;
use crate::error::{Error, Result};
use crate::matrix::{canonicalize, inverse, Matrix};
use crate::stabcode::StabilizerCode;

#[derive(Clone, Debug)]
pub(crate) struct FieldView {
    pub code: StabilizerCode,
    pub field: RingSpec,
    pub k: usize,
    pub n: usize,
    /// Information set: columns where `G` restricts to an invertible `k × k` block.
    info_cols: Vec<usize>,
    info_inverse: Matrix,
}

impl FieldView {
    /// Field codes are used as given; socle codes over `Z/p^e` are replaced by
    /// their residue code, whose `F_p`-linear automorphisms are the same maps.
    pub fn new(code: &StabilizerCode) -> Result<Self> {
        let code = code.socle_residue()?;
        let field = code.spec();
        if !field.is_field() {
            return Err(Error::Unsupported(format!("isometry groups need a field or a socle code, got {field}")));
        }
        let g = code.generators();
        let k = g.rows();
        let n = code.n();
        let info_cols = canonicalize(g).pivots().to_vec();
        debug_assert_eq!(info_cols.len(), k);
        let info_inverse = inverse(&g.select_cols(&info_cols))?;
        Ok(FieldView { code, field, k, n, info_cols, info_inverse })
    }

    pub fn g(&self) -> &Matrix {
        self.code.generators()
    }

    pub fn q(&self) -> u32 {
        self.field.modulus()
    }

    /// `Φ`: the unique `B` with `B·G = Y`, where row `r` of `Y` is the image of
    /// generator `r`. `None` when some image leaves the code.
    pub fn phi(&self, images: &[Vec<u32>]) -> Option<Matrix> {
        if images.len() != self.k || images.iter().any(|y| !self.code.contains(y)) {
            return None;
        }
        let y = Matrix::from_residue_rows(self.field, images, 2 * self.n).ok()?;
        let b = y.select_cols(&self.info_cols).mul(&self.info_inverse).ok()?;
        debug_assert_eq!(b.mul(self.g()).ok()?, y);
        Some(b)
    }

    /// The pair block `N_i` of `γ(G)`: columns `i` and `n + i` of `G`.
    pub fn block(&self, i: usize) -> Matrix {
        self.g().select_cols(&[i, self.n + i])
    }
}

/// Lexicographic index of `x ∈ F_q^k` (first coordinate most significant).
pub(crate) fn vector_index(x: &[u32], q: u32) -> usize {
    x.iter().fold(0usize, |acc, &v| acc * q as usize + v as usize)
}
