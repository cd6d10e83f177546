use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::algebra::Cyclotomic;
use crate::matrix::CycMatrix;

/// `mat / √d^e` with `e ∈ {0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScaledMatrix {
    pub mat: CycMatrix,
    pub scale_exp: u32,
    pub d: u32,
}

impl ScaledMatrix {
    /// Normalizes any exponent to `e ∈ {0, 1}` by dividing entries by `d` per pair.
    pub fn new(mat: CycMatrix, scale_exp: u32, d: u32) -> Self {
        let halves = scale_exp / 2;
        let mat = if halves == 0 {
            mat
        } else {
            let inv = BigRational::new(BigInt::from(1), BigInt::from(d).pow(halves));
            let c = Cyclotomic::from_rational(1, inv);
            mat.scale(&c)
        };
        ScaledMatrix { mat, scale_exp: scale_exp % 2, d }
    }

    pub fn exact(mat: CycMatrix, d: u32) -> Self {
        ScaledMatrix { mat, scale_exp: 0, d }
    }

    pub fn identity(conductor: u32, size: usize, d: u32) -> Self {
        Self::exact(CycMatrix::identity(conductor, size), d)
    }

    pub fn rows(&self) -> usize {
        self.mat.rows()
    }

    pub fn mul(&self, other: &ScaledMatrix) -> ScaledMatrix {
        assert_eq!(self.d, other.d, "scaled matrices over different d");
        Self::new(self.mat.mul(&other.mat), self.scale_exp + other.scale_exp, self.d)
    }

    pub fn kron(&self, other: &ScaledMatrix) -> ScaledMatrix {
        assert_eq!(self.d, other.d, "scaled matrices over different d");
        Self::new(self.mat.kron(&other.mat), self.scale_exp + other.scale_exp, self.d)
    }

    pub fn adjoint(&self) -> ScaledMatrix {
        ScaledMatrix { mat: self.mat.adjoint(), scale_exp: self.scale_exp, d: self.d }
    }

    pub fn pow(&self, e: u32) -> ScaledMatrix {
        let mut acc = Self::identity(self.mat.get(0, 0).conductor(), self.rows(), self.d);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The matrix with `1/√d` multiplied in.
    pub fn to_exact(&self) -> CycMatrix {
        if self.scale_exp == 0 {
            return self.mat.clone();
        }
        let root = Cyclotomic::sqrt_int(self.d);
        let inv = root.inverse().expect("√d is nonzero");
        self.mat.scale(&inv)
    }

    /// `self · v` for an exact column vector.
    pub fn apply(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        let out = self.mat.mul_vec(v);
        if self.scale_exp == 0 {
            return out;
        }
        let inv = Cyclotomic::sqrt_int(self.d).inverse().expect("√d is nonzero");
        out.iter().map(|x| x * &inv).collect()
    }

    /// `Some(λ)` with `other = λ·self` and `λ` a root of unity.
    pub fn phase_to(&self, other: &ScaledMatrix) -> Option<Cyclotomic> {
        let a = self.to_exact();
        let b = other.to_exact();
        if a.rows() != b.rows() || a.cols() != b.cols() {
            return None;
        }
        let idx = a.entries().iter().position(|x| !x.is_zero())?;
        let lambda = &b.entries()[idx] * &a.entries()[idx].inverse()?;
        lambda.root_of_unity_exponent()?;
        (a.scale(&lambda) == b).then_some(lambda)
    }

    pub fn equal_up_to_phase(&self, other: &ScaledMatrix) -> bool {
        self.phase_to(other).is_some()
    }

    /// `U·U† = I`.
    pub fn is_unitary(&self) -> bool {
        let p = self.mul(&self.adjoint());
        p.scale_exp == 0 && p.mat == CycMatrix::identity(p.mat.get(0, 0).conductor(), p.rows())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(m: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root(m, k)
    }

    fn hadamard() -> ScaledMatrix {
        let m = CycMatrix::from_data(2, 2, vec![c(8, 0), c(8, 0), c(8, 0), -c(8, 0)]);
        ScaledMatrix::new(m, 1, 2)
    }

    #[test]
    fn hadamard_squares_to_identity() {
        let h = hadamard();
        assert!(h.is_unitary());
        assert_eq!(h.mul(&h), ScaledMatrix::identity(8, 2, 2));
    }

    #[test]
    fn exact_form_uses_the_square_root() {
        let h = hadamard().to_exact();
        let root = Cyclotomic::sqrt_int(2);
        assert_eq!(&(h.get(0, 0) * &root), &Cyclotomic::one(8));
    }

    #[test]
    fn phase_detection() {
        let h = hadamard();
        let ih = ScaledMatrix::new(h.mat.scale(&c(8, 2)), 1, 2);
        assert_eq!(h.phase_to(&ih), Some(c(8, 2)));
        let twice = ScaledMatrix::new(h.mat.scale(&Cyclotomic::from_int(8, 2)), 1, 2);
        assert!(h.phase_to(&twice).is_none());
    }
}
