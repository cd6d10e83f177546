use num_integer::Integer;

use super::cyclotomic::Cyclotomic;
use super::ring::{RingElement, RingSpec};

/// The additive character `x ↦ ζ_c^{u·x}` of `R`, with `c` the characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Character {
    unit: u32,
    spec: RingSpec,
}

impl Character {
    /// The fixed convention `χ(x) = ζ_c^x`.
    pub fn standard(spec: RingSpec) -> Self {
        Character { unit: 1, spec }
    }

    /// The character `u·χ`; `u` need not be a unit (then it is not generating).
    pub fn scaled(spec: RingSpec, u: u32) -> Self {
        Character { unit: u % spec.modulus(), spec }
    }

    pub fn unit(&self) -> u32 {
        self.unit
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    /// Exponent `k` with `χ(x) = ζ_c^k`.
    pub fn exponent(&self, x: u32) -> u32 {
        self.spec.mul(self.unit, x)
    }

    /// Exponent of `χ(x)` as a power of the phase root `ω`.
    pub fn phase_exponent(&self, x: u32) -> u32 {
        self.exponent(x) * self.spec.phase_ratio()
    }

    pub fn eval(&self, x: RingElement) -> Cyclotomic {
        assert_eq!(x.spec(), self.spec, "character and element live in different rings");
        self.eval_residue(x.value())
    }

    pub fn eval_residue(&self, x: u32) -> Cyclotomic {
        Cyclotomic::root(self.spec.characteristic(), self.exponent(x) as i64)
    }

    /// True iff `ker χ` contains no nonzero ideal. The ideals of `Z/dZ` are
    /// `tZ/dZ` for divisors `t` of `d`; each is checked element by element.
    pub fn is_generating(&self) -> bool {
        let d = self.spec.modulus();
        (1..d).filter(|t| d % t == 0).all(|t| {
            let in_kernel = (0..d / t).all(|j| self.exponent(t * j) == 0);
            !in_kernel
        })
    }
}

/// Closed form for the exhaustive check: `u·χ` is generating iff `gcd(u, d) = 1`.
pub fn generating_by_gcd(spec: RingSpec, u: u32) -> bool {
    (u as u64).gcd(&(spec.modulus() as u64)) == 1
}
