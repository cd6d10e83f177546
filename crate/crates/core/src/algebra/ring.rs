use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RingKind {
    PrimeField,
    Modular,
}

/// Local-ring data of `Z/p^e`: maximal ideal `pR`, socle `p^{e-1}R`, residue field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LocalData {
    pub prime: u32,
    pub exponent: u32,
    pub socle_generator: u32,
    pub residue_size: u32,
}

/// The alphabet `R`: either `F_p` or `Z/dZ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingSpec {
    kind: RingKind,
    modulus: u32,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            return false;
        }
        f += 1;
    }
    true
}

/// `Some((p, e))` when `n = p^e` with `e >= 1`.
pub(crate) fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|f| n % f == 0)?;
    let mut rest = n;
    let mut e = 0;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

/// Prime factorization as `(p, e)` pairs in increasing order of `p`.
pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            let mut e = 0;
            while n % f == 0 {
                n /= f;
                e += 1;
            }
            out.push((f, e));
        }
        f += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

impl RingSpec {
    pub fn prime_field(p: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::Malformed(format!("F_{p}: {p} is not prime")));
        }
        Ok(RingSpec { kind: RingKind::PrimeField, modulus: p })
    }

    pub fn modular(d: u32) -> Result<Self> {
        if d < 2 {
            return Err(Error::Malformed(format!("Z/{d}: modulus must be at least 2")));
        }
        if d > 1 << 15 {
            return Err(Error::Unsupported(format!("modulus {d} is too large")));
        }
        Ok(RingSpec { kind: RingKind::Modular, modulus: d })
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Additive order of 1; for `F_p` and `Z/dZ` this is the modulus.
    pub fn characteristic(&self) -> u32 {
        self.modulus
    }

    /// Order of the phase root `ω`: `c` for odd characteristic, `2c` for even.
    pub fn phase_order(&self) -> u32 {
        let c = self.characteristic();
        if c % 2 == 1 {
            c
        } else {
            2 * c
        }
    }

    /// Ratio `c̄ / c` (1 or 2): the exponent of `ω` that equals `ζ_c`.
    pub fn phase_ratio(&self) -> u32 {
        self.phase_order() / self.characteristic()
    }

    pub fn is_field(&self) -> bool {
        is_prime(self.modulus as u64)
    }

    pub fn local_data(&self) -> Option<LocalData> {
        let (p, e) = prime_power(self.modulus as u64)?;
        Some(LocalData {
            prime: p as u32,
            exponent: e,
            socle_generator: (p as u32).pow(e - 1),
            residue_size: p as u32,
        })
    }

    /// The residue field `R/m` of a local ring.
    pub fn residue_field(&self) -> Option<RingSpec> {
        self.local_data().map(|l| RingSpec { kind: RingKind::PrimeField, modulus: l.prime })
    }

    pub fn reduce(&self, x: i64) -> u32 {
        x.rem_euclid(self.modulus as i64) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.modulus as u64) as u32
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.modulus as u64 - b as u64) % self.modulus as u64) as u32
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.modulus as u64) as u32
    }

    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    pub fn is_unit(&self, a: u32) -> bool {
        (a as u64).gcd(&(self.modulus as u64)) == 1
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        let m = self.modulus as i64;
        let g = (a as i64).extended_gcd(&m);
        if g.gcd != 1 {
            return Err(Error::NonInvertible { value: a as u64, modulus: m as u64 });
        }
        Ok(self.reduce(g.x))
    }

    /// Dot product of two residue vectors.
    pub fn dot(&self, u: &[u32], v: &[u32]) -> u32 {
        let m = self.modulus as u64;
        (u.iter().zip(v).fold(0u64, |acc, (&a, &b)| (acc + a as u64 * b as u64) % m)) as u32
    }

    pub fn element(&self, value: i64) -> RingElement {
        RingElement { value: self.reduce(value), spec: *self }
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.modulus
    }

    pub fn units(&self) -> Vec<u32> {
        (1..self.modulus).filter(|&a| self.is_unit(a)).collect()
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RingKind::PrimeField => write!(f, "F{}", self.modulus),
            RingKind::Modular => write!(f, "Z/{}", self.modulus),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    /// Accepts `F5`, `F_5`, `Z/4`, `Z/4Z`, and `Z/2^3` style names.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Malformed(format!("unrecognized ring `{s}`"));
        let parse_num = |t: &str| -> Result<u32> {
            let t = t.trim().trim_end_matches('Z');
            if let Some((b, e)) = t.split_once('^') {
                let b: u32 = b.parse().map_err(|_| bad())?;
                let e: u32 = e.parse().map_err(|_| bad())?;
                b.checked_pow(e).ok_or_else(bad)
            } else {
                t.parse().map_err(|_| bad())
            }
        };
        if let Some(rest) = s.strip_prefix("Z/") {
            RingSpec::modular(parse_num(rest)?)
        } else if let Some(rest) = s.strip_prefix('F') {
            RingSpec::prime_field(parse_num(rest.trim_start_matches('_'))?)
        } else {
            Err(bad())
        }
    }
}

/// A residue of `R` together with its ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    value: u32,
    spec: RingSpec,
}

impl RingElement {
    pub fn new(spec: RingSpec, value: i64) -> Self {
        spec.element(value)
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn is_unit(&self) -> bool {
        self.spec.is_unit(self.value)
    }

    pub fn inverse(&self) -> Result<RingElement> {
        Ok(RingElement { value: self.spec.inv(self.value)?, spec: self.spec })
    }

    fn same_ring(&self, other: &RingElement) {
        assert_eq!(self.spec, other.spec, "ring elements from different rings");
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for RingElement {
    type Output = RingElement;
    fn add(self, rhs: Self) -> Self {
        self.same_ring(&rhs);
        RingElement { value: self.spec.add(self.value, rhs.value), spec: self.spec }
    }
}

impl Sub for RingElement {
    type Output = RingElement;
    fn sub(self, rhs: Self) -> Self {
        self.same_ring(&rhs);
        RingElement { value: self.spec.sub(self.value, rhs.value), spec: self.spec }
    }
}

impl Mul for RingElement {
    type Output = RingElement;
    fn mul(self, rhs: Self) -> Self {
        self.same_ring(&rhs);
        RingElement { value: self.spec.mul(self.value, rhs.value), spec: self.spec }
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> Self {
        RingElement { value: self.spec.neg(self.value), spec: self.spec }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_addition_wraps() {
        let z4 = RingSpec::modular(4).unwrap();
        assert_eq!((z4.element(3) + z4.element(3)).value(), 2);
    }

    #[test]
    fn field_multiplication() {
        let f2 = RingSpec::prime_field(2).unwrap();
        assert_eq!((f2.element(1) * f2.element(1)).value(), 1);
    }

    #[test]
    fn zero_divisor_has_no_inverse() {
        let z4 = RingSpec::modular(4).unwrap();
        assert_eq!(
            z4.element(2).inverse(),
            Err(Error::NonInvertible { value: 2, modulus: 4 })
        );
        assert_eq!(z4.element(3).inverse().unwrap().value(), 3);
    }

    #[test]
    fn phase_order_doubles_for_even_characteristic() {
        assert_eq!(RingSpec::modular(4).unwrap().phase_order(), 8);
        assert_eq!(RingSpec::prime_field(2).unwrap().phase_order(), 4);
        assert_eq!(RingSpec::prime_field(3).unwrap().phase_order(), 3);
    }

    #[test]
    fn local_data_of_prime_powers() {
        let z8 = RingSpec::modular(8).unwrap();
        let l = z8.local_data().unwrap();
        assert_eq!((l.prime, l.exponent, l.socle_generator, l.residue_size), (2, 3, 4, 2));
        assert_eq!(z8.mul(l.socle_generator, l.prime), 0);
        assert!(RingSpec::modular(6).unwrap().local_data().is_none());
        let f5 = RingSpec::prime_field(5).unwrap().local_data().unwrap();
        assert_eq!(f5.socle_generator, 1);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(RingSpec::prime_field(4).is_err());
        assert!(RingSpec::modular(1).is_err());
        assert!("Q7".parse::<RingSpec>().is_err());
    }

    #[test]
    fn parses_ring_names() {
        assert_eq!("F2".parse::<RingSpec>().unwrap(), RingSpec::prime_field(2).unwrap());
        assert_eq!("Z/4Z".parse::<RingSpec>().unwrap(), RingSpec::modular(4).unwrap());
        assert_eq!("Z/2^3".parse::<RingSpec>().unwrap(), RingSpec::modular(8).unwrap());
        assert_eq!(RingSpec::modular(9).unwrap().to_string(), "Z/9");
    }
}
