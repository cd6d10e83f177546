//! Exact arithmetic in cyclotomic fields `Q(ζ_m)`.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(m)-1}` reduced modulo the
//! `m`-th cyclotomic polynomial, so structural equality of coefficient vectors is
//! field equality. Operands with different conductors are embedded into the lcm.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ring::factorize;

fn poly_cache() -> &'static RwLock<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Coefficients (lowest degree first) of the `m`-th cyclotomic polynomial, from
/// `x^m - 1 = ∏_{d | m} Φ_d(x)`.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<i64>> {
    assert!(m >= 1, "conductor must be positive");
    if let Some(p) = poly_cache().read().unwrap().get(&m) {
        return p.clone();
    }
    // x^m - 1
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in (1..m).filter(|d| m % d == 0) {
        let div = cyclotomic_polynomial(d);
        num = exact_poly_div(&num, &div);
    }
    let poly = Arc::new(num);
    poly_cache().write().unwrap().insert(m, poly.clone());
    poly
}

fn exact_poly_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = num.len() - 1 - dn;
    let mut quot = vec![0i64; qn + 1];
    for i in (0..=qn).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

pub fn euler_phi(m: u32) -> u32 {
    factorize(m as u64)
        .into_iter()
        .map(|(p, e)| ((p - 1) * p.pow(e - 1)) as u32)
        .product()
}

fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// An exact element of `Q(ζ_m)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(m: u32) -> Self {
        Cyclotomic { conductor: m, coeffs: vec![BigRational::zero(); euler_phi(m) as usize] }
    }

    pub fn one(m: u32) -> Self {
        Self::from_rational(m, BigRational::one())
    }

    pub fn from_rational(m: u32, q: BigRational) -> Self {
        let mut z = Self::zero(m);
        z.coeffs[0] = q;
        z
    }

    pub fn from_int(m: u32, v: i64) -> Self {
        Self::from_rational(m, BigRational::from_integer(BigInt::from(v)))
    }

    /// `ζ_m^k`.
    pub fn root(m: u32, k: i64) -> Self {
        let k = k.rem_euclid(m as i64) as usize;
        let mut powers = vec![BigRational::zero(); m as usize];
        powers[k] = BigRational::one();
        Self::from_power_coeffs(m, powers)
    }

    /// Builds `Σ_j c_j ζ_m^j` from coefficients on arbitrary powers (index taken mod `m`).
    pub fn from_power_coeffs(m: u32, powers: Vec<BigRational>) -> Self {
        Cyclotomic { conductor: m, coeffs: reduce(m, powers) }
    }

    /// Builds an element from canonical power-basis coordinates.
    pub fn from_basis_coeffs(m: u32, coeffs: Vec<BigRational>) -> Option<Self> {
        (coeffs.len() == euler_phi(m) as usize).then_some(Cyclotomic { conductor: m, coeffs })
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| &self.coeffs[0])
    }

    /// Re-expresses `self` in `Q(ζ_l)`; `l` must be a multiple of the conductor.
    pub fn embed(&self, l: u32) -> Self {
        if l == self.conductor {
            return self.clone();
        }
        assert_eq!(l % self.conductor, 0, "embedding target must be a multiple of the conductor");
        let step = (l / self.conductor) as usize;
        let mut powers = vec![BigRational::zero(); l as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                powers[j * step] = c.clone();
            }
        }
        Self::from_power_coeffs(l, powers)
    }

    fn aligned(&self, other: &Self) -> (std::borrow::Cow<'_, Self>, Self, u32) {
        let l = lcm(self.conductor, other.conductor);
        let a = if l == self.conductor {
            std::borrow::Cow::Borrowed(self)
        } else {
            std::borrow::Cow::Owned(self.embed(l))
        };
        (a, other.embed(l), l)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn scale_int(&self, v: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(v)))
    }

    /// The automorphism `ζ ↦ ζ^k` (`k` coprime to the conductor).
    pub fn galois(&self, k: i64) -> Self {
        let m = self.conductor as i64;
        let mut powers = vec![BigRational::zero(); m as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let e = (j as i64 * k).rem_euclid(m) as usize;
                powers[e] += c;
            }
        }
        Self::from_power_coeffs(self.conductor, powers)
    }

    /// Complex conjugation, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Field norm down to `Q`, as the product of all Galois conjugates.
    pub fn norm(&self) -> BigRational {
        let (_, others) = self.conjugate_product();
        let n = self * &others;
        n.as_rational().cloned().expect("norm of a cyclotomic element is rational")
    }

    fn conjugate_product(&self) -> (u32, Self) {
        let m = self.conductor;
        let mut acc = Self::one(m);
        for k in 2..m.max(2) {
            if (k as u64).gcd(&(m as u64)) == 1 {
                acc = &acc * &self.galois(k as i64);
            }
        }
        (m, acc)
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (_, others) = self.conjugate_product();
        let n = (self * &others).as_rational().cloned()?;
        Some(others.scale(&n.recip()))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.conductor);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `Some((k, l))` with `self = ζ_l^k` when `self` is a root of unity, where
    /// `l` is the number of roots of unity in `Q(ζ_m)`.
    pub fn root_of_unity_exponent(&self) -> Option<(u32, u32)> {
        let m = self.conductor;
        let l = if m % 2 == 1 { 2 * m } else { m };
        let here = self.embed(l);
        (0..l).find(|&k| here == Self::root(l, k as i64)).map(|k| (k, l))
    }

    /// `√d` for a positive integer `d`, realized exactly through Gauss sums.
    pub fn sqrt_int(d: u32) -> Self {
        assert!(d > 0);
        let mut outside: i64 = 1;
        let mut acc = Self::one(1);
        for (p, e) in factorize(d as u64) {
            outside *= (p as i64).pow(e / 2);
            if e % 2 == 1 {
                acc = &acc * &Self::sqrt_prime(p as u32);
            }
        }
        acc.scale_int(outside)
    }

    fn sqrt_prime(p: u32) -> Self {
        if p == 2 {
            return &Self::root(8, 1) + &Self::root(8, -1);
        }
        let mut powers = vec![BigRational::zero(); p as usize];
        for x in 0..p as u64 {
            powers[(x * x % p as u64) as usize] += BigRational::one();
        }
        let gauss = Self::from_power_coeffs(p, powers);
        if p % 4 == 1 {
            gauss
        } else {
            // The Gauss sum equals i·√p when p ≡ 3 (mod 4).
            -&(&Self::root(4, 1) * &gauss)
        }
    }
}

/// Folds exponents mod `m` then reduces modulo `Φ_m`.
fn reduce(m: u32, powers: Vec<BigRational>) -> Vec<BigRational> {
    let m_us = m as usize;
    let mut r: Vec<BigRational> = if powers.len() <= m_us {
        let mut p = powers;
        p.resize(m_us, BigRational::zero());
        p
    } else {
        let mut folded = vec![BigRational::zero(); m_us];
        for (i, c) in powers.into_iter().enumerate() {
            if !c.is_zero() {
                folded[i % m_us] += c;
            }
        }
        folded
    };
    let phi = cyclotomic_polynomial(m);
    let deg = phi.len() - 1;
    for i in (deg..r.len()).rev() {
        if r[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut r[i], BigRational::zero());
        for (j, &pj) in phi[..deg].iter().enumerate() {
            if pj != 0 {
                r[i - deg + j] -= &c * BigRational::from_integer(BigInt::from(pj));
            }
        }
    }
    r.truncate(deg);
    r
}

fn poly_mul(m: u32, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); (a.len() + b.len()).max(1)];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    reduce(m, out)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b, _) = self.aligned(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor == rhs.conductor {
            return Cyclotomic {
                conductor: self.conductor,
                coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(x, y)| x + y).collect(),
            };
        }
        let (a, b, _) = self.aligned(rhs);
        &*a + &b
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor == rhs.conductor {
            return Cyclotomic {
                conductor: self.conductor,
                coeffs: poly_mul(self.conductor, &self.coeffs, &rhs.coeffs),
            };
        }
        let (a, b, _) = self.aligned(rhs);
        &*a * &b
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Self) -> Cyclotomic {
        &self + &rhs
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Self) -> Cyclotomic {
        &self - &rhs
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Self) -> Cyclotomic {
        &self * &rhs
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gen = if self.conductor == 4 { "i".to_string() } else { format!("ζ{}", self.conductor) };
        let mut terms = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let base = match j {
                0 => String::new(),
                1 => gen.clone(),
                _ => format!("{gen}^{j}"),
            };
            let term = if base.is_empty() {
                fmt_rational(c)
            } else if c.is_one() {
                base
            } else if (-c).is_one() {
                format!("-{base}")
            } else {
                format!("{}*{base}", fmt_rational(c))
            };
            terms.push(term);
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = terms[0].clone();
        for t in &terms[1..] {
            if let Some(rest) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
        write!(f, "{out}")
    }
}

#[derive(Serialize, Deserialize)]
struct CyclotomicRepr {
    conductor: u32,
    coeffs: Vec<String>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CyclotomicRepr {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(fmt_rational).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = CyclotomicRepr::deserialize(d)?;
        if repr.conductor == 0 {
            return Err(D::Error::custom("conductor must be positive"));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| parse_rational(s).ok_or_else(|| D::Error::custom(format!("bad rational `{s}`"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        // Accept any length: coefficients are read as powers of ζ and re-reduced.
        Ok(Cyclotomic::from_power_coeffs(repr.conductor, coeffs))
    }
}

pub(crate) fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.trim().parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}
