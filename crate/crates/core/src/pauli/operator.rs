use serde::{Deserialize, Serialize};

use crate::algebra::RingSpec;
use crate::error::{Error, Result};
use crate::stabcode::{symp_inner, symp_weight};

/// `ω^ℓ X(a) Z(b)` on `n` qudits, with `ω` a primitive `c̄`-th root of unity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliOperator {
    spec: RingSpec,
    phase: u32,
    a: Vec<u32>,
    b: Vec<u32>,
}

impl PauliOperator {
    pub fn new(spec: RingSpec, phase: i64, a: &[i64], b: &[i64]) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::Dimension(format!("X part has {} slots, Z part has {}", a.len(), b.len())));
        }
        Ok(PauliOperator {
            spec,
            phase: phase.rem_euclid(spec.phase_order() as i64) as u32,
            a: a.iter().map(|&x| spec.reduce(x)).collect(),
            b: b.iter().map(|&x| spec.reduce(x)).collect(),
        })
    }

    /// Builds `ω^ℓ X(a)Z(b)` from `(a|b) ∈ R^{2n}`.
    pub fn from_vector(spec: RingSpec, phase: u32, v: &[u32]) -> Result<Self> {
        if v.len() % 2 != 0 {
            return Err(Error::Dimension(format!("vector of odd length {}", v.len())));
        }
        let n = v.len() / 2;
        Ok(PauliOperator {
            spec,
            phase: phase % spec.phase_order(),
            a: v[..n].iter().map(|&x| x % spec.modulus()).collect(),
            b: v[n..].iter().map(|&x| x % spec.modulus()).collect(),
        })
    }

    pub fn identity(spec: RingSpec, n: usize) -> Self {
        PauliOperator { spec, phase: 0, a: vec![0; n], b: vec![0; n] }
    }

    /// The scalar `ω^ℓ` on `n` qudits.
    pub fn scalar(spec: RingSpec, n: usize, phase: u32) -> Self {
        PauliOperator { phase: phase % spec.phase_order(), ..Self::identity(spec, n) }
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn phase_exp(&self) -> u32 {
        self.phase
    }

    pub fn a(&self) -> &[u32] {
        &self.a
    }

    pub fn b(&self) -> &[u32] {
        &self.b
    }

    pub fn is_identity(&self) -> bool {
        self.phase == 0 && self.is_scalar()
    }

    pub fn is_scalar(&self) -> bool {
        self.a.iter().chain(&self.b).all(|&x| x == 0)
    }

    fn check_compatible(&self, other: &PauliOperator) -> Result<()> {
        if self.spec != other.spec || self.n() != other.n() {
            return Err(Error::Dimension(format!(
                "operators on {} qudits over {} and {} qudits over {}",
                self.n(),
                self.spec,
                other.n(),
                other.spec
            )));
        }
        Ok(())
    }

    /// `P·P′ = ω^{ℓ+ℓ′} χ(b·a′) X(a+a′) Z(b+b′)`.
    pub fn mul(&self, other: &PauliOperator) -> Result<PauliOperator> {
        self.check_compatible(other)?;
        let s = self.spec;
        let cbar = s.phase_order();
        let cross = s.dot(&self.b, &other.a) * s.phase_ratio();
        Ok(PauliOperator {
            spec: s,
            phase: ((self.phase + other.phase) % cbar + cross % cbar) % cbar,
            a: self.a.iter().zip(&other.a).map(|(&x, &y)| s.add(x, y)).collect(),
            b: self.b.iter().zip(&other.b).map(|(&x, &y)| s.add(x, y)).collect(),
        })
    }

    pub fn pow(&self, e: u64) -> PauliOperator {
        let mut out = PauliOperator::identity(self.spec, self.n());
        for _ in 0..e {
            out = out.mul(self).expect("same shape");
        }
        out
    }

    /// The inverse, `P^{ord−1}` where `P^{ord}` is a scalar.
    pub fn inverse(&self) -> PauliOperator {
        let d = self.spec.modulus() as u64;
        let pd = self.pow(d);
        // P^d is a scalar ω^m; P^{-1} = ω^{-m} P^{d-1}.
        let neg = (self.spec.phase_order() - pd.phase) % self.spec.phase_order();
        self.pow(d - 1).mul(&PauliOperator::scalar(self.spec, self.n(), neg)).expect("same shape")
    }

    /// `PP′ = P′P` iff `χ(b·a′ − b′·a) = 1`, i.e. the symplectic product vanishes.
    pub fn commutes(&self, other: &PauliOperator) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(symp_inner(self.spec, &self.psi(), &other.psi()) == 0)
    }

    /// `Ψ(ω^ℓ X(a)Z(b)) = (a|b)`.
    pub fn psi(&self) -> Vec<u32> {
        self.a.iter().chain(&self.b).copied().collect()
    }

    pub fn weight(&self) -> usize {
        symp_weight(&self.psi())
    }

    /// `σ(P) = ω^ℓ X(σ(a)) Z(σ(b))` with `σ(a)_i = a_{σ(i)}`; `perm` lists `σ(i)` from 0.
    pub fn permute(&self, perm: &[usize]) -> Result<PauliOperator> {
        let n = self.n();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&j| j >= n || std::mem::replace(&mut seen[j], true)) {
            return Err(Error::Malformed(format!("{perm:?} is not a permutation of {n} slots")));
        }
        Ok(PauliOperator {
            spec: self.spec,
            phase: self.phase,
            a: perm.iter().map(|&j| self.a[j]).collect(),
            b: perm.iter().map(|&j| self.b[j]).collect(),
        })
    }
}

/// Serialized form: ring name, phase exponent, and the two halves.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PauliRepr {
    pub ring: String,
    pub phase_exp: u32,
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    pub text: String,
}

impl From<&PauliOperator> for PauliRepr {
    fn from(p: &PauliOperator) -> Self {
        PauliRepr { ring: p.spec.to_string(), phase_exp: p.phase, a: p.a.clone(), b: p.b.clone(), text: p.to_string() }
    }
}
