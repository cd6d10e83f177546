//! Single-qudit Clifford unitaries realizing elements of `SL_2(R)`.
//!
//! A lift `U` of `M` satisfies `Ψ*(U P U†) = Ψ*(P)·M` for every Pauli operator `P`,
//! with `Ψ*` forgetting phases and vectors acting from the left. Consequently the
//! lift of a product `M_1 M_2` is `U_2 U_1`.

use std::collections::{HashMap, VecDeque};

use crate::algebra::{Cyclotomic, RingSpec};
use crate::error::{Error, Result};
use crate::isometry::{Flavor, MonomialMap};
use crate::matrix::{CycMatrix, Matrix};
use crate::pauli::PauliOperator;
use crate::Limits;

use super::scaled::ScaledMatrix;
use super::states::{conductor, identify_pauli, pauli_matrix};

fn one_qudit(spec: RingSpec, l: u32, a: u32, b: u32) -> PauliOperator {
    PauliOperator::from_vector(spec, l, &[a, b]).expect("two entries")
}

/// `U P U†` for a single-qudit unitary, read back as a Pauli operator.
pub fn conjugate_single(u: &ScaledMatrix, p: &PauliOperator) -> Option<PauliOperator> {
    let pm = pauli_matrix(p, &Limits::default()).ok()?;
    identify_pauli(&u.mul(&pm).mul(&u.adjoint()), p.spec(), 1)
}

/// The `2 × 2` matrix whose rows are `Ψ*(U X U†)` and `Ψ*(U Z U†)`.
pub fn conjugation_matrix(u: &ScaledMatrix, spec: RingSpec) -> Option<Matrix> {
    let x = conjugate_single(u, &one_qudit(spec, 0, 1, 0))?;
    let z = conjugate_single(u, &one_qudit(spec, 0, 0, 1))?;
    Matrix::from_residue_rows(spec, &[x.psi(), z.psi()], 2).ok()
}

/// Exhaustive contract check: every `X^a Z^b` is sent to `X^{a'}Z^{b'}` with `(a',b') = (a,b)·M`.
pub fn satisfies_contract(u: &ScaledMatrix, m: &Matrix) -> bool {
    let spec = m.spec();
    let d = spec.modulus();
    (0..d).all(|a| {
        (0..d).all(|b| match conjugate_single(u, &one_qudit(spec, 0, a, b)) {
            Some(q) => q.psi() == m.left_mul_vec(&[a, b]),
            None => false,
        })
    })
}

fn entry(m: u32, k: i64, modulus: u32) -> Cyclotomic {
    Cyclotomic::root(modulus, k).embed(m)
}

fn diag(spec: RingSpec, f: impl Fn(u32) -> Cyclotomic) -> ScaledMatrix {
    let d = spec.modulus() as usize;
    let m = conductor(spec);
    let mut mat = CycMatrix::zeros(m, d, d);
    for x in 0..d {
        mat.set(x, x, f(x as u32));
    }
    ScaledMatrix::exact(mat, spec.modulus())
}

/// The three qubit gates and the elements of `SL_2(F_2)` they realize.
fn qubit_generators(spec: RingSpec) -> Vec<(Matrix, ScaledMatrix)> {
    let m = conductor(spec);
    let i = entry(m, 1, 4);
    let one = Cyclotomic::one(m);
    let u1 = ScaledMatrix::new(CycMatrix::from_data(2, 2, vec![one.clone(), i.clone(), i.clone(), one.clone()]), 1, 2);
    let u2 = ScaledMatrix::new(CycMatrix::from_data(2, 2, vec![one.clone(), one.clone(), one.clone(), -one.clone()]), 1, 2);
    let u3 = diag(spec, |x| if x == 0 { one.clone() } else { i.clone() });
    let mat = |r: [[i64; 2]; 2]| Matrix::from_rows(spec, &r).expect("2x2");
    vec![(mat([[1, 0], [1, 1]]), u1), (mat([[0, 1], [1, 0]]), u2), (mat([[1, 1], [0, 1]]), u3)]
}

fn qubit_lift(target: &Matrix) -> Result<ScaledMatrix> {
    let spec = target.spec();
    let gens = qubit_generators(spec);
    let id = Matrix::identity(spec, 2);
    let mut lifts: HashMap<Matrix, ScaledMatrix> = HashMap::from([(id.clone(), ScaledMatrix::identity(conductor(spec), 2, 2))]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        if &g == target {
            break;
        }
        for (k, uk) in &gens {
            let next = g.mul(k)?;
            if !lifts.contains_key(&next) {
                let u = uk.mul(&lifts[&g]);
                lifts.insert(next.clone(), u);
                queue.push_back(next);
            }
        }
    }
    lifts.remove(target).ok_or_else(|| Error::Verification("matrix is not in SL_2(F_2)".into()))
}

struct OddGates {
    spec: RingSpec,
    fourier: ScaledMatrix,
    fourier_inv: ScaledMatrix,
}

impl OddGates {
    fn new(spec: RingSpec) -> Self {
        let p = spec.modulus();
        let m = conductor(spec);
        let mut mat = CycMatrix::zeros(m, p as usize, p as usize);
        for x in 0..p {
            for y in 0..p {
                mat.set(x as usize, y as usize, entry(m, (x * y) as i64, p));
            }
        }
        let fourier = ScaledMatrix::new(mat, 1, p);
        let fourier_inv = fourier.adjoint();
        OddGates { spec, fourier, fourier_inv }
    }

    /// `diag(ζ^{s·(p+1)/2·x²})`, realizing `[[1, s], [0, 1]]`.
    fn upper(&self, s: u32) -> ScaledMatrix {
        let p = self.spec.modulus() as u64;
        let h = (p + 1) / 2;
        let m = conductor(self.spec);
        diag(self.spec, |x| entry(m, ((s as u64 * h % p) * (x as u64 * x as u64 % p) % p) as i64, p as u32))
    }

    /// `v_x ↦ v_{ux}`, realizing `diag(u, u⁻¹)`.
    fn multiplier(&self, u: u32) -> ScaledMatrix {
        let p = self.spec.modulus() as usize;
        let m = conductor(self.spec);
        let mut mat = CycMatrix::zeros(m, p, p);
        for x in 0..p {
            mat.set(self.spec.mul(u, x as u32) as usize, x, Cyclotomic::one(m));
        }
        ScaledMatrix::exact(mat, p as u32)
    }

    /// Realizes `[[1, 0], [t, 1]]` as the Fourier conjugate of an upper shear.
    fn lower(&self, t: u32) -> Result<ScaledMatrix> {
        let j = conjugation_matrix(&self.fourier, self.spec)
            .ok_or_else(|| Error::Verification("the Fourier gate is not Clifford".into()))?;
        // J·U(s)·J⁻¹ = L(t) fixes s; its lift is F⁻¹·Ph(s)·F.
        let s = self.spec;
        let want = Matrix::from_rows(s, &[[1, 0], [t as i64, 1]])?;
        let s_val = (0..s.modulus())
            .find(|&v| {
                let u = Matrix::from_rows(s, &[[1, v as i64], [0, 1]]).expect("2x2");
                j.mul(&u).and_then(|x| x.mul(&crate::matrix::inverse(&j)?)).map(|x| x == want).unwrap_or(false)
            })
            .ok_or_else(|| Error::Verification("lower shear is not a Fourier conjugate".into()))?;
        Ok(self.fourier_inv.mul(&self.upper(s_val)).mul(&self.fourier))
    }

    /// `M = L((d−1)/b)·U(b)·L((a−1)/b)` when `b ≠ 0`, else `M = D(a)·L(c·a)`.
    fn lift(&self, m: &Matrix) -> Result<ScaledMatrix> {
        let s = self.spec;
        let (a, b, c, d) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
        if b != 0 {
            let binv = s.inv(b)?;
            let left = self.lower(s.mul(s.sub(d, 1), binv))?;
            let mid = self.upper(b);
            let right = self.lower(s.mul(s.sub(a, 1), binv))?;
            Ok(right.mul(&mid).mul(&left))
        } else {
            let dm = self.multiplier(a);
            let low = self.lower(s.mul(c, a))?;
            Ok(low.mul(&dm))
        }
    }
}

/// A unitary `U(M)` with `Ψ*(U P U†) = Ψ*(P)·M`, for `d = 2` or `d` an odd prime.
pub fn clifford_lift_sl2(m: &Matrix) -> Result<ScaledMatrix> {
    let spec = m.spec();
    if m.rows() != 2 || m.cols() != 2 || m.det()? != 1 {
        return Err(Error::Malformed("Clifford lifts need a 2x2 matrix of determinant 1".into()));
    }
    let d = spec.modulus();
    let u = if d == 2 {
        qubit_lift(m)?
    } else if d % 2 == 1 && spec.residue_field().map(|f| f.modulus()) == Some(d) {
        OddGates::new(spec).lift(m)?
    } else {
        return Err(Error::Unsupported(format!("Clifford lifts over Z/{d} (only d = 2 or an odd prime)")));
    };
    if conjugation_matrix(&u, spec).as_ref() != Some(m) {
        return Err(Error::Verification("lift fails the conjugation contract".into()));
    }
    Ok(u)
}

/// `U = U_1 ⊗ ⋯ ⊗ U_n` together with the slot permutation of a monomial map.
#[derive(Clone, Debug)]
pub struct LocalClifford {
    pub spec: RingSpec,
    pub blocks: Vec<Matrix>,
    pub lifts: Vec<ScaledMatrix>,
    pub perm: Vec<usize>,
}

/// Lifts every block of an SL-monomial map.
pub fn clifford_of_monomial(map: &MonomialMap) -> Result<LocalClifford> {
    if map.flavor() != Flavor::Sl && map.blocks().iter().any(|a| a.det().map(|d| d != 1).unwrap_or(true)) {
        return Err(Error::Unsupported("blocks outside SL_2 have no Clifford lift".into()));
    }
    let lifts = map.blocks().iter().map(clifford_lift_sl2).collect::<Result<Vec<_>>>()?;
    Ok(LocalClifford { spec: map.spec(), blocks: map.blocks().to_vec(), lifts, perm: map.perm().to_vec() })
}

impl LocalClifford {
    pub fn n(&self) -> usize {
        self.lifts.len()
    }

    /// The dense `d^n × d^n` unitary.
    pub fn unitary(&self, limits: &Limits) -> Result<ScaledMatrix> {
        let d = self.spec.modulus() as u128;
        limits.check(d.pow(2 * self.n() as u32))?;
        let mut u = ScaledMatrix::identity(conductor(self.spec), 1, self.spec.modulus());
        for l in &self.lifts {
            u = l.kron(&u);
        }
        Ok(u)
    }

    /// `U P U†`, computed slot by slot.
    pub fn conjugate(&self, p: &PauliOperator) -> Result<PauliOperator> {
        if p.n() != self.n() {
            return Err(Error::Dimension(format!("operator on {} slots, Clifford on {}", p.n(), self.n())));
        }
        let n = self.n();
        let mut out = vec![0u32; 2 * n];
        let mut phase = p.phase_exp();
        for (i, u) in self.lifts.iter().enumerate() {
            let q = conjugate_single(u, &one_qudit(self.spec, 0, p.a()[i], p.b()[i]))
                .ok_or_else(|| Error::Verification("lift is not Clifford".into()))?;
            phase += q.phase_exp();
            out[i] = q.a()[0];
            out[n + i] = q.b()[0];
        }
        PauliOperator::from_vector(self.spec, phase, &out)
    }

    /// `U σ(P) U†`.
    pub fn act(&self, p: &PauliOperator) -> Result<PauliOperator> {
        self.conjugate(&p.permute(&self.perm)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::sl2;

    fn ring(d: u32) -> RingSpec {
        RingSpec::modular(d).unwrap()
    }

    fn mat(d: u32, r: [[i64; 2]; 2]) -> Matrix {
        Matrix::from_rows(ring(d), &r).unwrap()
    }

    #[test]
    fn published_qubit_gates() {
        let s = ring(2);
        let m = conductor(s);
        let one = Cyclotomic::one(m);
        let i = Cyclotomic::root(4, 1).embed(m);
        let u3 = clifford_lift_sl2(&mat(2, [[1, 1], [0, 1]])).unwrap();
        let want3 = ScaledMatrix::exact(CycMatrix::from_data(2, 2, vec![one.clone(), Cyclotomic::zero(m), Cyclotomic::zero(m), i.clone()]), 2);
        assert!(u3.equal_up_to_phase(&want3));
        let u2 = clifford_lift_sl2(&mat(2, [[0, 1], [1, 0]])).unwrap();
        let want2 = ScaledMatrix::new(CycMatrix::from_data(2, 2, vec![one.clone(), one.clone(), one.clone(), -one.clone()]), 1, 2);
        assert!(u2.equal_up_to_phase(&want2));
        let u1 = clifford_lift_sl2(&mat(2, [[1, 0], [1, 1]])).unwrap();
        let want1 = ScaledMatrix::new(CycMatrix::from_data(2, 2, vec![one.clone(), i.clone(), i, one]), 1, 2);
        assert!(u1.equal_up_to_phase(&want1));
    }

    #[test]
    fn every_lift_satisfies_the_contract() {
        for d in [2u32, 3, 5] {
            for m in sl2(ring(d)) {
                let u = clifford_lift_sl2(&m).unwrap();
                assert!(u.is_unitary(), "{m:?}");
                assert!(satisfies_contract(&u, &m), "d = {d}, {m:?}");
            }
        }
    }

    #[test]
    fn unsupported_moduli() {
        assert!(matches!(clifford_lift_sl2(&mat(4, [[1, 1], [0, 1]])), Err(Error::Unsupported(_))));
        assert!(matches!(clifford_lift_sl2(&mat(9, [[1, 1], [0, 1]])), Err(Error::Unsupported(_))));
        assert!(clifford_lift_sl2(&mat(3, [[2, 0], [0, 1]])).is_err());
    }

    #[test]
    fn symbolic_conjugation_matches_dense() {
        let s = ring(3);
        let blocks = vec![mat(3, [[1, 1], [0, 1]]), mat(3, [[0, 2], [1, 0]])];
        let map = MonomialMap::new(blocks, vec![1, 0], Flavor::Sl).unwrap();
        let lc = clifford_of_monomial(&map).unwrap();
        let u = lc.unitary(&Limits::default()).unwrap();
        for (a0, b1) in [(1, 0), (2, 1), (0, 2)] {
            let p = PauliOperator::new(s, 1, &[a0, 1], &[1, b1]).unwrap();
            let sym = lc.conjugate(&p).unwrap();
            let dense = u.mul(&pauli_matrix(&p, &Limits::default()).unwrap()).mul(&u.adjoint());
            assert_eq!(identify_pauli(&dense, s, 2), Some(sym.clone()));
            let moved = lc.act(&p).unwrap();
            assert_eq!(moved.psi(), map.apply(&p.psi()));
        }
    }
}
