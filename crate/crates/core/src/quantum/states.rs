use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{Cyclotomic, RingSpec};
use crate::error::{Error, Result};
use crate::matrix::{all_vectors, CycMatrix};
use crate::pauli::{PauliOperator, StabilizerGroup};
use crate::Limits;

use super::scaled::ScaledMatrix;

/// Conductor of the cyclotomic field used for `d`-qudit matrices: it contains
/// `ω`, `i`, and `√d`.
pub fn conductor(spec: RingSpec) -> u32 {
    spec.phase_order().lcm(&(4 * spec.modulus()))
}

fn hilbert_dim(spec: RingSpec, n: usize, limits: &Limits) -> Result<usize> {
    let dim = (spec.modulus() as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    limits.check(dim.saturating_mul(dim))?;
    Ok(dim as usize)
}

/// Basis index of `x ∈ R^n`, slot 1 least significant.
pub fn basis_index(x: &[u32], d: u32) -> usize {
    x.iter().rev().fold(0, |acc, &v| acc * d as usize + v as usize)
}

/// Inverse of [`basis_index`].
pub fn basis_vector(idx: usize, d: u32, n: usize) -> Vec<u32> {
    let d = d as usize;
    (0..n).map(|i| ((idx / d.pow(i as u32)) % d) as u32).collect()
}

/// `(row, column, ω-exponent)` of the nonzero entries of `ω^ℓ X(a)Z(b)`, one per column.
fn pauli_entries(p: &PauliOperator) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
    let spec = p.spec();
    let d = spec.modulus();
    let cbar = spec.phase_order();
    all_vectors(spec, p.n()).map(move |x| {
        let y: Vec<u32> = x.iter().zip(p.a()).map(|(&u, &v)| spec.add(u, v)).collect();
        let e = (p.phase_exp() + spec.phase_ratio() * spec.dot(p.b(), &x)) % cbar;
        (basis_index(&y, d), basis_index(&x, d), e)
    })
}

/// `X(a)v_x = v_{x+a}`, `Z(b)v_x = χ(b·x)v_x`, times `ω^ℓ`.
pub fn pauli_matrix(p: &PauliOperator, limits: &Limits) -> Result<ScaledMatrix> {
    let spec = p.spec();
    let dim = hilbert_dim(spec, p.n(), limits)?;
    let m = conductor(spec);
    let mut mat = CycMatrix::zeros(m, dim, dim);
    for (r, c, e) in pauli_entries(p) {
        mat.set(r, c, Cyclotomic::root(spec.phase_order(), e as i64).embed(m));
    }
    Ok(ScaledMatrix::exact(mat, spec.modulus()))
}

/// Reads a matrix back as `ω^ℓ X(a)Z(b)`, if it is one.
pub fn identify_pauli(u: &ScaledMatrix, spec: RingSpec, n: usize) -> Option<PauliOperator> {
    let mat = u.to_exact();
    let d = spec.modulus();
    let cbar = spec.phase_order();
    let exponent = |z: &Cyclotomic| (0..cbar).find(|&k| *z == Cyclotomic::root(cbar, k as i64));
    let col0 = (0..mat.rows()).find(|&r| !mat.get(r, 0).is_zero())?;
    let a = basis_vector(col0, d, n);
    let l = exponent(mat.get(col0, 0))?;
    let mut b = vec![0u32; n];
    for (i, bi) in b.iter_mut().enumerate() {
        let mut x = vec![0u32; n];
        x[i] = 1;
        let col = basis_index(&x, d);
        let row = basis_index(&x.iter().zip(&a).map(|(&u, &v)| spec.add(u, v)).collect::<Vec<_>>(), d);
        let e = exponent(mat.get(row, col))?;
        let shift = (e + cbar - l) % cbar;
        if shift % spec.phase_ratio() != 0 {
            return None;
        }
        *bi = shift / spec.phase_ratio();
    }
    let p = PauliOperator::from_vector(spec, l, &[a, b].concat()).ok()?;
    let expected = pauli_matrix(&p, &Limits::new(u64::MAX)).ok()?;
    (expected.mat == mat).then_some(p)
}

/// `Π = (1/|S|) Σ_{g ∈ S} g`, the projector onto the joint `+1` eigenspace.
pub fn projector(s: &StabilizerGroup, limits: &Limits) -> Result<CycMatrix> {
    let spec = s.spec();
    let dim = hilbert_dim(spec, s.n(), limits)?;
    let elements = s.elements(limits)?;
    limits.check(elements.len() as u128 * dim as u128)?;
    let cbar = spec.phase_order() as usize;
    let mut counts = vec![vec![0i64; cbar]; dim * dim];
    for g in &elements {
        for (r, c, e) in pauli_entries(g) {
            counts[r * dim + c][e as usize] += 1;
        }
    }
    let m = conductor(spec);
    let denom = BigInt::from(elements.len());
    let data = counts
        .into_iter()
        .map(|cs| {
            let powers = cs.into_iter().map(|k| BigRational::new(BigInt::from(k), denom.clone())).collect();
            Cyclotomic::from_power_coeffs(cbar as u32, powers).embed(m)
        })
        .collect();
    Ok(CycMatrix::from_data(dim, dim, data))
}

/// Incremental row echelon form, used to pick independent columns cheaply.
struct Echelon {
    rows: Vec<(usize, Vec<Cyclotomic>)>,
}

impl Echelon {
    fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    /// Adds `v` if it is independent of what is stored; reports whether it was.
    fn insert(&mut self, v: &[Cyclotomic]) -> bool {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else { return false };
        let inv = v[p].inverse().expect("nonzero pivot");
        let v: Vec<Cyclotomic> = v.iter().map(|x| x * &inv).collect();
        self.rows.push((p, v));
        true
    }
}

/// A spanning set of the stabilizer code space `Q(S)`, one column per dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateBasis {
    pub spec: RingSpec,
    pub n: usize,
    /// `d^n × dim` with each column's first nonzero entry equal to 1.
    pub columns: CycMatrix,
}

impl StateBasis {
    pub fn dim(&self) -> usize {
        self.columns.cols()
    }

    pub fn column(&self, c: usize) -> Vec<Cyclotomic> {
        self.columns.column(c)
    }

    pub fn same_span(&self, other: &StateBasis) -> bool {
        self.columns.same_column_span(&other.columns)
    }

    /// The single column of a stabilizer state.
    pub fn state_vector(&self) -> Result<StateVector> {
        if self.dim() != 1 {
            return Err(Error::Dimension(format!("code space has dimension {}, not 1", self.dim())));
        }
        Ok(StateVector { ring: self.spec.to_string(), n: self.n, scale_exp: 0, entries: self.column(0) })
    }
}

fn normalize_first_nonzero(v: Vec<Cyclotomic>) -> Vec<Cyclotomic> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(lead) => {
            let inv = lead.inverse().expect("nonzero");
            v.iter().map(|x| x * &inv).collect()
        }
        None => v,
    }
}

/// Image basis of the projector of `S`, checked to have dimension `d^n / |S|`.
pub fn stabilizer_state_basis(s: &StabilizerGroup, limits: &Limits) -> Result<StateBasis> {
    let pi = projector(s, limits)?;
    let dim = pi.rows();
    let expected = dim as u128 / s.order();
    if expected * s.order() != dim as u128 {
        return Err(Error::Verification(format!("|S| = {} does not divide {dim}", s.order())));
    }
    let mut ech = Echelon::new();
    let mut picked = Vec::new();
    for c in 0..dim {
        if picked.len() as u128 == expected {
            break;
        }
        let col = pi.column(c);
        if col.iter().all(Cyclotomic::is_zero) {
            continue;
        }
        if ech.insert(&col) {
            picked.push(normalize_first_nonzero(col));
        }
    }
    if picked.len() as u128 != expected {
        return Err(Error::Verification(format!("projector rank {} differs from d^n/|S| = {expected}", picked.len())));
    }
    Ok(StateBasis { spec: s.spec(), n: s.n(), columns: CycMatrix::from_columns(&picked) })
}

/// A state vector `entries / √d^scale_exp`, in its JSON exchange form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateVector {
    pub ring: String,
    pub n: usize,
    pub scale_exp: u32,
    pub entries: Vec<Cyclotomic>,
}

impl StateVector {
    pub fn spec(&self) -> Result<RingSpec> {
        self.ring.parse()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("state vectors serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let v: StateVector = serde_json::from_str(s).map_err(|e| Error::Malformed(format!("state file: {e}")))?;
        let d = v.spec()?.modulus() as usize;
        if d.checked_pow(v.n as u32) != Some(v.entries.len()) {
            return Err(Error::Malformed(format!("{} entries for {} qudits of dimension {d}", v.entries.len(), v.n)));
        }
        Ok(v)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.coeffs().iter().all(Zero::is_zero))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::{code_to_stabilizer, parse_pauli};
    use crate::stabcode::StabilizerCode;

    fn ring(d: u32) -> RingSpec {
        RingSpec::modular(d).unwrap()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    fn ints(m: u32, v: &[i64]) -> Vec<Cyclotomic> {
        v.iter().map(|&x| Cyclotomic::from_int(m, x)).collect()
    }

    #[test]
    fn qubit_paulis() {
        let s = ring(2);
        let x = pauli_matrix(&parse_pauli("X", s).unwrap(), &lim()).unwrap();
        assert_eq!(x.mat, CycMatrix::from_data(2, 2, ints(8, &[0, 1, 1, 0])));
        let z = pauli_matrix(&parse_pauli("Z", s).unwrap(), &lim()).unwrap();
        assert_eq!(z.mat, CycMatrix::from_data(2, 2, ints(8, &[1, 0, 0, -1])));
        let xz = x.mul(&z);
        assert_eq!(xz.mul(&xz).mat, CycMatrix::from_data(2, 2, ints(8, &[-1, 0, 0, -1])));
    }

    #[test]
    fn multiplication_matches_matrices_exhaustively() {
        for d in [2u32, 3] {
            let s = ring(d);
            let ops: Vec<PauliOperator> = (0..s.phase_order() as i64)
                .flat_map(|l| (0..d as i64).flat_map(move |a| (0..d as i64).map(move |b| (l, a, b))))
                .map(|(l, a, b)| PauliOperator::new(s, l, &[a], &[b]).unwrap())
                .collect();
            for p in &ops {
                for q in &ops {
                    let lhs = pauli_matrix(p, &lim()).unwrap().mul(&pauli_matrix(q, &lim()).unwrap());
                    assert_eq!(lhs, pauli_matrix(&p.mul(q).unwrap(), &lim()).unwrap());
                }
                assert_eq!(identify_pauli(&pauli_matrix(p, &lim()).unwrap(), s, 1).as_ref(), Some(p));
            }
        }
    }

    #[test]
    fn ex11_state() {
        let c = StabilizerCode::from_rows(ring(2), 3, &[[1, 0, 1, 0, 1, 0], [0, 1, 1, 1, 0, 0], [0, 0, 0, 1, 1, 1]]).unwrap();
        let s = code_to_stabilizer(&c, &lim()).unwrap();
        let basis = stabilizer_state_basis(&s, &lim()).unwrap();
        assert_eq!(basis.column(0), ints(8, &[1, 0, 0, -1, 0, 1, 1, 0]));
    }

    #[test]
    fn ex11_target_and_permuted_states() {
        let i = Cyclotomic::root(8, 2);
        let (one, m1) = (Cyclotomic::one(8), Cyclotomic::from_int(8, -1));
        let gens = |t: &[&str]| {
            let ops = t.iter().map(|g| parse_pauli(g, ring(2)).unwrap()).collect();
            StabilizerGroup::new(ring(2), 3, ops, &lim()).unwrap()
        };
        let target = stabilizer_state_basis(&gens(&["YZY", "XZZ", "YXZ"]), &lim()).unwrap();
        let expected = vec![one.clone(), one.clone(), -&i, i.clone(), one.clone(), m1, -&i, -&i];
        assert_eq!(target.column(0), expected);
        let permuted = stabilizer_state_basis(&gens(&["ZXX", "XXZ", "ZZZ"]), &lim()).unwrap();
        assert_eq!(permuted.column(0), ints(8, &[1, 0, 0, 1, 0, -1, 1, 0]));
    }

    #[test]
    fn basis_index_round_trip() {
        for idx in 0..27 {
            assert_eq!(basis_index(&basis_vector(idx, 3, 3), 3), idx);
        }
        assert_eq!(basis_index(&[1, 0, 0], 2), 1);
    }

    #[test]
    fn z_eigenvector() {
        let s = StabilizerGroup::new(ring(2), 1, vec![parse_pauli("Z", ring(2)).unwrap()], &lim()).unwrap();
        assert_eq!(stabilizer_state_basis(&s, &lim()).unwrap().column(0), ints(8, &[1, 0]));
    }

    #[test]
    fn state_json_round_trip() {
        let s = StabilizerGroup::new(ring(3), 1, vec![parse_pauli("X^1", ring(3)).unwrap()], &lim()).unwrap();
        let v = stabilizer_state_basis(&s, &lim()).unwrap().state_vector().unwrap();
        assert_eq!(StateVector::from_json(&v.to_json()).unwrap(), v);
        assert!(StateVector::from_json("{\"ring\":\"Z/2\",\"n\":2,\"scale_exp\":0,\"entries\":[]}").is_err());
    }
}
