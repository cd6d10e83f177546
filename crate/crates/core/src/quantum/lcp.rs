use std::collections::HashMap;

use num_rational::BigRational;
use serde::Serialize;

use crate::algebra::Cyclotomic;
use crate::error::{Error, Result};
use crate::isometry::MonomialMap;
use crate::matrix::{solve_left, Matrix};
use crate::pauli::{code_to_stabilizer, PauliOperator, PauliRepr, StabilizerGroup};
use crate::stabcode::StabilizerCode;
use crate::Limits;

use super::lift::{clifford_of_monomial, LocalClifford};
use super::states::{pauli_matrix, stabilizer_state_basis, StateBasis};

/// Outcome of checking that a monomial code map is realized by a local Clifford.
#[derive(Clone, Debug, Serialize)]
pub struct LcpReport {
    pub source_stabilizer: Vec<String>,
    pub target_stabilizer: Vec<String>,
    /// Generators `U σ(P) U†` for `P` running over the source generators.
    pub transformed: Vec<String>,
    /// `Ψ(U σ(S) U†) = C′`.
    pub psi_matches: bool,
    /// `U σ(S) U† = S′` as groups, with no correction.
    pub exact_group_equality: bool,
    /// A Pauli `P_0` with `P_0 U σ(S) U† P_0† = S′`, when a correction was needed.
    pub correction: Option<PauliRepr>,
    /// The correction problem had no solution.
    pub correction_unsatisfiable: bool,
    /// `P_0 U · Q(σ(S)) = Q(S′)`.
    pub spans_equal: bool,
    /// For states: `λ` with `P_0 U·v_σ = λ·v′`, both normalized to leading entry 1.
    pub state_scalar: Option<Cyclotomic>,
    pub verified: bool,
}

/// `U σ(P) U†` for each generator of `S`.
pub fn transform_generators(lc: &LocalClifford, s: &StabilizerGroup) -> Result<Vec<PauliOperator>> {
    s.generators().iter().map(|p| lc.act(p)).collect()
}

/// Finds `P_0 = X(r)Z(s)` whose conjugation turns each `t` into the element of
/// `S′` with the same `Ψ`-image. Conjugation multiplies `X(a)Z(b)` by `χ(s·a − r·b)`.
fn find_correction(
    transformed: &[PauliOperator],
    target: &StabilizerGroup,
    limits: &Limits,
) -> Result<Option<PauliOperator>> {
    let spec = target.spec();
    let n = target.n();
    let by_psi: HashMap<Vec<u32>, PauliOperator> =
        target.elements(limits)?.into_iter().map(|e| (e.psi(), e)).collect();
    let ratio = spec.phase_ratio();
    let cbar = spec.phase_order();
    let mut columns = Vec::with_capacity(transformed.len());
    let mut rhs = Vec::with_capacity(transformed.len());
    for t in transformed {
        let Some(s) = by_psi.get(&t.psi()) else { return Ok(None) };
        // t = ω^δ s; need ratio·(s·a − r·b) ≡ −δ (mod c̄).
        let delta = (t.phase_exp() + cbar - s.phase_exp()) % cbar;
        let need = (cbar - delta) % cbar;
        if need % ratio != 0 {
            return Ok(None);
        }
        rhs.push(need / ratio);
        let col: Vec<u32> = t.b().iter().map(|&x| spec.neg(x)).chain(t.a().iter().copied()).collect();
        columns.push(col);
    }
    if columns.is_empty() {
        return Ok(Some(PauliOperator::identity(spec, n)));
    }
    let m = Matrix::from_residue_rows(spec, &columns, 2 * n)?.transpose();
    Ok(solve_left(&m, &rhs).map(|rs| PauliOperator::from_vector(spec, 0, &rs).expect("2n entries")))
}

fn leading_one(v: &[Cyclotomic]) -> Vec<Cyclotomic> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(lead) => {
            let inv = lead.inverse().expect("nonzero");
            v.iter().map(|x| x * &inv).collect()
        }
        None => v.to_vec(),
    }
}

/// Checks that the SL-monomial map `map: C → C′` is realized by `U σ(·) U†` on
/// the stabilizers built from the codes, correcting signs by a Pauli if needed.
pub fn lcp_verify(source: &StabilizerCode, target: &StabilizerCode, map: &MonomialMap, limits: &Limits) -> Result<LcpReport> {
    if !map.maps_code_onto(source, target) {
        return Err(Error::NotACodeMap);
    }
    let s = code_to_stabilizer(source, limits)?;
    let s2 = code_to_stabilizer(target, limits)?;
    let lc = clifford_of_monomial(map)?;
    let transformed = transform_generators(&lc, &s)?;
    let t_group = StabilizerGroup::new(s.spec(), s.n(), transformed.clone(), limits)?;
    let psi_matches = t_group.psi_code()? == *target;
    let exact = psi_matches && t_group.same_group(&s2, limits)?;
    let mut correction = None;
    let mut unsatisfiable = false;
    if psi_matches && !exact {
        match find_correction(&transformed, &s2, limits)? {
            Some(p0) => correction = Some(p0),
            None => unsatisfiable = true,
        }
    }
    let p0 = correction.clone().unwrap_or_else(|| PauliOperator::identity(s.spec(), s.n()));
    // States: P_0 U · basis(σ(S)) against basis(S′).
    let u = pauli_matrix(&p0, limits)?.mul(&lc.unitary(limits)?);
    let permuted = s.permute(map.perm(), limits)?;
    let b_sigma = stabilizer_state_basis(&permuted, limits)?;
    let b_target = stabilizer_state_basis(&s2, limits)?;
    let moved: Vec<Vec<Cyclotomic>> = (0..b_sigma.dim()).map(|c| u.apply(&b_sigma.column(c))).collect();
    let moved = StateBasis { spec: b_sigma.spec, n: b_sigma.n, columns: crate::matrix::CycMatrix::from_columns(&moved) };
    let spans_equal = !unsatisfiable && moved.same_span(&b_target);
    let state_scalar = if b_target.dim() == 1 && spans_equal {
        let w = moved.column(0);
        let v = leading_one(&b_target.column(0));
        let idx = v.iter().position(|x| !x.is_zero()).expect("nonzero state");
        Some(&w[idx] * &v[idx].inverse().expect("nonzero"))
    } else {
        None
    };
    let text = |ops: &[PauliOperator]| ops.iter().map(|p| p.to_string()).collect::<Vec<_>>();
    Ok(LcpReport {
        source_stabilizer: text(s.generators()),
        target_stabilizer: text(s2.generators()),
        transformed: text(&transformed),
        psi_matches,
        exact_group_equality: exact,
        correction: correction.as_ref().map(PauliRepr::from),
        correction_unsatisfiable: unsatisfiable,
        spans_equal,
        state_scalar,
        verified: psi_matches && !unsatisfiable && spans_equal,
    })
}

/// `true` when `λ / ((1+i)/2)` is a root of unity.
pub fn matches_half_one_plus_i(lambda: &Cyclotomic) -> bool {
    let half = BigRational::new(1.into(), 2.into());
    let reference = (&Cyclotomic::one(8) + &Cyclotomic::root(8, 2)).scale(&half);
    reference.inverse().is_some_and(|inv| (lambda * &inv).root_of_unity_exponent().is_some())
}
