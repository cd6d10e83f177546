use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::{all_vectors, general_linear, gl_order, Matrix};
use crate::stabcode::{symp_weight, StabilizerCode};
use crate::Limits;

use super::group::IsometrySubgroup;
use super::view::{vector_index, FieldView};
use super::CodeMapWitness;

/// `wt_s(xG)` for every `x ∈ F_q^k`, indexed lexicographically.
fn weight_table(view: &FieldView, limits: &Limits) -> Result<Vec<usize>> {
    limits.check((view.q() as u128).pow(view.k as u32))?;
    Ok(all_vectors(view.field, view.k).map(|x| symp_weight(&view.g().left_mul_vec(&x))).collect())
}

/// True iff `wt_s(x·B·G′) = wt_s(x·G)` for all `x`, given both weight tables.
fn preserves_weights(b: &Matrix, source: &[usize], target: &[usize], q: u32, k: usize) -> bool {
    all_vectors(b.spec(), k).enumerate().all(|(i, x)| target[vector_index(&b.left_mul_vec(&x), q)] == source[i])
}

/// `B·Γ′·Bᵀ = Γ` for Gram matrices of the symplectic form.
fn preserves_form(b: &Matrix, gram: &Matrix, gram_target: &Matrix) -> bool {
    b.mul(gram_target).and_then(|m| m.mul(&b.transpose())).map(|m| &m == gram).unwrap_or(false)
}

fn check_pair(a: &FieldView, b: &FieldView) -> Result<()> {
    if a.field != b.field {
        return Err(Error::Dimension(format!("codes over {} and {} cannot be compared", a.field, b.field)));
    }
    if a.k != b.k {
        return Err(Error::Dimension(format!("codes of dimensions {} and {} are never isometric", a.k, b.k)));
    }
    Ok(())
}

fn symp_search(a: &FieldView, b: &FieldView, limits: &Limits) -> Result<Vec<Matrix>> {
    check_pair(a, b)?;
    limits.check(gl_order(a.q() as u64, a.k))?;
    let wa = weight_table(a, limits)?;
    let wb = weight_table(b, limits)?;
    let (ga, gb) = (a.code.gram(), b.code.gram());
    let candidates = general_linear(a.field, a.k, limits)?;
    let q = a.q();
    let k = a.k;
    let mut found: Vec<Matrix> = candidates
        .into_par_iter()
        .filter(|m| preserves_weights(m, &wa, &wb, q, k) && preserves_form(m, &ga, &gb))
        .collect();
    found.sort();
    Ok(found)
}

/// `Symp(C) = {B ∈ GL_k : wt_s(xBG) = wt_s(xG) for all x}`, together with form
/// preservation (automatic for self-orthogonal codes).
pub fn symp_group(code: &StabilizerCode, limits: &Limits) -> Result<IsometrySubgroup> {
    let view = FieldView::new(code)?;
    let elems = symp_search(&view, &view, limits)?;
    IsometrySubgroup::new(view.field, view.k, elems)
}

/// All `B` with `wt_s(xG) = wt_s(xBG′)` (and matching forms): the symplectic
/// isometries `C → C′` written against the two generator matrices.
pub fn symp_between(source: &StabilizerCode, target: &StabilizerCode, limits: &Limits) -> Result<Vec<CodeMapWitness>> {
    let a = FieldView::new(source)?;
    let b = FieldView::new(target)?;
    Ok(symp_search(&a, &b, limits)?.into_iter().map(|m| CodeMapWitness { b: m, map: None }).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RingSpec;

    fn f2() -> RingSpec {
        RingSpec::prime_field(2).unwrap()
    }

    fn e_ex2() -> StabilizerCode {
        StabilizerCode::from_rows(
            f2(),
            5,
            &[[0, 1, 1, 1, 1, 0, 0, 0, 0, 0], [1, 0, 1, 0, 0, 0, 0, 0, 1, 1], [1, 0, 0, 0, 1, 0, 1, 1, 0, 0]],
        )
        .unwrap()
    }

    /// Oracle: compare weights of the actual codeword sets, with no tables.
    fn is_symp_oracle(c: &StabilizerCode, b: &Matrix) -> bool {
        let g = c.generators();
        let bg = b.mul(g).unwrap();
        all_vectors(c.spec(), c.k()).all(|x| symp_weight(&bg.left_mul_vec(&x)) == symp_weight(&g.left_mul_vec(&x)))
    }

    #[test]
    fn e_ex2_symp_is_all_of_gl3() {
        let g = symp_group(&e_ex2(), &Limits::default()).unwrap();
        assert_eq!(g.order(), 168);
        assert!(g.verify_axioms());
    }

    #[test]
    fn matches_oracle_on_a_smaller_group() {
        let c = StabilizerCode::from_rows(f2(), 3, &[[1, 0, 1, 0, 1, 0], [0, 1, 1, 1, 0, 0], [0, 0, 0, 1, 1, 1]]).unwrap();
        let g = symp_group(&c, &Limits::default()).unwrap();
        let all = general_linear(f2(), 3, &Limits::default()).unwrap();
        let oracle: Vec<Matrix> = all.into_iter().filter(|b| is_symp_oracle(&c, b)).collect();
        assert_eq!(g.elements().cloned().collect::<Vec<_>>(), oracle);
    }

    #[test]
    fn zero_code_has_trivial_group() {
        let z = StabilizerCode::zero(f2(), 1).unwrap();
        assert_eq!(symp_group(&z, &Limits::default()).unwrap().order(), 1);
    }

    #[test]
    fn non_self_orthogonal_codes_also_check_the_form() {
        // C = span{(1,0), (0,1)} over F_3, n = 1: every B preserves weights, only SL_2 preserves the form.
        let f3 = RingSpec::prime_field(3).unwrap();
        let c = StabilizerCode::full_space(f3, 1).unwrap();
        assert_eq!(symp_group(&c, &Limits::default()).unwrap().order(), 24);
    }

    #[test]
    fn socle_lift_keeps_symp() {
        let z4 = RingSpec::modular(4).unwrap();
        let lifted = e_ex2().socle_lift(z4).unwrap();
        assert_eq!(symp_group(&lifted, &Limits::default()).unwrap().order(), 168);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(symp_group(&e_ex2(), &Limits::new(100)), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn general_moduli_are_refused() {
        let z6 = RingSpec::modular(6).unwrap();
        let c = StabilizerCode::from_rows(z6, 1, &[[3, 0]]).unwrap();
        assert!(matches!(symp_group(&c, &Limits::default()), Err(Error::Unsupported(_))));
    }
}
