use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::RingSpec;
use crate::error::Result;
use crate::matrix::{all_vectors, general_linear, permutations, sl2, Matrix};
use crate::Limits;

use super::monomial::{j_matrix, Flavor, MonomialMap};

#[derive(Clone, Debug, Serialize)]
pub struct StructureReport {
    pub ring: String,
    pub n: usize,
    /// Linear maps of `R^{2n}` (interleaved coordinates) preserving pair weight
    /// and the symplectic form.
    pub isometries: usize,
    /// Distinct matrices of SL-monomial maps.
    pub monomials: usize,
    pub equal: bool,
}

/// `diag(J, …, J)`, the Gram matrix of the form in interleaved coordinates.
fn omega(spec: RingSpec, n: usize) -> Matrix {
    let j = j_matrix(spec);
    let mut m = Matrix::zeros(spec, 2 * n, 2 * n);
    for i in 0..n {
        for r in 0..2 {
            for c in 0..2 {
                m.set(2 * i + r, 2 * i + c, j.get(r, c));
            }
        }
    }
    m
}

fn pair_weight(x: &[u32]) -> usize {
    x.chunks(2).filter(|p| p.iter().any(|&v| v != 0)).count()
}

/// Every pair-weight-preserving symplectic automorphism of `R^{2n}`, found by
/// running over all of `GL_{2n}(R)`.
pub fn ambient_isometries(spec: RingSpec, n: usize, limits: &Limits) -> Result<BTreeSet<Matrix>> {
    let om = omega(spec, n);
    let vectors: Vec<Vec<u32>> = all_vectors(spec, 2 * n).collect();
    Ok(general_linear(spec, 2 * n, limits)?
        .into_par_iter()
        .filter(|f| {
            f.mul(&om).and_then(|m| m.mul(&f.transpose())).map(|m| m == om).unwrap_or(false)
                && vectors.iter().all(|x| pair_weight(&f.left_mul_vec(x)) == pair_weight(x))
        })
        .collect())
}

/// Matrices of all SL-monomial maps of `R^{2n}`.
pub fn sl_monomial_matrices(spec: RingSpec, n: usize, limits: &Limits) -> Result<BTreeSet<Matrix>> {
    let s = sl2(spec);
    let fact: u128 = (1..=n as u128).product();
    limits.check(fact * (s.len() as u128).pow(n as u32))?;
    let mut out = BTreeSet::new();
    for perm in permutations(n) {
        for choice in (0..n).map(|_| 0..s.len()).fold(vec![Vec::new()], |acc, r| {
            acc.into_iter().flat_map(|v| r.clone().map(move |i| [v.clone(), vec![i]].concat())).collect()
        }) {
            let blocks = choice.iter().map(|&i| s[i].clone()).collect();
            out.insert(MonomialMap::new(blocks, perm.clone(), Flavor::Sl)?.to_matrix_interleaved());
        }
    }
    Ok(out)
}

/// Compares the two sets above.
pub fn verify_structure_theorem(spec: RingSpec, n: usize, limits: &Limits) -> Result<StructureReport> {
    let iso = ambient_isometries(spec, n, limits)?;
    let mono = sl_monomial_matrices(spec, n, limits)?;
    Ok(StructureReport { ring: spec.to_string(), n, isometries: iso.len(), monomials: mono.len(), equal: iso == mono })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases_agree() {
        for (spec, n, count) in [
            (RingSpec::prime_field(2).unwrap(), 1, 6),
            (RingSpec::prime_field(3).unwrap(), 1, 24),
            (RingSpec::prime_field(2).unwrap(), 2, 72),
            (RingSpec::modular(4).unwrap(), 1, 48),
        ] {
            let r = verify_structure_theorem(spec, n, &Limits::default()).unwrap();
            assert!(r.equal, "{spec} n={n}");
            assert_eq!(r.isometries, count);
        }
    }

    #[test]
    fn gl_monomials_break_the_form_over_f3() {
        let f3 = RingSpec::prime_field(3).unwrap();
        let a = Matrix::from_rows(f3, &[[2, 0], [0, 1]]).unwrap();
        let f = MonomialMap::new(vec![a], vec![0], Flavor::Gl).unwrap().to_matrix_interleaved();
        assert!(!ambient_isometries(f3, 1, &Limits::default()).unwrap().contains(&f));
    }
}
