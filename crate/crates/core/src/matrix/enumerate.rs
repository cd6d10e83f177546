//! Deterministic enumeration of small matrix groups and symmetric groups.
//!
//! Matrices come out in lexicographic order of their row-major entry sequence,
//! so a stream can be split into shards reproducibly.

use itertools::Itertools;

use super::dense::Matrix;
use super::howell::canonicalize;
use crate::algebra::RingSpec;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupShape {
    /// `GL_k` over a prime field, or over `Z/dZ` by filtering.
    GeneralLinear(usize),
    /// `GL_2(R)`.
    GeneralLinear2,
    /// `SL_2(R)`.
    SpecialLinear2,
    /// The symmetric group on `n` points.
    Symmetric(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum GroupElement {
    Matrix(Matrix),
    Permutation(Vec<usize>),
}

/// `∏_{i<k} (q^k - q^i)`.
pub fn gl_order(q: u64, k: usize) -> u128 {
    let qk = (q as u128).pow(k as u32);
    (0..k).map(|i| qk - (q as u128).pow(i as u32)).product()
}

pub fn enumerate_group(spec: RingSpec, shape: GroupShape, limits: &crate::Limits) -> Result<Vec<GroupElement>> {
    Ok(match shape {
        GroupShape::GeneralLinear(k) => general_linear(spec, k, limits)?.into_iter().map(GroupElement::Matrix).collect(),
        GroupShape::GeneralLinear2 => gl2(spec).into_iter().map(GroupElement::Matrix).collect(),
        GroupShape::SpecialLinear2 => sl2(spec).into_iter().map(GroupElement::Matrix).collect(),
        GroupShape::Symmetric(n) => {
            limits.check((1..=n as u128).product())?;
            permutations(n).map(GroupElement::Permutation).collect()
        }
    })
}

/// All of `GL_k(R)` in lexicographic order.
pub fn general_linear(spec: RingSpec, k: usize, limits: &crate::Limits) -> Result<Vec<Matrix>> {
    let q = spec.modulus() as u64;
    if spec.is_field() {
        limits.check(gl_order(q, k))?;
        let mut out = Vec::new();
        let mut rows: Vec<Vec<u32>> = Vec::with_capacity(k);
        extend_independent(spec, k, &mut rows, &mut out);
        Ok(out)
    } else {
        let space = (q as u128).checked_pow((k * k) as u32).ok_or(Error::CapExceeded { needed: u128::MAX, cap: limits.max_enum })?;
        limits.check(space)?;
        Ok(all_matrices(spec, k).filter(Matrix::is_invertible).collect())
    }
}

fn extend_independent(spec: RingSpec, k: usize, rows: &mut Vec<Vec<u32>>, out: &mut Vec<Matrix>) {
    if rows.len() == k {
        out.push(Matrix::from_residue_rows(spec, rows, k).expect("rows have width k"));
        return;
    }
    let span = if rows.is_empty() {
        None
    } else {
        Some(canonicalize(&Matrix::from_residue_rows(spec, rows, k).expect("rows have width k")))
    };
    for v in all_vectors(spec, k) {
        let independent = match &span {
            None => v.iter().any(|&x| x != 0),
            Some(h) => !h.contains(&v),
        };
        if independent {
            rows.push(v);
            extend_independent(spec, k, rows, out);
            rows.pop();
        }
    }
}

/// `R^k` in lexicographic order (first coordinate most significant).
pub fn all_vectors(spec: RingSpec, k: usize) -> Box<dyn Iterator<Item = Vec<u32>> + Send> {
    let d = spec.modulus();
    if k == 0 {
        Box::new(std::iter::once(Vec::new()))
    } else {
        Box::new((0..k).map(move |_| 0..d).multi_cartesian_product())
    }
}

fn all_matrices(spec: RingSpec, k: usize) -> impl Iterator<Item = Matrix> {
    all_vectors(spec, k * k).map(move |v| Matrix::new(spec, k, k, v).expect("k*k entries"))
}

pub fn gl2(spec: RingSpec) -> Vec<Matrix> {
    all_matrices(spec, 2).filter(Matrix::is_invertible).collect()
}

pub fn sl2(spec: RingSpec) -> Vec<Matrix> {
    all_matrices(spec, 2).filter(|m| m.det().map(|d| d == 1).unwrap_or(false)).collect()
}

/// Permutations of `0..n` as image lists, in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).permutations(n)
}
