use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::Cyclotomic;
use crate::error::{Error, Result};
use crate::matrix::CycMatrix;

use super::states::StateVector;

/// A cut `A | B` of the slots, with slot 0 always in `A`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Bipartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |s: &[usize]| s.iter().map(|i| (i + 1).to_string()).join(",");
        write!(f, "{{{}}}|{{{}}}", side(&self.left), side(&self.right))
    }
}

/// Cuts ordered by `|A|`, then lexicographically.
pub fn bipartitions(n: usize) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for size in 1..n {
        for rest in (1..n).combinations(size - 1) {
            let left: Vec<usize> = std::iter::once(0).chain(rest).collect();
            let right = (0..n).filter(|i| !left.contains(i)).collect();
            out.push(Bipartition { left, right });
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct RankProfile {
    pub ranks: Vec<(Bipartition, usize)>,
    /// Sorted ranks for each size of `A`.
    pub by_size: BTreeMap<usize, Vec<usize>>,
}

/// Rank of the `d^{|A|} × d^{|B|}` reshaping of `ψ` for every cut.
pub fn rank_profile(psi: &StateVector) -> Result<RankProfile> {
    let d = psi.spec()?.modulus() as usize;
    let entries = &psi.entries;
    let ranks: Vec<(Bipartition, usize)> = bipartitions(psi.n)
        .into_par_iter()
        .map(|cut| {
            let rows = d.pow(cut.left.len() as u32);
            let cols = d.pow(cut.right.len() as u32);
            let mut data = vec![Cyclotomic::zero(1); rows * cols];
            for (idx, v) in entries.iter().enumerate() {
                let digit = |slot: usize| (idx / d.pow(slot as u32)) % d;
                let r = cut.left.iter().fold(0, |acc, &s| acc * d + digit(s));
                let c = cut.right.iter().fold(0, |acc, &s| acc * d + digit(s));
                data[r * cols + c] = v.clone();
            }
            let rank = CycMatrix::from_data(rows, cols, data).rank();
            (cut, rank)
        })
        .collect();
    let mut by_size: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (cut, r) in &ranks {
        by_size.entry(cut.left.len()).or_default().push(*r);
    }
    by_size.values_mut().for_each(|v| v.sort_unstable());
    Ok(RankProfile { ranks, by_size })
}

/// Refutation of local-unitary equivalence, or the admission that none was found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum LuVerdict {
    NotLuEquivalent { bipartition: Bipartition, left_rank: usize, right_rank: usize },
    Inconclusive,
}

impl fmt::Display for LuVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LuVerdict::NotLuEquivalent { bipartition, left_rank, right_rank } => {
                write!(f, "not-LU-equivalent, bipartition {bipartition}, ranks {left_rank} vs {right_rank}")
            }
            LuVerdict::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// Compares ranks cut by cut; a mismatch rules out `ψ2 = (U_1 ⊗ ⋯ ⊗ U_n) ψ1`.
pub fn lu_witness(psi1: &StateVector, psi2: &StateVector) -> Result<LuVerdict> {
    if psi1.n != psi2.n || psi1.spec()?.modulus() != psi2.spec()?.modulus() {
        return Err(Error::Dimension("states on different systems".into()));
    }
    let a = rank_profile(psi1)?;
    let b = rank_profile(psi2)?;
    Ok(a.ranks
        .into_iter()
        .zip(b.ranks)
        .find(|((_, r1), (_, r2))| r1 != r2)
        .map(|((cut, r1), (_, r2))| LuVerdict::NotLuEquivalent { bipartition: cut, left_rank: r1, right_rank: r2 })
        .unwrap_or(LuVerdict::Inconclusive))
}
