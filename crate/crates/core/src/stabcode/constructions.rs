use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::algebra::RingSpec;
use crate::error::{Error, Result};
use crate::matrix::{CanonicalForm, Matrix};
use crate::Limits;

use super::code::StabilizerCode;
use super::vector::{symp_inner, symp_weight};

impl StabilizerCode {
    /// The `times`-fold concatenation `C | C | … | C`: every pair block of `γ(G)` is
    /// repeated, which in `(a | b)` coordinates repeats both halves.
    pub fn concat(&self, times: usize) -> Result<StabilizerCode> {
        if times == 0 {
            return Err(Error::Malformed("concatenation needs at least one copy".into()));
        }
        let n = self.n();
        let rows: Vec<Vec<u32>> = self
            .generators()
            .iter_rows()
            .map(|r| {
                let mut out = Vec::with_capacity(2 * n * times);
                for _ in 0..times {
                    out.extend_from_slice(&r[..n]);
                }
                for _ in 0..times {
                    out.extend_from_slice(&r[n..]);
                }
                out
            })
            .collect();
        StabilizerCode::new(Matrix::from_residue_rows(self.spec(), &rows, 2 * n * times)?)
    }

    /// The `p`-fold concatenation over `F_p`, which is always self-orthogonal.
    pub fn concat_p_fold(&self) -> Result<StabilizerCode> {
        if !self.spec().is_field() {
            return Err(Error::Unsupported(format!("p-fold concatenation needs a prime field, got {}", self.spec())));
        }
        self.concat(self.spec().characteristic() as usize)
    }

    /// Embeds a code over `F_p` into the socle `α·R^{2n}` of `R = Z/p^e`: each row
    /// `g` becomes `α·ĝ` for the canonical integer lift `ĝ`.
    pub fn socle_lift(&self, target: RingSpec) -> Result<StabilizerCode> {
        let local = target
            .local_data()
            .ok_or_else(|| Error::Unsupported(format!("{target} is not a local ring Z/p^e")))?;
        if !self.spec().is_field() || local.prime != self.spec().characteristic() {
            return Err(Error::Unsupported(format!(
                "cannot lift a code over {} into {target}: residue characteristics differ",
                self.spec()
            )));
        }
        let alpha = local.socle_generator;
        let g = self.generators();
        let lifted = Matrix::new(target, g.rows(), g.cols(), g.data().iter().map(|&x| x * alpha).collect())?;
        StabilizerCode::new(lifted)
    }

    /// True when every generator entry lies in the socle `αR` of a local ring.
    pub fn is_socle_code(&self) -> bool {
        match self.spec().local_data() {
            Some(l) => self.generators().data().iter().all(|&x| x % l.socle_generator == 0),
            None => false,
        }
    }

    /// The residue code `ρ(C) ⊆ F_p^{2n}` of a socle code, dividing entries by `α`.
    /// Over a prime field this is the code itself.
    pub fn socle_residue(&self) -> Result<StabilizerCode> {
        if self.spec().is_field() {
            return Ok(self.clone());
        }
        if !self.is_socle_code() {
            return Err(Error::Unsupported(format!(
                "code over {} does not lie in the socle; only socle codes over Z/p^e are supported",
                self.spec()
            )));
        }
        let l = self.spec().local_data().expect("socle codes live over local rings");
        let field = self.spec().residue_field().expect("local rings have a residue field");
        let g = self.generators();
        let data = g.data().iter().map(|&x| x / l.socle_generator).collect();
        StabilizerCode::new(Matrix::new(field, g.rows(), g.cols(), data)?)
    }

    /// The `F_p`-dimension of the code: `k` over a field, and the residue dimension
    /// for a socle code.
    pub fn field_dimension(&self) -> Result<usize> {
        Ok(self.socle_residue()?.k())
    }

    /// The multiset `{wt_s(v + c) : c ∈ C}` for `v ∉ C`.
    pub fn coset_weight_table(&self, v: &[u32], limits: &Limits) -> Result<CosetWeightTable> {
        if v.len() != 2 * self.n() {
            return Err(Error::Dimension(format!("vector of length {} for n = {}", v.len(), self.n())));
        }
        let v: Vec<u32> = v.iter().map(|&x| x % self.spec().modulus()).collect();
        if self.contains(&v) {
            return Err(Error::VectorInCode);
        }
        limits.check(self.size())?;
        let spec = self.spec();
        let mut weights: Vec<usize> = self
            .codewords()
            .map(|c| symp_weight(&c.iter().zip(&v).map(|(&x, &y)| spec.add(x, y)).collect::<Vec<_>>()))
            .collect();
        weights.sort_unstable();
        Ok(CosetWeightTable { representative: v, weights })
    }

    /// All self-dual codes `D` with `C ⊆ D ⊆ C^⊥`, found by adjoining one coset
    /// representative at a time and remembering every intermediate code seen.
    pub fn self_dual_extensions(&self, limits: &Limits) -> Result<Vec<StabilizerCode>> {
        if !self.is_self_orthogonal() {
            return Err(Error::NotSelfOrthogonal);
        }
        let dual = self.dual();
        limits.check(dual.size())?;
        let ambient = (self.spec().modulus() as u128).pow(2 * self.n() as u32);
        let dual_words: Vec<Vec<u32>> = dual.codewords().collect();

        let mut seen: HashSet<CanonicalForm> = HashSet::new();
        let mut found: BTreeMap<Matrix, StabilizerCode> = BTreeMap::new();
        let mut stack = vec![self.clone()];
        seen.insert(self.canonical().clone());
        while let Some(d) = stack.pop() {
            if d.size() * d.size() == ambient {
                found.insert(d.canonical().form().clone(), d);
                continue;
            }
            let mut reps: HashSet<Vec<u32>> = HashSet::new();
            for w in &dual_words {
                let r = d.canonical().reduce(w);
                if r.iter().all(|&x| x == 0) || !reps.insert(r.clone()) {
                    continue;
                }
                if d.generators().iter_rows().any(|g| symp_inner(self.spec(), &r, g) != 0) {
                    continue;
                }
                let next = StabilizerCode::new(d.generators().vstack(&Matrix::from_residue_rows(
                    self.spec(),
                    &[r],
                    2 * self.n(),
                )?)?)?;
                if seen.insert(next.canonical().clone()) {
                    limits.check(seen.len() as u128)?;
                    stack.push(next);
                }
            }
        }
        Ok(found.into_values().collect())
    }
}

/// Weights of the translates `v + C` of one coset, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetWeightTable {
    pub representative: Vec<u32>,
    pub weights: Vec<usize>,
}

impl CosetWeightTable {
    /// `histogram[w]` = number of translates of weight `w`.
    pub fn histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for &w in &self.weights {
            *h.entry(w).or_insert(0) += 1;
        }
        h
    }

    pub fn min_weight(&self) -> Option<usize> {
        self.weights.first().copied()
    }
}
