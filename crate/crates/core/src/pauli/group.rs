use std::collections::{HashSet, VecDeque};

use crate::algebra::RingSpec;
use crate::error::{Error, Result};
use crate::matrix::{kernel, solve_left, Matrix};
use crate::stabcode::StabilizerCode;
use crate::Limits;

use super::operator::PauliOperator;

/// An abelian subgroup of the Pauli group meeting the scalars only in the identity.
#[derive(Clone, Debug)]
pub struct StabilizerGroup {
    spec: RingSpec,
    n: usize,
    generators: Vec<PauliOperator>,
    order: u128,
}

impl StabilizerGroup {
    /// Validates commutation and the trivial scalar intersection by enumerating
    /// the generated group.
    pub fn new(spec: RingSpec, n: usize, generators: Vec<PauliOperator>, limits: &Limits) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.spec() != spec || g.n() != n) {
            return Err(Error::Dimension(format!("generator {g} is not an operator on {n} qudits over {spec}")));
        }
        for (i, g) in generators.iter().enumerate() {
            for h in &generators[i + 1..] {
                if !g.commutes(h)? {
                    return Err(Error::Verification(format!("{g} and {h} do not commute")));
                }
            }
        }
        let elements = enumerate(spec, n, &generators, limits)?;
        if let Some(s) = elements.iter().find(|e| e.is_scalar() && !e.is_identity()) {
            return Err(Error::Verification(format!("the group contains the nontrivial scalar {s}")));
        }
        Ok(StabilizerGroup { spec, n, generators, order: elements.len() as u128 })
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[PauliOperator] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    /// All elements, in breadth-first order from the identity.
    pub fn elements(&self, limits: &Limits) -> Result<Vec<PauliOperator>> {
        enumerate(self.spec, self.n, &self.generators, limits)
    }

    /// `Ψ(S)`, the code spanned by the generators' vectors.
    pub fn psi_code(&self) -> Result<StabilizerCode> {
        if self.generators.is_empty() {
            return StabilizerCode::zero(self.spec, self.n);
        }
        let rows: Vec<Vec<u32>> = self.generators.iter().map(PauliOperator::psi).collect();
        StabilizerCode::new(Matrix::from_residue_rows(self.spec, &rows, 2 * self.n)?)
    }

    /// Applies `σ` to every generator.
    pub fn permute(&self, perm: &[usize], limits: &Limits) -> Result<StabilizerGroup> {
        let gens = self.generators.iter().map(|g| g.permute(perm)).collect::<Result<Vec<_>>>()?;
        StabilizerGroup::new(self.spec, self.n, gens, limits)
    }

    /// Same set of operators, compared by enumeration.
    pub fn same_group(&self, other: &StabilizerGroup, limits: &Limits) -> Result<bool> {
        if self.order != other.order || self.spec != other.spec || self.n != other.n {
            return Ok(false);
        }
        let mine: HashSet<PauliOperator> = self.elements(limits)?.into_iter().collect();
        Ok(other.generators.iter().all(|g| mine.contains(g)))
    }
}

fn enumerate(spec: RingSpec, n: usize, gens: &[PauliOperator], limits: &Limits) -> Result<Vec<PauliOperator>> {
    let id = PauliOperator::identity(spec, n);
    let mut seen = HashSet::from([id.clone()]);
    let mut order = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.mul(g)?;
            if seen.insert(y.clone()) {
                limits.check(seen.len() as u128)?;
                order.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(order)
}

/// One generator per row `(a|b)` of the generator matrix. Odd moduli use
/// `X(a)Z(b)`; even moduli use `ω^{a·b} X(a)Z(b)` with the integer dot product of
/// the canonical lifts, which makes every generator's `d`-th power the identity.
///
/// When the rows satisfy relations (non-free codes over `Z/d`), a relation can
/// multiply out to a nontrivial scalar. Each generator is then rescaled by a
/// `d`-th root of unity `ω^{(c̄/d)u_i}`, with `u` solving `Σ x_i u_i = −s(x)` over
/// `Z/d` for every relation `x`, where `ω^{(c̄/d)s(x)}` is the scalar it produces.
pub fn code_to_stabilizer(code: &StabilizerCode, limits: &Limits) -> Result<StabilizerGroup> {
    if !code.is_self_orthogonal() {
        return Err(Error::NotSelfOrthogonal);
    }
    let spec = code.spec();
    let n = code.n();
    let even = spec.modulus() % 2 == 0;
    let gens = code
        .generators()
        .iter_rows()
        .map(|row| {
            let phase = if even {
                let lift: u64 = row[..n].iter().zip(&row[n..]).map(|(&x, &z)| x as u64 * z as u64).sum();
                (lift % spec.phase_order() as u64) as u32
            } else {
                0
            };
            PauliOperator::from_vector(spec, phase, row)
        })
        .collect::<Result<Vec<_>>>()?;
    let gens = cancel_relation_scalars(code.generators(), gens)?;
    StabilizerGroup::new(spec, n, gens, limits)
}

fn cancel_relation_scalars(g: &Matrix, gens: Vec<PauliOperator>) -> Result<Vec<PauliOperator>> {
    let spec = g.spec();
    let relations = kernel(g);
    if relations.is_zero() {
        return Ok(gens);
    }
    let n = g.cols() / 2;
    let step = spec.phase_order() / spec.modulus();
    let mut targets = Vec::with_capacity(relations.rows());
    for x in relations.iter_rows() {
        let mut prod = PauliOperator::identity(spec, n);
        for (gi, &xi) in gens.iter().zip(x) {
            prod = prod.mul(&gi.pow(xi as u64))?;
        }
        debug_assert!(prod.is_scalar());
        if prod.phase_exp() % step != 0 {
            return Err(Error::Verification(format!("relation scalar {prod} has order exceeding d")));
        }
        targets.push(spec.neg(prod.phase_exp() / step));
    }
    let u = solve_left(&relations.transpose(), &targets)
        .ok_or_else(|| Error::Verification("no phase correction cancels the relation scalars".into()))?;
    Ok(gens
        .into_iter()
        .zip(u)
        .map(|(gi, ui)| gi.mul(&PauliOperator::scalar(spec, n, ui * step)).expect("same shape"))
        .collect())
}
