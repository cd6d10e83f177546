use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::Serialize;

use crate::algebra::RingSpec;
use crate::error::{Error, Result};
use crate::matrix::{Matrix, MatrixRepr};

/// A finite subgroup of `GL_k(F_q)`, stored as a sorted set of matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsometrySubgroup {
    spec: RingSpec,
    k: usize,
    elements: BTreeSet<Matrix>,
    generators: Vec<Matrix>,
}

impl IsometrySubgroup {
    /// Checks the group axioms while extracting a small generating set: elements
    /// are adjoined as generators until the generated group is the whole set.
    pub fn new(spec: RingSpec, k: usize, elements: impl IntoIterator<Item = Matrix>) -> Result<Self> {
        let elements: BTreeSet<Matrix> = elements.into_iter().collect();
        let identity = Matrix::identity(spec, k);
        if !elements.contains(&identity) {
            return Err(Error::Verification("the set does not contain the identity".into()));
        }
        if let Some(bad) = elements.iter().find(|m| m.rows() != k || m.cols() != k || m.spec() != spec) {
            return Err(Error::Dimension(format!("element of shape {}x{} in a group of degree {k}", bad.rows(), bad.cols())));
        }
        let mut generators: Vec<Matrix> = Vec::new();
        let mut generated: HashSet<Matrix> = HashSet::from([identity]);
        for m in &elements {
            if generated.contains(m) {
                continue;
            }
            generators.push(m.clone());
            generated = closure_of(&generators, &elements)?;
        }
        if generated.len() != elements.len() {
            return Err(Error::Verification("the set is not closed under multiplication".into()));
        }
        Ok(IsometrySubgroup { spec, k, elements, generators })
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = &Matrix> {
        self.elements.iter()
    }

    pub fn element_set(&self) -> &BTreeSet<Matrix> {
        &self.elements
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.elements.contains(m)
    }

    pub fn is_subgroup_of(&self, other: &IsometrySubgroup) -> bool {
        self.elements.is_subset(&other.elements)
    }

    /// Exhaustive group-axiom check: products and inverses of all pairs.
    pub fn verify_axioms(&self) -> bool {
        let id = Matrix::identity(self.spec, self.k);
        if !self.elements.contains(&id) {
            return false;
        }
        self.elements.iter().all(|a| {
            let has_inverse = self.elements.iter().any(|b| a.mul(b).map(|p| p == id).unwrap_or(false));
            has_inverse && self.elements.iter().all(|b| a.mul(b).map(|p| self.elements.contains(&p)).unwrap_or(false))
        })
    }

    pub fn report(&self, include_elements: bool) -> GroupReport {
        GroupReport {
            ring: self.spec.to_string(),
            k: self.k,
            order: self.order(),
            generators: self.generators.iter().map(MatrixRepr::from).collect(),
            elements: include_elements.then(|| self.elements.iter().map(MatrixRepr::from).collect()),
        }
    }
}

/// The group generated by `gens`, failing as soon as it leaves `within`.
fn closure_of(gens: &[Matrix], within: &BTreeSet<Matrix>) -> Result<HashSet<Matrix>> {
    let spec = gens[0].spec();
    let id = Matrix::identity(spec, gens[0].rows());
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.mul(g)?;
            if !within.contains(&y) {
                return Err(Error::Verification("the set is not closed under multiplication".into()));
            }
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupReport {
    pub ring: String,
    pub k: usize,
    pub order: usize,
    pub generators: Vec<MatrixRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<MatrixRepr>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::general_linear;
    use crate::Limits;

    fn f2() -> RingSpec {
        RingSpec::prime_field(2).unwrap()
    }

    #[test]
    fn gl3_is_a_group() {
        let all = general_linear(f2(), 3, &Limits::default()).unwrap();
        let g = IsometrySubgroup::new(f2(), 3, all).unwrap();
        assert_eq!(g.order(), 168);
        assert!(g.generators().len() <= 4);
        assert!(g.verify_axioms());
    }

    #[test]
    fn trivial_group() {
        let g = IsometrySubgroup::new(f2(), 0, [Matrix::identity(f2(), 0)]).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.generators().is_empty());
    }

    #[test]
    fn rejects_non_groups() {
        let s = f2();
        let swap = Matrix::from_rows(s, &[[0, 1], [1, 0]]).unwrap();
        let shear = Matrix::from_rows(s, &[[1, 1], [0, 1]]).unwrap();
        assert!(IsometrySubgroup::new(s, 2, [swap.clone()]).is_err());
        assert!(IsometrySubgroup::new(s, 2, [Matrix::identity(s, 2), swap, shear]).is_err());
    }
}
