use std::collections::HashMap;
use std::str::FromStr;

use rayon::prelude::*;

use crate::algebra::RingSpec;
use crate::error::{Error, Result};
use crate::matrix::{all_vectors, canonicalize, general_linear, Matrix};
use crate::Limits;

use super::group::IsometrySubgroup;

/// The two orbit spaces on which `GL_k(F_q)` acts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitAction {
    /// Points of `F_q^k` up to nonzero scalars, acted on from the right.
    Projective,
    /// `k × 2` matrices up to the right `GL_2` action, i.e. their column spans,
    /// acted on from the left.
    PairSpans,
}

impl FromStr for OrbitAction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "O" | "o" => Ok(OrbitAction::Projective),
            "O#" | "o#" => Ok(OrbitAction::PairSpans),
            _ => Err(Error::Malformed(format!("unknown action `{s}` (expected O or O#)"))),
        }
    }
}

/// A point of the orbit space, keyed canonically.
type Key = Matrix;

fn projective_key(spec: RingSpec, x: &[u32]) -> Key {
    canonicalize(&Matrix::from_residue_rows(spec, &[x.to_vec()], x.len()).expect("one row")).into_form()
}

/// Column span of `W` given by its columns as rows.
fn span_key(spec: RingSpec, k: usize, cols: &[Vec<u32>]) -> Key {
    canonicalize(&Matrix::from_residue_rows(spec, cols, k).expect("columns have length k")).into_form()
}

struct OrbitSpace {
    spec: RingSpec,
    k: usize,
    action: OrbitAction,
    /// Representative points, each given as the rows spanning it.
    points: Vec<Vec<Vec<u32>>>,
}

impl OrbitSpace {
    fn new(spec: RingSpec, k: usize, action: OrbitAction, limits: &Limits) -> Result<Self> {
        let q = spec.modulus() as u128;
        let mut seen: HashMap<Key, Vec<Vec<u32>>> = HashMap::new();
        match action {
            OrbitAction::Projective => {
                limits.check(q.pow(k as u32))?;
                for x in all_vectors(spec, k).filter(|x| x.iter().any(|&v| v != 0)) {
                    seen.entry(projective_key(spec, &x)).or_insert_with(|| vec![x]);
                }
            }
            OrbitAction::PairSpans => {
                limits.check(q.pow(2 * k as u32))?;
                for u in all_vectors(spec, k) {
                    for v in all_vectors(spec, k) {
                        let cols = vec![u.clone(), v];
                        seen.entry(span_key(spec, k, &cols)).or_insert(cols);
                    }
                }
            }
        }
        let mut points: Vec<(Key, Vec<Vec<u32>>)> = seen.into_iter().collect();
        points.sort();
        Ok(OrbitSpace { spec, k, action, points: points.into_iter().map(|(_, p)| p).collect() })
    }

    /// Key of `g` applied to a point: `[x·g]` on the right, `[g·W]` on the left.
    fn act(&self, g: &Matrix, point: &[Vec<u32>]) -> Key {
        match self.action {
            OrbitAction::Projective => projective_key(self.spec, &g.left_mul_vec(&point[0])),
            OrbitAction::PairSpans => {
                // The columns of g·W are g·w, i.e. the rows w·gᵀ.
                let gt = g.transpose();
                let moved: Vec<Vec<u32>> = point.iter().map(|w| gt.left_mul_vec(w)).collect();
                span_key(self.spec, self.k, &moved)
            }
        }
    }

    fn key(&self, point: &[Vec<u32>]) -> Key {
        self.act(&Matrix::identity(self.spec, self.k), point)
    }
}

/// `{g ∈ GL_k : g·orb_H(x) = orb_H(x) for every point x}`.
pub fn closure(h: &IsometrySubgroup, action: OrbitAction, limits: &Limits) -> Result<IsometrySubgroup> {
    let spec = h.spec();
    if !spec.is_field() {
        return Err(Error::Unsupported("closures are computed over prime fields".into()));
    }
    let k = h.k();
    let space = OrbitSpace::new(spec, k, action, limits)?;
    // Orbit id of every point key.
    let mut orbit_of: HashMap<Key, usize> = HashMap::new();
    let mut next = 0;
    for p in &space.points {
        let key = space.key(p);
        if orbit_of.contains_key(&key) {
            continue;
        }
        for e in h.elements() {
            orbit_of.insert(space.act(e, p), next);
        }
        next += 1;
    }
    let points: Vec<(usize, &Vec<Vec<u32>>)> = space.points.iter().map(|p| (orbit_of[&space.key(p)], p)).collect();
    let all = general_linear(spec, k, limits)?;
    let kept: Vec<Matrix> = all
        .into_par_iter()
        .filter(|g| points.iter().all(|(o, p)| orbit_of[&space.act(g, p)] == *o))
        .collect();
    IsometrySubgroup::new(spec, k, kept)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> RingSpec {
        RingSpec::prime_field(p).unwrap()
    }

    #[test]
    fn full_group_is_closed() {
        for action in [OrbitAction::Projective, OrbitAction::PairSpans] {
            let all = general_linear(f(2), 3, &Limits::default()).unwrap();
            let g = IsometrySubgroup::new(f(2), 3, all).unwrap();
            assert_eq!(closure(&g, action, &Limits::default()).unwrap().order(), 168);
        }
    }

    #[test]
    fn trivial_group_is_closed_under_projective_action_over_f2() {
        let g = IsometrySubgroup::new(f(2), 3, [Matrix::identity(f(2), 3)]).unwrap();
        assert_eq!(closure(&g, OrbitAction::Projective, &Limits::default()).unwrap().order(), 1);
    }

    #[test]
    fn scalars_join_the_projective_closure_over_f3() {
        // Over F_3 the scalar −I fixes every projective point, so it lies in the
        // closure of the trivial group.
        let g = IsometrySubgroup::new(f(3), 2, [Matrix::identity(f(3), 2)]).unwrap();
        let c = closure(&g, OrbitAction::Projective, &Limits::default()).unwrap();
        assert_eq!(c.order(), 2);
        assert!(c.contains(&Matrix::from_rows(f(3), &[[2, 0], [0, 2]]).unwrap()));
    }

    #[test]
    fn induced_groups_are_closed() {
        let c = crate::stabcode::StabilizerCode::from_rows(
            f(2),
            5,
            &[[0, 1, 1, 1, 1, 0, 0, 0, 0, 0], [1, 0, 1, 0, 0, 0, 0, 0, 1, 1], [1, 0, 0, 0, 1, 0, 1, 1, 0, 0]],
        )
        .unwrap();
        let lim = Limits::default();
        let mon = super::super::rmon_group(&c, super::super::Flavor::Gl, &lim).unwrap().group;
        assert_eq!(closure(&mon, OrbitAction::PairSpans, &lim).unwrap(), mon);
        let symp = super::super::symp_group(&c, &lim).unwrap();
        assert_eq!(closure(&symp, OrbitAction::Projective, &lim).unwrap(), symp);
    }

    #[test]
    fn small_groups_can_grow_under_pair_spans() {
        // Brute-force oracle for the definition, over F_2 with k = 2.
        let s = f(2);
        let lim = Limits::default();
        let all = general_linear(s, 2, &lim).unwrap();
        let swap = Matrix::from_rows(s, &[[0, 1], [1, 0]]).unwrap();
        let h = IsometrySubgroup::new(s, 2, [Matrix::identity(s, 2), swap]).unwrap();
        for action in [OrbitAction::Projective, OrbitAction::PairSpans] {
            let space = OrbitSpace::new(s, 2, action, &lim).unwrap();
            let orbit = |p: &Vec<Vec<u32>>| -> std::collections::BTreeSet<Key> { h.elements().map(|e| space.act(e, p)).collect() };
            let expected: Vec<&Matrix> = all
                .iter()
                .filter(|g| {
                    space.points.iter().all(|p| {
                        let moved: std::collections::BTreeSet<Key> = h.elements().map(|e| space.act(g, &rows_of(&space, &space.act(e, p)))).collect();
                        moved == orbit(p)
                    })
                })
                .collect();
            let got = closure(&h, action, &lim).unwrap();
            assert_eq!(got.elements().collect::<Vec<_>>(), expected);
        }
    }

    fn rows_of(space: &OrbitSpace, key: &Key) -> Vec<Vec<u32>> {
        let rows: Vec<Vec<u32>> = key.row_vecs().into_iter().filter(|r| r.iter().any(|&v| v != 0)).collect();
        if rows.is_empty() {
            vec![vec![0; space.k]]
        } else {
            rows
        }
    }

    #[test]
    fn parses_action_names() {
        assert_eq!("O".parse::<OrbitAction>().unwrap(), OrbitAction::Projective);
        assert_eq!("O#".parse::<OrbitAction>().unwrap(), OrbitAction::PairSpans);
        assert!("P".parse::<OrbitAction>().is_err());
    }
}
