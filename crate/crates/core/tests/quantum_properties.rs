use proptest::prelude::*;
use sympiso::algebra::RingSpec;
use sympiso::isometry::{Flavor, MonomialMap};
use sympiso::matrix::{sl2, CycMatrix};
use sympiso::pauli::{code_to_stabilizer, PauliOperator, StabilizerGroup};
use sympiso::quantum::{clifford_of_monomial, projector, rank_profile, stabilizer_state_basis, StateBasis};
use sympiso::stabcode::StabilizerCode;
use sympiso::Limits;

/// Graph-type generators `(e_i | A_i)` for the chosen rows of a symmetric `A`,
/// with signs randomized by conjugating with a Pauli.
fn graph_stabilizer(d: u32, n: usize, upper: &[u32], rows: &[bool], shift: &[u32]) -> StabilizerGroup {
    let spec = RingSpec::modular(d).unwrap();
    let mut adj = vec![vec![0i64; n]; n];
    let mut it = upper.iter();
    for i in 0..n {
        for j in i + 1..n {
            let v = (*it.next().unwrap() % d) as i64;
            adj[i][j] = v;
            adj[j][i] = v;
        }
    }
    let chosen: Vec<Vec<i64>> = (0..n)
        .filter(|&i| rows[i])
        .map(|i| (0..n).map(|j| i64::from(i == j)).chain(adj[i].iter().copied()).collect())
        .collect();
    let lim = Limits::default();
    let code = if chosen.is_empty() {
        StabilizerCode::zero(spec, n).unwrap()
    } else {
        StabilizerCode::from_rows(spec, n, &chosen).unwrap()
    };
    let s = code_to_stabilizer(&code, &lim).unwrap();
    let p = PauliOperator::from_vector(spec, 0, &shift.iter().map(|x| x % d).collect::<Vec<_>>()).unwrap();
    let gens = s.generators().iter().map(|g| p.mul(g).unwrap().mul(&p.inverse()).unwrap()).collect();
    StabilizerGroup::new(spec, n, gens, &lim).unwrap()
}

fn setup() -> impl Strategy<Value = (u32, usize, Vec<u32>, Vec<bool>, Vec<u32>, Vec<usize>)> {
    (prop_oneof![Just(2u32), Just(3u32)], 1usize..=3).prop_flat_map(|(d, n)| {
        (
            Just(d),
            Just(n),
            prop::collection::vec(0u32..d, n * (n - 1) / 2),
            prop::collection::vec(any::<bool>(), n),
            prop::collection::vec(0u32..d, 2 * n),
            prop::collection::vec(0usize..24, n),
        )
    })
}

fn local_map(d: u32, picks: &[usize]) -> MonomialMap {
    let group = sl2(RingSpec::modular(d).unwrap());
    let blocks = picks.iter().map(|&i| group[i % group.len()].clone()).collect();
    MonomialMap::new(blocks, (0..picks.len()).collect(), Flavor::Sl).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn projector_is_an_orthogonal_projection((d, n, upper, rows, shift, _) in setup()) {
        let s = graph_stabilizer(d, n, &upper, &rows, &shift);
        let pi = projector(&s, &Limits::default()).unwrap();
        prop_assert_eq!(pi.mul(&pi), pi.clone());
        prop_assert_eq!(pi.adjoint(), pi.clone());
        let k = rows.iter().filter(|&&r| r).count();
        prop_assert_eq!(pi.rank(), (d as usize).pow((n - k) as u32));
    }

    #[test]
    fn local_cliffords_move_code_spaces((d, n, upper, rows, shift, picks) in setup()) {
        let lim = Limits::default();
        let s = graph_stabilizer(d, n, &upper, &rows, &shift);
        let lc = clifford_of_monomial(&local_map(d, &picks)).unwrap();
        let u = lc.unitary(&lim).unwrap();
        let moved_gens = s.generators().iter().map(|g| lc.conjugate(g).unwrap()).collect();
        let moved = StabilizerGroup::new(s.spec(), n, moved_gens, &lim).unwrap();
        let before = stabilizer_state_basis(&s, &lim).unwrap();
        let cols: Vec<_> = (0..before.dim()).map(|c| u.apply(&before.column(c))).collect();
        let image = StateBasis { spec: s.spec(), n, columns: CycMatrix::from_columns(&cols) };
        prop_assert!(image.same_span(&stabilizer_state_basis(&moved, &lim).unwrap()));
    }

    #[test]
    fn rank_profile_is_local_clifford_invariant((d, n, upper, _rows, shift, picks) in setup()) {
        let lim = Limits::default();
        let s = graph_stabilizer(d, n, &upper, &vec![true; n], &shift);
        let psi = stabilizer_state_basis(&s, &lim).unwrap().state_vector().unwrap();
        let u = clifford_of_monomial(&local_map(d, &picks)).unwrap().unitary(&lim).unwrap();
        let mut phi = psi.clone();
        phi.entries = u.apply(&psi.entries);
        let a = rank_profile(&psi).unwrap();
        let b = rank_profile(&phi).unwrap();
        prop_assert_eq!(a.ranks, b.ranks);
    }

    #[test]
    fn local_cliffords_preserve_weight((d, _n, _upper, _rows, shift, picks) in setup(), phase in 0u32..4) {
        let spec = RingSpec::modular(d).unwrap();
        let p = PauliOperator::from_vector(spec, phase % spec.phase_order(), &shift).unwrap();
        let lc = clifford_of_monomial(&local_map(d, &picks)).unwrap();
        prop_assert_eq!(lc.conjugate(&p).unwrap().weight(), p.weight());
    }
}
