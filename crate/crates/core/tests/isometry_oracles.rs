mod oracle;

use std::collections::BTreeSet;

use proptest::prelude::*;
use sympiso::algebra::RingSpec;
use sympiso::isometry::{rmon_group, rmon_group_exhaustive, symp_group, Flavor, IsometrySubgroup};
use sympiso::matrix::Matrix;
use sympiso::pauli::code_to_stabilizer;
use sympiso::stabcode::StabilizerCode;
use sympiso::Limits;

use oracle::Word;

/// `(p, n, rows)` with few enough random rows over `F_p` that `GL_k` stays small.
fn small_code() -> impl Strategy<Value = (u32, usize, Vec<Word>)> {
    prop_oneof![(Just(2u32), 1usize..=4, Just(4usize)), (Just(3u32), 1usize..=2, Just(3usize))].prop_flat_map(|(p, n, most)| {
        let row = prop::collection::vec(0u32..p, 2 * n);
        (Just(p), Just(n), prop::collection::vec(row, 1..=most.min(2 * n)))
    })
}

fn build(p: u32, n: usize, rows: &[Word]) -> Option<StabilizerCode> {
    let code = StabilizerCode::new(Matrix::from_residue_rows(RingSpec::prime_field(p).unwrap(), rows, 2 * n).unwrap()).unwrap();
    (code.k() > 0).then_some(code)
}

/// The group as the set of generator-image tuples `B·G`.
fn as_images(group: &IsometrySubgroup, code: &StabilizerCode) -> BTreeSet<Vec<Word>> {
    group.elements().map(|b| b.mul(code.generators()).unwrap().row_vecs()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn symp_group_matches_brute_force((p, n, rows) in small_code()) {
        let Some(code) = build(p, n, &rows) else { return Ok(()) };
        let g = code.generators().row_vecs();
        let group = symp_group(&code, &Limits::default()).unwrap();
        prop_assert!(group.verify_axioms());
        prop_assert_eq!(as_images(&group, &code), oracle::symplectic_isometries(p, &g, &g));
    }

    #[test]
    fn rmon_groups_match_brute_force((p, n, rows) in small_code(), sl in any::<bool>()) {
        let Some(code) = build(p, n, &rows) else { return Ok(()) };
        let g = code.generators().row_vecs();
        let flavor = if sl { Flavor::Sl } else { Flavor::Gl };
        let lim = Limits::default();
        let fast = rmon_group(&code, flavor, &lim).unwrap();
        let census = oracle::monomial_census(p, n, &g, &g, sl);
        prop_assert_eq!(as_images(&fast.group, &code), census.induced);
        prop_assert_eq!(fast.map_count, census.maps_matching as u128);
        let slow = rmon_group_exhaustive(&code, flavor, &lim).unwrap();
        prop_assert_eq!(slow.group.element_set(), fast.group.element_set());
        if sl {
            prop_assert!(fast.group.is_subgroup_of(&symp_group(&code, &lim).unwrap()));
        }
    }

    #[test]
    fn dual_matches_brute_force((p, n, rows) in small_code()) {
        let Some(code) = build(p, n, &rows) else { return Ok(()) };
        let words: BTreeSet<Word> = code.dual().codewords().collect();
        prop_assert_eq!(words, oracle::dual(p, n, &rows));
        prop_assert_eq!(code.is_self_orthogonal(), rows.iter().all(|u| rows.iter().all(|v| oracle::symp(p, u, v) == 0)));
    }

    #[test]
    fn stabilizer_generators_map_back_to_the_code((p, n, rows) in small_code()) {
        let Some(code) = build(p, n, &rows) else { return Ok(()) };
        prop_assume!(code.is_self_orthogonal());
        let s = code_to_stabilizer(&code, &Limits::default()).unwrap();
        prop_assert_eq!(s.psi_code().unwrap(), code);
        for a in s.generators() {
            prop_assert_eq!(a.pow(p as u64).is_identity(), true);
            for b in s.generators() {
                prop_assert!(a.commutes(b).unwrap());
            }
        }
    }
}
