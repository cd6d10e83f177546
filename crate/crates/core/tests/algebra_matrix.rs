mod oracle;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use sympiso::algebra::{Cyclotomic, RingSpec};
use sympiso::matrix::{canonicalize, inverse, kernel, Matrix};

use oracle::Word;

fn matrix_over() -> impl Strategy<Value = (u32, usize, usize, Vec<u32>)> {
    (2u32..=12, 1usize..=3, 1usize..=3).prop_flat_map(|(m, r, c)| (Just(m), Just(r), Just(c), prop::collection::vec(0u32..m, r * c)))
}

fn build(m: u32, r: usize, c: usize, data: Vec<u32>) -> Matrix {
    Matrix::new(RingSpec::modular(m).unwrap(), r, c, data).unwrap()
}

fn cyclotomic(m: u32, coeffs: &[i64]) -> Cyclotomic {
    Cyclotomic::from_power_coeffs(m, coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn howell_form_describes_the_row_span((m, r, c, data) in matrix_over()) {
        let a = build(m, r, c, data);
        let rows: Vec<Word> = a.row_vecs();
        let want = oracle::span(m, &rows);
        let form = canonicalize(&a);
        let got: BTreeSet<Word> = form.span_iter().collect();
        prop_assert_eq!(&got, &want);
        prop_assert_eq!(form.span_size(), want.len() as u128);
        for v in oracle::tuples(m, c) {
            prop_assert_eq!(form.contains(&v), want.contains(&v));
        }
    }

    #[test]
    fn howell_form_is_unique((m, r, c, data) in matrix_over(), mix in prop::collection::vec(0u32..12, 9), swap in any::<bool>()) {
        let a = build(m, r, c, data);
        let spec = a.spec();
        // Rows of `a` followed by `r` random combinations of them.
        let mut rows = a.row_vecs();
        for i in 0..r {
            let coeffs: Vec<u32> = (0..r).map(|j| mix[(3 * i + j) % 9] % m).collect();
            rows.push(oracle::combine(m, &coeffs, &a.row_vecs()));
        }
        if swap {
            rows.reverse();
        }
        let b = Matrix::from_residue_rows(spec, &rows, c).unwrap();
        prop_assert_eq!(canonicalize(&a).into_form(), canonicalize(&b).into_form());
    }

    #[test]
    fn kernel_is_the_left_null_space((m, r, c, data) in matrix_over()) {
        let a = build(m, r, c, data);
        let k = kernel(&a);
        let want: BTreeSet<Word> = oracle::tuples(m, r).into_iter().filter(|x| a.left_mul_vec(x).iter().all(|&v| v == 0)).collect();
        let got: BTreeSet<Word> = if k.rows() == 0 { [vec![0; r]].into() } else { oracle::span(m, &k.row_vecs()) };
        prop_assert_eq!(got, want);
    }

    #[test]
    fn inverses_are_two_sided((m, _r, c, data) in matrix_over()) {
        let square = build(m, c, c, data.iter().cycle().take(c * c).copied().collect());
        match inverse(&square) {
            Ok(inv) => {
                prop_assert_eq!(square.mul(&inv).unwrap(), Matrix::identity(square.spec(), c));
                prop_assert_eq!(inv.mul(&square).unwrap(), Matrix::identity(square.spec(), c));
            }
            Err(_) => prop_assert!(canonicalize(&square).span_size() < (m as u128).pow(c as u32)),
        }
    }

    #[test]
    fn cyclotomic_arithmetic_is_a_field(
        m in prop::sample::select(vec![3u32, 4, 8, 12, 20]),
        a in prop::collection::vec(-4i64..=4, 20),
        b in prop::collection::vec(-4i64..=4, 20),
        c in prop::collection::vec(-4i64..=4, 20),
    ) {
        let (x, y, z) = (cyclotomic(m, &a[..m as usize]), cyclotomic(m, &b[..m as usize]), cyclotomic(m, &c[..m as usize]));
        prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
        prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x.clone() * z.clone());
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!((x.clone() * y.clone()).conj(), x.conj() * y.conj());
        if !x.is_zero() {
            prop_assert!((x.clone() * x.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn roots_of_unity_have_their_order(m in prop::sample::select(vec![3u32, 4, 5, 8, 12, 20, 24]), k in 0i64..24) {
        let w = Cyclotomic::root(m, k);
        prop_assert!(w.pow(m).is_one());
        prop_assert_eq!(w.clone() * w.conj(), Cyclotomic::one(m));
        prop_assert_eq!(w.embed(2 * m), Cyclotomic::root(2 * m, 2 * k));
    }
}
