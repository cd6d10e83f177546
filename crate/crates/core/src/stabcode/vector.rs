//! Vectors of `R^{2n}` written `(a | b)`, and the interleaving `γ` into `(R^2)^n`.

use crate::algebra::RingSpec;

/// `⟨(a,b),(a',b')⟩ = b·a' − b'·a`.
pub fn symp_inner(spec: RingSpec, u: &[u32], v: &[u32]) -> u32 {
    assert_eq!(u.len(), v.len(), "symplectic vectors must have equal length");
    assert!(u.len() % 2 == 0, "symplectic vectors have even length");
    let n = u.len() / 2;
    let (a, b) = u.split_at(n);
    let (a2, b2) = v.split_at(n);
    spec.sub(spec.dot(b, a2), spec.dot(b2, a))
}

/// Number of slots `i` with `(a_i, b_i) ≠ (0, 0)`.
pub fn symp_weight(v: &[u32]) -> usize {
    let n = v.len() / 2;
    (0..n).filter(|&i| v[i] != 0 || v[n + i] != 0).count()
}

/// `(a_1..a_n | b_1..b_n) ↦ (a_1,b_1 | … | a_n,b_n)`.
pub fn gamma(v: &[u32]) -> Vec<u32> {
    let n = v.len() / 2;
    (0..n).flat_map(|i| [v[i], v[n + i]]).collect()
}

pub fn gamma_inv(x: &[u32]) -> Vec<u32> {
    let n = x.len() / 2;
    (0..n).map(|i| x[2 * i]).chain((0..n).map(|i| x[2 * i + 1])).collect()
}

/// Hamming weight over the pair alphabet `R^2`.
pub fn pair_hamming_weight(x: &[u32]) -> usize {
    x.chunks(2).filter(|p| p.iter().any(|&e| e != 0)).count()
}

/// Column `j` of `γ(G)` is column `gamma_columns(n)[j]` of `G`.
pub fn gamma_columns(n: usize) -> Vec<usize> {
    (0..n).flat_map(|i| [i, n + i]).collect()
}

pub fn gamma_inv_columns(n: usize) -> Vec<usize> {
    (0..n).map(|i| 2 * i).chain((0..n).map(|i| 2 * i + 1)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f2() -> RingSpec {
        RingSpec::prime_field(2).unwrap()
    }

    #[test]
    fn sign_convention_on_f2() {
        assert_eq!(symp_inner(f2(), &[1, 0], &[0, 1]), 1);
        let f3 = RingSpec::prime_field(3).unwrap();
        // b·a' − b'·a = 0·0 − 1·1 = −1
        assert_eq!(symp_inner(f3, &[1, 0], &[0, 1]), 2);
    }

    #[test]
    fn weights() {
        assert_eq!(symp_weight(&[0; 8]), 0);
        assert_eq!(symp_weight(&[1, 0, 1, 1, 0, 1, 0, 0]), 4);
    }

    #[test]
    fn gamma_interleaves() {
        assert_eq!(gamma(&[1, 2, 3, 4]), vec![1, 3, 2, 4]);
        assert_eq!(gamma_inv(&[1, 3, 2, 4]), vec![1, 2, 3, 4]);
        let v = [5, 6, 7, 8, 9, 10];
        let cols = gamma_columns(3);
        assert_eq!(cols.iter().map(|&c| v[c]).collect::<Vec<_>>(), gamma(&v));
        let x = gamma(&v);
        let back = gamma_inv_columns(3);
        assert_eq!(back.iter().map(|&c| x[c]).collect::<Vec<_>>(), v.to_vec());
    }

    #[test]
    fn gamma_is_a_weight_isometry_exhaustive() {
        for d in 2..=3u32 {
            for n in 1..=3usize {
                let total = (d as usize).pow(2 * n as u32);
                for idx in 0..total {
                    let mut v = vec![0u32; 2 * n];
                    let mut r = idx;
                    for x in v.iter_mut() {
                        *x = (r % d as usize) as u32;
                        r /= d as usize;
                    }
                    assert_eq!(pair_hamming_weight(&gamma(&v)), symp_weight(&v));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn gamma_round_trip(half in proptest::collection::vec((0u32..7, 0u32..7), 0..6usize)) {
            let v: Vec<u32> = half.iter().map(|p| p.0).chain(half.iter().map(|p| p.1)).collect();
            prop_assert_eq!(gamma_inv(&gamma(&v)), v);
        }

        #[test]
        fn inner_is_alternating(d in 2u32..10, half in proptest::collection::vec((0u32..100, 0u32..100), 1..5usize)) {
            let spec = RingSpec::modular(d).unwrap();
            let v: Vec<u32> = half.iter().map(|p| p.0 % d).chain(half.iter().map(|p| p.1 % d)).collect();
            prop_assert_eq!(symp_inner(spec, &v, &v), 0);
        }
    }
}
