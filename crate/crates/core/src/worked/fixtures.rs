//! Generator matrices, maps and expected values of the worked examples.
//!
//! Rows marked "interleaved" are written `(a_1,b_1 | … | a_n,b_n)`; the others
//! are in the `(a | b)` layout.

/// Interleaved, `n = 4`.
pub const NONEX1_N1: [[i64; 8]; 4] = [
    [1, 0, 0, 1, 1, 0, 1, 0],
    [0, 1, 1, 0, 0, 0, 1, 0],
    [0, 1, 0, 0, 0, 1, 0, 0],
    [0, 1, 0, 1, 0, 0, 0, 1],
];

/// Interleaved, `n = 4`.
pub const NONEX1_N2: [[i64; 8]; 4] = [
    [1, 1, 1, 0, 1, 1, 0, 1],
    [0, 1, 0, 1, 0, 0, 0, 1],
    [0, 0, 1, 1, 0, 0, 1, 1],
    [0, 0, 0, 1, 0, 1, 0, 1],
];

pub const EEX2_G: [[i64; 10]; 3] = [
    [0, 1, 1, 1, 1, 0, 0, 0, 0, 0],
    [1, 0, 1, 0, 0, 0, 0, 0, 1, 1],
    [1, 0, 0, 0, 1, 0, 1, 1, 0, 0],
];
pub const EEX2_SYMP_ORDER: usize = 168;
pub const EEX2_RMON_SL_ORDER: usize = 8;

/// Interleaved, `n = 4`.
pub const EXT2_G: [[i64; 8]; 3] = [
    [1, 0, 0, 0, 0, 0, 1, 1],
    [0, 0, 1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 1, 0, 1, 0],
];

/// Interleaved generators of `C^⊥`; rows 4 and 5 complete `G`.
pub const EXT2_H: [[i64; 8]; 5] = [
    [1, 0, 0, 0, 0, 0, 1, 1],
    [0, 0, 1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 1, 0, 1, 0],
    [0, 1, 0, 0, 0, 0, 1, 0],
    [0, 1, 0, 0, 0, 1, 0, 1],
];

/// Interleaved images of the rows of `G` under `f`.
pub const EXT2_F: [[i64; 8]; 3] = [
    [1, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 1, 0, 0, 0, 0],
    [0, 1, 0, 0, 1, 0, 0, 1],
];

/// Interleaved generators of `f(C)^⊥`.
pub const EXT2_H_TILDE: [[i64; 8]; 5] = [
    [1, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 1, 0, 0, 0, 0],
    [0, 1, 0, 0, 1, 0, 0, 1],
    [0, 1, 0, 0, 0, 0, 0, 1],
    [1, 0, 0, 0, 0, 1, 0, 0],
];

/// Weights of `v + c` for the cosets `h_4`, `h_5`, `h_4 + h_5` of `C`; the first
/// entry is `c = 0`, then the nonzero codewords in table order.
pub const COSET_WEIGHTS_C: [[usize; 8]; 3] = [[2, 2, 3, 1, 3, 2, 3, 4], [3, 3, 4, 2, 4, 3, 2, 3], [2, 2, 3, 3, 3, 4, 3, 4]];

/// The same for `f(C)` with `h̃_4`, `h̃_5`, `h̃_4 + h̃_5`.
pub const COSET_WEIGHTS_FC: [[usize; 8]; 3] = [[2, 2, 3, 1, 3, 2, 3, 4], [2, 2, 3, 3, 3, 4, 3, 4], [2, 3, 3, 3, 4, 4, 2, 3]];

pub const EX11_G: [[i64; 6]; 3] = [[1, 0, 1, 0, 1, 0], [0, 1, 1, 1, 0, 0], [0, 0, 0, 1, 1, 1]];
pub const EX11_G_PRIME: [[i64; 6]; 3] = [[1, 0, 1, 1, 1, 1], [1, 0, 0, 0, 1, 1], [1, 1, 0, 1, 0, 1]];
pub const EX11_MAP: &str = "1 0 1 1\n0 1 1 0\n1 1 0 1\nperm: 2 3 1\n";
pub const EX11_S: [&str; 3] = ["XZX", "ZXX", "ZZZ"];
pub const EX11_S_PRIME: [&str; 3] = ["YZY", "XZZ", "YXZ"];
pub const EX11_SIGMA_S: [&str; 3] = ["ZXX", "XXZ", "ZZZ"];
/// `(re, im)` pairs.
pub const EX11_V: [(i64, i64); 8] = [(1, 0), (0, 0), (0, 0), (-1, 0), (0, 0), (1, 0), (1, 0), (0, 0)];
pub const EX11_V_PRIME: [(i64, i64); 8] = [(1, 0), (1, 0), (0, -1), (0, 1), (1, 0), (-1, 0), (0, -1), (0, -1)];
pub const EX11_V_SIGMA: [(i64, i64); 8] = [(1, 0), (0, 0), (0, 0), (1, 0), (0, 0), (-1, 0), (1, 0), (0, 0)];

pub const LCP_G: [[i64; 8]; 4] = [
    [1, 0, 1, 1, 0, 1, 0, 0],
    [0, 1, 0, 1, 1, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 1, 0],
    [0, 0, 0, 0, 1, 1, 0, 1],
];
pub const LCP_G_PRIME: [[i64; 8]; 4] = [
    [1, 1, 1, 1, 1, 0, 0, 1],
    [0, 0, 1, 1, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 1],
    [0, 0, 1, 1, 1, 0, 0, 0],
];
pub const LCP_S: [&str; 4] = ["XZXX", "ZXIX", "ZIZI", "ZZIZ"];
pub const LCP_S_PRIME: [&str; 4] = ["YXXY", "IZXX", "IIZZ", "ZIXX"];
pub const LCP_PSI: [i64; 16] = [1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0];
pub const LCP_PSI_PRIME: [i64; 16] = [1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1];
pub const LCP_CUT: [usize; 2] = [0, 1];
pub const LCP_RANKS: (usize, usize) = (4, 2);
pub const LCP_VERDICT: &str = "not-LU-equivalent, bipartition {1,2}|{3,4}, ranks 4 vs 2";
