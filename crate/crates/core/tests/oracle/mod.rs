//! Brute-force reference computations over `Z/m`, written without the library.
//!
//! Vectors of `R^{2n}` are in the `(a | b)` layout; slot `i` is `(a_i, b_i)`.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

pub type Word = Vec<u32>;

pub fn to_words<R: AsRef<[i64]>>(m: u32, rows: &[R]) -> Vec<Word> {
    rows.iter().map(|r| r.as_ref().iter().map(|&x| x.rem_euclid(m as i64) as u32).collect()).collect()
}

/// `(a_1,b_1,…,a_n,b_n)` to `(a | b)`.
pub fn deinterleave(v: &[u32]) -> Word {
    let n = v.len() / 2;
    (0..n).map(|i| v[2 * i]).chain((0..n).map(|i| v[2 * i + 1])).collect()
}

pub fn symp(m: u32, u: &[u32], v: &[u32]) -> u32 {
    let n = u.len() / 2;
    let s: i64 = (0..n).map(|i| u[n + i] as i64 * v[i] as i64 - v[n + i] as i64 * u[i] as i64).sum();
    s.rem_euclid(m as i64) as u32
}

pub fn weight(v: &[u32]) -> usize {
    let n = v.len() / 2;
    (0..n).filter(|&i| v[i] != 0 || v[n + i] != 0).count()
}

/// All of `Z_m^len` in lexicographic order.
pub fn tuples(m: u32, len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out.into_iter().flat_map(|v: Word| (0..m).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out
}

pub fn combine(m: u32, x: &[u32], rows: &[Word]) -> Word {
    let len = rows.first().map_or(0, |r| r.len());
    (0..len).map(|j| x.iter().zip(rows).map(|(&c, r)| c * r[j]).sum::<u32>() % m).collect()
}

/// Every codeword `x·G`, listed once per `x`.
pub fn images(m: u32, rows: &[Word]) -> Vec<Word> {
    tuples(m, rows.len()).iter().map(|x| combine(m, x, rows)).collect()
}

pub fn span(m: u32, rows: &[Word]) -> BTreeSet<Word> {
    images(m, rows).into_iter().collect()
}

pub fn dual(m: u32, n: usize, rows: &[Word]) -> BTreeSet<Word> {
    tuples(m, 2 * n).into_iter().filter(|v| rows.iter().all(|r| symp(m, v, r) == 0)).collect()
}

pub fn det2(m: u32, a: [u32; 4]) -> u32 {
    ((a[0] * a[3]) as i64 - (a[1] * a[2]) as i64).rem_euclid(m as i64) as u32
}

pub fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// 2×2 blocks `[[p, q], [r, s]]` stored as `[p, q, r, s]`.
pub fn blocks(m: u32, sl: bool) -> Vec<[u32; 4]> {
    tuples(m, 4)
        .into_iter()
        .map(|v| [v[0], v[1], v[2], v[3]])
        .filter(|a| {
            let d = det2(m, *a);
            if sl { d == 1 } else { gcd(d, m) == 1 }
        })
        .collect()
}

pub fn perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in perms(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// `y_i = x_{σ(i)}·A_i` with `x_i = (a_i, b_i)` a row vector.
pub fn apply_monomial(m: u32, sigma: &[usize], a: &[[u32; 4]], v: &[u32]) -> Word {
    let n = sigma.len();
    let mut out = vec![0; 2 * n];
    for i in 0..n {
        let (x, z) = (v[sigma[i]], v[n + sigma[i]]);
        let b = a[i];
        out[i] = (x * b[0] + z * b[2]) % m;
        out[n + i] = (x * b[1] + z * b[3]) % m;
    }
    out
}

/// Every choice of one block per slot.
pub fn block_choices(all: &[[u32; 4]], n: usize) -> Vec<Vec<[u32; 4]>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|v: Vec<[u32; 4]>| all.iter().map(move |b| [v.clone(), vec![*b]].concat())).collect();
    }
    out
}

pub struct MonomialCensus {
    pub maps_total: usize,
    /// Maps sending every generator of the source into the target.
    pub maps_matching: usize,
    /// Distinct tuples of generator images among those maps.
    pub induced: BTreeSet<Vec<Word>>,
}

pub fn monomial_census(m: u32, n: usize, source: &[Word], target: &[Word], sl: bool) -> MonomialCensus {
    let target: HashSet<Word> = span(m, target).into_iter().collect();
    let choices = block_choices(&blocks(m, sl), n);
    let mut census = MonomialCensus { maps_total: 0, maps_matching: 0, induced: BTreeSet::new() };
    for sigma in perms(n) {
        for a in &choices {
            census.maps_total += 1;
            let imgs: Vec<Word> = source.iter().map(|g| apply_monomial(m, &sigma, a, g)).collect();
            if imgs.iter().all(|v| target.contains(v)) {
                census.maps_matching += 1;
                census.induced.insert(imgs);
            }
        }
    }
    census
}

/// Tuples of generator images defining a linear bijection `source → target`
/// that preserves symplectic weight and the form. Assumes both codes are free
/// of rank `source.len()`.
pub fn symplectic_isometries(m: u32, source: &[Word], target: &[Word]) -> BTreeSet<Vec<Word>> {
    let k = source.len();
    let codewords: Vec<Word> = span(m, target).into_iter().collect();
    let xs = tuples(m, k);
    let src_words: Vec<Word> = xs.iter().map(|x| combine(m, x, source)).collect();
    let mut out = BTreeSet::new();
    let mut pick = vec![0usize; k];
    loop {
        let imgs: Vec<Word> = pick.iter().map(|&i| codewords[i].clone()).collect();
        let form_ok = (0..k).all(|i| (0..k).all(|j| symp(m, &imgs[i], &imgs[j]) == symp(m, &source[i], &source[j])));
        if form_ok {
            let mapped: Vec<Word> = xs.iter().map(|x| combine(m, x, &imgs)).collect();
            let injective = mapped.iter().collect::<HashSet<_>>().len() == mapped.len();
            if injective && mapped.iter().zip(&src_words).all(|(a, b)| weight(a) == weight(b)) {
                out.insert(imgs);
            }
        }
        let mut i = 0;
        while i < k {
            pick[i] += 1;
            if pick[i] < codewords.len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
        if i == k {
            return out;
        }
    }
}

/// Matrices `F` (rows = images of basis vectors) of `R^{2n}` preserving the form
/// and symplectic weight.
pub fn ambient_isometries(m: u32, n: usize) -> BTreeSet<Vec<Word>> {
    let basis: Vec<Word> = (0..2 * n).map(|i| (0..2 * n).map(|j| u32::from(i == j)).collect()).collect();
    let all = tuples(m, 2 * n);
    let mut out = BTreeSet::new();
    for flat in tuples(m, 4 * n * n) {
        let rows: Vec<Word> = flat.chunks(2 * n).map(|c| c.to_vec()).collect();
        let form_ok = (0..2 * n).all(|i| (0..2 * n).all(|j| symp(m, &rows[i], &rows[j]) == symp(m, &basis[i], &basis[j])));
        if !form_ok {
            continue;
        }
        if all.iter().all(|x| weight(&combine(m, x, &rows)) == weight(x)) {
            out.insert(rows);
        }
    }
    out
}

pub fn sl_monomial_matrices(m: u32, n: usize) -> BTreeSet<Vec<Word>> {
    let basis: Vec<Word> = (0..2 * n).map(|i| (0..2 * n).map(|j| u32::from(i == j)).collect()).collect();
    let mut out = BTreeSet::new();
    for sigma in perms(n) {
        for a in block_choices(&blocks(m, true), n) {
            out.insert(basis.iter().map(|e| apply_monomial(m, &sigma, &a, e)).collect());
        }
    }
    out
}

/// Exact rank of an integer matrix (fraction-free elimination).
pub fn rank(mut a: Vec<Vec<i128>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            let (f, g) = (a[i][c], a[r][c]);
            for j in 0..cols {
                a[i][j] = a[i][j] * g - a[r][j] * f;
            }
            let h = a[i].iter().fold(0i128, |acc, &x| num_gcd(acc, x));
            if h > 1 {
                a[i].iter_mut().for_each(|x| *x /= h);
            }
        }
        r += 1;
    }
    r
}

fn num_gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Gaussian integers `(re, im)`.
pub type Gauss = (i64, i64);

fn gmul(x: Gauss, y: Gauss) -> Gauss {
    (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0)
}

/// Qubit letter matrices, `Y = iXZ`.
fn letter(c: char) -> [[Gauss; 2]; 2] {
    let (o, z, i, mi, mo) = ((1, 0), (0, 0), (0, 1), (0, -1), (-1, 0));
    match c {
        'I' => [[o, z], [z, o]],
        'X' => [[z, o], [o, z]],
        'Z' => [[o, z], [z, mo]],
        'Y' => [[z, mi], [i, z]],
        _ => panic!("unknown letter {c}"),
    }
}

/// Applies a qubit Pauli string; letter `i` acts on bit `i` of the basis index.
pub fn apply_letters(word: &str, v: &[Gauss]) -> Vec<Gauss> {
    let letters: Vec<char> = word.chars().collect();
    let n = letters.len();
    (0..v.len())
        .map(|y| {
            (0..v.len()).fold((0, 0), |acc, x| {
                let mut c: Gauss = (1, 0);
                for (i, &l) in letters.iter().enumerate().take(n) {
                    c = gmul(c, letter(l)[(y >> i) & 1][(x >> i) & 1]);
                }
                let t = gmul(c, v[x]);
                (acc.0 + t.0, acc.1 + t.1)
            })
        })
        .collect()
}

/// `Ψ` of a qubit letter string in the `(a | b)` layout.
pub fn letters_to_word(word: &str) -> Word {
    let a = word.chars().map(|c| u32::from(c == 'X' || c == 'Y'));
    let b = word.chars().map(|c| u32::from(c == 'Z' || c == 'Y'));
    a.chain(b).collect()
}
