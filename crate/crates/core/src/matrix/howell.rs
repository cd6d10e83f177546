//! Canonical row forms: reduced row echelon form over fields and Howell form
//! over `Z/dZ`. Both are produced by the same elimination; over a prime modulus
//! every pivot normalizes to 1 and the annihilator rows vanish.

use num_integer::Integer;

use super::dense::{gcd_combine, Matrix};
use crate::algebra::RingSpec;
use crate::error::{Error, Result};

/// Howell (or RREF) form of a row span.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    form: Matrix,
    pivots: Vec<usize>,
}

/// Unit `u` with `u·a ≡ gcd(a, d) (mod d)`.
fn normalizing_unit(spec: RingSpec, a: u32) -> u32 {
    let d = spec.modulus() as u64;
    let g = (a as u64).gcd(&d);
    let m = d / g;
    let a_red = (a as u64 / g) % m;
    let base = if m == 1 {
        1
    } else {
        let e = (a_red as i64).extended_gcd(&(m as i64));
        e.x.rem_euclid(m as i64) as u64
    };
    (0..g)
        .map(|t| base + t * m)
        .find(|&u| u.gcd(&d) == 1)
        .expect("a unit lift always exists") as u32
}

pub fn canonicalize(m: &Matrix) -> CanonicalForm {
    let spec = m.spec();
    let d = spec.modulus();
    let cols = m.cols();
    let mut pool: Vec<Vec<u32>> = m.iter_rows().filter(|r| r.iter().any(|&x| x != 0)).map(<[u32]>::to_vec).collect();
    let mut pivot_rows: Vec<Vec<u32>> = Vec::new();
    let mut pivots = Vec::new();

    for c in 0..cols {
        let Some(first) = pool.iter().position(|r| r[c] != 0) else { continue };
        let mut p = pool.remove(first);
        for r in pool.iter_mut() {
            if r[c] != 0 {
                let (top, bottom) = gcd_combine(spec, &p, r, c);
                p = top;
                *r = bottom;
            }
        }
        let u = normalizing_unit(spec, p[c]);
        if u != 1 {
            p.iter_mut().for_each(|x| *x = spec.mul(*x, u));
        }
        let g = p[c];
        let ann_factor = d / g;
        let ann: Vec<u32> = p.iter().map(|&x| spec.mul(x, ann_factor)).collect();
        if ann.iter().any(|&x| x != 0) {
            pool.push(ann);
        }
        for q in pivot_rows.iter_mut() {
            let f = q[c] / g;
            if f != 0 {
                for (qx, &px) in q.iter_mut().zip(&p) {
                    *qx = spec.sub(*qx, spec.mul(f, px));
                }
            }
        }
        pool.retain(|r| r.iter().any(|&x| x != 0));
        pivot_rows.push(p);
        pivots.push(c);
    }
    debug_assert!(pool.is_empty());
    let form = Matrix::from_residue_rows(spec, &pivot_rows, cols).expect("rows have matching width");
    CanonicalForm { form, pivots }
}

impl CanonicalForm {
    pub fn form(&self) -> &Matrix {
        &self.form
    }

    pub fn into_form(self) -> Matrix {
        self.form
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Number of rows in the canonical form.
    pub fn rank(&self) -> usize {
        self.form.rows()
    }

    pub fn pivot_values(&self) -> Vec<u32> {
        self.pivots.iter().enumerate().map(|(i, &c)| self.form.get(i, c)).collect()
    }

    /// Additive orders `d / pivot` of the canonical generators.
    pub fn generator_orders(&self) -> Vec<u32> {
        let d = self.form.spec().modulus();
        self.pivot_values().into_iter().map(|p| d / p).collect()
    }

    /// Cardinality of the row span.
    pub fn span_size(&self) -> u128 {
        self.generator_orders().into_iter().map(|o| o as u128).product()
    }

    /// Reduces `v` against the form; the result is zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let spec = self.form.spec();
        let mut v = v.to_vec();
        for (i, &c) in self.pivots.iter().enumerate() {
            let p = self.form.get(i, c);
            if v[c] % p == 0 && v[c] != 0 {
                let f = v[c] / p;
                for (vx, &rx) in v.iter_mut().zip(self.form.row(i)) {
                    *vx = spec.sub(*vx, spec.mul(f, rx));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        v.len() == self.form.cols() && self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Every element of the span exactly once: coefficient `x_i` of canonical row
    /// `i` ranges over `0..d/pivot_i`.
    pub fn span_iter(&self) -> SpanIter<'_> {
        SpanIter::new(&self.form, self.generator_orders())
    }
}

/// Iterates `Σ x_i g_i` with `0 <= x_i < order_i` in lexicographic order of `x`.
pub struct SpanIter<'a> {
    gens: &'a Matrix,
    orders: Vec<u32>,
    coeffs: Vec<u32>,
    current: Vec<u32>,
    done: bool,
}

impl<'a> SpanIter<'a> {
    pub fn new(gens: &'a Matrix, orders: Vec<u32>) -> Self {
        SpanIter {
            gens,
            coeffs: vec![0; orders.len()],
            orders,
            current: vec![0; gens.cols()],
            done: false,
        }
    }
}

impl Iterator for SpanIter<'_> {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let spec = self.gens.spec();
        // Odometer step on the last coordinate first.
        let mut i = self.orders.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.coeffs[i] += 1;
            if self.coeffs[i] < self.orders[i] {
                for (cx, &g) in self.current.iter_mut().zip(self.gens.row(i)) {
                    *cx = spec.add(*cx, g);
                }
                break;
            }
            // wrap: subtract (order-1)·g_i, i.e. add g_i once more to cycle back to 0·g_i
            let wraps = self.orders[i];
            self.coeffs[i] = 0;
            for (cx, &g) in self.current.iter_mut().zip(self.gens.row(i)) {
                *cx = spec.sub(*cx, spec.mul(wraps - 1, g));
            }
        }
        Some(out)
    }
}

/// Generators of `{v : vM = 0}`, returned in canonical form.
pub fn kernel(m: &Matrix) -> Matrix {
    let spec = m.spec();
    let aug = m.hstack(&Matrix::identity(spec, m.rows())).expect("identity has matching rows");
    let h = canonicalize(&aug);
    let n = m.cols();
    let keep: Vec<Vec<u32>> = h
        .form()
        .iter_rows()
        .filter(|r| r[..n].iter().all(|&x| x == 0))
        .map(|r| r[n..].to_vec())
        .collect();
    let k = Matrix::from_residue_rows(spec, &keep, m.rows()).expect("kernel rows have matching width");
    canonicalize(&k).into_form()
}

/// Some `x` with `xA = t`, if one exists.
pub fn solve_left(a: &Matrix, t: &[u32]) -> Option<Vec<u32>> {
    let spec = a.spec();
    let n = a.cols();
    if t.len() != n {
        return None;
    }
    let aug = a.hstack(&Matrix::identity(spec, a.rows())).expect("identity has matching rows");
    let h = canonicalize(&aug);
    let mut v = t.to_vec();
    v.extend(std::iter::repeat_n(0, a.rows()));
    for (i, &c) in h.pivots().iter().enumerate() {
        if c >= n {
            break;
        }
        let p = h.form().get(i, c);
        if v[c] % p != 0 {
            return None;
        }
        let f = v[c] / p;
        for (vx, &rx) in v.iter_mut().zip(h.form().row(i)) {
            *vx = spec.sub(*vx, spec.mul(f, rx));
        }
    }
    if v[..n].iter().any(|&x| x != 0) {
        return None;
    }
    let x: Vec<u32> = v[n..].iter().map(|&e| spec.neg(e)).collect();
    debug_assert_eq!(a.left_mul_vec(&x), t);
    Some(x)
}

/// Inverse of a square matrix over `Z/dZ`.
pub fn inverse(m: &Matrix) -> Result<Matrix> {
    if !m.is_invertible() {
        return Err(Error::NonInvertible { value: m.det().unwrap_or(0) as u64, modulus: m.spec().modulus() as u64 });
    }
    let n = m.rows();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        rows.push(solve_left(m, &e).expect("invertible matrices solve every system"));
    }
    Matrix::from_residue_rows(m.spec(), &rows, n)
}
