use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::Cyclotomic;

/// A dense matrix with exact cyclotomic entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Cyclotomic>,
}

impl CycMatrix {
    pub fn zeros(conductor: u32, rows: usize, cols: usize) -> Self {
        CycMatrix { rows, cols, data: vec![Cyclotomic::zero(conductor); rows * cols] }
    }

    pub fn identity(conductor: u32, n: usize) -> Self {
        let mut m = Self::zeros(conductor, n, n);
        for i in 0..n {
            m.data[i * n + i] = Cyclotomic::one(conductor);
        }
        m
    }

    pub fn from_data(rows: usize, cols: usize, data: Vec<Cyclotomic>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows*cols");
        CycMatrix { rows, cols, data }
    }

    /// A single column built from the given entries.
    pub fn column_vector(entries: Vec<Cyclotomic>) -> Self {
        let n = entries.len();
        CycMatrix { rows: n, cols: 1, data: entries }
    }

    pub fn from_columns(columns: &[Vec<Cyclotomic>]) -> Self {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in columns {
                data.push(c[r].clone());
            }
        }
        CycMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Cyclotomic {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Cyclotomic) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<Cyclotomic> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[Cyclotomic] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Cyclotomic::is_zero)
    }

    pub fn mul(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let rows: Vec<Vec<Cyclotomic>> = (0..self.rows)
            .into_par_iter()
            .map(|r| {
                let mut acc: Vec<Option<Cyclotomic>> = vec![None; other.cols];
                for k in 0..self.cols {
                    let a = self.get(r, k);
                    if a.is_zero() {
                        continue;
                    }
                    for (c, slot) in acc.iter_mut().enumerate() {
                        let b = other.get(k, c);
                        if b.is_zero() {
                            continue;
                        }
                        let p = a * b;
                        *slot = Some(match slot.take() {
                            Some(s) => &s + &p,
                            None => p,
                        });
                    }
                }
                let conductor = self.data.first().map_or(1, Cyclotomic::conductor);
                acc.into_iter().map(|s| s.unwrap_or_else(|| Cyclotomic::zero(conductor))).collect()
            })
            .collect();
        CycMatrix { rows: self.rows, cols: other.cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn add(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        CycMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        CycMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, s: &Cyclotomic) -> CycMatrix {
        CycMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn transpose(&self) -> CycMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        CycMatrix { rows: self.cols, cols: self.rows, data }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> CycMatrix {
        let t = self.transpose();
        CycMatrix { rows: t.rows, cols: t.cols, data: t.data.iter().map(Cyclotomic::conj).collect() }
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &CycMatrix) -> CycMatrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut data = Vec::with_capacity(rows * cols);
        for r1 in 0..self.rows {
            for r2 in 0..other.rows {
                for c1 in 0..self.cols {
                    let a = self.get(r1, c1);
                    for c2 in 0..other.cols {
                        data.push(a * other.get(r2, c2));
                    }
                }
            }
        }
        CycMatrix { rows, cols, data }
    }

    pub fn mul_vec(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc: Option<Cyclotomic> = None;
                for (c, x) in v.iter().enumerate() {
                    let a = self.get(r, c);
                    if a.is_zero() || x.is_zero() {
                        continue;
                    }
                    let p = a * x;
                    acc = Some(match acc {
                        Some(s) => &s + &p,
                        None => p,
                    });
                }
                acc.unwrap_or_else(|| Cyclotomic::zero(v.first().map_or(1, Cyclotomic::conductor)))
            })
            .collect()
    }

    /// Rank over the cyclotomic field, by Gaussian elimination with exact inverses.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<Cyclotomic>> = (0..self.rows).map(|r| self.data[r * self.cols..(r + 1) * self.cols].to_vec()).collect();
        let mut rank = 0;
        for c in 0..self.cols {
            let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else { continue };
            a.swap(rank, p);
            let inv = a[rank][c].inverse().expect("pivot is nonzero");
            let pivot_row: Vec<Cyclotomic> = a[rank].iter().map(|x| x * &inv).collect();
            for r in rank + 1..a.len() {
                if a[r][c].is_zero() {
                    continue;
                }
                let f = a[r][c].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x = &*x - &(&f * y);
                    }
                }
            }
            a[rank] = pivot_row;
            rank += 1;
        }
        rank
    }

    /// Indices of a greedy maximal set of linearly independent columns.
    pub fn independent_columns(&self) -> Vec<usize> {
        let mut chosen: Vec<usize> = Vec::new();
        for c in 0..self.cols {
            let mut trial = chosen.clone();
            trial.push(c);
            if self.select_cols(&trial).rank() == trial.len() {
                chosen = trial;
            }
        }
        chosen
    }

    pub fn select_cols(&self, cols: &[usize]) -> CycMatrix {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            for &c in cols {
                data.push(self.get(r, c).clone());
            }
        }
        CycMatrix { rows: self.rows, cols: cols.len(), data }
    }

    pub fn hstack(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!(self.rows, other.rows);
        let mut data = Vec::with_capacity(self.rows * (self.cols + other.cols));
        for r in 0..self.rows {
            data.extend_from_slice(&self.data[r * self.cols..(r + 1) * self.cols]);
            data.extend_from_slice(&other.data[r * other.cols..(r + 1) * other.cols]);
        }
        CycMatrix { rows: self.rows, cols: self.cols + other.cols, data }
    }

    /// True iff the column spans of `self` and `other` coincide.
    pub fn same_column_span(&self, other: &CycMatrix) -> bool {
        if self.rows != other.rows {
            return false;
        }
        let r1 = self.rank();
        let r2 = other.rank();
        r1 == r2 && self.hstack(other).rank() == r1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: i64) -> Cyclotomic {
        Cyclotomic::from_int(4, v)
    }

    #[test]
    fn rank_of_zero_and_identity() {
        assert_eq!(CycMatrix::zeros(4, 3, 3).rank(), 0);
        assert_eq!(CycMatrix::identity(4, 5).rank(), 5);
    }

    #[test]
    fn rank_with_complex_dependence() {
        let i = Cyclotomic::root(4, 1);
        // second row is i times the first
        let m = CycMatrix::from_data(2, 2, vec![c(1), i.clone(), i.clone(), c(-1)]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kron_dimensions_and_values() {
        let a = CycMatrix::from_data(1, 2, vec![c(1), c(2)]);
        let b = CycMatrix::from_data(2, 1, vec![c(3), c(4)]);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (2, 2));
        assert_eq!(k.entries(), &[c(3), c(6), c(4), c(8)]);
    }

    #[test]
    fn adjoint_conjugates() {
        let i = Cyclotomic::root(4, 1);
        let m = CycMatrix::from_data(1, 2, vec![i.clone(), c(1)]);
        let adj = m.adjoint();
        assert_eq!(adj.entries(), &[i.conj(), c(1)]);
        assert_eq!(m.mul(&adj).entries(), &[c(2)]);
    }

    #[test]
    fn column_spans() {
        let a = CycMatrix::column_vector(vec![c(1), c(2)]);
        let b = CycMatrix::column_vector(vec![c(-2), c(-4)]);
        assert!(a.same_column_span(&b));
        let e = CycMatrix::column_vector(vec![c(1), c(0)]);
        assert!(!a.same_column_span(&e));
    }
}
