use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::RingSpec;
use crate::error::{Error, Result};

/// A dense row-major matrix of residues over `R`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    spec: RingSpec,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn new(spec: RingSpec, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries cannot fill a {rows}x{cols} matrix",
                data.len()
            )));
        }
        let d = spec.modulus();
        Ok(Matrix { spec, rows, cols, data: data.into_iter().map(|x| x % d).collect() })
    }

    pub fn zeros(spec: RingSpec, rows: usize, cols: usize) -> Self {
        Matrix { spec, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(spec: RingSpec, n: usize) -> Self {
        let mut m = Self::zeros(spec, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from integer rows, reducing every entry.
    pub fn from_rows<R: AsRef<[i64]>>(spec: RingSpec, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        Self::from_rows_with_cols(spec, rows, cols)
    }

    pub fn from_rows_with_cols<R: AsRef<[i64]>>(spec: RingSpec, rows: &[R], cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::Dimension(format!("row of length {} in a {cols}-column matrix", r.len())));
            }
            data.extend(r.iter().map(|&x| spec.reduce(x)));
        }
        Ok(Matrix { spec, rows: rows.len(), cols, data })
    }

    pub fn from_residue_rows(spec: RingSpec, rows: &[Vec<u32>], cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Dimension(format!("row of length {} in a {cols}-column matrix", r.len())));
            }
            data.extend(r.iter().map(|&x| x % spec.modulus()));
        }
        Ok(Matrix { spec, rows: rows.len(), cols, data })
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.spec.modulus();
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[u32]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.spec, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows || self.spec != other.spec {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.spec, self.rows, other.cols);
        for r in 0..self.rows {
            let v = other.left_mul_vec(self.row(r));
            out.data[r * other.cols..(r + 1) * other.cols].copy_from_slice(&v);
        }
        Ok(out)
    }

    /// Row vector times matrix: `x ↦ xM`.
    pub fn left_mul_vec(&self, x: &[u32]) -> Vec<u32> {
        assert_eq!(x.len(), self.rows, "vector length must match the row count");
        let m = self.spec.modulus() as u64;
        let mut acc = vec![0u64; self.cols];
        for (r, &xr) in x.iter().enumerate() {
            if xr == 0 {
                continue;
            }
            for (a, &e) in acc.iter_mut().zip(self.row(r)) {
                *a = (*a + xr as u64 * e as u64) % m;
            }
        }
        acc.into_iter().map(|a| a as u32).collect()
    }

    /// Keeps the listed columns, in the given order.
    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            data.extend(cols.iter().map(|&c| self.get(r, c)));
        }
        Matrix { spec: self.spec, rows: self.rows, cols: cols.len(), data }
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Matrix { spec: self.spec, rows: rows.len(), cols: self.cols, data }
    }

    /// Appends the rows of `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols && self.rows != 0 && other.rows != 0 {
            return Err(Error::Dimension("vstack column mismatch".into()));
        }
        let cols = if self.rows == 0 { other.cols } else { self.cols };
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { spec: self.spec, rows: self.rows + other.rows, cols, data })
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::Dimension("hstack row mismatch".into()));
        }
        let mut data = Vec::with_capacity(self.rows * (self.cols + other.cols));
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Ok(Matrix { spec: self.spec, rows: self.rows, cols: self.cols + other.cols, data })
    }

    pub fn map(&self, f: impl Fn(u32) -> u32) -> Matrix {
        let d = self.spec.modulus();
        Matrix { spec: self.spec, rows: self.rows, cols: self.cols, data: self.data.iter().map(|&x| f(x) % d).collect() }
    }

    /// Same entries read in another ring (entries are re-reduced).
    pub fn with_spec(&self, spec: RingSpec) -> Matrix {
        Matrix {
            spec,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| x % spec.modulus()).collect(),
        }
    }

    /// Determinant by unimodular row elimination (valid over any `Z/dZ`).
    pub fn det(&self) -> Result<u32> {
        if self.rows != self.cols {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let s = self.spec;
        let n = self.rows;
        let mut a = self.row_vecs();
        for c in 0..n {
            for r in c + 1..n {
                if a[r][c] == 0 {
                    continue;
                }
                let (top, bottom) = gcd_combine(s, &a[c], &a[r], c);
                a[c] = top;
                a[r] = bottom;
            }
        }
        Ok((0..n).fold(1, |acc, i| s.mul(acc, a[i][i])))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.det().map(|d| self.spec.is_unit(d)).unwrap_or(false)
    }
}

/// Unimodular 2x2 combination of two rows that leaves `gcd(a_c, b_c)` in the
/// first row and zero in the second at column `c`.
pub(crate) fn gcd_combine(spec: RingSpec, top: &[u32], bottom: &[u32], c: usize) -> (Vec<u32>, Vec<u32>) {
    use num_integer::Integer;
    let a = top[c] as i64;
    let b = bottom[c] as i64;
    let (s, t, u, v) = if b == 0 {
        (1, 0, 0, 1)
    } else if a == 0 {
        (0, 1, -1, 0)
    } else if b % a == 0 {
        (1, 0, -(b / a), 1)
    } else {
        let g = a.extended_gcd(&b);
        (g.x, g.y, -(b / g.gcd), a / g.gcd)
    };
    let comb = |x: i64, y: i64| -> Vec<u32> {
        top.iter().zip(bottom).map(|(&p, &q)| spec.reduce(x * p as i64 + y * q as i64)).collect()
    };
    (comb(s, t), comb(u, v))
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Serialized as its ring name and integer rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixRepr {
    pub ring: String,
    pub rows: Vec<Vec<u32>>,
}

impl From<&Matrix> for MatrixRepr {
    fn from(m: &Matrix) -> Self {
        MatrixRepr { ring: m.spec.to_string(), rows: m.row_vecs() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> RingSpec {
        RingSpec::prime_field(2).unwrap()
    }

    #[test]
    fn determinant_over_z4() {
        let z4 = RingSpec::modular(4).unwrap();
        let m = Matrix::from_rows(z4, &[[2, 1], [1, 1]]).unwrap();
        assert_eq!(m.det().unwrap(), 1);
        let m = Matrix::from_rows(z4, &[[2, 0], [0, 2]]).unwrap();
        assert_eq!(m.det().unwrap(), 0);
        assert!(!m.is_invertible());
        let m = Matrix::from_rows(z4, &[[0, 3], [1, 2]]).unwrap();
        assert_eq!(m.det().unwrap(), 1);
    }

    #[test]
    fn determinant_matches_permutation_expansion() {
        let z6 = RingSpec::modular(6).unwrap();
        let m = Matrix::from_rows(z6, &[[1, 2, 3], [4, 5, 0], [2, 1, 5]]).unwrap();
        // Leibniz expansion as the independent route.
        let g = |r: usize, c: usize| m.get(r, c) as i64;
        let leibniz = g(0, 0) * (g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1))
            - g(0, 1) * (g(1, 0) * g(2, 2) - g(1, 2) * g(2, 0))
            + g(0, 2) * (g(1, 0) * g(2, 1) - g(1, 1) * g(2, 0));
        assert_eq!(m.det().unwrap(), z6.reduce(leibniz));
    }

    #[test]
    fn left_multiplication() {
        let m = Matrix::from_rows(f2(), &[[1, 1, 0], [0, 1, 1]]).unwrap();
        assert_eq!(m.left_mul_vec(&[1, 1]), vec![1, 0, 1]);
        let id = Matrix::identity(f2(), 2);
        assert_eq!(id.mul(&m).unwrap(), m);
    }

    #[test]
    fn rejects_ragged_rows() {
        assert!(Matrix::from_rows(f2(), &[vec![1, 0], vec![1]]).is_err());
    }
}
