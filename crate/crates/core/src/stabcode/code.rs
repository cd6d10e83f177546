use std::fmt;

use crate::algebra::RingSpec;
use crate::error::{Error, Result};
use crate::matrix::{canonicalize, kernel, solve_left, CanonicalForm, Matrix, SpanIter};
use crate::Limits;

use super::vector::{gamma_inv_columns, symp_inner, symp_weight};

/// A submodule of `R^{2n}` given by generator rows in `(a | b)` coordinates.
///
/// Most codes handled here are self-orthogonal (stabilizer codes); the type also
/// carries duals and ambient spaces, so the flag is computed rather than required.
#[derive(Clone, Debug)]
pub struct StabilizerCode {
    spec: RingSpec,
    n: usize,
    generators: Matrix,
    canonical: CanonicalForm,
    self_orthogonal: bool,
}

impl StabilizerCode {
    /// Builds the code spanned by the rows of `g` (a `k × 2n` matrix).
    ///
    /// The given rows are kept when they already form a minimal generating set
    /// (as many rows as the canonical form); otherwise the canonical rows are stored.
    pub fn new(g: Matrix) -> Result<Self> {
        if g.cols() == 0 || g.cols() % 2 != 0 {
            return Err(Error::Dimension(format!("generator matrices need 2n > 0 columns, got {}", g.cols())));
        }
        let spec = g.spec();
        let n = g.cols() / 2;
        let canonical = canonicalize(&g);
        let generators = if g.rows() == canonical.rank() { g } else { canonical.form().clone() };
        let rows = generators.row_vecs();
        let self_orthogonal =
            rows.iter().enumerate().all(|(i, u)| rows[i + 1..].iter().all(|v| symp_inner(spec, u, v) == 0));
        Ok(StabilizerCode { spec, n, generators, canonical, self_orthogonal })
    }

    pub fn from_rows<R: AsRef<[i64]>>(spec: RingSpec, n: usize, rows: &[R]) -> Result<Self> {
        Self::new(Matrix::from_rows_with_cols(spec, rows, 2 * n)?)
    }

    /// Builds the code from rows written in the interleaved `(a_1,b_1 | … | a_n,b_n)` layout.
    pub fn from_interleaved(g: &Matrix) -> Result<Self> {
        if g.cols() % 2 != 0 {
            return Err(Error::Dimension("interleaved rows need even length".into()));
        }
        Self::new(g.select_cols(&gamma_inv_columns(g.cols() / 2)))
    }

    pub fn zero(spec: RingSpec, n: usize) -> Result<Self> {
        Self::new(Matrix::zeros(spec, 0, 2 * n))
    }

    pub fn full_space(spec: RingSpec, n: usize) -> Result<Self> {
        Self::new(Matrix::identity(spec, 2 * n))
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of stored generators.
    pub fn k(&self) -> usize {
        self.generators.rows()
    }

    pub fn generators(&self) -> &Matrix {
        &self.generators
    }

    pub fn canonical(&self) -> &CanonicalForm {
        &self.canonical
    }

    /// `|C|`.
    pub fn size(&self) -> u128 {
        self.canonical.span_size()
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.canonical.contains(v)
    }

    /// Every codeword exactly once.
    pub fn codewords(&self) -> SpanIter<'_> {
        self.canonical.span_iter()
    }

    /// Some `x` with `x·G = v`.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        solve_left(&self.generators, v)
    }

    /// The codeword `x·G`.
    pub fn encode(&self, x: &[u32]) -> Vec<u32> {
        self.generators.left_mul_vec(x)
    }

    /// `C^⊥` with respect to the symplectic form.
    ///
    /// `⟨v, g⟩ = v · (−g_b ; g_a)`, so the dual is the left kernel of the `2n × k`
    /// matrix whose columns are those stacked vectors.
    pub fn dual(&self) -> StabilizerCode {
        let spec = self.spec;
        let n = self.n;
        let k = self.k();
        let mut m = Matrix::zeros(spec, 2 * n, k);
        for (j, g) in self.generators.iter_rows().enumerate() {
            for i in 0..n {
                m.set(i, j, spec.neg(g[n + i]));
                m.set(n + i, j, g[i]);
            }
        }
        StabilizerCode::new(kernel(&m)).expect("kernel has 2n columns")
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.self_orthogonal
    }

    pub fn is_self_dual(&self) -> bool {
        self.self_orthogonal && self.dual() == *self
    }

    /// Inclusion of row spans.
    pub fn is_subcode_of(&self, other: &StabilizerCode) -> bool {
        self.spec == other.spec && self.n == other.n && self.generators.iter_rows().all(|r| other.contains(r))
    }

    /// Minimum distance: the least weight in `C^⊥ − C` when `C ⊊ C^⊥`, and the
    /// least weight in `C − {0}` when `C = C^⊥`.
    pub fn min_distance(&self, limits: &Limits) -> Result<usize> {
        if !self.self_orthogonal {
            return Err(Error::NotSelfOrthogonal);
        }
        let dual = self.dual();
        limits.check(dual.size())?;
        let best = if dual.size() == self.size() {
            self.codewords().filter(|v| v.iter().any(|&x| x != 0)).map(|v| symp_weight(&v)).min()
        } else {
            dual.codewords().filter(|v| !self.contains(v)).map(|v| symp_weight(&v)).min()
        };
        best.ok_or_else(|| Error::Unsupported("the code has no nonzero words to measure".into()))
    }

    /// Weight enumerator as a histogram `counts[w] = |{c ∈ C : wt_s(c) = w}|`.
    pub fn weight_distribution(&self, limits: &Limits) -> Result<Vec<u128>> {
        limits.check(self.size())?;
        let mut counts = vec![0u128; self.n + 1];
        for v in self.codewords() {
            counts[symp_weight(&v)] += 1;
        }
        Ok(counts)
    }

    /// Gram matrix `G Ω Gᵀ` of the generators under the symplectic form.
    pub fn gram(&self) -> Matrix {
        let rows = self.generators.row_vecs();
        let k = rows.len();
        let mut m = Matrix::zeros(self.spec, k, k);
        for i in 0..k {
            for j in 0..k {
                m.set(i, j, symp_inner(self.spec, &rows[i], &rows[j]));
            }
        }
        m
    }
}

impl PartialEq for StabilizerCode {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec && self.n == other.n && self.canonical == other.canonical
    }
}

impl Eq for StabilizerCode {}

impl fmt::Display for StabilizerCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring={} n={} k={}", self.spec, self.n, self.k())?;
        for r in self.generators.iter_rows() {
            let a: Vec<String> = r[..self.n].iter().map(u32::to_string).collect();
            let b: Vec<String> = r[self.n..].iter().map(u32::to_string).collect();
            writeln!(f, "{} | {}", a.join(" "), b.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::all_vectors;

    fn f2() -> RingSpec {
        RingSpec::prime_field(2).unwrap()
    }

    fn e_ex2() -> StabilizerCode {
        StabilizerCode::from_rows(
            f2(),
            5,
            &[[0, 1, 1, 1, 1, 0, 0, 0, 0, 0], [1, 0, 1, 0, 0, 0, 0, 0, 1, 1], [1, 0, 0, 0, 1, 0, 1, 1, 0, 0]],
        )
        .unwrap()
    }

    /// Brute-force dual: every vector orthogonal to every generator.
    fn dual_oracle(c: &StabilizerCode) -> Vec<Vec<u32>> {
        all_vectors(c.spec(), 2 * c.n())
            .filter(|v| c.generators().iter_rows().all(|g| symp_inner(c.spec(), v, g) == 0))
            .collect()
    }

    #[test]
    fn e_ex2_rows_are_orthogonal() {
        let c = e_ex2();
        assert!(c.is_self_orthogonal());
        assert_eq!(c.k(), 3);
        assert_eq!(c.size(), 8);
        let g = c.generators().row_vecs();
        assert_eq!(symp_inner(f2(), &g[0], &g[1]), 0);
    }

    #[test]
    fn full_space_is_not_self_orthogonal() {
        let c = StabilizerCode::full_space(f2(), 1).unwrap();
        assert!(!c.is_self_orthogonal());
        assert_eq!(c.size(), 4);
    }

    #[test]
    fn dual_of_zero_is_everything() {
        let z = StabilizerCode::zero(f2(), 1).unwrap();
        assert_eq!(z.dual(), StabilizerCode::full_space(f2(), 1).unwrap());
        assert_eq!(z.min_distance(&Limits::default()).unwrap(), 1);
    }

    #[test]
    fn dual_matches_brute_force() {
        let c = e_ex2();
        let oracle = dual_oracle(&c);
        let d = c.dual();
        assert_eq!(d.size(), oracle.len() as u128);
        assert!(oracle.iter().all(|v| d.contains(v)));
        assert_eq!(d.dual(), c);
    }

    #[test]
    fn dual_cardinality_law_over_z4() {
        let z4 = RingSpec::modular(4).unwrap();
        let c = StabilizerCode::from_rows(z4, 2, &[[2, 1, 0, 3], [0, 2, 2, 0]]).unwrap();
        let d = c.dual();
        assert_eq!(c.size() * d.size(), 4u128.pow(4));
        assert_eq!(d.size(), dual_oracle(&c).len() as u128);
    }

    #[test]
    fn min_distance_matches_enumeration() {
        let c = e_ex2();
        let d = c.dual();
        let oracle = all_vectors(f2(), 10)
            .filter(|v| d.contains(v) && !c.contains(v))
            .map(|v| symp_weight(&v))
            .min()
            .unwrap();
        assert_eq!(c.min_distance(&Limits::default()).unwrap(), oracle);
    }

    #[test]
    fn min_distance_respects_cap() {
        let c = e_ex2();
        assert!(matches!(c.min_distance(&Limits::new(10)), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn redundant_rows_are_dropped() {
        let c = StabilizerCode::from_rows(f2(), 1, &[[1, 0], [1, 0]]).unwrap();
        assert_eq!(c.k(), 1);
    }

    #[test]
    fn interleaved_layout() {
        let a = StabilizerCode::from_rows(f2(), 2, &[[1, 0, 0, 1]]).unwrap();
        let m = Matrix::from_rows(f2(), &[[1, 0, 0, 1]]).unwrap();
        let b = StabilizerCode::from_interleaved(&m).unwrap();
        // (1,0 | 0,1) interleaved is (a1,b1 | a2,b2) = (1,0 | 0,1) -> a = (1,0), b = (0,1)
        assert_eq!(b.generators().row(0), &[1, 0, 0, 1]);
        assert_eq!(a, b);
    }
}
