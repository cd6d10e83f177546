use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::RingSpec;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::stabcode::{gamma, gamma_inv, gamma_inv_columns, StabilizerCode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    /// Blocks in `SL_2(R)`.
    Sl,
    /// Blocks in `GL_2(R)`.
    Gl,
}

impl std::str::FromStr for Flavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sl" => Ok(Flavor::Sl),
            "gl" => Ok(Flavor::Gl),
            _ => Err(Error::Malformed(format!("unknown flavor `{s}` (expected sl or gl)"))),
        }
    }
}

/// The block matrix `J = [[0, −1], [1, 0]]`; in interleaved coordinates the
/// symplectic form reads `⟨x, y⟩ = Σ x_i J y_iᵀ`.
pub fn j_matrix(spec: RingSpec) -> Matrix {
    Matrix::from_rows(spec, &[[0, -1], [1, 0]]).expect("2x2")
}

/// A monomial map `diag(A_1, …, A_n)(P_σ ⊗ I_2)` on `(R²)^n`.
///
/// On a vector `x = (x_1, …, x_n)` with `x_i ∈ R²` it returns `y` with
/// `y_i = x_{σ(i)} A_i`. `perm[i]` stores `σ(i)` zero-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialMap {
    spec: RingSpec,
    blocks: Vec<Matrix>,
    perm: Vec<usize>,
    flavor: Flavor,
}

impl MonomialMap {
    pub fn new(blocks: Vec<Matrix>, perm: Vec<usize>, flavor: Flavor) -> Result<Self> {
        let n = blocks.len();
        if n == 0 {
            return Err(Error::Malformed("a monomial map needs at least one block".into()));
        }
        let spec = blocks[0].spec();
        if perm.len() != n {
            return Err(Error::Dimension(format!("{n} blocks but a permutation of {} points", perm.len())));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Malformed(format!("{perm:?} is not a permutation")));
            }
        }
        for (i, a) in blocks.iter().enumerate() {
            if a.rows() != 2 || a.cols() != 2 || a.spec() != spec {
                return Err(Error::Dimension(format!("block {} is not a 2x2 matrix over {spec}", i + 1)));
            }
            let det = a.det()?;
            let ok = match flavor {
                Flavor::Sl => det == 1,
                Flavor::Gl => spec.is_unit(det),
            };
            if !ok {
                return Err(Error::Malformed(format!("block {} has determinant {det}, not allowed for {flavor:?}", i + 1)));
            }
        }
        Ok(MonomialMap { spec, blocks, perm, flavor })
    }

    pub fn identity(spec: RingSpec, n: usize) -> Self {
        MonomialMap { spec, blocks: vec![Matrix::identity(spec, 2); n], perm: (0..n).collect(), flavor: Flavor::Sl }
    }

    /// `τ_σ`: permutes slots with identity blocks.
    pub fn permutation(spec: RingSpec, perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        Self::new(vec![Matrix::identity(spec, 2); n], perm, Flavor::Sl)
    }

    /// `τ_i`: the block `J` in slot `i` (zero-based), identity elsewhere.
    pub fn tau(spec: RingSpec, n: usize, i: usize) -> Self {
        let mut m = Self::identity(spec, n);
        m.blocks[i] = j_matrix(spec);
        m
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn n(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// Action on a vector in interleaved coordinates.
    pub fn apply_interleaved(&self, x: &[u32]) -> Vec<u32> {
        let n = self.n();
        assert_eq!(x.len(), 2 * n, "vector length does not match the map");
        let mut y = Vec::with_capacity(2 * n);
        for (i, a) in self.blocks.iter().enumerate() {
            let j = self.perm[i];
            y.extend(a.left_mul_vec(&x[2 * j..2 * j + 2]));
        }
        y
    }

    /// Action on `v ∈ R^{2n}` in `(a | b)` coordinates: `γ⁻¹ ∘ M ∘ γ`.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        gamma_inv(&self.apply_interleaved(&gamma(v)))
    }

    /// The `2n × 2n` matrix `F` with `apply_interleaved(x) = x·F`.
    pub fn to_matrix_interleaved(&self) -> Matrix {
        let n = self.n();
        let mut f = Matrix::zeros(self.spec, 2 * n, 2 * n);
        for (i, a) in self.blocks.iter().enumerate() {
            let j = self.perm[i];
            for r in 0..2 {
                for c in 0..2 {
                    f.set(2 * j + r, 2 * i + c, a.get(r, c));
                }
            }
        }
        f
    }

    /// The matrix of `apply` in `(a | b)` coordinates.
    pub fn to_matrix(&self) -> Matrix {
        let n = self.n();
        let cols = gamma_inv_columns(n);
        let f = self.to_matrix_interleaved();
        // Rows and columns of the interleaved matrix, both reordered back by γ⁻¹.
        f.select_cols(&cols).select_rows(&cols)
    }

    /// Composite `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &MonomialMap) -> Result<MonomialMap> {
        if self.n() != other.n() || self.spec != other.spec {
            return Err(Error::Dimension("cannot compose maps of different shapes".into()));
        }
        // other: z_j = x_{τ(j)} B_j; self: y_i = z_{σ(i)} A_i = x_{τ(σ(i))} B_{σ(i)} A_i.
        let blocks = (0..self.n())
            .map(|i| other.blocks[self.perm[i]].mul(&self.blocks[i]))
            .collect::<Result<Vec<_>>>()?;
        let perm = (0..self.n()).map(|i| other.perm[self.perm[i]]).collect();
        let flavor = if self.flavor == Flavor::Sl && other.flavor == Flavor::Sl { Flavor::Sl } else { Flavor::Gl };
        MonomialMap::new(blocks, perm, flavor)
    }

    /// True when every generator of `source` lands in `target` and the sizes agree.
    pub fn maps_code_onto(&self, source: &StabilizerCode, target: &StabilizerCode) -> bool {
        source.n() == self.n()
            && target.n() == self.n()
            && source.size() == target.size()
            && source.generators().iter_rows().all(|g| target.contains(&self.apply(g)))
    }

    /// Map file text: one line `a b c d` per block, then `perm: i1 … in` (one-based).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for a in &self.blocks {
            let e: Vec<String> = a.data().iter().map(u32::to_string).collect();
            out.push_str(&e.join(" "));
            out.push('\n');
        }
        let p: Vec<String> = self.perm.iter().map(|i| (i + 1).to_string()).collect();
        out.push_str(&format!("perm: {}\n", p.join(" ")));
        out
    }

    /// Parses the map file format; the flavor is `Sl` when every block has
    /// determinant 1 and `Gl` otherwise.
    pub fn parse(text: &str, spec: RingSpec) -> Result<Self> {
        let mut blocks = Vec::new();
        let mut perm = None;
        for line in text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty()) {
            if let Some(rest) = line.strip_prefix("perm:") {
                let p = rest
                    .split_whitespace()
                    .map(|t| match t.parse::<usize>() {
                        Ok(i) if i >= 1 => Ok(i - 1),
                        _ => Err(Error::Malformed(format!("bad permutation entry `{t}`"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                perm = Some(p);
            } else {
                if perm.is_some() {
                    return Err(Error::Malformed("block lines must precede the perm line".into()));
                }
                let e = line
                    .split_whitespace()
                    .map(|t| t.parse::<i64>().map_err(|_| Error::Malformed(format!("bad block entry `{t}`"))))
                    .collect::<Result<Vec<_>>>()?;
                if e.len() != 4 {
                    return Err(Error::Malformed(format!("block line `{line}` needs four entries")));
                }
                blocks.push(Matrix::from_rows(spec, &[[e[0], e[1]], [e[2], e[3]]])?);
            }
        }
        let perm = perm.ok_or_else(|| Error::Malformed("missing `perm:` line".into()))?;
        let flavor = if blocks.iter().all(|a| a.det().map(|d| d == 1).unwrap_or(false)) { Flavor::Sl } else { Flavor::Gl };
        Self::new(blocks, perm, flavor)
    }
}

impl fmt::Display for MonomialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialMapRepr {
    pub ring: String,
    pub flavor: Flavor,
    /// Row-major 2×2 blocks.
    pub blocks: Vec<[u32; 4]>,
    /// One-based images `σ(1), …, σ(n)`.
    pub perm: Vec<usize>,
}

impl From<&MonomialMap> for MonomialMapRepr {
    fn from(m: &MonomialMap) -> Self {
        MonomialMapRepr {
            ring: m.spec.to_string(),
            flavor: m.flavor,
            blocks: m.blocks.iter().map(|a| [a.get(0, 0), a.get(0, 1), a.get(1, 0), a.get(1, 1)]).collect(),
            perm: m.perm.iter().map(|i| i + 1).collect(),
        }
    }
}
