use thiserror::Error;

/// Default cardinality cap for exhaustive searches (2^20 candidates).
pub const DEFAULT_MAX_ENUM: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("element {value} is not invertible modulo {modulus}")]
    NonInvertible { value: u64, modulus: u64 },
    #[error("enumeration of {needed} candidates exceeds the cap of {cap}")]
    CapExceeded { needed: u128, cap: u64 },
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("code is not self-orthogonal")]
    NotSelfOrthogonal,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("vector lies in the code")]
    VectorInCode,
    #[error("map does not send the source code onto the target code")]
    NotACodeMap,
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Bounds applied to every exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_enum: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_enum: DEFAULT_MAX_ENUM }
    }
}

impl Limits {
    pub fn new(max_enum: u64) -> Self {
        Limits { max_enum }
    }

    /// Fails with [`Error::CapExceeded`] when `needed` candidates would be visited.
    pub fn check(&self, needed: u128) -> Result<()> {
        if needed > self.max_enum as u128 {
            Err(Error::CapExceeded { needed, cap: self.max_enum })
        } else {
            Ok(())
        }
    }
}
