//! Ring alphabets, their characters, and cyclotomic numbers.

mod character;
mod cyclotomic;
mod ring;

pub use character::{generating_by_gcd, Character};
pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic};
pub use ring::{LocalData, RingElement, RingKind, RingSpec};

