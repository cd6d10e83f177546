//! Isometry groups of stabilizer codes inside `GL_k`.
//!
//! `Symp(C)` collects the linear automorphisms of a code that preserve symplectic
//! weight; `rMon(C)` collects those induced by monomial maps of the ambient space.
//! Both are computed over prime fields, and over `Z/p^e` for codes in the socle.

mod closure;
mod group;
mod monomial;
mod rmon;
mod structure;
mod symp;
mod view;

use serde::Serialize;

use crate::matrix::{Matrix, MatrixRepr};

pub use closure::{closure, OrbitAction};
pub use group::{GroupReport, IsometrySubgroup};
pub use monomial::{j_matrix, Flavor, MonomialMap, MonomialMapRepr};
pub use rmon::{
    induced_matrix, monomial_search_exhaustive, rmon_between, rmon_group, rmon_group_exhaustive, rmon_sl_between,
    rmon_sl_group, ExhaustiveSearch, RmonGroup,
};
pub use structure::{ambient_isometries, sl_monomial_matrices, verify_structure_theorem, StructureReport};
pub use symp::{symp_between, symp_group};

/// A linear map `C → C′` written as `B` against the two generator matrices,
/// with a monomial map realizing it when one was found.
#[derive(Clone, Debug)]
pub struct CodeMapWitness {
    pub b: Matrix,
    pub map: Option<MonomialMap>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CodeMapWitnessRepr {
    pub b: MatrixRepr,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map: Option<MonomialMapRepr>,
}

impl From<&CodeMapWitness> for CodeMapWitnessRepr {
    fn from(w: &CodeMapWitness) -> Self {
        CodeMapWitnessRepr { b: MatrixRepr::from(&w.b), map: w.map.as_ref().map(MonomialMapRepr::from) }
    }
}
