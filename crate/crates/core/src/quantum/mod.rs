//! Exact matrix realizations: Pauli matrices, stabilizer states, Clifford lifts of
//! `SL_2`, local-Clifford verification, and rank-based local-unitary refutation.

mod entangle;
mod lcp;
mod lift;
mod scaled;
mod states;

pub use entangle::{bipartitions, lu_witness, rank_profile, Bipartition, LuVerdict, RankProfile};
pub use lcp::{lcp_verify, matches_half_one_plus_i, transform_generators, LcpReport};
pub use lift::{clifford_lift_sl2, clifford_of_monomial, conjugate_single, conjugation_matrix, satisfies_contract, LocalClifford};
pub use scaled::ScaledMatrix;
pub use states::{
    basis_index, basis_vector, conductor, identify_pauli, pauli_matrix, projector, stabilizer_state_basis, StateBasis, StateVector,
};
