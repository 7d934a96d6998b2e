//! Exact finite-rank models of the tensor representations.
//!
//! At rank `n` the algebra acts on an honest finite-dimensional space, so
//! the socle layers predicted at infinite rank can be measured directly:
//! build the contraction-kernel filtration of `im c_λ ⊗ im c_μ`, take each
//! subquotient's dimension, and count its highest weight vectors.

pub mod asymptotics;
pub mod filtration;
pub mod maps;
pub mod model;
pub mod sparse;
pub mod symmetrizer;
pub mod verify;
pub mod weyl;

pub use asymptotics::{asymptotics_probe, probe_vector, ProbePoint};
pub use filtration::{
    contraction_collections, contraction_kernel, full_space, kernel_filtration,
    kernel_filtration_within, singular_vector_count, singular_vector_count_with,
    symmetrized_space, WeightedSubspace,
};
pub use maps::{contraction, contraction_target, insertion, theta, xi_map, SlotPair, TupleVec};
pub use model::{Capacity, FiniteModel, Generator, LieElement, RootVector, WeightVector};
pub use sparse::{Rational, SparseRationalMatrix, SparseVec};
pub use symmetrizer::{permutation_matrix, young_symmetrizer, Perm, YoungSymmetrizer};
pub use verify::{
    counts_agree, verify_layer_multiplicities, verify_ranks, verify_with_capacity,
    VerificationReport,
};
pub use weyl::{highest_weight, weyl_dim};
