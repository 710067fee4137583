//! Degree-sequence lower bounds on the clique number.
//!
//! The crate computes the Wei weight `W(G) = Σ 1/(n - d(v))`, the
//! generalized-partite number `φ(G)` (fewest δ-sets partitioning `V(G)`),
//! and greedy α-/β-sequence bounds, each packaged as a [`BoundCertificate`]
//! whose side conditions are checked when it is built. Exact brute-force
//! oracles for `ω`, `α` and `φ` live in [`oracles`].
//!
//! All weights are exact rationals; floating point only appears when a
//! report is rendered for humans.

pub mod bounds;
pub mod error;
pub mod graph;
pub mod io;
pub mod oracles;
pub mod sequences;

pub use bounds::{
    delta_complement_check, is_delta_set, verify_generalized_partition, wei_bound,
    wei_independence_bound, wei_weight, DeltaPartition, Weight,
};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use oracles::{
    clique_number_exact, clique_number_naive, independence_number_exact, phi_exact,
    wei_bound_floor_check, ChainReport, OracleLimits,
};
pub use sequences::{
    build_alpha_sequence, build_beta_sequence, certify_alpha_bound, certify_beta_bound,
    certify_beta_sequence, extend_to_delta_terminal, BoundCertificate, Justification, SequenceKind,
    Step, TieBreak, VertexSequence,
};
