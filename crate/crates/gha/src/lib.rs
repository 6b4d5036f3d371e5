//! Exact computation with graph homomorphisms, connection matrices and
//! graph algebras.
//!
//! Everything is exact rational arithmetic: hom numbers of multigraph
//! patterns into weighted targets, finite truncations of the connection
//! matrices `N(k,G)`, `A(k,G)`, `M(k,G)` together with their factorization
//! identity, twin detection and quotients, automorphism groups and orbit
//! counts on ordered tuples, the graph algebra maps `f_k` with their inner
//! products, trace operators and idempotent bases, and the verification
//! that the connection-matrix rank of a twin-free graph equals its orbit
//! count, at desk scale, with exact equality.
//!
//! Start with the runnable examples (`cargo run --example
//! rank_equals_orbits` and friends) or the `gha` binary, which exposes
//! each computation as a subcommand.

// Index loops mirror the matrix subscripts they implement.
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod catalog;
pub mod connection;
pub mod corpus;
mod error;
pub mod hom;
pub mod homdet;
pub mod labeled;
pub mod matrix;
pub mod quantum;
pub mod rational;
pub mod symmetry;
pub mod weighted;

pub use algebra::{
    algebra_product, check_extension_property, check_restriction_closure, equivalence_partition,
    f_k, f_k_quantum, idempotent_basis, inner_product_a, inner_product_g, quotient_dimension,
    stabilized_equivalence_partition, trace_a, verify_homeq, verify_homrep, verify_theorem,
    AlgebraVector, Escalation, HomeqReport, HomrepReport, TheoremReport, VerifyStatus,
};
pub use catalog::{enumerate_k_labeled, CatalogBounds, GraphCatalog};
pub use connection::{build_a, build_m, build_n, connection_rank, verify_factorization};
pub use error::Error;
pub use hom::{alpha_weight, hom, hom_partial, hom_quantum, MapAssignment, PatternEvaluator};
pub use homdet::{
    decide_isomorphic, find_isomorphism, gadget_apexes, gadget_join, hom_profile,
    is_valid_witness, IsoBounds, IsoVerdict,
};
pub use labeled::KLabeledGraph;
pub use matrix::{rank_exact, RankTracker, RationalMatrix};
pub use quantum::{quantum_product, QuantumGraph};
pub use rational::{format_rational, parse_rational, Rational};
pub use symmetry::{
    automorphisms, find_twins, is_twin_free, orbit_count, orbit_partition, twin_quotient,
    verify_twin_free_rigidity, NodePartition, Permutation, TuplePartition,
};
pub use weighted::WeightedGraph;
