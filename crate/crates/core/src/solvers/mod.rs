//! Exact solvers. Every result carries a certificate that is re-verified before it is
//! returned; budgets degrade answers to verified bounds flagged inexact.

mod budget;
mod chromatic;
mod circular;
mod fractional;
mod hom;
mod local;
mod partitions;
mod zigzag;

pub use budget::{Budget, Limits};
pub use chromatic::{
    chromatic_decision, chromatic_number, chromatic_number_with, dsatur_greedy, greedy_clique, ChromaticResult,
    Decision, DEFAULT_CHROMATIC_LIMIT,
};
pub use circular::{circular_candidates, circular_chromatic, circular_chromatic_with, is_pq_coloring, CircularResult};
pub use fractional::{
    fractional_chromatic, fractional_chromatic_with, maximal_independent_sets, FractionalResult,
    DEFAULT_FRACTIONAL_LIMIT,
};
pub use hom::{find_hom, find_hom_with, find_isomorphism, is_homomorphism, is_isomorphic, HomOptions, HomOutcome};
pub use local::{
    local_chromatic, local_chromatic_exhaustive, local_chromatic_with, LocalResult, DEFAULT_LOCAL_LIMIT,
    EXHAUSTIVE_LOCAL_LIMIT,
};
pub use partitions::{for_each_independent_partition, PartitionColoring};
pub use zigzag::{
    realized_splits, side_split_count, zigzag_exhaustive, zigzag_find, ZigzagReport, ZigzagWitness,
    EXHAUSTIVE_ZIGZAG_LIMIT,
};
