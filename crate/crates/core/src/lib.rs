//! Graph families, explicit colorings and exact coloring invariants for graphs whose
//! chromatic number has a topological lower bound: Kneser and Schrijver graphs,
//! generalized Mycielskians, the universal graphs `W(s,t)` of `s`-wide colorability and
//! finite samples of Borsuk graphs.
//!
//! Module map:
//! * [`graph`], [`coloring`], [`io`], [`fraction`]: shared representation and checkers;
//! * [`families`]: graph constructors;
//! * [`constructions`]: explicit colorings and homomorphisms, always re-verified;
//! * [`solvers`]: exact chromatic, local chromatic, fractional and circular chromatic
//!   numbers, homomorphism search and zig-zag biclique search;
//! * [`geometry`]: sampled certification of sphere covers and Borsuk graph colorings.

pub mod bitset;
pub mod coloring;
pub mod constructions;
pub mod error;
pub mod families;
pub mod fraction;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod solvers;

pub use bitset::BitSet;
pub use coloring::{is_proper, is_s_wide, local_profile, Coloring, LocalProfile};
pub use error::{Error, Result};
pub use fraction::Fraction;
pub use graph::Graph;
