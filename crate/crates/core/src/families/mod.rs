//! Constructors for the graph families.
//!
//! Every constructor is deterministic. Vertex orders:
//! * subset graphs: colexicographic order of the subsets;
//! * generalized Mycielskians: level-major, then base vertex, apex last;
//! * `W(s,t)`: lexicographic order of the coordinate tuples.

mod borsuk;
mod kneser;
mod mycielski;
mod wide_universal;

pub use borsuk::{borsuk_sample, chord_distance, BORSUK_TIE_TOLERANCE, UNIT_NORM_TOLERANCE};
pub use kneser::{binomial, kneser, kneser_vertices, schrijver, schrijver_order, schrijver_vertices, SubsetVertex};
pub use mycielski::{gen_mycielski, gen_mycielski_iter, MycTower, MycVertex};
pub use wide_universal::{wide_universal, WVertex};

use crate::error::{invalid, Result};
use crate::graph::Graph;

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::with_indices(n, edges).expect("complete graph is simple")
}

/// The cycle `C_n` on vertices `1..=n` in cyclic order.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Graph::with_indices(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `K_{p/q}`: vertices `0..p`, `i ~ j` iff `q <= |i - j| <= p - q`.
pub fn circular_complete(p: usize, q: usize) -> Result<Graph> {
    if q == 0 || p < 2 * q {
        return Err(invalid(format!("circular complete graph needs p >= 2q >= 2, got p={p}, q={q}")));
    }
    let labels = (0..p).map(|i| i.to_string()).collect();
    let edges = (0..p).flat_map(|i| {
        (i + 1..p).filter(move |&j| j - i >= q && j - i <= p - q).map(move |j| (i, j))
    });
    Graph::from_edges(labels, edges)
}

/// A path `0 - 1 - ... - last` with a loop at one vertex. Only used inside product
/// constructions; it never appears as a [`Graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct LoopedPath {
    pub last: usize,
    pub loop_at: usize,
}

impl LoopedPath {
    /// `H_s`: the path on `0..=s` with a loop at `s`.
    pub fn loop_at_end(s: usize) -> Self {
        LoopedPath { last: s, loop_at: s }
    }

    /// The path on `0..=r` with a loop at `0`.
    #[cfg(test)]
    pub fn loop_at_start(r: usize) -> Self {
        LoopedPath { last: r, loop_at: 0 }
    }

    #[inline]
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        debug_assert!(a <= self.last && b <= self.last);
        a.abs_diff(b) == 1 || (a == b && a == self.loop_at)
    }

    #[cfg(test)]
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = (1..=self.last).map(|i| (i - 1, i)).collect();
        e.push((self.loop_at, self.loop_at));
        e
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_constructors() {
        assert_eq!(cycle(5).unwrap().size(), 5);
        assert_eq!(complete(4).size(), 6);
        assert!(cycle(2).is_err());
        let h2 = LoopedPath::loop_at_end(2);
        assert_eq!(h2.edges(), vec![(0, 1), (1, 2), (2, 2)]);
        assert!(h2.adjacent(2, 2) && !h2.adjacent(0, 0) && !h2.adjacent(0, 2));
    }

    #[test]
    fn circular_complete_small_cases() {
        let k5_1 = circular_complete(5, 1).unwrap();
        assert!(k5_1.same_structure(&complete(5)));
        let k52 = circular_complete(5, 2).unwrap();
        assert_eq!(k52.size(), 5);
        assert!((0..5).all(|v| k52.degree(v) == 2));
        assert!(circular_complete(3, 2).is_err());
        assert!(circular_complete(4, 0).is_err());
    }
}
