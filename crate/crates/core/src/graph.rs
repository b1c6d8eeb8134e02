//! Finite simple graphs with bit-packed adjacency rows.

use std::collections::HashSet;

use crate::bitset::BitSet;
use crate::error::{invalid, Result};

/// A finite simple graph. Vertices are `0..n` and carry distinct printable labels.
///
/// Adjacency is symmetric and irreflexive; every constructor in the crate goes through
/// [`Graph::from_edges`], which enforces this.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<BitSet>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from labels and an edge list. Duplicate edges are merged; loops and
    /// repeated labels are rejected.
    pub fn from_edges<I>(labels: Vec<String>, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = labels.len();
        let mut seen = HashSet::with_capacity(n);
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(invalid(format!("duplicate vertex label {l:?}")));
            }
        }
        let mut adj = vec![BitSet::new(n); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(invalid(format!("edge ({u}, {v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(invalid(format!("loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let edge_count = adj.iter().map(BitSet::count).sum::<usize>() / 2;
        Ok(Graph {
            labels,
            adj,
            edge_count,
        })
    }

    /// Graph on `n` vertices labelled `1..=n`.
    pub fn with_indices<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Graph::from_edges((1..=n).map(|i| i.to_string()).collect(), edges)
    }

    pub fn empty() -> Graph {
        Graph {
            labels: Vec::new(),
            adj: Vec::new(),
            edge_count: 0,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.adj[v].is_empty()
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Copy of the graph with one edge removed. Labels are kept.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.order() || v >= self.order() || !self.has_edge(u, v) {
            return Err(invalid(format!("({u}, {v}) is not an edge")));
        }
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        g.edge_count -= 1;
        Ok(g)
    }

    /// Induced subgraph on `vertices` (in the given order), keeping labels.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(labels, edges)
    }

    /// Union of the neighborhoods of the vertices in `set`.
    pub fn neighborhood_of_set(&self, set: &BitSet) -> BitSet {
        let mut out = BitSet::new(self.order());
        for v in set {
            out.union_with(&self.adj[v]);
        }
        out
    }

    pub fn is_independent(&self, set: &BitSet) -> bool {
        set.iter().all(|v| !self.adj[v].intersects(set))
    }

    /// Vertices reachable from some vertex of `start` by a walk with exactly `length` edges.
    pub fn walk_frontier(&self, start: &BitSet, length: usize) -> BitSet {
        let mut cur = start.clone();
        for _ in 0..length {
            cur = self.neighborhood_of_set(&cur);
        }
        cur
    }

    /// The boolean power `A^length`: row `u` holds every `w` joined to `u` by a walk
    /// (vertices and edges may repeat) of exactly `length` edges.
    pub fn walk_reachability(&self, length: usize) -> Result<Vec<BitSet>> {
        if length == 0 {
            return Err(invalid("walk length must be at least 1"));
        }
        let mut rows = self.adj.clone();
        for _ in 1..length {
            rows = rows.iter().map(|r| self.neighborhood_of_set(r)).collect();
        }
        Ok(rows)
    }

    /// Breadth-first distances from a vertex set, capped at `cap` (unreached vertices get `cap`).
    pub fn distances_from_set(&self, sources: &BitSet, cap: usize) -> Vec<usize> {
        let n = self.order();
        let mut dist = vec![cap; n];
        let mut seen = sources.clone();
        let mut frontier = sources.clone();
        let mut d = 0;
        while !frontier.is_empty() && d < cap {
            for v in &frontier {
                dist[v] = d;
            }
            let mut next = self.neighborhood_of_set(&frontier);
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
            d += 1;
        }
        dist
    }

    /// Structural fingerprint (FNV-1a over order and edge list). Labels are ignored, so two
    /// graphs with the same vertex numbering and edges share a fingerprint.
    pub fn fingerprint(&self) -> u64 {
        const PRIME: u64 = 0x0000_0100_0000_01b3;
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut feed = |x: u64| {
            for b in x.to_le_bytes() {
                h ^= b as u64;
                h = h.wrapping_mul(PRIME);
            }
        };
        feed(self.order() as u64);
        for (u, v) in self.edges() {
            feed(u as u64);
            feed(v as u64);
        }
        h
    }

    /// Same vertex count and edge set; labels ignored.
    pub fn same_structure(&self, other: &Graph) -> bool {
        self.order() == other.order() && self.adj == other.adj
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::with_indices(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn rejects_loops_and_duplicate_labels() {
        assert!(Graph::with_indices(2, [(0, 0)]).is_err());
        assert!(Graph::from_edges(vec!["a".into(), "a".into()], []).is_err());
        assert!(Graph::with_indices(2, [(0, 2)]).is_err());
    }

    #[test]
    fn duplicate_edges_merge() {
        let g = Graph::with_indices(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn walk_parity_on_k2() {
        let k2 = Graph::with_indices(2, [(0, 1)]).unwrap();
        let r3 = k2.walk_reachability(3).unwrap();
        assert!(r3[0].contains(1) && !r3[0].contains(0));
        let r2 = k2.walk_reachability(2).unwrap();
        assert!(r2[0].contains(0) && !r2[0].contains(1));
        assert!(k2.walk_reachability(0).is_err());
    }

    #[test]
    fn closed_walks_of_length_five_on_c5() {
        let r5 = cycle(5).walk_reachability(5).unwrap();
        assert!((0..5).all(|v| r5[v].contains(v)));
        // C_7 has no closed walk of length 5.
        let r5 = cycle(7).walk_reachability(5).unwrap();
        assert!((0..7).all(|v| !r5[v].contains(v)));
    }

    #[test]
    fn distances_capped() {
        let g = cycle(9);
        let d = g.distances_from_set(&BitSet::from_indices(9, [0]), 3);
        assert_eq!(d, vec![0, 1, 2, 3, 3, 3, 3, 2, 1]);
    }

    #[test]
    fn edge_removal_and_fingerprint() {
        let g = cycle(5);
        let h = g.without_edge(0, 1).unwrap();
        assert_eq!(h.size(), 4);
        assert_ne!(g.fingerprint(), h.fingerprint());
        assert!(g.without_edge(0, 2).is_err());
        assert_eq!(g.fingerprint(), cycle(5).fingerprint());
    }
}
