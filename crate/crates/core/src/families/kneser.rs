use std::fmt;

use crate::error::{invalid, Result};
use crate::graph::Graph;

/// A `k`-subset of `[n] = {1..n}`, stored as a bitmask (bit `i - 1` for element `i`).
///
/// Numeric order of the masks is colexicographic order of the subsets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetVertex {
    mask: u128,
    n: u8,
}

impl SubsetVertex {
    pub fn from_elements(n: usize, elements: &[usize]) -> Result<Self> {
        if n > 128 {
            return Err(invalid("ground sets larger than 128 are not supported"));
        }
        let mut mask = 0u128;
        for &e in elements {
            if e == 0 || e > n {
                return Err(invalid(format!("element {e} outside [1, {n}]")));
            }
            mask |= 1 << (e - 1);
        }
        Ok(SubsetVertex { mask, n: n as u8 })
    }

    pub(crate) fn from_mask(n: usize, mask: u128) -> Self {
        SubsetVertex { mask, n: n as u8 }
    }

    pub fn mask(&self) -> u128 {
        self.mask
    }

    pub fn ground(&self) -> usize {
        self.n as usize
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, e: usize) -> bool {
        e >= 1 && e <= self.ground() && self.mask >> (e - 1) & 1 == 1
    }

    /// Elements in increasing order (1-based).
    pub fn elements(&self) -> Vec<usize> {
        (0..self.ground()).filter(|&i| self.mask >> i & 1 == 1).map(|i| i + 1).collect()
    }

    pub fn is_disjoint(&self, other: &SubsetVertex) -> bool {
        self.mask & other.mask == 0
    }

    /// No two cyclically consecutive elements of `[n]`.
    pub fn is_stable(&self) -> bool {
        is_stable_mask(self.mask, self.ground())
    }
}

impl fmt::Display for SubsetVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements().iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

fn is_stable_mask(mask: u128, n: usize) -> bool {
    if n < 2 {
        return true;
    }
    let consecutive = mask & (mask >> 1) != 0;
    let wraps = mask & 1 == 1 && mask >> (n - 1) & 1 == 1;
    !consecutive && !wraps
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

fn check_params(n: usize, k: usize) -> Result<()> {
    if k == 0 || n < 2 * k {
        return Err(invalid(format!("need n >= 2k >= 2, got n={n}, k={k}")));
    }
    if n > 128 {
        return Err(invalid("ground sets larger than 128 are not supported"));
    }
    Ok(())
}

/// All `k`-subsets of `[n]` in colexicographic order.
pub fn kneser_vertices(n: usize, k: usize) -> Result<Vec<SubsetVertex>> {
    check_params(n, k)?;
    let count = binomial(n, k);
    if count > 2_000_000 {
        return Err(invalid(format!("KG({n},{k}) has {count} vertices; refusing to enumerate")));
    }
    let mut out = Vec::with_capacity(count as usize);
    // Gosper's hack: successive masks with k bits in increasing numeric order.
    let mut mask: u128 = if k == 128 { u128::MAX } else { (1u128 << k) - 1 };
    for i in 0..count {
        out.push(SubsetVertex::from_mask(n, mask));
        if i + 1 < count {
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    Ok(out)
}

/// The stable `k`-subsets of the cyclically ordered `[n]`, in colexicographic order.
pub fn schrijver_vertices(n: usize, k: usize) -> Result<Vec<SubsetVertex>> {
    check_params(n, k)?;
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(k);
    collect_stable(n, k, 0, 0, &mut stack, &mut out);
    out.sort();
    Ok(out)
}

fn collect_stable(n: usize, k: usize, next: usize, mask: u128, stack: &mut Vec<usize>, out: &mut Vec<SubsetVertex>) {
    if stack.len() == k {
        if is_stable_mask(mask, n) {
            out.push(SubsetVertex::from_mask(n, mask));
        }
        return;
    }
    let remaining = k - stack.len();
    // Each further element needs its own slot plus a gap.
    let mut e = next;
    while e + 2 * (remaining - 1) < n {
        stack.push(e);
        collect_stable(n, k, e + 2, mask | 1 << e, stack, out);
        stack.pop();
        e += 1;
    }
}

/// `|V(SG(n,k))| = (n/k) * C(n-k-1, k-1)`.
pub fn schrijver_order(n: usize, k: usize) -> u128 {
    n as u128 * binomial(n - k - 1, k - 1) / k as u128
}

fn disjointness_graph(vertices: &[SubsetVertex]) -> Result<Graph> {
    let labels = vertices.iter().map(|v| v.to_string()).collect();
    let mut edges = Vec::new();
    for (i, a) in vertices.iter().enumerate() {
        for (j, b) in vertices.iter().enumerate().skip(i + 1) {
            if a.is_disjoint(b) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(labels, edges)
}

/// The Kneser graph `KG(n,k)`: `k`-subsets of `[n]`, adjacent iff disjoint.
pub fn kneser(n: usize, k: usize) -> Result<Graph> {
    disjointness_graph(&kneser_vertices(n, k)?)
}

/// The Schrijver graph `SG(n,k)`: the subgraph of `KG(n,k)` induced by stable subsets.
pub fn schrijver(n: usize, k: usize) -> Result<Graph> {
    let verts = schrijver_vertices(n, k)?;
    debug_assert_eq!(verts.len() as u128, schrijver_order(n, k));
    disjointness_graph(&verts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen() {
        let g = kneser(5, 2).unwrap();
        assert_eq!((g.order(), g.size()), (10, 15));
        assert!((0..10).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn colex_order() {
        let v = kneser_vertices(4, 2).unwrap();
        let labels: Vec<String> = v.iter().map(|s| s.to_string()).collect();
        assert_eq!(labels, ["{1,2}", "{1,3}", "{2,3}", "{1,4}", "{2,4}", "{3,4}"]);
    }

    #[test]
    fn kneser_2k_k_is_a_matching() {
        for k in 1..=4 {
            let g = kneser(2 * k, k).unwrap();
            assert_eq!(g.order() as u128, binomial(2 * k, k));
            assert!((0..g.order()).all(|v| g.degree(v) == 1));
        }
    }

    #[test]
    fn schrijver_orders() {
        assert_eq!(schrijver(6, 2).unwrap().order(), 9);
        assert_eq!(schrijver(6, 2).unwrap().size(), 18);
        assert_eq!(schrijver_vertices(33, 15).unwrap().len(), 1496);
        for (n, k) in [(5, 2), (7, 3), (9, 4), (10, 3), (12, 5), (29, 12)] {
            assert_eq!(schrijver_vertices(n, k).unwrap().len() as u128, schrijver_order(n, k), "SG({n},{k})");
        }
    }

    #[test]
    fn stable_subsets_avoid_cyclic_neighbors() {
        for v in schrijver_vertices(9, 3).unwrap() {
            assert!(v.is_stable());
            assert!(!(v.contains(1) && v.contains(9)));
        }
        assert!(!SubsetVertex::from_elements(5, &[1, 5]).unwrap().is_stable());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(kneser(3, 2).is_err());
        assert!(schrijver(5, 0).is_err());
        assert!(SubsetVertex::from_elements(4, &[5]).is_err());
    }
}
