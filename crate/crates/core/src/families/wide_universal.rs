use std::fmt;

use crate::error::{invalid, Result};
use crate::families::LoopedPath;
use crate::graph::Graph;

/// A vertex of `W(s,t)`: a tuple over `0..=s` with exactly one zero and at least one one.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WVertex(pub Vec<usize>);

impl WVertex {
    pub fn is_valid(&self, s: usize) -> bool {
        self.0.iter().all(|&x| x <= s)
            && self.0.iter().filter(|&&x| x == 0).count() == 1
            && self.0.contains(&1)
    }

    /// Position of the unique zero coordinate.
    pub fn zero_position(&self) -> usize {
        self.0.iter().position(|&x| x == 0).expect("W-vertex has a zero coordinate")
    }
}

impl fmt::Display for WVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.0.iter().any(|&x| x > 9);
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(if wide { "." } else { "" }))
    }
}

/// Vertices of `W(s,t)` in lexicographic order.
pub(crate) fn w_vertices(s: usize, t: usize) -> Vec<WVertex> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; t];
    loop {
        let v = WVertex(cur.clone());
        if v.is_valid(s) {
            out.push(v);
        }
        // Odometer increment, last coordinate fastest.
        let mut i = t;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < s {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
        }
    }
}

/// `W(s,t)`: induced subgraph of the `t`-th direct power of `H_s` (the path on `0..=s` with
/// a loop at `s`) on the tuples with exactly one `0` and at least one `1`.
pub fn wide_universal(s: usize, t: usize) -> Result<(Graph, Vec<WVertex>)> {
    if s == 0 {
        return Err(invalid("W(s,t) needs s >= 1"));
    }
    if t < 2 {
        return Err(invalid(format!("W(s,t) needs t >= 2, got t={t}")));
    }
    let h = LoopedPath::loop_at_end(s);
    let verts = w_vertices(s, t);
    let mut edges = Vec::new();
    for (i, x) in verts.iter().enumerate() {
        for (j, y) in verts.iter().enumerate().skip(i + 1) {
            if x.0.iter().zip(&y.0).all(|(&a, &b)| h.adjacent(a, b)) {
                edges.push((i, j));
            }
        }
    }
    let labels = verts.iter().map(|v| v.to_string()).collect();
    Ok((Graph::from_edges(labels, edges)?, verts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::complete;

    #[test]
    fn orders() {
        assert_eq!(wide_universal(2, 3).unwrap().0.order(), 9);
        assert_eq!(wide_universal(2, 4).unwrap().0.order(), 28);
        assert_eq!(wide_universal(3, 3).unwrap().0.order(), 15);
        // t * ((s)^(t-1) - (s-1)^(t-1))
        assert_eq!(wide_universal(3, 4).unwrap().0.order(), 4 * (27 - 8));
    }

    #[test]
    fn t2_is_k2() {
        for s in 1..=5 {
            let (g, v) = wide_universal(s, 2).unwrap();
            assert!(g.same_structure(&complete(2)));
            assert_eq!(v, vec![WVertex(vec![0, 1]), WVertex(vec![1, 0])]);
        }
    }

    #[test]
    fn lexicographic_and_valid() {
        let (_, v) = wide_universal(2, 3).unwrap();
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        assert!(v.iter().all(|x| x.is_valid(2)));
        assert!(wide_universal(2, 1).is_err());
        assert!(wide_universal(0, 3).is_err());
    }
}
