//! Proper colorings up to renaming of colors: partitions of the vertex set into independent
//! sets.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A partition of the vertex set into independent classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionColoring {
    pub classes: Vec<Vec<usize>>,
}

impl PartitionColoring {
    /// Builds classes from a class index per vertex; classes are ordered by their
    /// smallest vertex.
    pub fn from_assignment(assignment: &[usize]) -> Self {
        let mut map = std::collections::HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (v, &a) in assignment.iter().enumerate() {
            let idx = *map.entry(a).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[idx].push(v);
        }
        PartitionColoring { classes }
    }

    pub fn from_coloring(c: &Coloring) -> Self {
        let colors: Vec<usize> = {
            let palette: Vec<i64> = c.palette().into_iter().collect();
            c.colors().iter().map(|x| palette.binary_search(x).unwrap()).collect()
        };
        Self::from_assignment(&colors)
    }

    /// Class `i` gets color `i + 1`.
    pub fn to_coloring(&self) -> Coloring {
        let n = self.classes.iter().map(|c| c.len()).sum();
        let mut colors = vec![0i64; n];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                colors[v] = i as i64 + 1;
            }
        }
        Coloring::new(colors)
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Checks disjointness, coverage and independence of the classes.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut seen = vec![false; g.order()];
        for class in &self.classes {
            for &v in class {
                if v >= g.order() || seen[v] {
                    return Err(Error::Verification(format!("vertex {v} is out of range or repeated in the partition")));
                }
                seen[v] = true;
            }
            for (i, &u) in class.iter().enumerate() {
                if let Some(&v) = class[i + 1..].iter().find(|&&v| g.has_edge(u, v)) {
                    return Err(Error::ImproperColoring {
                        u,
                        v,
                        color: 0,
                    });
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::Verification(format!("vertex {v} is not covered by the partition")));
        }
        Ok(())
    }
}

/// Calls `f(assignment, classes)` for every partition of `V(g)` into independent sets,
/// each exactly once: class indices form a restricted growth string in vertex order.
pub fn for_each_independent_partition<F>(g: &Graph, mut f: F) -> ControlFlow<()>
where
    F: FnMut(&[usize], usize) -> ControlFlow<()>,
{
    let n = g.order();
    let mut assignment = vec![0usize; n];
    fn rec<F: FnMut(&[usize], usize) -> ControlFlow<()>>(
        g: &Graph,
        v: usize,
        classes: usize,
        assignment: &mut Vec<usize>,
        f: &mut F,
    ) -> ControlFlow<()> {
        if v == g.order() {
            return f(assignment, classes);
        }
        for c in 0..=classes {
            if g.neighbors(v).iter().take_while(|&u| u < v).any(|u| assignment[u] == c) {
                continue;
            }
            assignment[v] = c;
            rec(g, v + 1, classes.max(c + 1), assignment, f)?;
        }
        ControlFlow::Continue(())
    }
    rec(g, 0, 0, &mut assignment, &mut f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle};

    fn count(g: &Graph) -> usize {
        let mut k = 0;
        let _ = for_each_independent_partition(g, |_, _| {
            k += 1;
            ControlFlow::Continue(())
        });
        k
    }

    #[test]
    fn counts() {
        // Edgeless graph on 4 vertices: Bell number 15.
        assert_eq!(count(&Graph::with_indices(4, []).unwrap()), 15);
        assert_eq!(count(&complete(4)), 1);
        // Proper colorings of C_4 up to renaming: {02}{13}, {02}{1}{3}, {13}{0}{2}, all singletons.
        assert_eq!(count(&cycle(4).unwrap()), 4);
    }

    #[test]
    fn round_trip_and_validate() {
        let g = cycle(5).unwrap();
        let p = PartitionColoring::from_coloring(&Coloring::new(vec![4, 7, 4, 7, -1]));
        assert_eq!(p.classes, vec![vec![0, 2], vec![1, 3], vec![4]]);
        p.validate(&g).unwrap();
        assert_eq!(p.to_coloring().colors(), &[1, 2, 1, 2, 3]);
        let bad = PartitionColoring {
            classes: vec![vec![0, 1], vec![2, 3, 4]],
        };
        assert!(bad.validate(&g).is_err());
    }
}
