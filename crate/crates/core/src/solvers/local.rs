//! Local chromatic number.
//!
//! The objective only depends on the partition of the vertex set into color classes, so
//! the search runs over independent-set partitions with canonical class numbering (a new
//! class always gets the next free index). The number of classes seen by each vertex only
//! grows as vertices are added, which makes it a sound pruning bound.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::coloring::local_profile;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solvers::budget::{Limits, Meter};
use crate::solvers::chromatic::{dsatur_greedy, greedy_clique};
use crate::solvers::hom::search_order;
use crate::solvers::partitions::{for_each_independent_partition, PartitionColoring};

pub const DEFAULT_LOCAL_LIMIT: usize = 25;
pub const EXHAUSTIVE_LOCAL_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalResult {
    /// Best upper bound, attained by `partition`; the local chromatic number when `exact`.
    pub value: usize,
    pub lower: usize,
    pub exact: bool,
    pub partition: PartitionColoring,
    pub nodes: u64,
}

fn is_bipartite(g: &Graph) -> bool {
    let n = g.order();
    let mut side = vec![usize::MAX; n];
    for s in 0..n {
        if side[s] != usize::MAX {
            continue;
        }
        side[s] = 0;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for u in g.neighbors(v) {
                if side[u] == usize::MAX {
                    side[u] = 1 - side[v];
                    stack.push(u);
                } else if side[u] == side[v] {
                    return false;
                }
            }
        }
    }
    true
}

/// Lower bound valid without search: a clique `K` forces `|K| - 1` colors around each of
/// its vertices, and only bipartite graphs have local chromatic number at most 2.
fn static_lower_bound(g: &Graph) -> usize {
    let clique = greedy_clique(g).len();
    let parity = if g.order() == 0 {
        0
    } else if g.size() == 0 {
        1
    } else if is_bipartite(g) {
        2
    } else {
        3
    };
    clique.max(parity)
}

struct Search<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    class_of: Vec<usize>,
    members: Vec<BitSet>,
    seen: Vec<BitSet>,
    count: Vec<usize>,
    best: usize,
    best_assignment: Option<Vec<usize>>,
    lower: usize,
    meter: Meter,
}

impl Search<'_> {
    fn run(&mut self, k: usize) {
        if k == self.order.len() {
            let value = self.count.iter().copied().max().unwrap_or(0) + 1;
            if value < self.best {
                self.best = value;
                self.best_assignment = Some(self.class_of.clone());
            }
            return;
        }
        if self.best <= self.lower || self.meter.tick() {
            return;
        }
        let v = self.order[k];
        let open = self.members.len();
        for c in 0..=open {
            if c < open && self.members[c].intersects(self.g.neighbors(v)) {
                continue;
            }
            if c == open {
                self.members.push(BitSet::new(self.g.order()));
            }
            self.class_of[v] = c;
            self.members[c].insert(v);
            let mut touched = Vec::new();
            let mut ok = true;
            for u in self.g.neighbors(v) {
                if self.seen[u].contains(c) {
                    continue;
                }
                self.seen[u].insert(c);
                self.count[u] += 1;
                touched.push(u);
                if self.count[u] + 1 >= self.best {
                    ok = false;
                    break;
                }
            }
            if ok {
                self.run(k + 1);
            }
            for u in touched {
                self.seen[u].remove(c);
                self.count[u] -= 1;
            }
            self.members[c].remove(v);
            if c == open {
                self.members.pop();
            }
            self.class_of[v] = usize::MAX;
            if self.meter.exhausted || self.best <= self.lower {
                return;
            }
        }
    }
}

/// Local chromatic number by branch and bound over independent-set partitions.
pub fn local_chromatic_with(g: &Graph, limits: Limits) -> Result<LocalResult> {
    limits.check("local chromatic number", g.order(), DEFAULT_LOCAL_LIMIT)?;
    let n = g.order();
    let greedy = dsatur_greedy(g);
    let start = local_profile(g, &greedy)?.max_plus_one;
    let lower = static_lower_bound(g);
    let mut s = Search {
        g,
        order: search_order(g).0,
        class_of: vec![usize::MAX; n],
        members: Vec::new(),
        seen: vec![BitSet::new(n.max(1)); n],
        count: vec![0; n],
        best: start,
        best_assignment: None,
        lower,
        meter: limits.budget.meter(),
    };
    s.run(0);
    let partition = match &s.best_assignment {
        Some(a) => PartitionColoring::from_assignment(a),
        None => PartitionColoring::from_coloring(&greedy),
    };
    partition.validate(g)?;
    let value = local_profile(g, &partition.to_coloring())?.max_plus_one;
    if value != s.best {
        return Err(Error::Verification(format!("partition profile {value} differs from search value {}", s.best)));
    }
    let exact = !s.meter.exhausted || value <= lower;
    Ok(LocalResult {
        value,
        lower: if exact { value } else { lower },
        exact,
        partition,
        nodes: s.meter.nodes,
    })
}

/// Local chromatic number with the default size limit and no search budget.
pub fn local_chromatic(g: &Graph) -> Result<LocalResult> {
    local_chromatic_with(g, Limits::default())
}

/// Reference oracle: evaluates every independent-set partition, no pruning.
pub fn local_chromatic_exhaustive(g: &Graph) -> Result<(usize, PartitionColoring)> {
    if g.order() > EXHAUSTIVE_LOCAL_LIMIT {
        return Err(Error::ExactModeRefused(format!(
            "exhaustive local chromatic number on {} vertices exceeds the limit of {EXHAUSTIVE_LOCAL_LIMIT}",
            g.order()
        )));
    }
    let mut best: Option<(usize, Vec<usize>)> = None;
    let _ = for_each_independent_partition(g, |a, _| {
        let value = (0..g.order())
            .map(|v| {
                let mut cs: Vec<usize> = g.neighbors(v).iter().map(|u| a[u]).collect();
                cs.sort_unstable();
                cs.dedup();
                cs.len()
            })
            .max()
            .unwrap_or(0)
            + 1;
        if best.as_ref().is_none_or(|(b, _)| value < *b) {
            best = Some((value, a.to_vec()));
        }
        ControlFlow::Continue(())
    });
    let (value, a) = best.unwrap_or((1, Vec::new()));
    Ok((value, PartitionColoring::from_assignment(&a)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, gen_mycielski, kneser, schrijver};
    use crate::solvers::budget::Budget;

    #[test]
    fn small_values() {
        assert_eq!(local_chromatic(&cycle(5).unwrap()).unwrap().value, 3);
        assert_eq!(local_chromatic(&cycle(6).unwrap()).unwrap().value, 2);
        assert_eq!(local_chromatic(&complete(4)).unwrap().value, 4);
        assert_eq!(local_chromatic(&schrijver(6, 2).unwrap()).unwrap().value, 4);
        assert_eq!(local_chromatic(&kneser(5, 2).unwrap()).unwrap().value, 3);
        let grotzsch = gen_mycielski(&cycle(5).unwrap(), 2).unwrap();
        assert_eq!(local_chromatic(&grotzsch).unwrap().value, 4);
        assert_eq!(local_chromatic(&Graph::empty()).unwrap().value, 1);
        assert_eq!(local_chromatic(&Graph::with_indices(3, []).unwrap()).unwrap().value, 1);
    }

    #[test]
    fn oracle_agrees_on_small_graphs() {
        for g in [cycle(5).unwrap(), cycle(7).unwrap(), kneser(5, 2).unwrap(), complete(3)] {
            assert_eq!(local_chromatic(&g).unwrap().value, local_chromatic_exhaustive(&g).unwrap().0);
        }
        assert!(local_chromatic_exhaustive(&complete(13)).is_err());
    }

    #[test]
    fn budget_gives_bounds() {
        let g = schrijver(7, 2).unwrap();
        let r = local_chromatic_with(&g, Limits::with_budget(Budget::nodes(10))).unwrap();
        assert!(r.lower <= 5 && 5 <= r.value);
        local_profile(&g, &r.partition.to_coloring()).unwrap();
    }
}
