//! Alternating multicolored complete bipartite subgraphs.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::coloring::{ensure_proper, Coloring};
use crate::error::{Error, Result};
use crate::families::binomial;
use crate::graph::Graph;
use crate::solvers::partitions::{for_each_independent_partition, PartitionColoring};

pub const EXHAUSTIVE_ZIGZAG_LIMIT: usize = 12;

/// A `K_{ceil(t/2), floor(t/2)}` with distinct colors `c_1 < ... < c_t`; the vertex of color
/// `c_i` lies in `side_odd` for odd `i` and in `side_even` for even `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZigzagWitness {
    pub side_odd: Vec<usize>,
    pub side_even: Vec<usize>,
    pub colors: Vec<i64>,
}

impl ZigzagWitness {
    pub fn verify(&self, g: &Graph, c: &Coloring) -> Result<()> {
        let fail = |m: &str| Err(Error::Verification(format!("zig-zag witness: {m}")));
        let t = self.colors.len();
        if self.side_odd.len() != t.div_ceil(2) || self.side_even.len() != t / 2 {
            return fail("side sizes do not match the number of colors");
        }
        if !self.colors.windows(2).all(|w| w[0] < w[1]) {
            return fail("colors are not strictly increasing");
        }
        for (i, &color) in self.colors.iter().enumerate() {
            let v = if i % 2 == 0 { self.side_odd[i / 2] } else { self.side_even[i / 2] };
            if v >= g.order() || c.color(v) != color {
                return fail("colors do not alternate between the sides");
            }
        }
        for &u in &self.side_odd {
            for &v in &self.side_even {
                if !g.has_edge(u, v) {
                    return fail("sides are not completely joined");
                }
            }
        }
        Ok(())
    }
}

/// Picks one vertex from each class so that vertices on different sides are adjacent.
fn biclique(g: &Graph, classes: &[&BitSet], side: &[bool]) -> Option<Vec<usize>> {
    fn rec(g: &Graph, classes: &[&BitSet], side: &[bool], picked: &mut Vec<usize>) -> bool {
        let i = picked.len();
        if i == classes.len() {
            return true;
        }
        let mut cand = classes[i].clone();
        for (j, &v) in picked.iter().enumerate() {
            if side[j] != side[i] {
                cand.intersect_with(g.neighbors(v));
            }
        }
        for v in &cand {
            picked.push(v);
            if rec(g, classes, side, picked) {
                return true;
            }
            picked.pop();
        }
        false
    }
    let mut picked = Vec::with_capacity(classes.len());
    rec(g, classes, side, &mut picked).then_some(picked)
}

/// Calls `f` on every `t`-subset of `0..k` in lexicographic order.
fn for_each_subset(k: usize, t: usize, mut f: impl FnMut(&[usize]) -> ControlFlow<()>) -> ControlFlow<()> {
    fn rec(k: usize, t: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> ControlFlow<()>) -> ControlFlow<()> {
        if cur.len() == t {
            return f(cur);
        }
        for x in start..=k - (t - cur.len()) {
            cur.push(x);
            rec(k, t, x + 1, cur, f)?;
            cur.pop();
        }
        ControlFlow::Continue(())
    }
    if t > k {
        return ControlFlow::Continue(());
    }
    rec(k, t, 0, &mut Vec::with_capacity(t), &mut f)
}

/// Searches all increasing `t`-tuples of colors for an alternating complete bipartite
/// subgraph. `None` is a verified negative.
pub fn zigzag_find(g: &Graph, c: &Coloring, t: usize) -> Result<Option<ZigzagWitness>> {
    ensure_proper(g, c)?;
    if t == 0 {
        return Err(crate::error::invalid("zig-zag search needs t >= 1"));
    }
    let classes = c.classes();
    let palette: Vec<i64> = classes.keys().copied().collect();
    let sets: Vec<&BitSet> = classes.values().collect();
    let side: Vec<bool> = (0..t).map(|i| i % 2 == 0).collect();
    let mut found = None;
    let _ = for_each_subset(palette.len(), t, |pick| {
        let chosen: Vec<&BitSet> = pick.iter().map(|&i| sets[i]).collect();
        match biclique(g, &chosen, &side) {
            Some(vs) => {
                found = Some(ZigzagWitness {
                    side_odd: vs.iter().step_by(2).copied().collect(),
                    side_even: vs.iter().skip(1).step_by(2).copied().collect(),
                    colors: pick.iter().map(|&i| palette[i]).collect(),
                });
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        }
    });
    if let Some(w) = &found {
        w.verify(g, c)?;
    }
    Ok(found)
}

/// Number of ways to split `t` colors into sides of sizes `ceil(t/2)` and `floor(t/2)`,
/// the sides unordered.
pub fn side_split_count(t: usize) -> usize {
    let n = binomial(t, t / 2) as usize;
    if t % 2 == 0 {
        n / 2
    } else {
        n
    }
}

/// Splits of the `t` classes of a `t`-class partition that are realized by a complete
/// bipartite subgraph with one vertex of every class.
pub fn realized_splits(g: &Graph, classes: &[BitSet]) -> usize {
    let t = classes.len();
    let refs: Vec<&BitSet> = classes.iter().collect();
    let mut count = 0;
    let _ = for_each_subset(t, t.div_ceil(2), |big| {
        // Count each unordered split once: for even t, the side holding class 0.
        if t % 2 == 0 && big[0] != 0 {
            return ControlFlow::Continue(());
        }
        let side: Vec<bool> = (0..t).map(|i| big.contains(&i)).collect();
        if biclique(g, &refs, &side).is_some() {
            count += 1;
        }
        ControlFlow::Continue(())
    });
    count
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZigzagReport {
    pub t: usize,
    pub partitions: u64,
    pub partitions_with_witness: u64,
    pub t_class_partitions: u64,
    /// Smallest number of realized side splits over the `t`-class partitions.
    pub min_realized_splits: Option<usize>,
    pub required_splits: usize,
    /// First partition without a witness, if any.
    pub counterexample: Option<PartitionColoring>,
}

impl ZigzagReport {
    pub fn all_have_witness(&self) -> bool {
        self.partitions == self.partitions_with_witness
    }

    pub fn split_count_holds(&self) -> bool {
        self.min_realized_splits.is_none_or(|m| m >= self.required_splits)
    }
}

/// Runs [`zigzag_find`] on every proper coloring up to renaming of colors (canonical class
/// numbering) and counts realized side splits on the colorings with exactly `t` classes.
pub fn zigzag_exhaustive(g: &Graph, t: usize) -> Result<ZigzagReport> {
    if g.order() > EXHAUSTIVE_ZIGZAG_LIMIT {
        return Err(Error::ExactModeRefused(format!(
            "exhaustive zig-zag check on {} vertices exceeds the limit of {EXHAUSTIVE_ZIGZAG_LIMIT}",
            g.order()
        )));
    }
    let mut report = ZigzagReport {
        t,
        partitions: 0,
        partitions_with_witness: 0,
        t_class_partitions: 0,
        min_realized_splits: None,
        required_splits: side_split_count(t),
        counterexample: None,
    };
    let mut err = None;
    let _ = for_each_independent_partition(g, |a, k| {
        report.partitions += 1;
        let c = Coloring::new(a.iter().map(|&x| x as i64).collect());
        match zigzag_find(g, &c, t) {
            Ok(Some(_)) => report.partitions_with_witness += 1,
            Ok(None) => {
                report.counterexample.get_or_insert_with(|| PartitionColoring::from_assignment(a));
            }
            Err(e) => {
                err = Some(e);
                return ControlFlow::Break(());
            }
        }
        if k == t {
            report.t_class_partitions += 1;
            let classes: Vec<BitSet> = c.classes().into_values().collect();
            let r = realized_splits(g, &classes);
            report.min_realized_splits = Some(report.min_realized_splits.map_or(r, |m| m.min(r)));
        }
        ControlFlow::Continue(())
    });
    match err {
        Some(e) => Err(e),
        None => Ok(report),
    }
}
