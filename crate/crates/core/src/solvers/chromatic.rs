//! Exact chromatic number by DSATUR branch and bound.

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::coloring::Coloring;
use crate::error::Result;
use crate::graph::Graph;
use crate::solvers::budget::{Budget, Limits, Meter};

pub const DEFAULT_CHROMATIC_LIMIT: usize = 200;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromaticResult {
    /// Best upper bound; the chromatic number when `exact`.
    pub value: usize,
    pub lower: usize,
    pub exact: bool,
    /// A proper coloring with `value` colors (colors `0..value`).
    pub coloring: Coloring,
    /// Vertices of a clique, the certificate for the starting lower bound.
    pub clique: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Colorable(Coloring),
    NotColorable,
    Unknown,
}

/// Greedy clique: from every start vertex, repeatedly add the candidate with most
/// candidate neighbors.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut best = Vec::new();
    for start in 0..n {
        let mut clique = vec![start];
        let mut cand = g.neighbors(start).clone();
        while let Some(v) = cand.iter().max_by_key(|&v| (g.neighbors(v).intersection_count(&cand), std::cmp::Reverse(v))) {
            clique.push(v);
            cand.intersect_with(g.neighbors(v));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

struct Dsatur<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<Option<usize>>,
    /// `counts[v * k + c]`: colored neighbors of `v` with color `c`.
    counts: Vec<u32>,
    sat: Vec<usize>,
    meter: Meter,
}

impl Dsatur<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = Some(c);
        for u in self.g.neighbors(v) {
            let slot = &mut self.counts[u * self.k + c];
            if *slot == 0 {
                self.sat[u] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = None;
        for u in self.g.neighbors(v) {
            let slot = &mut self.counts[u * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[u] -= 1;
            }
        }
    }

    fn pick(&self) -> Option<usize> {
        (0..self.g.order())
            .filter(|&v| self.color[v].is_none())
            .max_by_key(|&v| (self.sat[v], self.g.degree(v), std::cmp::Reverse(v)))
    }

    fn run(&mut self, used: usize) -> bool {
        let Some(v) = self.pick() else {
            return true;
        };
        if self.meter.tick() {
            return false;
        }
        // Colors beyond the first unused one are symmetric to it.
        for c in 0..(used + 1).min(self.k) {
            if self.counts[v * self.k + c] != 0 {
                continue;
            }
            self.assign(v, c);
            if self.run(used.max(c + 1)) {
                return true;
            }
            self.unassign(v, c);
            if self.meter.exhausted {
                return false;
            }
        }
        false
    }
}

fn decide(g: &Graph, k: usize, meter: Meter) -> (Decision, Meter) {
    if g.order() == 0 {
        return (Decision::Colorable(Coloring::new(vec![])), meter);
    }
    if k == 0 {
        return (Decision::NotColorable, meter);
    }
    let mut s = Dsatur {
        g,
        k,
        color: vec![None; g.order()],
        counts: vec![0; g.order() * k],
        sat: vec![0; g.order()],
        meter,
    };
    let out = if s.run(0) {
        Decision::Colorable(Coloring::new(s.color.iter().map(|c| c.unwrap() as i64).collect()))
    } else if s.meter.exhausted {
        Decision::Unknown
    } else {
        Decision::NotColorable
    };
    (out, s.meter)
}

/// Whether `g` has a proper coloring with at most `m` colors.
pub fn chromatic_decision(g: &Graph, m: usize, budget: Budget) -> Decision {
    decide(g, m, budget.meter()).0
}

/// Single-pass DSATUR greedy coloring with colors `0..`.
pub fn dsatur_greedy(g: &Graph) -> Coloring {
    let n = g.order();
    let mut color: Vec<Option<usize>> = vec![None; n];
    let mut seen: Vec<BitSet> = vec![BitSet::new(n.max(1)); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v].is_none())
            .max_by_key(|&v| (seen[v].count(), g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let c = (0..).find(|&c| !seen[v].contains(c)).unwrap();
        color[v] = Some(c);
        for u in g.neighbors(v) {
            seen[u].insert(c);
        }
    }
    Coloring::new(color.into_iter().map(|c| c.unwrap() as i64).collect())
}

pub fn chromatic_number_with(g: &Graph, limits: Limits) -> Result<ChromaticResult> {
    limits.check("chromatic number", g.order(), DEFAULT_CHROMATIC_LIMIT)?;
    let clique = greedy_clique(g);
    let mut coloring = dsatur_greedy(g);
    let mut upper = coloring.num_colors();
    let lower = clique.len();
    let mut meter = limits.budget.meter();
    let mut proven = lower;
    // Ascending decisions: the first colorable `m` is the answer.
    for m in lower..upper {
        let (d, back) = decide(g, m, meter);
        meter = back;
        match d {
            Decision::Colorable(c) => {
                coloring = c;
                upper = m;
                break;
            }
            Decision::NotColorable => proven = m + 1,
            Decision::Unknown => break,
        }
    }
    Ok(ChromaticResult {
        value: upper,
        lower: proven.min(upper),
        exact: proven >= upper,
        coloring,
        clique,
    })
}

/// Exact chromatic number with the default limits.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    let r = chromatic_number_with(g, Limits::default())?;
    debug_assert!(r.exact);
    Ok(r.value)
}
