//! Fractional chromatic number as an exact rational linear program.
//!
//! We solve the fractional clique LP
//! `max sum_v y_v  s.t.  sum_{v in I} y_v <= 1` for every maximal independent set `I`,
//! `y >= 0`, whose optimal dual is a fractional coloring. Both optimal vectors are
//! returned; equal objective values certify optimality by weak duality.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::graph::Graph;
use crate::solvers::budget::Limits;

pub const DEFAULT_FRACTIONAL_LIMIT: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FractionalResult {
    pub value: Fraction,
    /// All maximal independent sets, each sorted.
    pub independent_sets: Vec<Vec<usize>>,
    /// Fractional coloring: a weight per entry of `independent_sets`.
    pub set_weights: Vec<Fraction>,
    /// Fractional clique: a weight per vertex.
    pub vertex_weights: Vec<Fraction>,
}

impl FractionalResult {
    /// Re-checks both certificates against `g`.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let fail = |m: String| Err(Error::Verification(m));
        if self.set_weights.len() != self.independent_sets.len() || self.vertex_weights.len() != g.order() {
            return fail("certificate dimensions do not match".into());
        }
        let zero = Fraction::zero();
        let one = Fraction::one();
        if self.set_weights.iter().chain(&self.vertex_weights).any(|w| *w < zero) {
            return fail("negative weight".into());
        }
        let mut cover = vec![Fraction::zero(); g.order()];
        for (set, w) in self.independent_sets.iter().zip(&self.set_weights) {
            let bits = BitSet::from_indices(g.order(), set.iter().copied());
            if !g.is_independent(&bits) {
                return fail(format!("set {set:?} is not independent"));
            }
            let load = set.iter().fold(Fraction::zero(), |acc, &v| &acc + &self.vertex_weights[v]);
            if load > one {
                return fail(format!("independent set {set:?} carries clique weight {load} > 1"));
            }
            for &v in set {
                cover[v] = &cover[v] + w;
            }
        }
        if let Some(v) = cover.iter().position(|c| *c < one) {
            return fail(format!("vertex {v} is covered with weight {} < 1", cover[v]));
        }
        let primal = self.set_weights.iter().fold(Fraction::zero(), |a, w| &a + w);
        let dual = self.vertex_weights.iter().fold(Fraction::zero(), |a, w| &a + w);
        if primal != self.value || dual != self.value {
            return fail(format!("objective mismatch: coloring {primal}, clique {dual}, value {}", self.value));
        }
        Ok(())
    }
}

/// All maximal independent sets (Bron–Kerbosch with pivoting on the complement).
pub fn maximal_independent_sets(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let non_adj: Vec<BitSet> = (0..n)
        .map(|v| {
            let mut s = BitSet::full(n);
            s.difference_with(g.neighbors(v));
            s.remove(v);
            s
        })
        .collect();
    let mut out = Vec::new();
    fn bk(non_adj: &[BitSet], r: &mut Vec<usize>, mut p: BitSet, mut x: BitSet, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() {
            if x.is_empty() {
                let mut set = r.clone();
                set.sort_unstable();
                out.push(set);
            }
            return;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .max_by_key(|&u| non_adj[u].intersection_count(&p))
            .unwrap();
        let mut branch = p.clone();
        branch.difference_with(&non_adj[pivot]);
        for v in &branch {
            let mut np = p.clone();
            np.intersect_with(&non_adj[v]);
            let mut nx = x.clone();
            nx.intersect_with(&non_adj[v]);
            r.push(v);
            bk(non_adj, r, np, nx, out);
            r.pop();
            p.remove(v);
            x.insert(v);
        }
    }
    if n > 0 {
        bk(&non_adj, &mut Vec::new(), BitSet::full(n), BitSet::new(n), &mut out);
    }
    out.sort();
    out
}

/// Condensed simplex tableau: `x_B[i] = b[i] - sum_j a[i][j] x_N[j]`,
/// `z = d + sum_j c[j] x_N[j]`.
struct Tableau {
    a: Vec<Vec<BigRational>>,
    b: Vec<BigRational>,
    c: Vec<BigRational>,
    d: BigRational,
    basic: Vec<usize>,
    nonbasic: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, s: usize) {
        let ars = self.a[r][s].clone();
        let inv = ars.recip();
        let cols = self.c.len();
        for j in 0..cols {
            if j != s {
                self.a[r][j] = &self.a[r][j] * &inv;
            }
        }
        self.a[r][s] = inv.clone();
        self.b[r] = &self.b[r] * &inv;
        let row_r = self.a[r].clone();
        let b_r = self.b[r].clone();
        for i in 0..self.a.len() {
            if i == r || self.a[i][s].is_zero() {
                continue;
            }
            let ais = self.a[i][s].clone();
            for j in 0..cols {
                if j != s && !row_r[j].is_zero() {
                    self.a[i][j] = &self.a[i][j] - &ais * &row_r[j];
                }
            }
            self.a[i][s] = -(&ais * &inv);
            self.b[i] = &self.b[i] - &ais * &b_r;
        }
        let cs = self.c[s].clone();
        for j in 0..cols {
            if j != s {
                self.c[j] = &self.c[j] - &cs * &row_r[j];
            }
        }
        self.c[s] = -(&cs * &inv);
        self.d = &self.d + &cs * &b_r;
        std::mem::swap(&mut self.basic[r], &mut self.nonbasic[s]);
    }

    /// Bland's rule: smallest-index entering and leaving variables; terminates on
    /// degenerate problems.
    fn solve(&mut self) {
        loop {
            let entering = (0..self.c.len())
                .filter(|&j| self.c[j].is_positive())
                .min_by_key(|&j| self.nonbasic[j]);
            let Some(s) = entering else {
                return;
            };
            let mut leave: Option<(usize, BigRational)> = None;
            for i in 0..self.a.len() {
                if !self.a[i][s].is_positive() {
                    continue;
                }
                let ratio = &self.b[i] / &self.a[i][s];
                let better = match &leave {
                    None => true,
                    Some((r, best)) => ratio < *best || (ratio == *best && self.basic[i] < self.basic[*r]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            // The feasible region lies in [0, 1]^n, so the LP is bounded.
            let (r, _) = leave.expect("fractional clique LP is bounded");
            self.pivot(r, s);
        }
    }
}

pub fn fractional_chromatic_with(g: &Graph, limits: Limits) -> Result<FractionalResult> {
    limits.check("fractional chromatic number", g.order(), DEFAULT_FRACTIONAL_LIMIT)?;
    let n = g.order();
    let sets = maximal_independent_sets(g);
    let m = sets.len();
    // Variables: y_v is `v`, the slack of set `i` is `n + i`.
    let mut t = Tableau {
        a: sets
            .iter()
            .map(|s| {
                let mut row = vec![BigRational::zero(); n];
                for &v in s {
                    row[v] = BigRational::one();
                }
                row
            })
            .collect(),
        b: vec![BigRational::one(); m],
        c: vec![BigRational::one(); n],
        d: BigRational::zero(),
        basic: (n..n + m).collect(),
        nonbasic: (0..n).collect(),
    };
    t.solve();
    let mut vertex_weights = vec![Fraction::zero(); n];
    for (i, &var) in t.basic.iter().enumerate() {
        if var < n {
            vertex_weights[var] = Fraction::from_big(t.b[i].clone());
        }
    }
    let mut set_weights = vec![Fraction::zero(); m];
    for (j, &var) in t.nonbasic.iter().enumerate() {
        if var >= n {
            set_weights[var - n] = Fraction::from_big(-t.c[j].clone());
        }
    }
    let result = FractionalResult {
        value: Fraction::from_big(t.d.clone()),
        independent_sets: sets,
        set_weights,
        vertex_weights,
    };
    result.verify(g)?;
    Ok(result)
}

pub fn fractional_chromatic(g: &Graph) -> Result<FractionalResult> {
    fractional_chromatic_with(g, Limits::default())
}
