use serde::{Deserialize, Serialize};

use crate::coloring::{ensure_proper, Coloring};
use crate::error::{invalid, Error, Result};
use crate::families::{schrijver, schrijver_vertices, SubsetVertex};
use crate::graph::Graph;

/// How a subset picks its interval color.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IntervalRule {
    /// Least `i` with `|x ∩ A_i| >= p_i`.
    AnyMajority,
    /// Least `i` with `C_i ⊆ x`.
    SmallestAnchor,
}

/// `[n]` cut into consecutive intervals `A_1..A_t` of odd sizes, with anchors `C_i` (the
/// first, third, ... elements of `A_i`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalPartition {
    pub n: usize,
    pub sizes: Vec<usize>,
    interval_masks: Vec<u128>,
    anchor_masks: Vec<u128>,
}

impl IntervalPartition {
    pub fn new(n: usize, sizes: &[usize]) -> Result<Self> {
        if n > 128 {
            return Err(invalid("ground sets larger than 128 are not supported"));
        }
        if sizes.is_empty() || sizes.iter().any(|&s| s % 2 == 0) {
            return Err(invalid(format!("interval sizes must be odd and positive, got {sizes:?}")));
        }
        if sizes.iter().sum::<usize>() != n {
            return Err(invalid(format!("interval sizes {sizes:?} do not sum to n={n}")));
        }
        let mut interval_masks = Vec::with_capacity(sizes.len());
        let mut anchor_masks = Vec::with_capacity(sizes.len());
        let mut start = 0;
        for &s in sizes {
            let mut a = 0u128;
            let mut c = 0u128;
            for off in 0..s {
                a |= 1 << (start + off);
                if off % 2 == 0 {
                    c |= 1 << (start + off);
                }
            }
            interval_masks.push(a);
            anchor_masks.push(c);
            start += s;
        }
        Ok(IntervalPartition {
            n,
            sizes: sizes.to_vec(),
            interval_masks,
            anchor_masks,
        })
    }

    /// `t` odd sizes as equal as possible (larger ones first) summing to `n`.
    pub fn balanced(n: usize, t: usize) -> Result<Self> {
        if t == 0 || n < t || (n - t) % 2 != 0 {
            return Err(invalid(format!("cannot split {n} into {t} odd parts")));
        }
        let halves = (n - t) / 2;
        let sizes: Vec<usize> = (0..t).map(|i| 2 * (halves / t + usize::from(i < halves % t)) + 1).collect();
        Self::new(n, &sizes)
    }

    pub fn parts(&self) -> usize {
        self.sizes.len()
    }

    /// `p_i = (|A_i| + 1) / 2 = |C_i|`, 0-based `i`.
    pub fn p(&self, i: usize) -> usize {
        self.sizes[i].div_ceil(2)
    }

    /// Elements (1-based) of `A_i`, 0-based `i`.
    pub fn interval(&self, i: usize) -> Vec<usize> {
        mask_elements(self.interval_masks[i])
    }

    /// Elements (1-based) of `C_i`, 0-based `i`.
    pub fn anchor(&self, i: usize) -> Vec<usize> {
        mask_elements(self.anchor_masks[i])
    }

    /// Color in `1..=t` of a subset under `rule`.
    pub fn color_of(&self, x: &SubsetVertex, rule: IntervalRule) -> Option<usize> {
        let m = x.mask();
        let hit = match rule {
            IntervalRule::AnyMajority => (0..self.parts()).find(|&i| (m & self.interval_masks[i]).count_ones() as usize >= self.p(i)),
            IntervalRule::SmallestAnchor => (0..self.parts()).find(|&i| m & self.anchor_masks[i] == self.anchor_masks[i]),
        };
        hit.map(|i| i + 1)
    }
}

fn mask_elements(m: u128) -> Vec<usize> {
    (0..128).filter(|&i| m >> i & 1 == 1).map(|i| i + 1).collect()
}

/// The interval coloring of `SG(n,k)` (vertex order as in [`schrijver`]) with colors `1..=t`.
pub fn sg_interval_coloring(n: usize, k: usize, sizes: &[usize], rule: IntervalRule) -> Result<Coloring> {
    let part = IntervalPartition::new(n, sizes)?;
    let t = n + 2 - 2 * k;
    if part.parts() != t {
        return Err(invalid(format!("SG({n},{k}) needs t = n-2k+2 = {t} intervals, got {}", part.parts())));
    }
    interval_coloring_of(&part, &schrijver_vertices(n, k)?, rule)
}

pub(crate) fn interval_coloring_of(part: &IntervalPartition, verts: &[SubsetVertex], rule: IntervalRule) -> Result<Coloring> {
    let colors = verts
        .iter()
        .map(|x| {
            // Sum of (p_i - 1) is k - 1, so some interval holds a majority of x.
            part.color_of(x, rule)
                .map(|c| c as i64)
                .ok_or_else(|| Error::Verification(format!("vertex {x} has no qualifying interval")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Coloring::new(colors))
}

/// `SG(n,k)` with its interval coloring, properness checked.
pub fn sg_with_interval_coloring(n: usize, k: usize, sizes: &[usize], rule: IntervalRule) -> Result<(Graph, Coloring)> {
    let c = sg_interval_coloring(n, k, sizes, rule)?;
    let g = schrijver(n, k)?;
    ensure_proper(&g, &c)?;
    Ok((g, c))
}
