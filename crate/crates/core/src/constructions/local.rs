//! Recolorings that trade one extra color for small neighborhoods.

use crate::coloring::{ensure_proper, ensure_s_wide, Coloring};
use crate::constructions::interval::{interval_coloring_of, IntervalPartition, IntervalRule};
use crate::error::{invalid, Result};
use crate::families::{schrijver, schrijver_vertices};
use crate::graph::Graph;

fn neighborhood_colors(g: &Graph, c: &Coloring, x: usize) -> std::collections::BTreeSet<i64> {
    g.neighbors(x).iter().map(|u| c.color(u)).collect()
}

/// Vertices `x` with `|c0(N(x))| > t/2`, where `t` is the number of colors of `c0`.
pub fn troublesome_vertices(g: &Graph, c0: &Coloring) -> Result<Vec<usize>> {
    c0.check_len(g)?;
    let t = c0.num_colors();
    Ok((0..g.order()).filter(|&x| 2 * neighborhood_colors(g, c0, x).len() > t).collect())
}

/// From a wide `t`-coloring, recolor every neighbor of a troublesome vertex to the new color
/// `max + 1`. The result is proper and no neighborhood sees more than `floor(t/2) + 1` colors.
pub fn widen_to_local(g: &Graph, c0: &Coloring) -> Result<Coloring> {
    ensure_s_wide(g, c0, 3)?;
    let beta = c0.colors().iter().copied().max().unwrap_or(0) + 1;
    let mut colors = c0.colors().to_vec();
    for x in troublesome_vertices(g, c0)? {
        for y in g.neighbors(x) {
            colors[y] = beta;
        }
    }
    let c = Coloring::new(colors);
    ensure_proper(g, &c)?;
    Ok(c)
}

/// The smallest-anchor coloring `c0` of `SG(n,k)` with `b = t - m`, where `y` takes the new
/// color `t + 1` iff some neighbor `x` of `y` sees at least `b - 2` distinct colors smaller
/// than `c0(y)`. Returns the graph and the coloring; an improper result is reported as
/// [`crate::Error::ImproperColoring`].
pub fn sg_remark4_coloring(n: usize, k: usize, m: usize, sizes: &[usize]) -> Result<(Graph, Coloring)> {
    let part = IntervalPartition::new(n, sizes)?;
    let t = n + 2 - 2 * k;
    if part.parts() != t {
        return Err(invalid(format!("SG({n},{k}) needs t = {t} intervals, got {}", part.parts())));
    }
    if t > 63 {
        return Err(invalid("more than 63 intervals are not supported"));
    }
    if m + 2 > t {
        return Err(invalid(format!("m={m} leaves fewer than two colors for t={t}")));
    }
    let g = schrijver(n, k)?;
    let c0 = interval_coloring_of(&part, &schrijver_vertices(n, k)?, IntervalRule::SmallestAnchor)?;
    if m == 0 {
        return Ok((g, c0));
    }
    let b = t - m;
    let beta = t as i64 + 1;
    // Bit `c` set when color `c` (in 1..=t) occurs in N(x).
    let seen: Vec<u64> = (0..g.order())
        .map(|x| g.neighbors(x).iter().fold(0u64, |acc, u| acc | 1 << c0.color(u)))
        .collect();
    let mut colors = c0.colors().to_vec();
    for x in 0..g.order() {
        for y in g.neighbors(x) {
            let below = seen[x] & ((1u64 << c0.color(y)) - 1);
            if below.count_ones() as usize >= b - 2 {
                colors[y] = beta;
            }
        }
    }
    let c = Coloring::new(colors);
    ensure_proper(&g, &c)?;
    Ok((g, c))
}
