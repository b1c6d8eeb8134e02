//! Colorings of the universal graphs `W(s,t)`.

use crate::coloring::{ensure_proper, Coloring};
use crate::error::{invalid, Error, Result};
use crate::families::{wide_universal, WVertex};
use crate::graph::Graph;

/// Vertex `x` gets color `i` (1-based) iff `x_i = 0`.
pub fn w_canonical_coloring(s: usize, t: usize) -> Result<(Graph, Coloring)> {
    let (g, verts) = wide_universal(s, t)?;
    let c = Coloring::new(verts.iter().map(|v| v.zero_position() as i64 + 1).collect());
    Ok((g, c))
}

/// Color of `z` in the `(t-1)`-coloring of `W(s,t)` minus the edge `{x, y}`; colors `0..t-1`.
fn edge_deleted_color(x: &[usize], y: &[usize], z: &[usize]) -> usize {
    let t = z.len();
    if t == 2 {
        return 0;
    }
    let i = x.iter().position(|&a| a == 0).expect("x has a zero");
    let j = y.iter().position(|&a| a == 0).expect("y has a zero");
    let r = (0..t).find(|&r| r != i && r != j).expect("t >= 3 leaves a free coordinate");
    let (x, y) = if y[r] >= x[r] { (x, y) } else { (y, x) };
    let rest = |v: &[usize]| -> Vec<usize> { v.iter().enumerate().filter(|&(p, _)| p != r).map(|(_, &a)| a).collect() };
    let (alpha, beta) = (0, t - 2);
    let (xr, zr) = (x[r], z[r]);
    let z_rest = rest(z);
    if zr < xr {
        return if (xr - zr) % 2 == 0 { alpha } else { beta };
    }
    if zr == xr && xr == 1 && !z_rest.contains(&1) {
        return alpha;
    }
    if zr > xr && z_rest == rest(x) {
        return beta;
    }
    edge_deleted_color(&rest(x), &rest(y), &z_rest)
}

/// A proper `(t-1)`-coloring of `W(s,t)` with the edge `{u, v}` (vertex indices) removed,
/// built by induction on `t`. Returns the edge-deleted graph and the coloring.
pub fn w_edge_deleted_coloring(s: usize, t: usize, edge: (usize, usize)) -> Result<(Graph, Coloring)> {
    let (g, verts) = wide_universal(s, t)?;
    let (u, v) = edge;
    if u >= g.order() || v >= g.order() || !g.has_edge(u, v) {
        return Err(invalid(format!("({u}, {v}) is not an edge of W({s},{t})")));
    }
    let h = g.without_edge(u, v)?;
    let colors = verts
        .iter()
        .map(|z: &WVertex| edge_deleted_color(&verts[u].0, &verts[v].0, &z.0) as i64)
        .collect();
    let c = Coloring::new(colors);
    ensure_proper(&h, &c)?;
    if c.num_colors() > t - 1 {
        return Err(Error::Verification(format!("edge-deleted coloring uses {} colors", c.num_colors())));
    }
    Ok((h, c))
}
