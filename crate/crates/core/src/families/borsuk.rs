use crate::error::{invalid, Result};
use crate::graph::Graph;

/// Points are accepted as lying on the sphere when `| |x| - 1 | <= UNIT_NORM_TOLERANCE`.
pub const UNIT_NORM_TOLERANCE: f64 = 1e-9;
/// Chord lengths within this of `alpha` count as `>= alpha`.
pub const BORSUK_TIE_TOLERANCE: f64 = 1e-12;

pub fn chord_distance(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt()
}

/// Finite induced subgraph of the Borsuk graph `B(n, alpha)` on the given points of
/// `S^{n-1}`: two points are adjacent iff their Euclidean distance is at least `alpha`.
pub fn borsuk_sample(n: usize, alpha: f64, points: &[Vec<f64>]) -> Result<Graph> {
    if !(alpha > 0.0 && alpha < 2.0) {
        return Err(invalid(format!("alpha must lie in (0, 2), got {alpha}")));
    }
    for (i, p) in points.iter().enumerate() {
        if p.len() != n {
            return Err(invalid(format!("point {i} has dimension {}, expected {n}", p.len())));
        }
        let norm = p.iter().map(|x| x * x).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > UNIT_NORM_TOLERANCE {
            return Err(invalid(format!("point {i} is off the unit sphere (norm {norm})")));
        }
    }
    let labels = (0..points.len()).map(|i| format!("p{i}")).collect();
    let mut edges = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if chord_distance(&points[i], &points[j]) >= alpha - BORSUK_TIE_TOLERANCE {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(labels, edges)
}
