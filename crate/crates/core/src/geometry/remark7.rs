//! A single map `g : S^{n-1} -> C` (circle of unit perimeter) giving `(p,q)`-colorings of Borsuk
//! graphs `B(n, alpha)` for even `n` and every `p/q > n`, once `alpha` is close enough to 2.
//!
//! For `n >= 4`, `S^{n-1}` is the join of `S^{n-3}` (first `n-2` coordinates) and `S^1` (last
//! two). On `S^{n-3}` the map takes the `n-1` equidistant values `H = {j/(n-1)}` through the
//! standard simplex coloring; on `S^1` it winds over an arc of length `2/n`; along a join
//! segment it moves uniformly from the `H` value toward the nearest point of `T(g(y))`, the
//! `n/2` equidistant points containing `g(y)`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::error::{invalid, Result};
use crate::families::borsuk_sample;
use crate::geometry::borsuk::SimplexColoring;
use crate::geometry::sphere::{circle_distance, norm, random_point, rng, PointOnSphere};
use crate::graph::Graph;
use crate::solvers::is_pq_coloring;

/// The base coloring of `S^{n-3}` is checked on `B(n-2, REMARK7_BASE_ALPHA)`.
pub const REMARK7_BASE_ALPHA: f64 = 1.9;
/// Offsets within this of `1/n` count as the ambiguous case, resolved in the forward direction.
const TIE: f64 = 1e-12;

#[derive(Clone, Debug)]
pub struct Remark7Map {
    n: usize,
    base: Option<SimplexColoring>,
}

impl Remark7Map {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 || n % 2 == 1 {
            return Err(invalid(format!("the circle map needs an even n >= 2, got {n}")));
        }
        let base = if n >= 4 { Some(SimplexColoring::new(n - 2)?) } else { None };
        Ok(Remark7Map { n, base })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn winding(v: &[f64]) -> f64 {
        (v[1].atan2(v[0]) / (2.0 * PI)).rem_euclid(1.0)
    }

    /// Position of `x` on the circle, in `[0, 1)`.
    pub fn apply(&self, x: &[f64]) -> Result<f64> {
        let n = self.n;
        if x.len() != n {
            return Err(invalid(format!("point of dimension {} on S^{}", x.len(), n - 1)));
        }
        let Some(base) = &self.base else {
            return Ok(Self::winding(x));
        };
        let nf = n as f64;
        let (u, v) = x.split_at(n - 2);
        let (ru, rv) = (norm(u), norm(v));
        let on_circle = |v: &[f64]| 2.0 * Self::winding(v) / nf;
        if ru == 0.0 {
            return Ok(on_circle(v));
        }
        let gx = base.color_of(u) as f64 / (nf - 1.0);
        if rv == 0.0 {
            return Ok(gx);
        }
        let tau = rv.atan2(ru) / (PI / 2.0);
        let b = on_circle(v);
        let d = (gx - b).rem_euclid(2.0 / nf);
        let shift = if (d - 1.0 / nf).abs() <= TIE {
            1.0 / nf
        } else if d < 1.0 / nf {
            -d
        } else {
            2.0 / nf - d
        };
        Ok((gx + tau * shift).rem_euclid(1.0))
    }
}

/// `g(x)` for a single point; see [`Remark7Map`].
pub fn remark7_map(n: usize, x: &PointOnSphere) -> Result<f64> {
    Remark7Map::new(n)?.apply(x.coords())
}

/// `pairs` seeded pairs `(x, y)` of `S^{n-1}` with `|x - y| >= alpha`: `y` is at angle
/// `phi * U` from `-x` in a uniform tangent direction, `phi = 2 arccos(alpha/2)`.
pub fn borsuk_edge_samples(n: usize, alpha: f64, pairs: usize, seed: u64) -> Result<Vec<(PointOnSphere, PointOnSphere)>> {
    if n < 2 || !(alpha > 0.0 && alpha < 2.0) {
        return Err(invalid(format!("need n >= 2 and alpha in (0, 2), got n={n}, alpha={alpha}")));
    }
    let phi = 2.0 * (alpha / 2.0).acos();
    let mut r = rng(seed);
    let mut out = Vec::with_capacity(pairs);
    while out.len() < pairs {
        let x = random_point(n, &mut r);
        let t = random_point(n, &mut r);
        let along = x.dot(t.coords());
        let tangent: Vec<f64> = t.coords().iter().zip(x.coords()).map(|(ti, xi)| ti - along * xi).collect();
        let Ok(w) = PointOnSphere::normalized(tangent) else { continue };
        let theta = phi * rand::Rng::random::<f64>(&mut r);
        let y: Vec<f64> = x.coords().iter().zip(w.coords()).map(|(xi, wi)| -theta.cos() * xi + theta.sin() * wi).collect();
        let y = PointOnSphere::normalized(y)?;
        out.push((x, y));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgeDistanceReport {
    pub n: usize,
    pub alpha: f64,
    pub edges: usize,
    /// Least circle distance between the images of the endpoints of a sampled edge.
    pub min_distance: f64,
    /// `1/n`, the limit as `alpha -> 2`.
    pub target: f64,
}

/// The least image distance over `pairs` sampled edges of `B(n, alpha)`.
pub fn remark7_edge_distances(n: usize, alpha: f64, pairs: usize, seed: u64) -> Result<EdgeDistanceReport> {
    let g = Remark7Map::new(n)?;
    let mut min = f64::INFINITY;
    for (x, y) in borsuk_edge_samples(n, alpha, pairs, seed)? {
        min = min.min(circle_distance(g.apply(x.coords())?, g.apply(y.coords())?));
    }
    Ok(EdgeDistanceReport {
        n,
        alpha,
        edges: pairs,
        min_distance: min,
        target: 1.0 / n as f64,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Remark7Report {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub alpha: f64,
    pub vertices: usize,
    pub edges: usize,
    pub valid: bool,
    /// Least circle distance between images of adjacent points; `q/p` suffices.
    pub min_edge_distance: f64,
    pub required_distance: f64,
    /// Largest chord between two sampled points whose colors violate the `(p,q)` constraint:
    /// the coloring verifies on this sample exactly for `alpha` above it.
    pub critical_alpha: Option<f64>,
    pub coloring: Coloring,
}

/// Colors each point by the arc `floor(p g(x))` of `C` split into `p` equal arcs and verifies
/// the `(p,q)` constraint on the sampled Borsuk graph `B(n, alpha)`.
pub fn remark7_pq_coloring(n: usize, p: usize, q: usize, alpha: f64, points: &[PointOnSphere]) -> Result<Remark7Report> {
    if q == 0 || p <= n * q {
        return Err(invalid(format!("need p/q > n, got {p}/{q} with n={n}")));
    }
    let g = Remark7Map::new(n)?;
    let images: Vec<f64> = points.iter().map(|x| g.apply(x.coords())).collect::<Result<_>>()?;
    let c = Coloring::new(images.iter().map(|&y| ((y * p as f64).floor() as i64).clamp(0, p as i64 - 1)).collect());
    let coords: Vec<Vec<f64>> = points.iter().map(|x| x.coords().to_vec()).collect();
    let graph: Graph = borsuk_sample(n, alpha, &coords)?;
    let min_edge = graph
        .edges()
        .map(|(u, v)| circle_distance(images[u], images[v]))
        .fold(f64::INFINITY, f64::min);
    let mut critical: Option<f64> = None;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let d = (c.color(i) - c.color(j)).abs();
            if d < q as i64 || d > (p - q) as i64 {
                let chord = crate::families::chord_distance(&coords[i], &coords[j]);
                critical = Some(critical.map_or(chord, |m: f64| m.max(chord)));
            }
        }
    }
    Ok(Remark7Report {
        n,
        p,
        q,
        alpha,
        vertices: graph.order(),
        edges: graph.size(),
        valid: is_pq_coloring(&graph, &c, p, q)?,
        min_edge_distance: min_edge,
        required_distance: q as f64 / p as f64,
        critical_alpha: critical,
        coloring: c,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BaseCheck {
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub alpha: f64,
    pub edges: usize,
    pub proper: bool,
}

/// Checks that the values on `S^{n-3}` properly color a seeded sample of `B(n-2, 1.9)`.
pub fn remark7_base_check(n: usize, samples: usize, seed: u64) -> Result<BaseCheck> {
    if n < 4 || n % 2 == 1 {
        return Err(invalid(format!("the base sphere exists for even n >= 4, got {n}")));
    }
    let map = Remark7Map::new(n)?;
    let base = map.base.as_ref().expect("n >= 4 has a base coloring");
    let pts: Vec<Vec<f64>> = crate::geometry::sphere::sphere_samples(n - 2, samples, seed)?
        .into_iter()
        .map(PointOnSphere::into_coords)
        .collect();
    let g = borsuk_sample(n - 2, REMARK7_BASE_ALPHA, &pts)?;
    let c = Coloring::new(pts.iter().map(|x| base.color_of(x) as i64).collect());
    Ok(BaseCheck {
        n,
        samples,
        seed,
        alpha: REMARK7_BASE_ALPHA,
        edges: g.size(),
        proper: crate::coloring::is_proper(&g, &c)?,
    })
}
