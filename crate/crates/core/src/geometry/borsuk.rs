//! The standard simplex coloring of Borsuk graphs.

use serde::{Deserialize, Serialize};

use crate::coloring::{is_proper, is_s_wide, Coloring};
use crate::error::{invalid, Result};
use crate::families::borsuk_sample;
use crate::geometry::cover::FACET_TIE_TOLERANCE;
use crate::geometry::sphere::{dot, regular_simplex, PointOnSphere};

/// `alpha_n = 2 cos(arccos(1/n) / 10)`.
pub fn alpha_threshold(n: usize) -> f64 {
    2.0 * ((1.0 / n as f64).acos() / 10.0).cos()
}

/// Largest angle between two points of one projected facet of the regular simplex in `R^n`,
/// attained between the centroid directions of a balanced split of the facet's vertices:
/// `arccos(-sqrt(ab / ((a+1)(b+1))))` with `a = floor(n/2)`, `b = ceil(n/2)`. For `n >= 3` this
/// exceeds the angle `arccos(-1/n)` between two simplex vertices.
pub fn facet_diameter(n: usize) -> f64 {
    let (a, b) = ((n / 2) as f64, n.div_ceil(2) as f64);
    (-(a * b / ((a + 1.0) * (b + 1.0))).sqrt()).acos()
}

/// The standard coloring is proper on `B(n, alpha)` exactly for `alpha` above this chord.
pub fn standard_proper_alpha(n: usize) -> f64 {
    2.0 * (facet_diameter(n) / 2.0).sin()
}

/// The standard coloring is wide on `B(n, alpha)` for `alpha` above this value, which is where
/// `5 phi` drops below `pi - facet_diameter(n)`. Equals [`alpha_threshold`] for `n = 2`.
pub fn standard_wide_alpha(n: usize) -> f64 {
    2.0 * ((std::f64::consts::PI - facet_diameter(n)) / 10.0).cos()
}

/// The standard coloring for points of `S^{n-1}` in `R^n`.
#[derive(Clone, Debug)]
pub struct SimplexColoring {
    vertices: Vec<PointOnSphere>,
}

impl SimplexColoring {
    pub fn new(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(invalid("Borsuk graphs need n >= 1"));
        }
        Ok(SimplexColoring {
            vertices: regular_simplex(n)?,
        })
    }

    pub fn num_colors(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[PointOnSphere] {
        &self.vertices
    }

    /// Index of the facet (named by its opposite vertex) met by the ray through `x`. When the
    /// ray meets a lower-dimensional face, the first candidate facet cyclically after the
    /// largest vertex of that face is taken, so the simplex vertices get distinct colors.
    pub fn color_of(&self, x: &[f64]) -> usize {
        let p: Vec<f64> = self.vertices.iter().map(|w| dot(w.coords(), x)).collect();
        let min = p.iter().copied().fold(f64::INFINITY, f64::min);
        let tied: Vec<bool> = p.iter().map(|&v| v <= min + FACET_TIE_TOLERANCE).collect();
        let m = p.len();
        match (0..m).rev().find(|&i| !tied[i]) {
            Some(top) => (1..=m).map(|step| (top + step) % m).find(|&i| tied[i]).expect("some facet is tied"),
            None => 0,
        }
    }
}

/// The standard `(n+1)`-coloring of the given points of `S^{n-1}`; colors are facet indices.
pub fn borsuk_standard_coloring(n: usize, points: &[PointOnSphere]) -> Result<Coloring> {
    let sc = SimplexColoring::new(n)?;
    if let Some(p) = points.iter().find(|p| p.ambient_dim() != n) {
        return Err(invalid(format!("point of dimension {} on S^{}", p.ambient_dim(), n - 1)));
    }
    Ok(Coloring::new(points.iter().map(|p| sc.color_of(p.coords()) as i64).collect()))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BorsukWideReport {
    pub n: usize,
    pub alpha: f64,
    pub alpha_threshold: f64,
    pub below_threshold: bool,
    /// `phi = 2 arccos(alpha / 2)`.
    pub phi: f64,
    /// `arccos(1/n) - 5 phi`.
    pub analytic_margin: f64,
    /// `pi - facet_diameter(n) - 5 phi`: nonnegative iff no two points of one color are joined
    /// by a walk of length 5 in the full Borsuk graph.
    pub exact_margin: f64,
    pub vertices: usize,
    pub edges: usize,
    pub colors_used: usize,
    pub proper: bool,
    pub wide: bool,
}

/// Builds the sampled Borsuk graph, colors it with the standard coloring and checks properness
/// and wideness with the graph checkers.
pub fn borsuk_wide_check(n: usize, alpha: f64, points: &[PointOnSphere]) -> Result<BorsukWideReport> {
    if n < 2 {
        return Err(invalid("the wideness margin needs n >= 2"));
    }
    let coords: Vec<Vec<f64>> = points.iter().map(|p| p.coords().to_vec()).collect();
    let g = borsuk_sample(n, alpha, &coords)?;
    let c = borsuk_standard_coloring(n, points)?;
    let threshold = alpha_threshold(n);
    let phi = 2.0 * (alpha / 2.0).acos();
    Ok(BorsukWideReport {
        n,
        alpha,
        alpha_threshold: threshold,
        below_threshold: alpha < threshold,
        phi,
        analytic_margin: (1.0 / n as f64).acos() - 5.0 * phi,
        exact_margin: std::f64::consts::PI - facet_diameter(n) - 5.0 * phi,
        vertices: g.order(),
        edges: g.size(),
        colors_used: c.num_colors(),
        proper: is_proper(&g, &c)?,
        wide: is_s_wide(&g, &c, 3)?,
    })
}
