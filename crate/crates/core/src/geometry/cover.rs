//! Antipode-free covers of `S^k` from the central projection of an inscribed regular simplex.
//!
//! `B_i` is the projection of the facet opposite simplex vertex `w_i`; a point lies in `B_i`
//! iff `<x, w_i>` is minimal among all `<x, w_j>`. `C` is the union of the projected faces
//! where too many `B_i` meet (plus, for even `k`, the middle faces of the facet opposite
//! `w_0`), `D` is its open `delta`-neighborhood and `A_i = B_i \ D`.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::geometry::sphere::{dot, random_point, regular_simplex, rng, PointOnSphere};

/// Largest `k` accepted by [`simplex_cover`]; the distance estimate grows combinatorially.
pub const MAX_COVER_DIM: usize = 8;
/// Inner products within this of the minimum count as tied (the sets `B_i` are closed).
pub const FACET_TIE_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SphereCover {
    pub k: usize,
    /// Unit simplex vertices `w_0, ..., w_{k+1}` in `R^{k+1}`.
    pub vertices: Vec<PointOnSphere>,
    /// Vertex sets of the simplex faces whose projections make up `C`.
    pub c_faces: Vec<Vec<usize>>,
    /// Estimated chordal distance between `C` and `-C`.
    pub c_distance: f64,
    pub delta: f64,
    /// Whether the closure of `D` is included as set number `k + 2`.
    pub plus: bool,
}

fn subsets_of_size(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    fn rec(items: &[usize], size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, size, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, size, 0, &mut cur, &mut out);
    out
}

/// Cosine of the angle between `x` and the cone spanned by `face`, clamped below at 0.
///
/// The projection onto the cone is the largest projection onto the span of a subface with
/// nonnegative coefficients; the Gram matrix of `s` simplex vertices is `(1+a)I - aJ` with
/// `a = 1/(k+1)`, which has a closed-form inverse.
fn cone_cos(products: &[f64], face: &[usize], a: f64) -> f64 {
    let s = face.len();
    let mut best: f64 = 0.0;
    for mask in 1u32..(1 << s) {
        let sub: Vec<usize> = (0..s).filter(|&j| mask >> j & 1 == 1).map(|j| face[j]).collect();
        let m = sub.len() as f64;
        let b: Vec<f64> = sub.iter().map(|&j| products[j]).collect();
        let sum: f64 = b.iter().sum();
        let shift = a * sum / (1.0 + a - a * m);
        let coef: Vec<f64> = b.iter().map(|&bj| (bj + shift) / (1.0 + a)).collect();
        if coef.iter().all(|&c| c >= 0.0) {
            let sq: f64 = coef.iter().zip(&b).map(|(c, bj)| c * bj).sum();
            best = best.max(sq.max(0.0).sqrt());
        }
    }
    best.min(1.0)
}

impl SphereCover {
    pub fn num_sets(&self) -> usize {
        self.k + 2 + usize::from(self.plus)
    }

    fn gram_offset(&self) -> f64 {
        1.0 / (self.k + 1) as f64
    }

    fn products(&self, x: &[f64]) -> Vec<f64> {
        self.vertices.iter().map(|w| dot(w.coords(), x)).collect()
    }

    /// Indices `i` with `x` in `B_i`.
    pub fn facets_of(&self, x: &[f64]) -> Vec<usize> {
        let p = self.products(x);
        let min = p.iter().copied().fold(f64::INFINITY, f64::min);
        (0..p.len()).filter(|&i| p[i] <= min + FACET_TIE_TOLERANCE).collect()
    }

    /// Chordal distance from `x` to `C`; distances of at least `sqrt 2` are reported as `sqrt 2`.
    pub fn distance_to_c(&self, x: &[f64]) -> f64 {
        let p = self.products(x);
        let a = self.gram_offset();
        let cos = self.c_faces.iter().map(|f| cone_cos(&p, f, a)).fold(0.0, f64::max);
        (2.0 - 2.0 * cos).max(0.0).sqrt()
    }

    /// Indices of the sets containing `x`: `A_i` for `i < k + 2`, and `k + 2` for the closure of
    /// `D` when `plus` is set.
    pub fn members(&self, x: &[f64]) -> Vec<usize> {
        let d = self.distance_to_c(x);
        let mut out = if d >= self.delta { self.facets_of(x) } else { Vec::new() };
        if self.plus && d <= self.delta {
            out.push(self.k + 2);
        }
        out
    }

    pub fn contains(&self, set: usize, x: &[f64]) -> bool {
        self.members(x).contains(&set)
    }

    /// Bound on the number of sets containing a point.
    pub fn multiplicity_bound(&self) -> usize {
        if self.plus {
            (self.k + 3).div_ceil(2)
        } else {
            (self.k + 1).div_ceil(2)
        }
    }

    /// Bound on the number of sets containing `x` or `-x`.
    pub fn either_bound(&self) -> usize {
        self.k + 1 + usize::from(self.plus)
    }
}

fn c_faces(k: usize) -> Vec<Vec<usize>> {
    let all: Vec<usize> = (0..k + 2).collect();
    let mut faces = subsets_of_size(&all, (k + 1) / 2);
    if k % 2 == 0 {
        faces.extend(subsets_of_size(&all[1..], k / 2 + 1));
    }
    faces
}

/// Points of the projected face spanned by `face`, on a barycentric grid of `resolution` steps.
fn face_grid(vertices: &[PointOnSphere], face: &[usize], resolution: usize) -> Vec<Vec<f64>> {
    let dim = vertices[0].ambient_dim();
    let mut out = Vec::new();
    let mut weights = vec![0usize; face.len()];
    fn rec(
        idx: usize,
        left: usize,
        weights: &mut Vec<usize>,
        vertices: &[PointOnSphere],
        face: &[usize],
        dim: usize,
        out: &mut Vec<Vec<f64>>,
    ) {
        if idx + 1 == face.len() {
            weights[idx] = left;
            let mut v = vec![0.0; dim];
            for (j, &w) in weights.iter().enumerate() {
                for (c, x) in v.iter_mut().zip(vertices[face[j]].coords()) {
                    *c += w as f64 * x;
                }
            }
            if let Ok(p) = PointOnSphere::normalized(v) {
                out.push(p.into_coords());
            }
            return;
        }
        for w in 0..=left {
            weights[idx] = w;
            rec(idx + 1, left - w, weights, vertices, face, dim, out);
        }
    }
    rec(0, resolution, &mut weights, vertices, face, dim, &mut out);
    out
}

fn build(k: usize, plus: bool) -> Result<SphereCover> {
    if k == 0 || k > MAX_COVER_DIM {
        return Err(invalid(format!("cover dimension must lie in 1..={MAX_COVER_DIM}, got {k}")));
    }
    let vertices = regular_simplex(k + 1)?;
    let faces = c_faces(k);
    let mut cover = SphereCover {
        k,
        vertices,
        c_faces: faces,
        c_distance: f64::INFINITY,
        delta: 0.0,
        plus,
    };
    let resolution = match cover.c_faces.iter().map(Vec::len).max().unwrap_or(1) {
        1 => 1,
        2 => 64,
        3 => 24,
        4 => 10,
        _ => 6,
    };
    let mut dist = f64::INFINITY;
    for f in &cover.c_faces {
        for x in face_grid(&cover.vertices, f, resolution) {
            let minus: Vec<f64> = x.iter().map(|v| -v).collect();
            dist = dist.min(cover.distance_to_c(&minus));
        }
    }
    if dist <= 0.0 {
        return Err(crate::Error::Verification(format!("C meets -C for k={k}")));
    }
    cover.c_distance = dist;
    cover.delta = dist / 4.0;
    Ok(cover)
}

/// The `k + 2` closed sets `A_1, ..., A_{k+2}`.
pub fn simplex_cover(k: usize) -> Result<SphereCover> {
    build(k, false)
}

/// [`simplex_cover`] together with the closure of `D`: `k + 3` sets covering `S^k`.
pub fn cover_plus(k: usize) -> Result<SphereCover> {
    build(k, true)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoverReport {
    pub k: usize,
    pub sets: usize,
    pub samples: usize,
    /// Simplex vertices, projected face centroids and their antipodes.
    pub special_points: usize,
    pub seed: u64,
    /// Fraction of tested points `x` lying in some `A` or `-A`.
    pub union_coverage: f64,
    /// Fraction of tested points lying in some set.
    pub coverage: f64,
    pub max_multiplicity: usize,
    pub multiplicity_bound: usize,
    /// Tested points `x` with `x` and `-x` in a common set.
    pub antipodal_violations: usize,
    pub max_either: usize,
    pub either_bound: usize,
}

impl CoverReport {
    pub fn passes(&self, plus: bool) -> bool {
        self.union_coverage == 1.0
            && (!plus || self.coverage == 1.0)
            && self.max_multiplicity <= self.multiplicity_bound
            && self.antipodal_violations == 0
            && self.max_either <= self.either_bound
    }
}

fn special_points(cover: &SphereCover) -> Vec<Vec<f64>> {
    let m = cover.vertices.len();
    let dim = cover.vertices[0].ambient_dim();
    let mut out = Vec::new();
    for mask in 1u32..(1 << m) {
        let mut v = vec![0.0; dim];
        for j in (0..m).filter(|&j| mask >> j & 1 == 1) {
            for (c, x) in v.iter_mut().zip(cover.vertices[j].coords()) {
                *c += x;
            }
        }
        if let Ok(p) = PointOnSphere::normalized(v) {
            out.push(p.antipode().into_coords());
            out.push(p.into_coords());
        }
    }
    out
}

/// Checks the cover on `samples` seeded uniform points plus the special points.
pub fn verify_cover(cover: &SphereCover, samples: usize, seed: u64) -> CoverReport {
    let mut r = rng(seed);
    let special = special_points(cover);
    let mut points = special.clone();
    points.extend((0..samples).map(|_| random_point(cover.k + 1, &mut r).into_coords()));
    let (mut union_hits, mut hits, mut max_mult, mut violations, mut max_either) = (0usize, 0usize, 0, 0, 0);
    for x in &points {
        let minus: Vec<f64> = x.iter().map(|v| -v).collect();
        let mx = cover.members(x);
        let mm = cover.members(&minus);
        if !mx.is_empty() {
            hits += 1;
        }
        if !mx.is_empty() || !mm.is_empty() {
            union_hits += 1;
        }
        max_mult = max_mult.max(mx.len());
        if mx.iter().any(|i| mm.contains(i)) {
            violations += 1;
        }
        let either = mx.iter().chain(&mm).collect::<std::collections::BTreeSet<_>>().len();
        max_either = max_either.max(either);
    }
    let total = points.len() as f64;
    CoverReport {
        k: cover.k,
        sets: cover.num_sets(),
        samples,
        special_points: special.len(),
        seed,
        union_coverage: union_hits as f64 / total,
        coverage: hits as f64 / total,
        max_multiplicity: max_mult,
        multiplicity_bound: cover.multiplicity_bound(),
        antipodal_violations: violations,
        max_either,
        either_bound: cover.either_bound(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn face_counts() {
        assert_eq!(c_faces(1).len(), 3);
        // k = 2: the four vertices and the three edges of the facet opposite w_0.
        assert_eq!(c_faces(2).len(), 4 + 3);
        assert_eq!(c_faces(3).len(), 10);
        assert_eq!(c_faces(4).len(), 15 + 10);
    }

    #[test]
    fn vertex_lies_in_all_facets_but_one() {
        let c = simplex_cover(3).unwrap();
        let w0 = c.vertices[0].coords().to_vec();
        assert_eq!(c.facets_of(&w0), vec![1, 2, 3, 4]);
        assert_eq!(c.distance_to_c(&w0), 0.0);
        assert!(c.members(&w0).is_empty());
    }

    #[test]
    fn distance_to_a_vertex_cone() {
        let c = simplex_cover(1).unwrap();
        assert!(c.distance_to_c(c.vertices[1].coords()) < 1e-9);
        assert!(c.c_distance > 0.5);
    }

    #[test]
    fn small_covers() {
        for k in 1..=4 {
            let plain = verify_cover(&simplex_cover(k).unwrap(), 3000, 11);
            assert!(plain.passes(false), "{plain:?}");
            let plus = verify_cover(&cover_plus(k).unwrap(), 3000, 11);
            assert!(plus.passes(true), "{plus:?}");
        }
        assert!(simplex_cover(0).is_err());
    }
}
