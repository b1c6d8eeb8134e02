//! Points on spheres, seeded sampling and the inscribed regular simplex.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::families::UNIT_NORM_TOLERANCE;

/// A unit vector of `R^{d+1}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointOnSphere {
    coords: Vec<f64>,
}

impl PointOnSphere {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        let norm = norm(&coords);
        if coords.is_empty() || (norm - 1.0).abs() > UNIT_NORM_TOLERANCE {
            return Err(invalid(format!("not a unit vector (norm {norm})")));
        }
        Ok(PointOnSphere { coords })
    }

    /// Scales a nonzero vector to unit length.
    pub fn normalized(v: Vec<f64>) -> Result<Self> {
        let n = norm(&v);
        if !(n > 0.0 && n.is_finite()) {
            return Err(invalid("cannot normalize a zero or non-finite vector"));
        }
        Ok(PointOnSphere {
            coords: v.into_iter().map(|x| x / n).collect(),
        })
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.coords
    }

    pub fn ambient_dim(&self) -> usize {
        self.coords.len()
    }

    pub fn antipode(&self) -> Self {
        PointOnSphere {
            coords: self.coords.iter().map(|x| -x).collect(),
        }
    }

    pub fn dot(&self, other: &[f64]) -> f64 {
        dot(&self.coords, other)
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniform point of the unit sphere in `R^ambient` (normalized Gaussian vector).
pub fn random_point<R: Rng + ?Sized>(ambient: usize, rng: &mut R) -> PointOnSphere {
    loop {
        let v: Vec<f64> = (0..ambient).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
        if let Ok(p) = PointOnSphere::normalized(v) {
            return p;
        }
    }
}

/// `count` uniform points of the unit sphere in `R^ambient`, reproducible from `seed`.
pub fn sphere_samples(ambient: usize, count: usize, seed: u64) -> Result<Vec<PointOnSphere>> {
    if ambient == 0 {
        return Err(invalid("ambient dimension must be positive"));
    }
    let mut r = rng(seed);
    Ok((0..count).map(|_| random_point(ambient, &mut r)).collect())
}

/// The `m + 1` vertices of a regular simplex inscribed in the unit sphere of `R^m`: the
/// centered standard basis of `R^{m+1}` written in the Helmert basis of the hyperplane
/// `sum = 0`. Pairwise inner products are `-1/m`.
pub fn regular_simplex(m: usize) -> Result<Vec<PointOnSphere>> {
    if m == 0 {
        return Err(invalid("a regular simplex needs dimension at least 1"));
    }
    let n = m + 1;
    let basis: Vec<Vec<f64>> = (1..=m)
        .map(|j| {
            let scale = ((j * (j + 1)) as f64).sqrt();
            (0..n)
                .map(|i| match i.cmp(&j) {
                    std::cmp::Ordering::Less => 1.0 / scale,
                    std::cmp::Ordering::Equal => -(j as f64) / scale,
                    std::cmp::Ordering::Greater => 0.0,
                })
                .collect()
        })
        .collect();
    (0..n)
        .map(|i| {
            let centered: Vec<f64> = (0..n).map(|l| if l == i { 1.0 } else { 0.0 } - 1.0 / n as f64).collect();
            PointOnSphere::normalized(basis.iter().map(|b| dot(b, &centered)).collect())
        })
        .collect()
}

/// Length of the shortest arc between two positions of the circle of unit perimeter.
pub fn circle_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(1.0);
    d.min(1.0 - d)
}
