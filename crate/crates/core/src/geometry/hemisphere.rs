//! The moment-curve arrangement of `[n]` on `S^{n-2k}`.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::geometry::sphere::{random_point, rng, PointOnSphere};

/// `v_i = (-1)^i (1, i, i^2, ..., i^{n-2k})` normalized, for `i = 1..=n`.
pub fn moment_curve_points(n: usize, k: usize) -> Result<Vec<PointOnSphere>> {
    if k == 0 || n <= 2 * k {
        return Err(invalid(format!("the moment curve arrangement needs n > 2k >= 2, got n={n}, k={k}")));
    }
    let d = n - 2 * k;
    (1..=n)
        .map(|i| {
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            let v = (0..=d).map(|e| sign * (i as f64).powi(e as i32)).collect();
            PointOnSphere::normalized(v)
        })
        .collect()
}

/// Largest stable subset (no two cyclically consecutive elements of `[n]`) inside `members`.
fn max_stable(members: &[bool]) -> usize {
    let n = members.len();
    let Some(start) = (0..n).find(|&i| !members[i]) else {
        return n / 2;
    };
    let (mut total, mut run) = (0usize, 0usize);
    for step in 1..=n {
        if members[(start + step) % n] {
            run += 1;
        } else {
            total += run.div_ceil(2);
            run = 0;
        }
    }
    total
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HemisphereReport {
    pub n: usize,
    pub k: usize,
    pub samples: usize,
    pub seed: u64,
    pub failures: usize,
    /// Over all samples, the least value `m` such that the points with `<v_i, x> >= m` still
    /// contain a stable `k`-subset. Positive iff there are no failures.
    pub min_margin: f64,
    pub first_failure: Option<Vec<f64>>,
}

/// Samples uniform directions `x` and checks that `{i : <v_i, x> > 0}` contains a vertex of
/// `SG(n,k)`.
pub fn hemisphere_stable_check(n: usize, k: usize, samples: usize, seed: u64) -> Result<HemisphereReport> {
    if samples == 0 {
        return Err(invalid("at least one sample is required"));
    }
    let v = moment_curve_points(n, k)?;
    let mut r = rng(seed);
    let mut report = HemisphereReport {
        n,
        k,
        samples,
        seed,
        failures: 0,
        min_margin: f64::INFINITY,
        first_failure: None,
    };
    let mut members = vec![false; n];
    for _ in 0..samples {
        let x = random_point(n - 2 * k + 1, &mut r);
        let values: Vec<f64> = v.iter().map(|vi| vi.dot(x.coords())).collect();
        let mut order: Vec<usize> = (0..n).filter(|&i| values[i] > 0.0).collect();
        order.sort_by(|&a, &b| values[b].total_cmp(&values[a]));
        members.fill(false);
        let mut margin = None;
        for &i in &order {
            members[i] = true;
            if max_stable(&members) >= k {
                margin = Some(values[i]);
                break;
            }
        }
        match margin {
            Some(m) => report.min_margin = report.min_margin.min(m),
            None => {
                report.failures += 1;
                report.min_margin = report.min_margin.min(0.0);
                report.first_failure.get_or_insert_with(|| x.into_coords());
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_points_of_6_2() {
        let v = moment_curve_points(6, 2).unwrap();
        let s3 = 3f64.sqrt();
        let s21 = 21f64.sqrt();
        for (a, b) in v[0].coords().iter().zip([-1.0 / s3, -1.0 / s3, -1.0 / s3]) {
            assert!((a - b).abs() < 1e-12);
        }
        for (a, b) in v[1].coords().iter().zip([1.0 / s21, 2.0 / s21, 4.0 / s21]) {
            assert!((a - b).abs() < 1e-12);
        }
        assert!(moment_curve_points(4, 2).is_err());
    }

    #[test]
    fn stable_subsets_on_a_cycle() {
        assert_eq!(max_stable(&[true; 6]), 3);
        assert_eq!(max_stable(&[true; 5]), 2);
        assert_eq!(max_stable(&[true, true, true, false, false]), 2);
        // The run wraps around: {4, 0, 1} in a 5-cycle.
        assert_eq!(max_stable(&[true, true, false, false, true]), 2);
        assert_eq!(max_stable(&[false; 4]), 0);
    }

    #[test]
    fn small_arrangements_pass() {
        for (n, k) in [(5, 2), (6, 2), (7, 3)] {
            let r = hemisphere_stable_check(n, k, 2000, 1).unwrap();
            assert_eq!(r.failures, 0, "{n},{k}");
            assert!(r.min_margin > 0.0);
        }
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(hemisphere_stable_check(3, 1, 100, 3).unwrap().failures, 0);
        assert!(hemisphere_stable_check(6, 2, 0, 3).is_err());
    }
}
