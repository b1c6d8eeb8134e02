//! Circular colorings of Schrijver graphs with odd chromatic number through `W(s,t)`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::coloring::{ensure_s_wide, Coloring};
use crate::constructions::hom::{compose, hom_from_swide, w_to_gmyc_hom};
use crate::constructions::interval::{interval_coloring_of, IntervalPartition, IntervalRule};
use crate::error::{invalid, Error, Result};
use crate::families::{binomial, schrijver, schrijver_vertices};
use crate::fraction::Fraction;
use crate::solvers::{circular_chromatic, is_pq_coloring};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineOutput {
    pub t: usize,
    pub i: usize,
    pub s: usize,
    pub n: usize,
    pub k: usize,
    pub sizes: Vec<usize>,
    pub p: usize,
    pub q: usize,
    /// A `(p,q)`-coloring of `SG(n,k)` (vertex order as in [`schrijver`]).
    pub coloring: Coloring,
}

impl PipelineOutput {
    pub fn ratio(&self) -> Fraction {
        Fraction::new(self.p as i64, self.q as i64)
    }
}

fn stage(name: &str, e: Error) -> Error {
    Error::Verification(format!("stage {name}: {e}"))
}

/// Parameters `(s, n, k)` for odd `t` and `i >= 2`: `s = (t-1)(i-1)/2 + 1` and the least
/// `n` of the parity of `t` satisfying both size bounds.
pub fn pipeline_parameters(t: usize, i: usize) -> Result<(usize, usize, usize)> {
    if t < 3 || t % 2 == 0 {
        return Err(invalid(format!("t must be odd and at least 3, got {t}")));
    }
    if i < 2 {
        return Err(invalid(format!("i must be at least 2, got {i}")));
    }
    let s = (t - 1) * (i - 1) / 2 + 1;
    let by_gap = 6 * (i - 1) * binomial(t, 3) as usize + t;
    let by_width = (2 * s - 2) * t * t - (4 * s - 5) * t;
    let mut n = by_gap.max(by_width).max(2 * t);
    if (n - t) % 2 != 0 {
        n += 1;
    }
    Ok((s, n, (n - t + 2) / 2))
}

/// `t - 1 + 1 / (floor((2s-2)/(t-1)) + 1)` as `(p, q)`.
pub fn gmyc_circular_target(s: usize, t: usize) -> (usize, usize) {
    let q = (2 * s - 2) / (t - 1) + 1;
    ((t - 1) * q + 1, q)
}

/// Builds the `s`-wide interval coloring of `SG(n,k)`, maps it into `W(s,t)` and on into
/// `M_s(K_{t-1})`, and pulls back an optimal circular coloring of the latter found by the
/// solver. Every stage is verified.
pub fn oddsch_pipeline(t: usize, i: usize) -> Result<PipelineOutput> {
    let (s, n, k) = pipeline_parameters(t, i)?;
    let part = IntervalPartition::balanced(n, t)?;
    let need = (s - 1) * (t - 2) + 1;
    if (0..t).any(|j| part.p(j) < need) {
        return Err(invalid(format!("interval sizes {:?} are too small for s={s}", part.sizes)));
    }
    let g = Arc::new(schrijver(n, k)?);
    let c = interval_coloring_of(&part, &schrijver_vertices(n, k)?, IntervalRule::SmallestAnchor)?;
    ensure_s_wide(&g, &c, s).map_err(|e| stage("s-wide coloring", e))?;
    let (to_w, _) = hom_from_swide(g.clone(), &c, s, t).map_err(|e| stage("hom into W", e))?;
    let w_to_m = w_to_gmyc_hom(s, t).map_err(|e| stage("hom into M_s(K_(t-1))", e))?;
    let to_m = compose(&to_w, &w_to_m).map_err(|e| stage("composition", e))?;
    let circ = circular_chromatic(to_m.target()).map_err(|e| stage("circular coloring", e))?;
    let (p, q) = gmyc_circular_target(s, t);
    if !circ.exact || circ.value != Fraction::new(p as i64, q as i64) {
        return Err(stage(
            "circular coloring",
            Error::Verification(format!("solver found {} (exact: {}), expected {p}/{q}", circ.value, circ.exact)),
        ));
    }
    let coloring = to_m.pull_back(&circ.coloring)?;
    if !is_pq_coloring(&g, &coloring, circ.p, circ.q)? {
        return Err(stage("pull-back", Error::Verification(format!("not a ({p},{q})-coloring of SG({n},{k})"))));
    }
    Ok(PipelineOutput {
        t,
        i,
        s,
        n,
        k,
        sizes: part.sizes.clone(),
        p: circ.p,
        q: circ.q,
        coloring,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameters() {
        assert_eq!(pipeline_parameters(3, 2).unwrap(), (2, 9, 4));
        assert_eq!(pipeline_parameters(3, 3).unwrap(), (3, 15, 7));
        assert_eq!(pipeline_parameters(5, 2).unwrap(), (3, 65, 31));
        assert!(pipeline_parameters(4, 2).is_err());
        assert!(pipeline_parameters(3, 1).is_err());
    }

    #[test]
    fn targets() {
        assert_eq!(gmyc_circular_target(2, 3), (5, 2));
        assert_eq!(gmyc_circular_target(3, 3), (7, 3));
        assert_eq!(gmyc_circular_target(3, 5), (9, 2));
    }

    #[test]
    fn smallest_cases() {
        let out = oddsch_pipeline(3, 2).unwrap();
        assert_eq!((out.n, out.k, out.p, out.q), (9, 4, 5, 2));
        let out = oddsch_pipeline(3, 3).unwrap();
        assert_eq!((out.n, out.k, out.p, out.q), (15, 7, 7, 3));
    }
}
