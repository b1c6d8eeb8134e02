//! Circular chromatic number through homomorphisms into circular complete graphs.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::families::circular_complete;
use crate::fraction::Fraction;
use crate::graph::Graph;
use crate::solvers::budget::Limits;
use crate::solvers::chromatic::chromatic_number_with;
use crate::solvers::hom::{find_hom_with, HomOptions, HomOutcome};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircularResult {
    /// `p/q` of the witness; the circular chromatic number when `exact`.
    pub value: Fraction,
    pub p: usize,
    pub q: usize,
    /// A `(p,q)`-coloring with colors `0..p`.
    pub coloring: Coloring,
    /// Every candidate below this value was refuted. Equals `value` when exact.
    pub lower: Fraction,
    pub exact: bool,
}

/// Checks `q <= |c(u) - c(v)| <= p - q` on every edge and `0 <= c < p`.
pub fn is_pq_coloring(g: &Graph, c: &Coloring, p: usize, q: usize) -> Result<bool> {
    c.check_len(g)?;
    let p = p as i64;
    let q = q as i64;
    if c.colors().iter().any(|&x| x < 0 || x >= p) {
        return Ok(false);
    }
    Ok(g.edges().all(|(u, v)| {
        let d = (c.color(u) - c.color(v)).abs();
        q <= d && d <= p - q
    }))
}

/// Reduced fractions `p/q` with `p <= max_p`, `chi - 1 < p/q <= chi`, ascending.
pub fn circular_candidates(chi: usize, max_p: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for q in 1..=max_p / 2 {
        for p in 2 * q..=max_p {
            if p.gcd(&q) == 1 && (chi - 1) * q < p && p <= chi * q {
                out.push((p, q));
            }
        }
    }
    out.sort_by(|a, b| (a.0 * b.1).cmp(&(b.0 * a.1)));
    out
}

/// Smallest `p/q` with a homomorphism into `K_{p/q}`. Candidates are restricted to
/// `p <= |V(g)|`, the order bound for attaining the infimum on finite graphs.
pub fn circular_chromatic_with(g: &Graph, limits: Limits) -> Result<CircularResult> {
    let chi = chromatic_number_with(g, limits)?;
    if g.size() == 0 {
        // No edges: every map is a (1,1)-coloring.
        let k = if g.order() == 0 { 0 } else { 1 };
        return Ok(CircularResult {
            value: Fraction::from_integer(k),
            p: k as usize,
            q: 1,
            coloring: Coloring::new(vec![0; g.order()]),
            lower: Fraction::from_integer(k),
            exact: true,
        });
    }
    let chi_value = chi.value;
    let integral = CircularResult {
        value: Fraction::from_integer(chi_value as i64),
        p: chi_value,
        q: 1,
        coloring: chi.coloring.clone(),
        lower: Fraction::from_integer(chi.lower as i64 - 1),
        exact: false,
    };
    if !chi.exact {
        return Ok(integral);
    }
    let candidates = circular_candidates(chi_value, g.order());
    // A homomorphism into K_{p/q} exists iff chi_c <= p/q, so along the ascending candidates
    // the answer switches once from "none" to "found": binary search for the switch.
    // Candidates in `lo..` are not refuted; `probe..found` holds the undecided ones above the
    // last budget-out.
    let mut found = candidates.len() - 1;
    let mut witness = (chi.coloring.clone(), chi_value, 1);
    let (mut lo, mut probe) = (0, 0);
    while probe < found {
        let mid = probe + (found - probe) / 2;
        let (p, q) = candidates[mid];
        let target = circular_complete(p, q)?;
        let opts = HomOptions {
            budget: limits.budget,
            // K_{p/q} is vertex-transitive.
            pin_component_roots: Some(0),
            // x -> -x fixes 0.
            pin_reflection: Some((0..p).map(|x| (p - x) % p).collect()),
            ..HomOptions::default()
        };
        match find_hom_with(g, &target, &opts) {
            HomOutcome::Found(map) => {
                witness = (Coloring::new(map.into_iter().map(|x| x as i64).collect()), p, q);
                found = mid;
            }
            HomOutcome::None => {
                lo = mid + 1;
                probe = mid + 1;
            }
            HomOutcome::Unknown => probe = mid + 1,
        }
    }
    let (coloring, p, q) = witness;
    if !is_pq_coloring(g, &coloring, p, q)? {
        return Err(Error::Verification(format!("witness is not a ({p},{q})-coloring")));
    }
    let (a, b) = candidates[lo.min(found)];
    Ok(CircularResult {
        value: Fraction::new(p as i64, q as i64),
        p,
        q,
        coloring,
        lower: Fraction::new(a as i64, b as i64),
        exact: lo == found,
    })
}

pub fn circular_chromatic(g: &Graph) -> Result<CircularResult> {
    circular_chromatic_with(g, Limits::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, schrijver};

    #[test]
    fn candidates_are_sorted_and_reduced() {
        assert_eq!(circular_candidates(3, 7), vec![(7, 3), (5, 2), (3, 1)]);
        assert_eq!(circular_candidates(2, 9), vec![(2, 1)]);
    }

    #[test]
    fn odd_cycles_and_cliques() {
        for k in 1..5 {
            let r = circular_chromatic(&cycle(2 * k + 1).unwrap()).unwrap();
            assert!(r.exact);
            assert_eq!(r.value, Fraction::new(2 * k as i64 + 1, k as i64));
        }
        for p in 2..6 {
            let r = circular_chromatic(&circular_complete(p, 1).unwrap()).unwrap();
            assert_eq!(r.value, Fraction::from_integer(p as i64));
        }
        assert_eq!(circular_chromatic(&complete(1)).unwrap().value, Fraction::one());
    }

    #[test]
    fn schrijver_6_2_is_integral() {
        let g = schrijver(6, 2).unwrap();
        let r = circular_chromatic(&g).unwrap();
        assert_eq!(r.value, Fraction::from_integer(4));
        assert!(is_pq_coloring(&g, &r.coloring, r.p, r.q).unwrap());
    }

    #[test]
    fn pq_checker() {
        let c5 = cycle(5).unwrap();
        assert!(is_pq_coloring(&c5, &Coloring::new(vec![0, 2, 4, 1, 3]), 5, 2).unwrap());
        assert!(!is_pq_coloring(&c5, &Coloring::new(vec![0, 1, 2, 3, 4]), 5, 2).unwrap());
        assert!(!is_pq_coloring(&c5, &Coloring::new(vec![0, 2, 4, 1, 5]), 5, 2).unwrap());
    }
}
