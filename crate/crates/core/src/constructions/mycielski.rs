//! Colorings of generalized Mycielskians.

use crate::coloring::{ensure_proper, ensure_s_wide, Coloring};
use crate::error::{invalid, Result};
use crate::families::{complete, cycle, gen_mycielski, gen_mycielski_iter, MycTower, MycVertex};
use crate::graph::Graph;

/// Level of `M_7` that level `l` of `M_r` (`r >= 7`) is sent to; the apex goes to the apex.
pub fn collapse_level(l: usize, r: usize) -> usize {
    l.saturating_sub(r - 7)
}

/// From a wide coloring `c0` of `g`, a wide coloring of `M_r(g)` with one more color: the
/// vertices whose (collapsed) level is 3, 5 or the apex get the new color `max + 1`, the others
/// keep `c0` of their base vertex.
pub fn gmyc_wide_extension(g: &Graph, c0: &Coloring, r: usize) -> Result<(Graph, Coloring)> {
    if r < 7 {
        return Err(invalid(format!("the wide extension needs r >= 7, got {r}")));
    }
    ensure_s_wide(g, c0, 3)?;
    let m = gen_mycielski(g, r)?;
    let c = extend_wide(g.order(), c0, r);
    ensure_s_wide(&m, &c, 3)?;
    Ok((m, c))
}

fn extend_wide(n: usize, c0: &Coloring, r: usize) -> Coloring {
    let gamma = c0.colors().iter().copied().max().unwrap_or(0) + 1;
    let mut colors = Vec::with_capacity(r * n + 1);
    for l in 0..r {
        let level = collapse_level(l, r);
        for v in 0..n {
            colors.push(if level == 3 || level == 5 { gamma } else { c0.color(v) });
        }
    }
    colors.push(gamma);
    Coloring::new(colors)
}

/// Iterates [`gmyc_wide_extension`] over `rs` (applied left to right).
pub fn gmyc_wide_extension_iter(g: &Graph, c0: &Coloring, rs: &[usize]) -> Result<(MycTower, Coloring)> {
    if let Some(&r) = rs.iter().find(|&&r| r < 7) {
        return Err(invalid(format!("the wide extension needs every r >= 7, got {r}")));
    }
    ensure_s_wide(g, c0, 3)?;
    let tower = gen_mycielski_iter(g, rs)?;
    let mut c = c0.clone();
    let mut order = g.order();
    for &r in rs {
        c = extend_wide(order, &c, r);
        order = r * order + 1;
    }
    ensure_s_wide(&tower.graph, &c, 3)?;
    Ok((tower, c))
}

/// Base graph and its coloring for [`gmyc_direct_coloring`]. Base colors must be `0, -1, -2, ...`
/// (non-positive).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DirectBase {
    /// `K_2` colored `0, -1`.
    K2,
    Colored { graph: Graph, coloring: Coloring },
}

impl DirectBase {
    /// `C_9 = M_4(K_2)` colored `-1,0,-1,-2,0,-2,-3,0,-3` along the cycle.
    pub fn c9_seed() -> Self {
        DirectBase::Colored {
            graph: cycle(9).expect("C_9"),
            coloring: Coloring::new(vec![-1, 0, -1, -2, 0, -2, -3, 0, -3]),
        }
    }

    fn parts(&self) -> (Graph, Coloring) {
        match self {
            DirectBase::K2 => (complete(2), Coloring::new(vec![0, -1])),
            DirectBase::Colored { graph, coloring } => (graph.clone(), coloring.clone()),
        }
    }
}

/// The coloring `c0` before recoloring: base color if every level is at most 2, otherwise
/// driven by the first level that is at least 3 (coordinates listed outermost first).
fn direct_c0(x: &MycVertex, base: &Coloring) -> i64 {
    for (i, a) in x.levels.iter().enumerate() {
        match a {
            Some(a) if *a >= 3 => return if a % 2 == 1 { i as i64 + 1 } else { 0 },
            _ => {}
        }
    }
    base.color(x.base.expect("a vertex with all levels below 3 has a base vertex"))
}

/// Proper coloring of the iterated Mycielskian `M_rs(base)` (every `r_i >= 4`) with
/// neighborhoods of at most `floor(d/2) + psi(base) + 1` colors; for `K_2` with
/// `refine_even_d` on even `d`, at most `d/2 + 2`.
pub fn gmyc_direct_coloring(rs: &[usize], base: &DirectBase, refine_even_d: bool) -> Result<(MycTower, Coloring)> {
    if let Some(&r) = rs.iter().find(|&&r| r < 4) {
        return Err(invalid(format!("the direct coloring needs every r >= 4, got {r}")));
    }
    let (g, cg) = base.parts();
    ensure_proper(&g, &cg)?;
    if cg.colors().iter().any(|&c| c > 0) {
        return Err(invalid("base colors must be 0, -1, -2, ..."));
    }
    let d = rs.len();
    let tower = gen_mycielski_iter(&g, rs)?;
    let beta = d as i64 + 1;
    let colors = tower
        .coords
        .iter()
        .map(|x| {
            let odd = x.levels.iter().filter(|a| matches!(a, Some(a) if a % 2 == 1)).count();
            if 2 * odd > d {
                return beta;
            }
            if refine_even_d && d % 2 == 0 && 2 * odd == d {
                if let Some(u) = x.base {
                    if cg.color(u) == -1 {
                        return beta;
                    }
                }
            }
            direct_c0(x, &cg)
        })
        .collect();
    let c = Coloring::new(colors);
    ensure_proper(&tower.graph, &c)?;
    Ok((tower, c))
}

/// Coloring of `M(g) = M_2(g)`: level 0 copies `c'`, level 1 gets a new color `alpha`, the apex
/// another new color `beta`. Every neighborhood gains exactly one color.
pub fn mycielski_psi_coloring(g: &Graph, c: &Coloring) -> Result<(Graph, Coloring)> {
    ensure_proper(g, c)?;
    let m = gen_mycielski(g, 2)?;
    let top = c.colors().iter().copied().max().unwrap_or(0);
    let (alpha, beta) = (top + 1, top + 2);
    let mut colors = c.colors().to_vec();
    colors.extend(std::iter::repeat_n(alpha, g.order()));
    colors.push(beta);
    let out = Coloring::new(colors);
    ensure_proper(&m, &out)?;
    Ok((m, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{is_s_wide, local_profile};
    use crate::families::kneser;

    #[test]
    fn k2_to_c15() {
        let (m, c) = gmyc_wide_extension(&complete(2), &Coloring::new(vec![1, 2]), 7).unwrap();
        assert_eq!(m.order(), 15);
        assert!(is_s_wide(&m, &c, 3).unwrap());
        // Levels 3 and 5 and the apex carry the new color; level 0 keeps 1, 2.
        assert_eq!(&c.colors()[0..2], &[1, 2]);
        assert_eq!(&c.colors()[6..8], &[3, 3]);
        assert_eq!(&c.colors()[10..12], &[3, 3]);
        assert_eq!(c.color(14), 3);
        assert!(gmyc_wide_extension(&complete(2), &Coloring::new(vec![1, 2]), 6).is_err());
    }

    #[test]
    fn larger_r_collapses() {
        assert_eq!(collapse_level(0, 9), 0);
        assert_eq!(collapse_level(2, 9), 0);
        assert_eq!(collapse_level(8, 9), 6);
        let (m, c) = gmyc_wide_extension(&complete(2), &Coloring::new(vec![1, 2]), 9).unwrap();
        assert!(is_s_wide(&m, &c, 3).unwrap());
    }

    #[test]
    fn direct_small() {
        let (t, c) = gmyc_direct_coloring(&[4], &DirectBase::K2, false).unwrap();
        assert_eq!(t.graph.order(), 9);
        assert!(local_profile(&t.graph, &c).is_ok());
        let (t, c) = gmyc_direct_coloring(&[4, 4], &DirectBase::K2, true).unwrap();
        assert!(local_profile(&t.graph, &c).unwrap().max_plus_one <= 4);
        assert!(gmyc_direct_coloring(&[3], &DirectBase::K2, false).is_err());
    }

    #[test]
    fn c9_seed_sees_one_nonzero_color() {
        let DirectBase::Colored { graph, coloring } = DirectBase::c9_seed() else { unreachable!() };
        for v in 0..9 {
            let nonzero: std::collections::BTreeSet<i64> = graph.neighbors(v).iter().map(|u| coloring.color(u)).filter(|&c| c != 0).collect();
            assert!(nonzero.len() <= 1);
        }
    }

    #[test]
    fn psi_coloring_adds_one() {
        let p = kneser(5, 2).unwrap();
        let c = crate::solvers::local_chromatic(&p).unwrap().partition.to_coloring();
        let before = local_profile(&p, &c).unwrap().max_plus_one;
        let (m, mc) = mycielski_psi_coloring(&p, &c).unwrap();
        assert_eq!(local_profile(&m, &mc).unwrap().max_plus_one, before + 1);
        let (m, mc) = mycielski_psi_coloring(&complete(2), &Coloring::new(vec![1, 2])).unwrap();
        assert_eq!(local_profile(&m, &mc).unwrap().max_plus_one, 3);
    }
}
