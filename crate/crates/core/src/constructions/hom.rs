//! Explicit homomorphisms.

use std::collections::HashMap;
use std::sync::Arc;

use crate::coloring::{ensure_s_wide, Coloring};
use crate::error::{invalid, Error, Result};
use crate::families::{complete, gen_mycielski, wide_universal, WVertex};
use crate::graph::Graph;

/// An edge-preserving vertex map, checked on construction.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    source: Arc<Graph>,
    target: Arc<Graph>,
    map: Vec<usize>,
}

impl Homomorphism {
    pub fn new(source: Arc<Graph>, target: Arc<Graph>, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::GraphMismatch(format!(
                "map has {} entries for a source with {} vertices",
                map.len(),
                source.order()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&x| x >= target.order()) {
            return Err(Error::GraphMismatch(format!("image {bad} is not a target vertex")));
        }
        if let Some((u, v)) = source.edges().find(|&(u, v)| !target.has_edge(map[u], map[v])) {
            return Err(Error::NotHomomorphism {
                u,
                v,
                fu: map[u],
                fv: map[v],
            });
        }
        Ok(Homomorphism { source, target, map })
    }

    pub fn identity(g: Arc<Graph>) -> Self {
        let map = (0..g.order()).collect();
        Homomorphism {
            source: g.clone(),
            target: g,
            map,
        }
    }

    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, v: usize) -> usize {
        self.map[v]
    }

    /// Pulls a coloring of the target back to the source.
    pub fn pull_back(&self, c: &Coloring) -> Result<Coloring> {
        c.check_len(&self.target)?;
        Ok(c.pull_back(&self.map))
    }
}

/// `second ∘ first`; the target of `first` must equal the source of `second`.
pub fn compose(first: &Homomorphism, second: &Homomorphism) -> Result<Homomorphism> {
    if !Arc::ptr_eq(&first.target, &second.source) && *first.target != *second.source {
        return Err(Error::GraphMismatch("target of the first map is not the source of the second".into()));
    }
    let map = first.map.iter().map(|&x| second.map[x]).collect();
    Homomorphism::new(first.source.clone(), second.target.clone(), map)
}

/// `g -> W(s,t)` from an `s`-wide coloring with at most `t` colors: `x_i = min(s, d_i(v))`
/// with `d_i` the distance to the `i`-th color class (colors taken in increasing order).
/// Isolated vertices go to the lexicographically least vertex of `W(s,t)`.
pub fn hom_from_swide(g: Arc<Graph>, c: &Coloring, s: usize, t: usize) -> Result<(Homomorphism, Vec<WVertex>)> {
    ensure_s_wide(&g, c, s)?;
    if c.num_colors() > t {
        return Err(invalid(format!("coloring uses {} colors, more than t={t}", c.num_colors())));
    }
    let (w, verts) = wide_universal(s, t)?;
    let index: HashMap<&[usize], usize> = verts.iter().enumerate().map(|(i, v)| (v.0.as_slice(), i)).collect();
    let classes: Vec<_> = c.classes().into_values().collect();
    let mut coords = vec![vec![s; t]; g.order()];
    for (i, class) in classes.iter().enumerate() {
        for (v, d) in g.distances_from_set(class, s).into_iter().enumerate() {
            coords[v][i] = d;
        }
    }
    let map = coords
        .iter()
        .enumerate()
        .map(|(v, x)| {
            if g.is_isolated(v) {
                return Ok(0);
            }
            index
                .get(x.as_slice())
                .copied()
                .ok_or_else(|| Error::Verification(format!("image of vertex {v} is not a vertex of W({s},{t})")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((Homomorphism::new(g, Arc::new(w), map)?, verts))
}

/// `W(s,t) -> M_s(K_{t-1})`: `x` with `x_i = 0` goes to `(s - x_t, i)` when `i < t` and to the
/// apex when `x_t = 0`.
pub fn w_to_gmyc_hom(s: usize, t: usize) -> Result<Homomorphism> {
    if t < 3 {
        return Err(invalid(format!("the map into M_s(K_(t-1)) needs t >= 3, got {t}")));
    }
    let (w, verts) = wide_universal(s, t)?;
    let target = gen_mycielski(&complete(t - 1), s)?;
    let map = verts
        .iter()
        .map(|x| {
            let i = x.zero_position();
            let xt = x.0[t - 1];
            if xt == 0 {
                s * (t - 1)
            } else {
                (s - xt) * (t - 1) + i
            }
        })
        .collect();
    Homomorphism::new(Arc::new(w), Arc::new(target), map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::interval::{sg_with_interval_coloring, IntervalRule};
    use crate::constructions::wide_universal::w_canonical_coloring;
    use crate::families::cycle;
    use crate::solvers::is_isomorphic;

    #[test]
    fn w_maps_into_odd_cycles() {
        let h = w_to_gmyc_hom(2, 3).unwrap();
        assert!(is_isomorphic(h.target(), &cycle(5).unwrap()));
        let h = w_to_gmyc_hom(3, 3).unwrap();
        assert!(is_isomorphic(h.target(), &cycle(7).unwrap()));
        let h = w_to_gmyc_hom(2, 4).unwrap();
        assert_eq!(h.target().order(), 7);
        assert!(w_to_gmyc_hom(2, 2).is_err());
    }

    #[test]
    fn swide_round_trip() {
        let (g, c) = sg_with_interval_coloring(9, 4, &[3, 3, 3], IntervalRule::AnyMajority).unwrap();
        let (h, _) = hom_from_swide(Arc::new(g), &c, 2, 3).unwrap();
        let (_, canon) = w_canonical_coloring(2, 3).unwrap();
        assert_eq!(h.pull_back(&canon).unwrap(), c.normalized());
    }

    #[test]
    fn self_map_and_compose() {
        let (w, canon) = w_canonical_coloring(2, 3).unwrap();
        let w = Arc::new(w);
        let (h, _) = hom_from_swide(w.clone(), &canon, 2, 3).unwrap();
        let id = Homomorphism::identity(w.clone());
        assert_eq!(compose(&id, &h).unwrap().map(), h.map());
        // SG(9,4) is a 9-cycle.
        let (c9, c9_col) = sg_with_interval_coloring(9, 4, &[3, 3, 3], IntervalRule::AnyMajority).unwrap();
        let (a, _) = hom_from_swide(Arc::new(c9), &c9_col, 2, 3).unwrap();
        let b = w_to_gmyc_hom(2, 3).unwrap();
        let ab = compose(&a, &b).unwrap();
        assert_eq!(ab.target().order(), 5);
        assert!(compose(&b, &a).is_err());
    }

    #[test]
    fn rejects_non_edge_map() {
        let g = Arc::new(complete(2));
        assert!(matches!(Homomorphism::new(g.clone(), g, vec![0, 0]), Err(Error::NotHomomorphism { .. })));
    }
}
