use crate::error::{invalid, Result};
use crate::graph::Graph;

/// Generalized Mycielskian `M_r(G)`.
///
/// The direct product of `G` with the path `0 - 1 - ... - r` carrying a loop at `0`, with
/// every vertex of level `r` identified into one apex. Level `0` keeps the edges of `G`
/// (through the loop); `(l, v) ~ (l', v')` iff `{v, v'}` is an edge and `|l - l'| = 1` or
/// `l = l' = 0`; the apex is joined to all of level `r - 1`.
///
/// Vertex `(l, v)` has index `l * |V(G)| + v`; the apex is last. Labels are `(l,label)` and
/// `z`.
pub fn gen_mycielski(g: &Graph, r: usize) -> Result<Graph> {
    if r == 0 {
        return Err(invalid("generalized Mycielskian needs r >= 1"));
    }
    if g.order() == 0 {
        return Err(invalid("generalized Mycielskian of the empty graph"));
    }
    let n = g.order();
    let idx = |l: usize, v: usize| l * n + v;
    let apex = r * n;
    let mut labels = Vec::with_capacity(apex + 1);
    for l in 0..r {
        for v in 0..n {
            labels.push(format!("({l},{})", g.label(v)));
        }
    }
    labels.push("z".to_string());
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        edges.push((idx(0, u), idx(0, v)));
        for l in 0..r - 1 {
            edges.push((idx(l, u), idx(l + 1, v)));
            edges.push((idx(l, v), idx(l + 1, u)));
        }
    }
    for v in 0..n {
        edges.push((idx(r - 1, v), apex));
    }
    Graph::from_edges(labels, edges)
}

/// Coordinates of a vertex in an iterated generalized Mycielskian.
///
/// `levels` lists the level in each construction step, outermost step first. An apex of
/// some step has level equal to that step's parameter; all inner coordinates and the base
/// vertex are then absent (`None`). This is the only way `None` appears.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MycVertex {
    pub levels: Vec<Option<usize>>,
    pub base: Option<usize>,
}

/// An iterated generalized Mycielskian together with the coordinate labelling of its vertices.
#[derive(Clone, Debug)]
pub struct MycTower {
    pub graph: Graph,
    /// Step parameters, outermost first (reverse of the application order).
    pub params: Vec<usize>,
    pub coords: Vec<MycVertex>,
}

impl MycTower {
    pub fn depth(&self) -> usize {
        self.params.len()
    }
}

/// `M_{r_d}( ... M_{r_1}(G) ... )`, applying `rs` left to right. An empty `rs` returns `G`.
pub fn gen_mycielski_iter(g: &Graph, rs: &[usize]) -> Result<MycTower> {
    if let Some(&bad) = rs.iter().find(|&&r| r == 0) {
        return Err(invalid(format!("all Mycielski parameters must be >= 1, got {bad}")));
    }
    let mut tower = MycTower {
        graph: g.clone(),
        params: Vec::new(),
        coords: (0..g.order())
            .map(|v| MycVertex {
                levels: Vec::new(),
                base: Some(v),
            })
            .collect(),
    };
    for &r in rs {
        let graph = gen_mycielski(&tower.graph, r)?;
        let depth = tower.params.len();
        let mut coords = Vec::with_capacity(graph.order());
        for l in 0..r {
            for inner in &tower.coords {
                let mut levels = Vec::with_capacity(depth + 1);
                levels.push(Some(l));
                levels.extend_from_slice(&inner.levels);
                coords.push(MycVertex {
                    levels,
                    base: inner.base,
                });
            }
        }
        let mut levels = vec![None; depth + 1];
        levels[0] = Some(r);
        coords.push(MycVertex { levels, base: None });
        tower.params.insert(0, r);
        tower.graph = graph;
        tower.coords = coords;
    }
    Ok(tower)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, LoopedPath};

    #[test]
    fn orders() {
        let k2 = complete(2);
        assert_eq!(gen_mycielski(&k2, 4).unwrap().order(), 9);
        assert_eq!(gen_mycielski_iter(&k2, &[2, 2]).unwrap().graph.order(), 11);
        assert_eq!(gen_mycielski_iter(&k2, &[4, 4, 4]).unwrap().graph.order(), 149);
        assert_eq!(gen_mycielski_iter(&k2, &[7, 7, 7]).unwrap().graph.order(), 743);
        assert!(gen_mycielski(&k2, 0).is_err());
        assert!(gen_mycielski(&Graph::empty(), 2).is_err());
    }

    #[test]
    fn m1_adds_a_universal_vertex() {
        let g = gen_mycielski(&complete(3), 1).unwrap();
        assert!(g.same_structure(&complete(4)));
    }

    #[test]
    fn empty_parameter_list_is_identity() {
        let k3 = complete(3);
        let t = gen_mycielski_iter(&k3, &[]).unwrap();
        assert_eq!(t.graph, k3);
        assert_eq!(t.depth(), 0);
    }

    /// The coordinate labelling must reproduce the adjacency rule of the product description:
    /// base vertices adjacent (or absent) and every coordinate pair adjacent in its looped
    /// path (or absent).
    #[test]
    fn coordinates_match_product_adjacency() {
        let base = complete(3);
        let tower = gen_mycielski_iter(&base, &[2, 3]).unwrap();
        let paths: Vec<LoopedPath> = tower.params.iter().map(|&r| LoopedPath::loop_at_start(r)).collect();
        let n = tower.graph.order();
        for a in 0..n {
            for b in 0..n {
                let (x, y) = (&tower.coords[a], &tower.coords[b]);
                let base_ok = match (x.base, y.base) {
                    (Some(u), Some(v)) => base.has_edge(u, v),
                    _ => true,
                };
                let levels_ok = x.levels.iter().zip(&y.levels).zip(&paths).all(|((p, q), path)| match (p, q) {
                    (Some(p), Some(q)) => path.adjacent(*p, *q),
                    _ => true,
                });
                assert_eq!(tower.graph.has_edge(a, b), base_ok && levels_ok && a != b, "{x:?} {y:?}");
            }
        }
    }
}
