//! Vertex colorings and the checkers every construction is verified with.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A total map from vertex index to a (signed) color.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<i64>,
}

impl Coloring {
    pub fn new(colors: Vec<i64>) -> Self {
        Coloring { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    #[inline]
    pub fn color(&self, v: usize) -> i64 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[i64] {
        &self.colors
    }

    pub fn palette(&self) -> BTreeSet<i64> {
        self.colors.iter().copied().collect()
    }

    pub fn num_colors(&self) -> usize {
        self.palette().len()
    }

    /// Vertex sets of the color classes, keyed by color.
    pub fn classes(&self) -> BTreeMap<i64, BitSet> {
        let n = self.colors.len();
        let mut out: BTreeMap<i64, BitSet> = BTreeMap::new();
        for (v, &c) in self.colors.iter().enumerate() {
            out.entry(c).or_insert_with(|| BitSet::new(n)).insert(v);
        }
        out
    }

    /// Relabels the palette to `1..=k` preserving the order of colors.
    pub fn normalized(&self) -> Coloring {
        let index: BTreeMap<i64, i64> = self
            .palette()
            .into_iter()
            .enumerate()
            .map(|(i, c)| (c, i as i64 + 1))
            .collect();
        Coloring::new(self.colors.iter().map(|c| index[c]).collect())
    }

    /// The coloring `v -> self(map[v])`, i.e. the pullback along a vertex map.
    pub fn pull_back(&self, map: &[usize]) -> Coloring {
        Coloring::new(map.iter().map(|&w| self.colors[w]).collect())
    }

    pub(crate) fn check_len(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.order() {
            return Err(Error::ColoringMismatch {
                graph: g.order(),
                coloring: self.colors.len(),
            });
        }
        Ok(())
    }
}

/// Per-vertex count of distinct colors in the open neighborhood.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalProfile {
    pub per_vertex: Vec<usize>,
    /// `1 + max per_vertex`; an upper bound on the local chromatic number when the
    /// coloring is proper. Equals 1 on graphs without vertices.
    pub max_plus_one: usize,
}

/// The first monochromatic edge, if any.
pub fn find_monochromatic_edge(g: &Graph, c: &Coloring) -> Result<Option<(usize, usize)>> {
    c.check_len(g)?;
    Ok(g.edges().find(|&(u, v)| c.color(u) == c.color(v)))
}

pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    Ok(find_monochromatic_edge(g, c)?.is_none())
}

/// Like [`is_proper`] but reports the offending edge as an error.
pub fn ensure_proper(g: &Graph, c: &Coloring) -> Result<()> {
    match find_monochromatic_edge(g, c)? {
        None => Ok(()),
        Some((u, v)) => Err(Error::ImproperColoring {
            u,
            v,
            color: c.color(u),
        }),
    }
}

pub fn local_profile(g: &Graph, c: &Coloring) -> Result<LocalProfile> {
    ensure_proper(g, c)?;
    let per_vertex: Vec<usize> = (0..g.order())
        .map(|v| {
            g.neighbors(v)
                .iter()
                .map(|u| c.color(u))
                .collect::<BTreeSet<_>>()
                .len()
        })
        .collect();
    let max_plus_one = per_vertex.iter().copied().max().unwrap_or(0) + 1;
    Ok(LocalProfile {
        per_vertex,
        max_plus_one,
    })
}

/// Two equally colored (possibly identical) vertices joined by a walk of length `2s - 1`.
pub fn find_wideness_violation(g: &Graph, c: &Coloring, s: usize) -> Result<Option<(usize, usize, i64)>> {
    c.check_len(g)?;
    if s == 0 {
        return Err(crate::error::invalid("wideness parameter s must be at least 1"));
    }
    let len = 2 * s - 1;
    for (color, class) in c.classes() {
        let mut hit = g.walk_frontier(&class, len);
        hit.intersect_with(&class);
        if let Some(v) = hit.first() {
            // Recover one endpoint on the other side for the diagnostic.
            let n = g.order();
            let u = class
                .iter()
                .find(|&u| g.walk_frontier(&BitSet::from_indices(n, [u]), len).contains(v))
                .expect("frontier of the class reaches v from some member");
            return Ok(Some((u, v, color)));
        }
    }
    Ok(None)
}

/// True iff no two vertices of equal color (a vertex and itself included) are the ends of a
/// walk of length `2s - 1`. For `s = 1` this is properness.
pub fn is_s_wide(g: &Graph, c: &Coloring, s: usize) -> Result<bool> {
    Ok(find_wideness_violation(g, c, s)?.is_none())
}

pub fn ensure_s_wide(g: &Graph, c: &Coloring, s: usize) -> Result<()> {
    match find_wideness_violation(g, c, s)? {
        None => Ok(()),
        Some((u, v, color)) => Err(Error::NotWide { s, u, v, color }),
    }
}

/// Wideness (`s = 3`) through the neighborhood characterization: the coloring is proper,
/// and for every color class both its neighborhood and its second neighborhood are
/// independent sets.
pub fn is_wide_by_neighborhoods(g: &Graph, c: &Coloring) -> Result<bool> {
    if !is_proper(g, c)? {
        return Ok(false);
    }
    for class in c.classes().values() {
        let first = g.neighborhood_of_set(class);
        if !g.is_independent(&first) {
            return Ok(false);
        }
        let second = g.neighborhood_of_set(&first);
        if !g.is_independent(&second) {
            return Ok(false);
        }
    }
    Ok(true)
}
