//! Backtracking homomorphism search with forward checking.

use crate::bitset::BitSet;
use crate::graph::Graph;
use crate::solvers::budget::{Budget, Meter};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomOutcome {
    Found(Vec<usize>),
    /// Exhaustive search proved that no homomorphism exists.
    None,
    /// The budget ran out first.
    Unknown,
}

impl HomOutcome {
    pub fn found(&self) -> Option<&[usize]> {
        match self {
            HomOutcome::Found(m) => Some(m),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct HomOptions {
    pub budget: Budget,
    /// Require an injective map.
    pub injective: bool,
    /// Map the first vertex placed in every connected component of the source to this target
    /// vertex. Only sound when the target is vertex-transitive.
    pub pin_component_roots: Option<usize>,
    /// An involutive automorphism `sigma` of the target fixing the pinned vertex. The second
    /// vertex placed in every component only takes images `x <= sigma(x)`.
    pub pin_reflection: Option<Vec<usize>>,
    /// Optional per-source-vertex candidate sets.
    pub domains: Option<Vec<BitSet>>,
}

/// Search order: components one after another, each by maximum cardinality search, so
/// every vertex after a root has an already-placed neighbor.
pub(crate) fn search_order(g: &Graph) -> (Vec<usize>, Vec<bool>) {
    let n = g.order();
    let mut placed = vec![false; n];
    let mut weight = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    let mut is_root = vec![false; n];
    while order.len() < n {
        // Start a component at a remaining vertex of maximum degree.
        let root = (0..n).filter(|&v| !placed[v]).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();
        is_root[root] = true;
        let mut next = Some(root);
        while let Some(v) = next {
            placed[v] = true;
            order.push(v);
            for u in g.neighbors(v) {
                weight[u] += 1;
            }
            next = (0..n)
                .filter(|&u| !placed[u] && weight[u] > 0)
                .max_by_key(|&u| (weight[u], g.degree(u), std::cmp::Reverse(u)));
        }
    }
    (order, is_root)
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    component: Vec<usize>,
    placed_in_component: Vec<usize>,
    assigned: Vec<bool>,
    domains: Vec<BitSet>,
    assignment: Vec<usize>,
    used: BitSet,
    opts: &'a HomOptions,
    meter: Meter,
}

impl Search<'_> {
    /// Unassigned vertex with the fewest candidates; ties go to the most placed neighbors,
    /// then the largest degree.
    fn next_vertex(&self) -> Option<usize> {
        (0..self.g.order()).filter(|&v| !self.assigned[v]).min_by_key(|&v| {
            let placed = self.g.neighbors(v).iter().filter(|&u| self.assigned[u]).count();
            (self.domains[v].count(), std::cmp::Reverse(placed), std::cmp::Reverse(self.g.degree(v)), v)
        })
    }

    /// Arc consistency after placing `v` at `x`: every unplaced vertex keeps only images
    /// adjacent to some candidate of each placed or shrunken neighbor. Old domains go on `trail`.
    fn propagate(&mut self, v: usize, x: usize, trail: &mut Vec<(usize, BitSet)>) -> bool {
        let mut queue = vec![v];
        let mut support = BitSet::new(self.h.order());
        while let Some(u) = queue.pop() {
            support.clear();
            for y in &self.domains[u] {
                support.union_with(self.h.neighbors(y));
            }
            for w in self.g.neighbors(u) {
                if self.assigned[w] {
                    continue;
                }
                let mut d = self.domains[w].clone();
                d.intersect_with(&support);
                if self.opts.injective && u == v {
                    d.remove(x);
                }
                if d.count() == self.domains[w].count() {
                    continue;
                }
                let empty = d.is_empty();
                trail.push((w, std::mem::replace(&mut self.domains[w], d)));
                if empty {
                    return false;
                }
                if !queue.contains(&w) {
                    queue.push(w);
                }
            }
        }
        true
    }

    fn run(&mut self) -> bool {
        let Some(v) = self.next_vertex() else {
            return true;
        };
        if self.meter.tick() {
            return false;
        }
        let mut candidates = self.domains[v].clone();
        if self.placed_in_component[self.component[v]] == 0 {
            if let Some(pin) = self.opts.pin_component_roots {
                candidates = BitSet::from_indices(self.h.order(), [pin].into_iter().filter(|&p| self.domains[v].contains(p)));
            }
        } else if self.placed_in_component[self.component[v]] == 1 && self.opts.pin_component_roots.is_some() {
            if let Some(sigma) = &self.opts.pin_reflection {
                candidates = BitSet::from_indices(self.h.order(), candidates.iter().filter(|&x| x <= sigma[x]));
            }
        }
        if self.opts.injective {
            candidates.difference_with(&self.used);
        }
        self.assigned[v] = true;
        self.placed_in_component[self.component[v]] += 1;
        for x in &candidates {
            let mut trail: Vec<(usize, BitSet)> = vec![(v, std::mem::replace(&mut self.domains[v], BitSet::from_indices(self.h.order(), [x])))];
            let ok = self.propagate(v, x, &mut trail);
            if ok {
                self.assignment[v] = x;
                self.used.insert(x);
                if self.run() {
                    return true;
                }
                self.used.remove(x);
            }
            for (u, d) in trail.into_iter().rev() {
                self.domains[u] = d;
            }
            if self.meter.exhausted {
                break;
            }
        }
        self.assigned[v] = false;
        self.placed_in_component[self.component[v]] -= 1;
        false
    }
}

fn components(g: &Graph) -> (Vec<usize>, usize) {
    let n = g.order();
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = count;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for u in g.neighbors(v) {
                if comp[u] == usize::MAX {
                    comp[u] = count;
                    stack.push(u);
                }
            }
        }
        count += 1;
    }
    (comp, count)
}

pub fn find_hom_with(g: &Graph, h: &Graph, opts: &HomOptions) -> HomOutcome {
    let n = g.order();
    if n == 0 {
        return HomOutcome::Found(Vec::new());
    }
    if h.order() == 0 || (opts.injective && h.order() < n) {
        return HomOutcome::None;
    }
    let mut domains = match &opts.domains {
        Some(d) => d.clone(),
        None => vec![BitSet::full(h.order()); n],
    };
    // A vertex with a neighbor needs an image with a neighbor.
    let non_isolated = BitSet::from_indices(h.order(), (0..h.order()).filter(|&x| !h.is_isolated(x)));
    for v in 0..n {
        if !g.is_isolated(v) {
            domains[v].intersect_with(&non_isolated);
        }
    }
    let (component, count) = components(g);
    let mut search = Search {
        g,
        h,
        component,
        placed_in_component: vec![0; count],
        assigned: vec![false; n],
        domains,
        assignment: vec![usize::MAX; n],
        used: BitSet::new(h.order()),
        opts,
        meter: opts.budget.meter(),
    };
    if search.run() {
        HomOutcome::Found(search.assignment)
    } else if search.meter.exhausted {
        HomOutcome::Unknown
    } else {
        HomOutcome::None
    }
}

/// Homomorphism `g -> h`, or a proof (by exhaustion) that none exists.
pub fn find_hom(g: &Graph, h: &Graph, budget: Budget) -> HomOutcome {
    find_hom_with(
        g,
        h,
        &HomOptions {
            budget,
            ..HomOptions::default()
        },
    )
}

/// Edge-preserving check for an arbitrary vertex map.
pub fn is_homomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    map.len() == g.order() && map.iter().all(|&x| x < h.order()) && g.edges().all(|(u, v)| h.has_edge(map[u], map[v]))
}

/// An isomorphism `g -> h` as a vertex map, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.size() != h.size() {
        return None;
    }
    let mut gd: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let mut hd: Vec<usize> = (0..h.order()).map(|v| h.degree(v)).collect();
    let domains = (0..g.order())
        .map(|v| BitSet::from_indices(h.order(), (0..h.order()).filter(|&x| h.degree(x) == g.degree(v))))
        .collect();
    gd.sort_unstable();
    hd.sort_unstable();
    if gd != hd {
        return None;
    }
    let opts = HomOptions {
        injective: true,
        domains: Some(domains),
        ..HomOptions::default()
    };
    // An edge-preserving bijection between graphs with equally many edges is an isomorphism.
    match find_hom_with(g, h, &opts) {
        HomOutcome::Found(m) => Some(m),
        _ => None,
    }
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}
