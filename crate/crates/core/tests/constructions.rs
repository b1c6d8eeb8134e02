use std::sync::Arc;

use proptest::prelude::*;
use topochrom::coloring::{is_proper, is_s_wide, local_profile};
use topochrom::constructions::*;
use topochrom::families::{complete, cycle, gen_mycielski, schrijver, wide_universal};
use topochrom::solvers::{chromatic_number, dsatur_greedy, is_pq_coloring};
use topochrom::{Coloring, Graph};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let m = pairs.len();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e);
            Graph::with_indices(n, edges).unwrap()
        })
    })
}

fn round_trip(n: usize, k: usize, s: usize) {
    let t = n + 2 - 2 * k;
    let part = IntervalPartition::balanced(n, t).unwrap();
    let (g, c) = sg_with_interval_coloring(n, k, &part.sizes, IntervalRule::SmallestAnchor).unwrap();
    assert!(is_s_wide(&g, &c, s).unwrap());
    assert!((0..g.order()).all(|v| !g.is_isolated(v)));
    let (h, _) = hom_from_swide(Arc::new(g), &c, s, t).unwrap();
    let (_, canon) = w_canonical_coloring(s, t).unwrap();
    assert_eq!(h.pull_back(&canon).unwrap(), c.normalized(), "SG({n},{k})");
}

#[test]
fn swide_round_trip_on_schrijver_graphs() {
    round_trip(9, 4, 2);
    round_trip(15, 7, 3);
}

#[test]
fn w_to_mycielskian_is_edge_complete() {
    for (s, t) in [(2, 3), (3, 3), (2, 4), (3, 4)] {
        let h = w_to_gmyc_hom(s, t).unwrap();
        let (w, _) = wide_universal(s, t).unwrap();
        let target = gen_mycielski(&complete(t - 1), s).unwrap();
        assert_eq!(h.source(), &w);
        assert!(w.edges().all(|(u, v)| target.has_edge(h.apply(u), h.apply(v))), "({s},{t})");
    }
}

#[test]
fn w_edge_deletion_drops_chromatic_number() {
    let (w, _) = wide_universal(2, 3).unwrap();
    assert_eq!(chromatic_number(&w).unwrap(), 3);
    for (u, v) in w.edges() {
        let (h, c) = w_edge_deleted_coloring(2, 3, (u, v)).unwrap();
        assert!(is_proper(&h, &c).unwrap());
        assert!(c.num_colors() <= 2);
    }
    assert!(w_edge_deleted_coloring(2, 3, (0, 0)).is_err());
}

#[test]
fn interval_coloring_uses_t_colors() {
    for (n, k) in [(9, 4), (10, 4), (11, 4), (15, 7)] {
        let t = n + 2 - 2 * k;
        let part = IntervalPartition::balanced(n, t).unwrap();
        for rule in [IntervalRule::AnyMajority, IntervalRule::SmallestAnchor] {
            let (g, c) = sg_with_interval_coloring(n, k, &part.sizes, rule).unwrap();
            assert!(is_proper(&g, &c).unwrap());
            assert_eq!(c.num_colors(), t);
        }
    }
}

#[test]
fn widening_adds_one_fresh_color() {
    let (g, c0) = sg_with_interval_coloring(15, 7, &[5, 5, 5], IntervalRule::SmallestAnchor).unwrap();
    let c = widen_to_local(&g, &c0).unwrap();
    let old = c0.palette();
    let fresh: Vec<i64> = c.palette().difference(&old).copied().collect();
    assert!(fresh.len() <= 1);
    for v in 0..g.order() {
        assert!(c.color(v) == c0.color(v) || fresh.contains(&c.color(v)));
    }
    assert!(local_profile(&g, &c).unwrap().max_plus_one <= 3);
    // Odd cycles are not wide, so they are rejected.
    let c5 = cycle(5).unwrap();
    assert!(widen_to_local(&c5, &Coloring::new(vec![1, 2, 1, 2, 3])).is_err());
}

#[test]
fn direct_mycielski_colorings() {
    let (tower, c) = gmyc_direct_coloring(&[4, 4, 4], &DirectBase::K2, false).unwrap();
    assert_eq!(tower.graph.order(), 149);
    assert!(is_proper(&tower.graph, &c).unwrap());
    assert!(local_profile(&tower.graph, &c).unwrap().max_plus_one <= 5);
    let (tower, c) = gmyc_direct_coloring(&[4, 4], &DirectBase::K2, true).unwrap();
    assert!(local_profile(&tower.graph, &c).unwrap().max_plus_one <= 4);
    let (tower, c) = gmyc_direct_coloring(&[4], &DirectBase::c9_seed(), false).unwrap();
    assert!(is_proper(&tower.graph, &c).unwrap());
    assert!(gmyc_direct_coloring(&[3], &DirectBase::K2, false).is_err());
}

#[test]
fn wide_extension_keeps_wideness() {
    let (g, c0) = sg_with_interval_coloring(15, 7, &[5, 5, 5], IntervalRule::SmallestAnchor).unwrap();
    let (m, c) = gmyc_wide_extension(&g, &c0, 8).unwrap();
    assert_eq!(m.order(), 8 * g.order() + 1);
    assert!(is_s_wide(&m, &c, 3).unwrap());
    assert_eq!(c.num_colors(), 4);
    assert!(gmyc_wide_extension(&g, &c0, 6).is_err());
    let k2 = complete(2);
    let c = Coloring::new(vec![1, 2]);
    let (tower, c) = gmyc_wide_extension_iter(&k2, &c, &[7, 7]).unwrap();
    assert_eq!(tower.graph.order(), 7 * 15 + 1);
    assert!(is_s_wide(&tower.graph, &c, 3).unwrap());
    assert_eq!(c.num_colors(), 4);
    assert_eq!(collapse_level(9, 9), 7);
    assert_eq!(collapse_level(1, 9), 0);
}

#[test]
fn pipeline_colorings_satisfy_the_circular_constraint() {
    for (t, i, p, q) in [(3, 2, 5, 2), (3, 3, 7, 3)] {
        let out = oddsch_pipeline(t, i).unwrap();
        assert_eq!((out.p, out.q), (p, q));
        let g = schrijver(out.n, out.k).unwrap();
        assert!(is_pq_coloring(&g, &out.coloring, out.p, out.q).unwrap());
        assert!(chromatic_number(&g).unwrap() as i64 * out.q as i64 - out.p as i64 >= 1);
    }
}

#[test]
fn remark4_small_instance() {
    let (g, c) = sg_remark4_coloring(33, 15, 1, &[9, 9, 9, 5, 1]).unwrap();
    assert!(is_proper(&g, &c).unwrap());
    assert!(local_profile(&g, &c).unwrap().max_plus_one <= 4);
    assert!(sg_remark4_coloring(33, 15, 1, &[9, 9, 9, 6]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mycielskian_adds_one_to_the_profile(g in arb_graph(9)) {
        let c = dsatur_greedy(&g);
        let before = local_profile(&g, &c).unwrap().max_plus_one;
        let (m, mc) = mycielski_psi_coloring(&g, &c).unwrap();
        prop_assert!(is_proper(&m, &mc).unwrap());
        prop_assert_eq!(local_profile(&m, &mc).unwrap().max_plus_one, before + 1);
    }

    #[test]
    fn compose_agrees_with_pointwise_application(s in 2usize..4, t in 3usize..5) {
        let (w, canon) = w_canonical_coloring(s, t).unwrap();
        let w = Arc::new(w);
        let (a, _) = hom_from_swide(w.clone(), &canon, s, t).unwrap();
        let b = w_to_gmyc_hom(s, t).unwrap();
        let ab = compose(&a, &b).unwrap();
        for v in 0..w.order() {
            prop_assert_eq!(ab.apply(v), b.apply(a.apply(v)));
        }
    }
}
