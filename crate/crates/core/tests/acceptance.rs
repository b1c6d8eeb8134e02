//! Acceptance suite: one PASS/FAIL line per criterion. Runs as a plain binary (`harness = false`)
//! and exits nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use topochrom::coloring::{is_proper, is_s_wide, local_profile};
use topochrom::constructions::*;
use topochrom::families::*;
use topochrom::geometry::*;
use topochrom::solvers::*;
use topochrom::{Coloring, Fraction, Graph};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn frac(n: i64, d: i64) -> Fraction {
    Fraction::new(n, d)
}

fn int(n: usize) -> Fraction {
    Fraction::from_integer(n as i64)
}

fn exact_chi(g: &Graph) -> Result<usize, String> {
    let r = chromatic_number_with(g, Limits::default()).map_err(|e| e.to_string())?;
    ensure!(r.exact, "chromatic number not certified");
    ensure!(is_proper(g, &r.coloring).unwrap() && r.coloring.num_colors() <= r.value, "bad chi witness");
    Ok(r.value)
}

fn exact_psi(g: &Graph) -> Result<usize, String> {
    let r = local_chromatic(g).map_err(|e| e.to_string())?;
    ensure!(r.exact, "local chromatic number not certified");
    let c = r.partition.to_coloring();
    ensure!(is_proper(g, &c).unwrap(), "psi witness is not proper");
    ensure!(local_profile(g, &c).unwrap().max_plus_one == r.value, "psi witness profile differs");
    Ok(r.value)
}

fn exact_frac(g: &Graph) -> Result<Fraction, String> {
    let r = fractional_chromatic(g).map_err(|e| e.to_string())?;
    r.verify(g).map_err(|e| e.to_string())?;
    Ok(r.value)
}

fn exact_circ(g: &Graph) -> Result<Fraction, String> {
    let r = circular_chromatic(g).map_err(|e| e.to_string())?;
    ensure!(r.exact, "circular chromatic number not certified");
    ensure!(is_pq_coloring(g, &r.coloring, r.p, r.q).unwrap(), "({},{}) witness fails", r.p, r.q);
    ensure!(r.value == frac(r.p as i64, r.q as i64), "value differs from witness ratio");
    Ok(r.value)
}

fn c1() -> Outcome {
    let mut seen = Vec::new();
    for (n, k) in [(5, 2), (6, 2), (7, 2), (7, 3), (8, 3), (9, 4)] {
        let chi = exact_chi(&schrijver(n, k).unwrap())?;
        ensure!(chi == n - 2 * k + 2, "chi(SG({n},{k})) = {chi}");
        seen.push(format!("SG({n},{k})={chi}"));
    }
    Ok(seen.join(" "))
}

fn c2() -> Outcome {
    let mycielski_c5 = gen_mycielski(&cycle(5).unwrap(), 2).unwrap();
    let cases = [
        ("KG(5,2)", kneser(5, 2).unwrap(), frac(5, 2)),
        ("SG(6,2)", schrijver(6, 2).unwrap(), frac(3, 1)),
        ("M(C5)", mycielski_c5, frac(29, 10)),
        ("C7", cycle(7).unwrap(), frac(7, 3)),
    ];
    let mut seen = Vec::new();
    for (name, g, want) in cases {
        let v = exact_frac(&g)?;
        ensure!(v == want, "chi_f({name}) = {v}, expected {want}");
        seen.push(format!("{name}={v}"));
    }
    Ok(seen.join(" "))
}

fn random_graph(rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.random_range(1..=11);
    let p = rng.random_range(0.15..0.85);
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let edges: Vec<_> = edges.into_iter().filter(|_| rng.random_bool(p)).collect();
    Graph::with_indices(n, edges).unwrap()
}

fn c3() -> Outcome {
    for n in 4..=7 {
        let psi = exact_psi(&schrijver(n, 2).unwrap())?;
        ensure!(psi == n - 2, "psi(SG({n},2)) = {psi}");
    }
    let petersen = kneser(5, 2).unwrap();
    let c5 = cycle(5).unwrap();
    let named = [
        ("C5", c5.clone(), 3),
        ("M(C5)", gen_mycielski(&c5, 2).unwrap(), 4),
        ("Petersen", petersen.clone(), 3),
        ("M(Petersen)", gen_mycielski(&petersen, 2).unwrap(), 4),
    ];
    for (name, g, want) in named {
        let psi = exact_psi(&g)?;
        ensure!(psi == want, "psi({name}) = {psi}, expected {want}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..200 {
        let g = random_graph(&mut rng);
        let fast = exact_psi(&g)?;
        let (oracle, _) = local_chromatic_exhaustive(&g).map_err(|e| e.to_string())?;
        ensure!(fast == oracle, "random graph {i}: branch and bound {fast}, oracle {oracle}");
    }
    Ok("named values match; 200/200 random graphs agree with the oracle".into())
}

fn c4() -> Outcome {
    let sg = zigzag_exhaustive(&schrijver(6, 2).unwrap(), 4).map_err(|e| e.to_string())?;
    ensure!(sg.all_have_witness(), "SG(6,2): partition without K_(2,2) witness: {:?}", sg.counterexample);
    ensure!(sg.t_class_partitions > 0, "SG(6,2): no 4-class partition enumerated");
    ensure!(sg.split_count_holds() && sg.required_splits >= 3, "SG(6,2): only {:?} splits", sg.min_realized_splits);
    let kg = zigzag_exhaustive(&kneser(5, 2).unwrap(), 3).map_err(|e| e.to_string())?;
    ensure!(kg.all_have_witness(), "KG(5,2): partition without K_(2,1) witness: {:?}", kg.counterexample);
    ensure!(kg.t_class_partitions > 0, "KG(5,2): no 3-class partition enumerated");
    ensure!(kg.split_count_holds() && kg.required_splits >= 3, "KG(5,2): only {:?} splits", kg.min_realized_splits);
    Ok(format!(
        "SG(6,2): {} partitions, min splits {:?}; KG(5,2): {} partitions, min splits {:?}",
        sg.partitions, sg.min_realized_splits, kg.partitions, kg.min_realized_splits
    ))
}

fn c5() -> Outcome {
    let start = Instant::now();
    let (g, c) = sg_with_interval_coloring(15, 7, &[5, 5, 5], IntervalRule::SmallestAnchor).unwrap();
    ensure!(is_proper(&g, &c).unwrap() && is_s_wide(&g, &c, 3).unwrap(), "interval coloring of SG(15,7) is not 3-wide");
    let (g, c) = sg_remark4_coloring(33, 15, 1, &[9, 9, 9, 5, 1]).map_err(|e| e.to_string())?;
    let remark4 = local_profile(&g, &c).unwrap().max_plus_one;
    ensure!(is_proper(&g, &c).unwrap() && remark4 <= 4, "SG(33,15) profile {remark4}");
    ensure!(start.elapsed() < Duration::from_secs(60), "small instances took {:?}", start.elapsed());
    let part = IntervalPartition::balanced(65, 5).unwrap();
    let (g, c0) = sg_with_interval_coloring(65, 31, &part.sizes, IntervalRule::SmallestAnchor).unwrap();
    ensure!(g.order() == 11440, "SG(65,31) has {} vertices", g.order());
    let c = widen_to_local(&g, &c0).map_err(|e| e.to_string())?;
    let profile = local_profile(&g, &c).unwrap().max_plus_one;
    ensure!(is_proper(&g, &c).unwrap() && profile <= 4, "SG(65,31) profile {profile}");
    ensure!(profile <= 5usize.div_ceil(2) + 1, "profile above ceil(t/2)+1");
    Ok(format!("SG(15,7) 3-wide; SG(65,31) profile {profile}; SG(33,15) profile {remark4}"))
}

fn c6() -> Outcome {
    let (tower, c) = gmyc_direct_coloring(&[4, 4, 4], &DirectBase::K2, false).map_err(|e| e.to_string())?;
    ensure!(tower.graph.order() == 149, "direct tower has {} vertices", tower.graph.order());
    let direct = local_profile(&tower.graph, &c).unwrap().max_plus_one;
    ensure!(is_proper(&tower.graph, &c).unwrap() && direct <= 5, "direct profile {direct}");
    let (tower, c) = gmyc_wide_extension_iter(&complete(2), &Coloring::new(vec![1, 2]), &[7, 7, 7]).map_err(|e| e.to_string())?;
    let g = &tower.graph;
    ensure!(g.order() == 743, "wide tower has {} vertices", g.order());
    ensure!(c.num_colors() == 5 && is_s_wide(g, &c, 3).unwrap(), "tower coloring is not a wide 5-coloring");
    let w = widen_to_local(g, &c).map_err(|e| e.to_string())?;
    let profile = local_profile(g, &w).unwrap().max_plus_one;
    ensure!(is_proper(g, &w).unwrap() && profile <= 4, "widened profile {profile}");
    Ok(format!("direct (4,4,4) profile {direct}; wide tower 5 colors, widened profile {profile}"))
}

fn c7() -> Outcome {
    let cases = [
        ("C5", cycle(5).unwrap(), frac(5, 2)),
        ("C7", cycle(7).unwrap(), frac(7, 3)),
        ("SG(6,2)", schrijver(6, 2).unwrap(), frac(4, 1)),
        ("M(K4)", gen_mycielski(&complete(4), 2).unwrap(), frac(5, 1)),
        ("M_3(K4)", gen_mycielski(&complete(4), 3).unwrap(), frac(9, 2)),
    ];
    let mut seen = Vec::new();
    for (name, g, want) in cases {
        let v = exact_circ(&g)?;
        ensure!(v == want, "chi_c({name}) = {v}, expected {want}");
        seen.push(format!("{name}={v}"));
    }
    Ok(seen.join(" "))
}

fn c8() -> Outcome {
    let out = oddsch_pipeline(3, 2).map_err(|e| e.to_string())?;
    ensure!((out.n, out.k, out.p, out.q) == (9, 4, 5, 2), "pipeline gave SG({},{}) with ({},{})", out.n, out.k, out.p, out.q);
    let g = schrijver(9, 4).unwrap();
    ensure!(is_pq_coloring(&g, &out.coloring, 5, 2).unwrap(), "(5,2)-coloring fails on SG(9,4)");
    let gap = &int(exact_chi(&g)?) - &out.ratio();
    ensure!(gap >= frac(1, 2), "chi - p/q = {gap}");
    Ok(format!("(5,2)-coloring of SG(9,4), chi - chi_c >= {gap}"))
}

fn c9() -> Outcome {
    let mut seen = Vec::new();
    for (s, t) in [(2, 3), (3, 3), (2, 4)] {
        let (w, _) = wide_universal(s, t).unwrap();
        let chi = exact_chi(&w)?;
        ensure!(chi == t, "chi(W({s},{t})) = {chi}");
        for (u, v) in w.edges() {
            let (h, c) = w_edge_deleted_coloring(s, t, (u, v)).map_err(|e| e.to_string())?;
            ensure!(is_proper(&h, &c).unwrap() && c.num_colors() <= t - 1, "W({s},{t}) - {u}{v}: bad coloring");
            let chi = exact_chi(&h)?;
            ensure!(chi == t - 1, "chi(W({s},{t}) - {u}{v}) = {chi}");
        }
        seen.push(format!("W({s},{t}): {} edges", w.size()));
    }
    Ok(seen.join(", "))
}

fn c10() -> Outcome {
    for (s, t) in [(2, 3), (3, 3), (2, 4), (3, 4)] {
        let h = w_to_gmyc_hom(s, t).map_err(|e| e.to_string())?;
        let (w, _) = wide_universal(s, t).unwrap();
        let target = gen_mycielski(&complete(t - 1), s).unwrap();
        ensure!(h.source() == &w && h.target() == &target, "W({s},{t}): wrong endpoints");
        ensure!(w.edges().all(|(u, v)| target.has_edge(h.apply(u), h.apply(v))), "W({s},{t}): edge not preserved");
    }
    for (n, k, s) in [(15, 7, 3), (9, 4, 2)] {
        let t = n + 2 - 2 * k;
        let part = IntervalPartition::balanced(n, t).unwrap();
        let (g, c) = sg_with_interval_coloring(n, k, &part.sizes, IntervalRule::SmallestAnchor).unwrap();
        ensure!((0..g.order()).all(|v| !g.is_isolated(v)), "SG({n},{k}) has isolated vertices");
        let (h, _) = hom_from_swide(std::sync::Arc::new(g), &c, s, t).map_err(|e| e.to_string())?;
        let (_, canon) = w_canonical_coloring(s, t).unwrap();
        ensure!(h.pull_back(&canon).unwrap() == c.normalized(), "SG({n},{k}): round trip differs");
    }
    Ok("4 maps edge-complete; round trip on SG(15,7) and SG(9,4)".into())
}

fn c11() -> Outcome {
    const SAMPLES: usize = 100_000;
    let mut seen = Vec::new();
    for (n, k) in [(5, 2), (6, 2), (7, 3)] {
        let r = hemisphere_stable_check(n, k, SAMPLES, 11).map_err(|e| e.to_string())?;
        ensure!(r.failures == 0, "hemisphere ({n},{k}): {} failures", r.failures);
    }
    for k in 2..=4 {
        let r = verify_cover(&simplex_cover(k).unwrap(), SAMPLES, 12);
        ensure!(r.union_coverage == 1.0, "cover k={k}: A and -A miss points");
        ensure!(r.antipodal_violations == 0, "cover k={k}: {} antipodal violations", r.antipodal_violations);
        ensure!(r.max_multiplicity <= (k + 1).div_ceil(2), "cover k={k}: multiplicity {}", r.max_multiplicity);
        let p = verify_cover(&cover_plus(k).unwrap(), SAMPLES, 12);
        ensure!(p.coverage == 1.0, "cover+ k={k}: coverage {}", p.coverage);
        ensure!(p.max_multiplicity <= (k + 3).div_ceil(2), "cover+ k={k}: multiplicity {}", p.max_multiplicity);
        ensure!(k == 4 || p.max_multiplicity <= 3, "Q({k}) witness has multiplicity {}", p.max_multiplicity);
        seen.push(format!("k={k}: {}/{}", r.max_multiplicity, p.max_multiplicity));
    }
    Ok(format!("hemispheres clean; cover multiplicities (plain/plus) {}", seen.join(", ")))
}

fn c12() -> Outcome {
    let alpha = 1.99;
    ensure!(alpha > alpha_threshold(2), "1.99 is not above alpha_2");
    let pts = sphere_samples(2, 2000, 12).unwrap();
    let r = borsuk_wide_check(2, alpha, &pts).map_err(|e| e.to_string())?;
    ensure!(r.edges > 0 && r.proper && r.wide, "B(2,1.99): proper={} wide={}", r.proper, r.wide);
    let r7 = remark7_pq_coloring(2, 7, 3, 1.999, &pts).map_err(|e| e.to_string())?;
    ensure!(r7.edges > 0 && r7.valid, "(7,3) at 1.999 fails, critical alpha {:?}", r7.critical_alpha);
    Ok(format!("B(2,1.99): {} edges proper and wide; (7,3)-coloring at 1.999 over {} edges", r.edges, r7.edges))
}

fn c13() -> Outcome {
    let petersen = kneser(5, 2).unwrap();
    let mut instances: Vec<(String, Graph)> = [(5, 2), (6, 2), (7, 2), (7, 3), (8, 3), (9, 4)]
        .iter()
        .map(|&(n, k)| (format!("SG({n},{k})"), schrijver(n, k).unwrap()))
        .collect();
    instances.push(("SG(4,2)".into(), schrijver(4, 2).unwrap()));
    instances.push(("KG(5,2)".into(), petersen.clone()));
    instances.push(("M(Petersen)".into(), gen_mycielski(&petersen, 2).unwrap()));
    for n in [5, 7] {
        let c = cycle(n).unwrap();
        instances.push((format!("C{n}"), c.clone()));
        instances.push((format!("M(C{n})"), gen_mycielski(&c, 2).unwrap()));
    }
    instances.push(("M(K4)".into(), gen_mycielski(&complete(4), 2).unwrap()));
    instances.push(("M_3(K4)".into(), gen_mycielski(&complete(4), 3).unwrap()));
    // W(2,4) is left out: 28 vertices is past the exact local chromatic limit.
    for (s, t) in [(2, 3), (3, 3)] {
        instances.push((format!("W({s},{t})"), wide_universal(s, t).unwrap().0));
    }
    for (name, g) in &instances {
        let (f, psi, chi, circ) = (exact_frac(g)?, exact_psi(g)?, exact_chi(g)?, exact_circ(g)?);
        ensure!(f <= int(psi) && psi <= chi, "{name}: chi_f={f} psi={psi} chi={chi}");
        ensure!(&int(chi) - &int(1) < circ && circ <= int(chi), "{name}: chi_c={circ} chi={chi}");
    }
    Ok(format!("{} instances ordered", instances.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, u64); 13] = [
        ("chromatic formula", c1, 10),
        ("fractional values", c2, 30),
        ("local chromatic exact", c3, 600),
        ("zig-zag exhaustive", c4, 300),
        ("wide-coloring upper bounds", c5, 600),
        ("generalized Mycielski", c6, 300),
        ("circular values", c7, 600),
        ("odd circular pipeline", c8, 60),
        ("W(s,t) criticality", c9, 600),
        ("homomorphisms", c10, 60),
        ("geometry sampling", c11, 300),
        ("Borsuk colorings", c12, 120),
        ("order sanity", c13, 600),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|msg| {
            if elapsed.as_secs() < *limit {
                Ok(msg)
            } else {
                Err(format!("took {elapsed:.2?}, limit {limit}s"))
            }
        });
        match outcome {
            Ok(msg) => println!("PASS {:>2} {name} ({elapsed:.2?}): {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({elapsed:.2?}): {msg}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
