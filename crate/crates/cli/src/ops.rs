//! Operations shared by the subcommands and recipe steps. Every operation yields a JSON
//! summary, optional artifact data, and a status code.

use std::time::Duration;

use clap::{Args, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Map, Value};
use topochrom::coloring::{find_monochromatic_edge, find_wideness_violation, is_proper, is_s_wide, local_profile};
use topochrom::constructions::{
    gmyc_direct_coloring, gmyc_wide_extension_iter, mycielski_psi_coloring, oddsch_pipeline, sg_remark4_coloring, sg_with_interval_coloring,
    w_canonical_coloring, w_edge_deleted_coloring, widen_to_local, DirectBase, IntervalPartition, IntervalRule,
};
use topochrom::families::{borsuk_sample, complete};
use topochrom::geometry::{
    alpha_threshold, borsuk_standard_coloring, borsuk_wide_check, cover_plus, facet_diameter, hemisphere_stable_check, remark7_base_check,
    remark7_edge_distances, remark7_pq_coloring, simplex_cover, sphere_samples, standard_proper_alpha, standard_wide_alpha, verify_cover,
    BaseCheck, PointOnSphere,
};
use topochrom::io::{coloring_from_json, coloring_to_json, graph_to_json, hom_from_json, to_dimacs};
use topochrom::solvers::{
    chromatic_number_with, circular_chromatic_with, fractional_chromatic_with, is_homomorphism, is_pq_coloring, local_chromatic_with,
    zigzag_exhaustive, Budget, Limits,
};
use topochrom::{Coloring, Fraction, Graph};

use crate::error::{CliError, CliResult, EXIT_EXPECTATION, EXIT_INEXACT, EXIT_OK};
use crate::graphs::Ctx;

pub enum Artifact {
    Json(Value),
    Text(String),
}

pub struct Output {
    pub summary: Map<String, Value>,
    /// Data written with the summary to artifact files (graphs, colorings, certificates).
    pub extra: Map<String, Value>,
    /// Replaces the JSON artifact when set (exported text formats).
    pub text: Option<String>,
    pub status: u8,
}

impl Output {
    fn new(summary: Value) -> Self {
        let Value::Object(summary) = summary else {
            unreachable!("summaries are objects")
        };
        Output {
            summary,
            extra: Map::new(),
            text: None,
            status: EXIT_OK,
        }
    }

    fn with(mut self, key: &str, value: Value) -> Self {
        self.extra.insert(key.into(), value);
        self
    }

    fn fail_unless(mut self, ok: bool) -> Self {
        if !ok {
            self.status = self.status.max(EXIT_EXPECTATION);
        }
        self
    }

    pub fn artifact(&self) -> Artifact {
        if let Some(t) = &self.text {
            return Artifact::Text(t.clone());
        }
        let mut all = self.summary.clone();
        all.extend(self.extra.clone());
        Artifact::Json(Value::Object(all))
    }
}

#[derive(Subcommand, Deserialize, Debug)]
#[serde(tag = "op", rename_all = "kebab-case")]
pub enum Op {
    /// Build a graph from a family spec and write it as JSON
    Build(BuildArgs),
    /// Compute an invariant exactly (or report bounds when the budget runs out)
    Solve(SolveArgs),
    /// Run an explicit coloring construction and re-check the result
    #[command(subcommand)]
    Color(ColorOp),
    /// Re-check a saved coloring or homomorphism against its graph
    #[command(subcommand)]
    Verify(VerifyOp),
    /// Seeded sampling checks on spheres
    #[command(subcommand)]
    Geom(GeomOp),
    /// Convert a graph to DIMACS or JSON
    Export(ExportArgs),
}

#[derive(Args, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct BuildArgs {
    /// Graph spec or file, or a family name followed by its parameters as flags
    pub graph: String,
    #[arg(long)]
    #[serde(default)]
    pub n: Option<usize>,
    #[arg(long)]
    #[serde(default)]
    pub k: Option<usize>,
    #[arg(long)]
    #[serde(default)]
    pub p: Option<usize>,
    #[arg(long)]
    #[serde(default)]
    pub q: Option<usize>,
    #[arg(long)]
    #[serde(default)]
    pub s: Option<usize>,
    #[arg(long)]
    #[serde(default)]
    pub t: Option<usize>,
    /// Levels of the generalized Mycielskian
    #[arg(long)]
    #[serde(default)]
    pub r: Option<usize>,
    /// Base graph of the generalized Mycielskian
    #[arg(long)]
    #[serde(default)]
    pub base: Option<String>,
    #[arg(long)]
    #[serde(default)]
    pub alpha: Option<f64>,
    #[arg(long)]
    #[serde(default)]
    pub samples: Option<usize>,
    #[arg(long)]
    #[serde(default)]
    pub seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    #[serde(default = "json_format")]
    pub format: Format,
}

fn json_format() -> Format {
    Format::Json
}

impl BuildArgs {
    /// The graph spec, assembled from the family flags when any are given.
    fn spec(&self) -> CliResult<String> {
        let flags = [self.n, self.k, self.p, self.q, self.s, self.t, self.r];
        if flags.iter().all(Option::is_none) && self.alpha.is_none() && self.base.is_none() {
            return Ok(self.graph.clone());
        }
        let need = |v: Option<usize>, name: &str| v.ok_or_else(|| CliError::input(format!("{} needs --{name}", self.graph)));
        Ok(match self.graph.as_str() {
            "complete" | "cycle" => format!("{}:{}", self.graph, need(self.n, "n")?),
            "kneser" | "schrijver" => format!("{}:{},{}", self.graph, need(self.n, "n")?, need(self.k, "k")?),
            "circular" => format!("circular:{},{}", need(self.p, "p")?, need(self.q, "q")?),
            "wide-universal" => format!("wide-universal:{},{}", need(self.s, "s")?, need(self.t, "t")?),
            "mycielski" => {
                let base = self.base.as_deref().ok_or_else(|| CliError::input("mycielski needs --base"))?;
                format!("mycielski:{}:{base}", need(self.r, "r")?)
            }
            "borsuk" => {
                let alpha = self.alpha.ok_or_else(|| CliError::input("borsuk needs --alpha"))?;
                format!(
                    "borsuk:{},{alpha},{},{}",
                    need(self.n, "n")?,
                    self.samples.unwrap_or(default_points()),
                    self.seed.unwrap_or(0)
                )
            }
            other => return Err(CliError::input(format!("unknown graph family {other:?}"))),
        })
    }
}

#[derive(ValueEnum, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Invariant {
    /// Chromatic number
    Chi,
    /// Local chromatic number
    Psi,
    /// Fractional chromatic number
    Chif,
    /// Circular chromatic number
    Chic,
    /// Exhaustive zig-zag check over all proper colorings (needs -t)
    Zigzag,
}

#[derive(Args, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct SolveArgs {
    #[arg(value_enum)]
    pub invariant: Invariant,
    /// Graph spec or file
    #[arg(long = "in", visible_alias = "graph")]
    #[serde(alias = "in")]
    pub graph: String,
    /// Number of colors for the zig-zag check
    #[arg(short)]
    #[serde(default)]
    pub t: Option<usize>,
    /// Node budget for the search (accepts 1e7)
    #[arg(long, value_parser = parse_count)]
    #[serde(default, deserialize_with = "count_from_number")]
    pub limit_nodes: Option<u64>,
    /// Wall-clock budget for the search
    #[arg(long)]
    #[serde(default)]
    pub budget_seconds: Option<f64>,
    /// Override the solver's vertex limit for exact mode
    #[arg(long)]
    #[serde(default)]
    pub max_vertices: Option<usize>,
}

#[derive(ValueEnum, Deserialize, Clone, Copy, Debug, Default)]
#[serde(rename_all = "kebab-case")]
pub enum RuleArg {
    AnyMajority,
    #[default]
    SmallestAnchor,
}

impl From<RuleArg> for IntervalRule {
    fn from(r: RuleArg) -> Self {
        match r {
            RuleArg::AnyMajority => IntervalRule::AnyMajority,
            RuleArg::SmallestAnchor => IntervalRule::SmallestAnchor,
        }
    }
}

#[derive(ValueEnum, Deserialize, Clone, Copy, Debug, Default)]
#[serde(rename_all = "kebab-case")]
pub enum BaseArg {
    #[default]
    K2,
    C9,
}

fn default_points() -> usize {
    2000
}

fn default_samples() -> usize {
    100_000
}

fn default_pairs() -> usize {
    10_000
}

#[derive(Subcommand, Deserialize, Debug)]
#[serde(tag = "method", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ColorOp {
    /// Interval coloring of SG(n,k) with n-2k+2 colors
    #[command(visible_alias = "sg-interval")]
    #[serde(alias = "sg-interval")]
    Interval {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Odd interval sizes (default: balanced)
        #[arg(long, value_delimiter = ',')]
        #[serde(default)]
        sizes: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value_t)]
        #[serde(default)]
        rule: RuleArg,
        /// Follow with the widening step (one more color, profile at most n-2k+1)
        #[arg(long)]
        #[serde(default)]
        widen: bool,
    },
    /// Interval coloring of SG(n,k) with one extra color on crowded neighborhoods
    Remark4 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
    },
    /// Trade one new color for small neighborhoods in a 3-wide coloring
    Widen {
        #[arg(long = "in", visible_alias = "graph")]
        #[serde(alias = "in")]
        graph: String,
        #[arg(long)]
        coloring: String,
    },
    /// Direct coloring of an iterated generalized Mycielskian
    Direct {
        /// Comma-separated r_1,...,r_d
        #[arg(long, value_delimiter = ',', required = true)]
        rs: Vec<usize>,
        #[arg(long, value_enum, default_value_t)]
        #[serde(default)]
        base: BaseArg,
        /// Use the sharper rule for an even number of steps
        #[arg(long)]
        #[serde(default)]
        refine: bool,
    },
    /// Wide coloring of an iterated generalized Mycielskian (default base: K_2 colored 1,2)
    WideExtension {
        /// Comma-separated r_1,...,r_d
        #[arg(long, value_delimiter = ',', required = true)]
        rs: Vec<usize>,
        #[arg(long = "in", visible_alias = "graph", requires = "coloring")]
        #[serde(default, alias = "in")]
        graph: Option<String>,
        #[arg(long)]
        #[serde(default)]
        coloring: Option<String>,
    },
    /// Coloring of M(G) with one more color in every neighborhood
    MycielskiPsi {
        #[arg(long = "in", visible_alias = "graph")]
        #[serde(alias = "in")]
        graph: String,
        /// Coloring of G (default: an optimal local coloring)
        #[arg(long)]
        #[serde(default)]
        coloring: Option<String>,
    },
    /// (p,q)-coloring of a Schrijver graph pulled back through W(s,t) and M_s(K_(t-1))
    Pipeline {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        i: usize,
    },
    /// Canonical coloring of W(s,t)
    WCanonical {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
    /// (t-1)-coloring of W(s,t) minus the edge {u,v} (vertex indices)
    WEdgeDeleted {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
    },
    /// Standard simplex coloring of a sampled Borsuk graph B(n, alpha)
    Borsuk {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = default_points())]
        #[serde(default = "default_points")]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        #[serde(default)]
        seed: u64,
    },
    /// (p,q)-coloring of a sampled Borsuk graph through the circle map (even n)
    Remark7 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = default_points())]
        #[serde(default = "default_points")]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        #[serde(default)]
        seed: u64,
    },
}

#[derive(Subcommand, Deserialize, Debug)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum VerifyOp {
    /// Properness, local profile, and optionally s-wideness or a (p,q) constraint
    Coloring {
        #[arg(long = "graph", visible_alias = "in")]
        #[serde(alias = "in")]
        graph: String,
        #[arg(long)]
        coloring: String,
        /// Check s-wideness
        #[arg(long)]
        #[serde(default)]
        swide: Option<usize>,
        /// Check the circular constraint, given as P/Q
        #[arg(long)]
        #[serde(default)]
        pq: Option<String>,
        /// Fail when the local profile exceeds this
        #[arg(long)]
        #[serde(default)]
        max_profile: Option<usize>,
    },
    /// Edge preservation of a vertex map
    Hom {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(long)]
        map: String,
    },
}

#[derive(Subcommand, Deserialize, Debug)]
#[serde(tag = "check", rename_all = "kebab-case", deny_unknown_fields)]
pub enum GeomOp {
    /// Every open hemisphere holds a stable k-subset of the moment-curve points
    Hemisphere {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = default_samples())]
        #[serde(default = "default_samples")]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        #[serde(default)]
        seed: u64,
    },
    /// Antipode-free cover of S^k from the regular simplex
    Cover {
        #[arg(long)]
        k: usize,
        /// Add the set covering a neighborhood of C
        #[arg(long)]
        #[serde(default)]
        plus: bool,
        #[arg(long, default_value_t = default_samples())]
        #[serde(default = "default_samples")]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        #[serde(default)]
        seed: u64,
    },
    /// Properness and 3-wideness of the standard coloring of B(n, alpha)
    Borsuk {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = default_points())]
        #[serde(default = "default_points")]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        #[serde(default)]
        seed: u64,
    },
    /// (p,q) constraint of the circle-map coloring on B(n, alpha)
    Remark7 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = default_points())]
        #[serde(default = "default_points")]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        #[serde(default)]
        seed: u64,
    },
    /// Least circle distance between images of sampled edges of B(n, alpha)
    Remark7Edges {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = default_pairs())]
        #[serde(default = "default_pairs")]
        pairs: usize,
        #[arg(long, default_value_t = 0)]
        #[serde(default)]
        seed: u64,
    },
    /// Properness of the base values of the circle map (cached under TOPOCHROM_CACHE)
    Remark7Base {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = default_points())]
        #[serde(default = "default_points")]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        #[serde(default)]
        seed: u64,
    },
    /// Closed-form thresholds for the standard coloring of B(n, alpha)
    Thresholds {
        #[arg(long)]
        n: usize,
    },
}

#[derive(ValueEnum, Deserialize, Clone, Copy, Debug, Default)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    #[default]
    Dimacs,
    Json,
}

#[derive(Args, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct ExportArgs {
    #[arg(long = "in", visible_alias = "graph")]
    #[serde(alias = "in")]
    pub graph: String,
    #[arg(long, value_enum, default_value_t)]
    #[serde(default)]
    pub format: Format,
}

impl Op {
    pub fn run(&self, ctx: &Ctx) -> CliResult<Output> {
        match self {
            Op::Build(a) => {
                let g = ctx.graph(&a.spec()?)?;
                let out = Output::new(json!({"vertices": g.order(), "edges": g.size()}));
                Ok(match a.format {
                    Format::Json => out.with("graph", graph_to_json(&g)),
                    Format::Dimacs => Output {
                        text: Some(to_dimacs(&g)),
                        ..out
                    },
                })
            }
            Op::Solve(a) => solve(a, ctx),
            Op::Color(c) => color(c, ctx),
            Op::Verify(v) => verify(v, ctx),
            Op::Geom(g) => geom(g),
            Op::Export(a) => {
                let g = ctx.graph(&a.graph)?;
                let text = match a.format {
                    Format::Dimacs => to_dimacs(&g),
                    Format::Json => serde_json::to_string_pretty(&graph_to_json(&g))? + "\n",
                };
                let mut out = Output::new(json!({"vertices": g.order(), "edges": g.size()}));
                out.text = Some(text);
                Ok(out)
            }
        }
    }
}

/// Reads `{"colors": ...}`, or a document holding one under `"coloring"` or
/// `"certificate.coloring"`.
pub fn load_coloring(ctx: &Ctx, g: &Graph, arg: &str) -> CliResult<Coloring> {
    let text = ctx.read(arg)?;
    let value: Value = serde_json::from_str(&text)?;
    let inner = match value.get("coloring").or_else(|| value.get("certificate").and_then(|c| c.get("coloring"))) {
        Some(c) => c.to_string(),
        None => text,
    };
    Ok(coloring_from_json(g, &inner)?)
}

fn parse_count(s: &str) -> Result<u64, String> {
    if let Ok(n) = s.parse::<u64>() {
        return Ok(n);
    }
    match s.parse::<f64>() {
        Ok(x) if x >= 0.0 && x.fract() == 0.0 && x <= u64::MAX as f64 => Ok(x as u64),
        _ => Err(format!("{s:?} is not a node count")),
    }
}

fn count_from_number<'de, D: serde::Deserializer<'de>>(d: D) -> Result<Option<u64>, D::Error> {
    let v = Option::<Value>::deserialize(d)?;
    match v {
        None | Some(Value::Null) => Ok(None),
        Some(Value::String(s)) => parse_count(&s).map(Some).map_err(serde::de::Error::custom),
        Some(v) => parse_count(&v.to_string()).map(Some).map_err(serde::de::Error::custom),
    }
}

/// Integers as JSON numbers, other fractions as "p/q".
fn frac(f: &Fraction) -> Value {
    match f.is_integer().then(|| f.numer().to_string().parse::<i64>().ok()).flatten() {
        Some(n) => json!(n),
        None => json!(f),
    }
}

fn limits(a: &SolveArgs) -> CliResult<Limits> {
    let time_limit = match a.budget_seconds {
        Some(s) if !(s.is_finite() && s > 0.0) => return Err(CliError::input(format!("invalid budget {s}"))),
        Some(s) => Some(Duration::from_secs_f64(s)),
        None => None,
    };
    Ok(Limits {
        max_vertices: a.max_vertices,
        budget: Budget {
            node_limit: a.limit_nodes,
            time_limit,
        },
    })
}

fn inexact_unless(mut out: Output, exact: bool) -> Output {
    if !exact {
        out.status = out.status.max(EXIT_INEXACT);
    }
    out
}

fn solve(a: &SolveArgs, ctx: &Ctx) -> CliResult<Output> {
    let g = ctx.graph(&a.graph)?;
    let limits = limits(a)?;
    let labels = |set: &[usize]| set.iter().map(|&v| g.label(v).to_string()).collect::<Vec<_>>();
    let out = match a.invariant {
        Invariant::Chi => {
            let r = chromatic_number_with(&g, limits)?;
            let out = Output::new(json!({
                "invariant": "chi", "value": r.value, "exact": r.exact, "lower": r.lower,
                "certificate": {"coloring": coloring_to_json(&g, &r.coloring)?, "clique": labels(&r.clique)},
            }));
            inexact_unless(out, r.exact)
        }
        Invariant::Psi => {
            let r = local_chromatic_with(&g, limits)?;
            let out = Output::new(json!({
                "invariant": "psi", "value": r.value, "exact": r.exact, "lower": r.lower, "nodes": r.nodes,
                "certificate": {"coloring": coloring_to_json(&g, &r.partition.to_coloring())?},
            }));
            inexact_unless(out, r.exact)
        }
        Invariant::Chif => {
            let r = fractional_chromatic_with(&g, limits)?;
            r.verify(&g)?;
            let sets: Vec<Value> = r
                .independent_sets
                .iter()
                .zip(&r.set_weights)
                .filter(|(_, w)| **w != Fraction::zero())
                .map(|(s, w)| json!({"set": labels(s), "weight": w}))
                .collect();
            let clique: Map<String, Value> = g
                .labels()
                .iter()
                .zip(&r.vertex_weights)
                .filter(|(_, w)| **w != Fraction::zero())
                .map(|(l, w)| (l.clone(), json!(w)))
                .collect();
            Output::new(json!({
                "invariant": "chif", "value": frac(&r.value), "exact": true,
                "certificate": {"fractional_coloring": sets, "fractional_clique": clique},
            }))
        }
        Invariant::Chic => {
            let r = circular_chromatic_with(&g, limits)?;
            let out = Output::new(json!({
                "invariant": "chic", "value": frac(&r.value), "exact": r.exact, "lower": frac(&r.lower),
                "certificate": {"p": r.p, "q": r.q, "coloring": coloring_to_json(&g, &r.coloring)?},
            }));
            inexact_unless(out, r.exact)
        }
        Invariant::Zigzag => {
            let t = a.t.ok_or_else(|| CliError::input("the zig-zag check needs -t"))?;
            let r = zigzag_exhaustive(&g, t)?;
            let counterexample = r.counterexample.as_ref().map(|c| coloring_to_json(&g, &c.to_coloring())).transpose()?;
            Output::new(json!({
                "invariant": "zigzag",
                "t": t,
                "exact": true,
                "partitions": r.partitions,
                "partitions_with_witness": r.partitions_with_witness,
                "all_have_witness": r.all_have_witness(),
                "t_class_partitions": r.t_class_partitions,
                "min_realized_splits": r.min_realized_splits,
                "required_splits": r.required_splits,
                "split_count_holds": r.split_count_holds(),
                "counterexample": counterexample,
            }))
        }
    };
    Ok(out)
}

fn coloring_output(g: &Graph, c: &Coloring, mut extra: Map<String, Value>) -> CliResult<Output> {
    let proper = is_proper(g, c)?;
    let profile = if proper { Some(local_profile(g, c)?.max_plus_one) } else { None };
    let mut summary = json!({
        "vertices": g.order(),
        "edges": g.size(),
        "colors": c.num_colors(),
        "proper": proper,
        "profile": profile,
        "s_wide": {
            "1": proper,
            "2": proper && is_s_wide(g, c, 2)?,
            "3": proper && is_s_wide(g, c, 3)?,
        },
    });
    summary.as_object_mut().unwrap().append(&mut extra);
    Ok(Output::new(summary)
        .with("graph", graph_to_json(g))
        .with("coloring", coloring_to_json(g, c)?)
        .fail_unless(proper))
}

fn to_map(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => Map::new(),
    }
}

fn points(n: usize, samples: usize, seed: u64) -> CliResult<Vec<PointOnSphere>> {
    Ok(sphere_samples(n, samples, seed)?)
}

fn color(op: &ColorOp, ctx: &Ctx) -> CliResult<Output> {
    match op {
        ColorOp::Interval { n, k, sizes, rule, widen } => {
            let t = (n + 2).checked_sub(2 * k).filter(|&t| t >= 1).ok_or_else(|| CliError::input("need n >= 2k - 1"))?;
            let sizes = match sizes {
                Some(s) => s.clone(),
                None => IntervalPartition::balanced(*n, t)?.sizes,
            };
            let (g, c) = sg_with_interval_coloring(*n, *k, &sizes, (*rule).into())?;
            let c = if *widen { widen_to_local(&g, &c)? } else { c };
            coloring_output(&g, &c, to_map(json!({"sizes": sizes, "widened": widen})))
        }
        ColorOp::Remark4 { n, k, m, sizes } => {
            let (g, c) = sg_remark4_coloring(*n, *k, *m, sizes)?;
            coloring_output(&g, &c, to_map(json!({"m": m, "sizes": sizes})))
        }
        ColorOp::Widen { graph, coloring } => {
            let g = ctx.graph(graph)?;
            let c0 = load_coloring(ctx, &g, coloring)?;
            let c = widen_to_local(&g, &c0)?;
            coloring_output(&g, &c, to_map(json!({"input_colors": c0.num_colors()})))
        }
        ColorOp::Direct { rs, base, refine } => {
            let base = match base {
                BaseArg::K2 => DirectBase::K2,
                BaseArg::C9 => DirectBase::c9_seed(),
            };
            let (tower, c) = gmyc_direct_coloring(rs, &base, *refine)?;
            coloring_output(&tower.graph, &c, to_map(json!({"rs": rs, "depth": tower.depth()})))
        }
        ColorOp::WideExtension { rs, graph, coloring } => {
            let (g, c0) = match (graph, coloring) {
                (Some(g), Some(c)) => {
                    let g = ctx.graph(g)?;
                    let c0 = load_coloring(ctx, &g, c)?;
                    (g, c0)
                }
                _ => (complete(2), Coloring::new(vec![1, 2])),
            };
            let (tower, c) = gmyc_wide_extension_iter(&g, &c0, rs)?;
            coloring_output(&tower.graph, &c, to_map(json!({"rs": rs})))
        }
        ColorOp::MycielskiPsi { graph, coloring } => {
            let g = ctx.graph(graph)?;
            let c = match coloring {
                Some(path) => load_coloring(ctx, &g, path)?,
                None => local_chromatic_with(&g, Limits::default())?.partition.to_coloring(),
            };
            let base_profile = local_profile(&g, &c)?.max_plus_one;
            let (m, mc) = mycielski_psi_coloring(&g, &c)?;
            coloring_output(&m, &mc, to_map(json!({"base_profile": base_profile})))
        }
        ColorOp::Pipeline { t, i } => {
            let out = oddsch_pipeline(*t, *i)?;
            let g = topochrom::families::schrijver(out.n, out.k)?;
            let pq = is_pq_coloring(&g, &out.coloring, out.p, out.q)?;
            let extra = json!({
                "t": out.t, "i": out.i, "s": out.s, "n": out.n, "k": out.k, "sizes": out.sizes,
                "p": out.p, "q": out.q, "ratio": out.ratio(), "pq_coloring": pq,
            });
            Ok(coloring_output(&g, &out.coloring, to_map(extra))?.fail_unless(pq))
        }
        ColorOp::WCanonical { s, t } => {
            let (g, c) = w_canonical_coloring(*s, *t)?;
            let wide = is_s_wide(&g, &c, *s)?;
            Ok(coloring_output(&g, &c, to_map(json!({"s_wide": wide})))?.fail_unless(wide))
        }
        ColorOp::WEdgeDeleted { s, t, u, v } => {
            let (g, c) = w_edge_deleted_coloring(*s, *t, (*u, *v))?;
            coloring_output(&g, &c, Map::new())
        }
        ColorOp::Borsuk { n, alpha, samples, seed } => {
            let pts = points(*n, *samples, *seed)?;
            let coords: Vec<Vec<f64>> = pts.iter().map(|p| p.coords().to_vec()).collect();
            let g = borsuk_sample(*n, *alpha, &coords)?;
            let c = borsuk_standard_coloring(*n, &pts)?;
            coloring_output(&g, &c, to_map(json!({"n": n, "alpha": alpha, "seed": seed})))
        }
        ColorOp::Remark7 { n, p, q, alpha, samples, seed } => {
            let pts = points(*n, *samples, *seed)?;
            let coords: Vec<Vec<f64>> = pts.iter().map(|p| p.coords().to_vec()).collect();
            let r = remark7_pq_coloring(*n, *p, *q, *alpha, &pts)?;
            let g = borsuk_sample(*n, *alpha, &coords)?;
            let extra = json!({
                "n": n, "p": p, "q": q, "alpha": alpha, "seed": seed, "pq_coloring": r.valid,
                "min_edge_distance": r.min_edge_distance, "required_distance": r.required_distance,
                "critical_alpha": r.critical_alpha,
            });
            Ok(coloring_output(&g, &r.coloring, to_map(extra))?.fail_unless(r.valid))
        }
    }
}

fn parse_pq(s: &str) -> CliResult<(usize, usize)> {
    let (p, q) = s
        .split_once(['/', ','])
        .ok_or_else(|| CliError::input(format!("expected P/Q, got {s:?}")))?;
    let parse = |x: &str| x.trim().parse::<usize>().map_err(|_| CliError::input(format!("expected P/Q, got {s:?}")));
    Ok((parse(p)?, parse(q)?))
}

fn verify(op: &VerifyOp, ctx: &Ctx) -> CliResult<Output> {
    match op {
        VerifyOp::Coloring {
            graph,
            coloring,
            swide,
            pq,
            max_profile,
        } => {
            let g = ctx.graph(graph)?;
            let c = load_coloring(ctx, &g, coloring)?;
            let mono = find_monochromatic_edge(&g, &c)?;
            // The profile is only defined for proper colorings.
            let profile = match mono {
                None => Some(local_profile(&g, &c)?.max_plus_one),
                Some(_) => None,
            };
            let mut ok = mono.is_none();
            let mut summary = json!({
                "vertices": g.order(),
                "edges": g.size(),
                "colors": c.num_colors(),
                "proper": mono.is_none(),
                "profile": profile,
            });
            let m = summary.as_object_mut().unwrap();
            if let Some((u, v)) = mono {
                m.insert("monochromatic_edge".into(), json!([g.label(u), g.label(v)]));
            }
            if let Some(s) = swide {
                let violation = if mono.is_none() { find_wideness_violation(&g, &c, *s)? } else { None };
                let wide = mono.is_none() && violation.is_none();
                m.insert("s".into(), json!(s));
                m.insert("s_wide".into(), json!(wide));
                if let Some((u, v, _)) = violation {
                    m.insert("wideness_violation".into(), json!([g.label(u), g.label(v)]));
                }
                ok &= wide;
            }
            if let Some(pq) = pq {
                let (p, q) = parse_pq(pq)?;
                let valid = is_pq_coloring(&g, &c, p, q)?;
                m.insert("pq".into(), json!(format!("{p}/{q}")));
                m.insert("pq_coloring".into(), json!(valid));
                ok &= valid;
            }
            if let Some(max) = max_profile {
                ok &= profile.is_some_and(|p| p <= *max);
            }
            Ok(Output::new(summary).fail_unless(ok))
        }
        VerifyOp::Hom { source, target, map } => {
            let s = ctx.graph(source)?;
            let t = ctx.graph(target)?;
            let m = hom_from_json(&s, &t, &ctx.read(map)?)?;
            let ok = is_homomorphism(&s, &t, &m);
            let mut summary = json!({"source_vertices": s.order(), "target_vertices": t.order(), "homomorphism": ok});
            if let Some((u, v)) = s.edges().find(|&(u, v)| !t.has_edge(m[u], m[v])) {
                summary["broken_edge"] = json!([s.label(u), s.label(v)]);
            }
            Ok(Output::new(summary).fail_unless(ok))
        }
    }
}

fn cached_base_check(n: usize, samples: usize, seed: u64) -> CliResult<BaseCheck> {
    let Some(dir) = std::env::var_os("TOPOCHROM_CACHE") else {
        return Ok(remark7_base_check(n, samples, seed)?);
    };
    let path = std::path::Path::new(&dir).join(format!("remark7-base-n{n}-samples{samples}-seed{seed}.json"));
    if let Ok(text) = std::fs::read_to_string(&path) {
        if let Ok(check) = serde_json::from_str::<BaseCheck>(&text) {
            if (check.n, check.samples, check.seed) == (n, samples, seed) {
                return Ok(check);
            }
        }
    }
    let check = remark7_base_check(n, samples, seed)?;
    std::fs::create_dir_all(&dir)?;
    std::fs::write(&path, serde_json::to_string_pretty(&check)?)?;
    Ok(check)
}

fn geom(op: &GeomOp) -> CliResult<Output> {
    let out = match op {
        GeomOp::Hemisphere { n, k, samples, seed } => {
            let r = hemisphere_stable_check(*n, *k, *samples, *seed)?;
            let ok = r.failures == 0;
            Output::new(serde_json::to_value(r)?).fail_unless(ok)
        }
        GeomOp::Cover { k, plus, samples, seed } => {
            let cover = if *plus { cover_plus(*k)? } else { simplex_cover(*k)? };
            let r = verify_cover(&cover, *samples, *seed);
            let ok = r.passes(*plus);
            let mut summary = json!({"plus": plus, "passes": ok});
            summary.as_object_mut().unwrap().append(&mut to_map(serde_json::to_value(r)?));
            Output::new(summary).fail_unless(ok)
        }
        GeomOp::Borsuk { n, alpha, samples, seed } => {
            let r = borsuk_wide_check(*n, *alpha, &points(*n, *samples, *seed)?)?;
            let ok = r.proper && r.wide;
            let mut summary = json!({"seed": seed});
            summary.as_object_mut().unwrap().append(&mut to_map(serde_json::to_value(r)?));
            Output::new(summary).fail_unless(ok)
        }
        GeomOp::Remark7 { n, p, q, alpha, samples, seed } => {
            let r = remark7_pq_coloring(*n, *p, *q, *alpha, &points(*n, *samples, *seed)?)?;
            let ok = r.valid;
            let mut summary = to_map(serde_json::to_value(r)?);
            summary.remove("coloring");
            summary.insert("seed".into(), json!(seed));
            Output::new(Value::Object(summary)).fail_unless(ok)
        }
        GeomOp::Remark7Edges { n, alpha, pairs, seed } => {
            let r = remark7_edge_distances(*n, *alpha, *pairs, *seed)?;
            let mut summary = json!({"seed": seed});
            summary.as_object_mut().unwrap().append(&mut to_map(serde_json::to_value(r)?));
            Output::new(summary)
        }
        GeomOp::Remark7Base { n, samples, seed } => {
            let r = cached_base_check(*n, *samples, *seed)?;
            let ok = r.proper;
            Output::new(serde_json::to_value(r)?).fail_unless(ok)
        }
        GeomOp::Thresholds { n } => {
            if *n < 2 {
                return Err(CliError::input("thresholds need n >= 2"));
            }
            let nf = *n as f64;
            Output::new(json!({
                "n": n,
                "alpha_threshold": alpha_threshold(*n),
                "vertex_chord": (2.0 + 2.0 / nf).sqrt(),
                "facet_diameter": facet_diameter(*n),
                "standard_proper_alpha": standard_proper_alpha(*n),
                "standard_wide_alpha": standard_wide_alpha(*n),
            }))
        }
    };
    Ok(out)
}
