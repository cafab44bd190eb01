//! Command-line front end. [`run`] parses arguments, executes one command
//! and returns the exit code with everything that would be printed.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::covers::{enumerate_secure_covers_with_cap, minimum_secure_cover, CoverSet};
use crate::error::{Error, Result};
use crate::formulas::{self, FamilyRow, FormulaResult};
use crate::graph::{connected_graphs, parse_edge_list, to_edge_list, FamilySpec, Graph, VertexSet};
use crate::pebbling::{can_reach_any, Distribution, Reach};
use crate::reductions::{self, CorrespondenceReport};
use crate::solver::{self, Invariant, InvariantReport, SandwichReport, SolverConfig};

pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "svcp",
    version,
    about = "Exact secure vertex cover pebbling computations on small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Seed for randomized graph samples.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Largest number of distributions allowed in one scanned level.
    #[arg(long, global = true, env = "SVCP_CAP_STATES")]
    cap_states: Option<u128>,

    /// Largest vertex count for subset enumeration.
    #[arg(long, global = true, env = "SVCP_ENUM_CAP")]
    enum_cap: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Secure vertex cover number and a minimum cover.
    AlphaS(GraphArgs),
    /// All secure vertex covers, by size then lexicographically.
    SecureCovers {
        #[command(flatten)]
        graph: GraphArgs,
        /// Only inclusion-minimal covers.
        #[arg(long)]
        minimal: bool,
    },
    /// Decide whether a distribution reaches a target set.
    Solvable {
        #[command(flatten)]
        graph: GraphArgs,
        /// `v:c` pairs (`0:27,3:1`) or a JSON array of counts.
        #[arg(long)]
        distribution: String,
        /// Comma-separated 0-based target vertices.
        #[arg(long, conflicts_with = "any")]
        target: Option<String>,
        /// Reach any member of a target family instead.
        #[arg(long, value_enum)]
        any: Option<TargetKind>,
    },
    /// Secure vertex cover pebbling number.
    Svcp(GraphArgs),
    /// Cover pebbling number.
    Gamma(GraphArgs),
    /// Covering cover pebbling number.
    Sigma(GraphArgs),
    /// Check sigma <= f_svcp <= gamma and n-1 <= f_svcp <= (n-1)2^(d-1).
    Sandwich {
        #[command(flatten)]
        graph: GraphArgs,
        /// Every connected graph with at most this many vertices.
        #[arg(long)]
        corpus: Option<usize>,
        /// This many random connected graphs (see --vertices, --seed).
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 6)]
        vertices: usize,
    },
    /// Closed-form values for a family, optionally beside brute force.
    FamilyTable {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value_t = Quantity::FSvcp)]
        quantity: Quantity,
        /// Also compute each value exhaustively.
        #[arg(long)]
        oracle: bool,
    },
    /// Minimum secure cover weights of paths.
    Wn {
        #[arg(long)]
        n: Span,
    },
    /// Build a reduction gadget from a graph.
    Reduce {
        #[arg(value_enum)]
        kind: ReduceKind,
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Check the clique-layer cover correspondence exhaustively.
    VerifyReduction {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        corpus: Option<usize>,
    },
    /// Compare f_svcp of the apex graph with the claimed pebble counts.
    ProbeApex {
        #[command(flatten)]
        graph: GraphArgs,
        /// Cover size (default: the secure vertex cover number).
        #[arg(long)]
        k: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TargetKind {
    Secure,
    VertexCover,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Quantity {
    FSvcp,
    AlphaS,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReduceKind {
    CliqueLayer,
    Apex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyKind {
    Path,
    Cycle,
    Complete,
    Star,
    #[value(alias = "complete-multipartite")]
    Multipartite,
    Friendship,
    Wheel,
}

/// An inclusive integer range written `a..b`, `a..=b` or `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Span {
    lo: usize,
    hi: usize,
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => (num(s)?, num(s)?),
        };
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        Ok(Span { lo, hi })
    }
}

impl Span {
    fn values(self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }
}

#[derive(Args, Debug, Default)]
struct GraphArgs {
    #[arg(long, value_enum)]
    family: Option<FamilyKind>,
    /// Vertex count, or triangle count for friendship graphs.
    #[arg(long)]
    n: Option<Span>,
    /// Comma-separated non-increasing part sizes.
    #[arg(long, value_delimiter = ',')]
    parts: Vec<usize>,
    #[arg(long)]
    rim: Option<Span>,
    #[arg(long)]
    leaves: Option<Span>,
    /// Edge-list file.
    #[arg(long, conflicts_with_all = ["family", "spec"])]
    graph: Option<PathBuf>,
    /// A family as JSON, e.g. `{"family":"join","left":..,"right":..}`.
    #[arg(long, conflicts_with = "family")]
    spec: Option<String>,
}

impl GraphArgs {
    fn is_empty(&self) -> bool {
        self.family.is_none() && self.graph.is_none() && self.spec.is_none()
    }

    fn specs(&self) -> Result<Vec<FamilySpec>> {
        if let Some(json) = &self.spec {
            let spec: FamilySpec = serde_json::from_str(json)?;
            return Ok(vec![spec]);
        }
        let Some(kind) = self.family else {
            return Err(usage("a family (--family or --spec) is required"));
        };
        let need = |span: Option<Span>, flag: &str| {
            span.ok_or_else(|| usage(&format!("--family {kind:?} needs --{flag}")))
        };
        let specs = match kind {
            FamilyKind::Path => need(self.n, "n")?
                .values()
                .map(|n| FamilySpec::Path { n })
                .collect(),
            FamilyKind::Cycle => need(self.n, "n")?
                .values()
                .map(|n| FamilySpec::Cycle { n })
                .collect(),
            FamilyKind::Complete => need(self.n, "n")?
                .values()
                .map(|n| FamilySpec::Complete { n })
                .collect(),
            FamilyKind::Friendship => need(self.n, "n")?
                .values()
                .map(|n| FamilySpec::Friendship { n })
                .collect(),
            FamilyKind::Wheel => need(self.rim, "rim")?
                .values()
                .map(|rim| FamilySpec::Wheel { rim })
                .collect(),
            FamilyKind::Star => need(self.leaves.or(self.n), "leaves")?
                .values()
                .map(|leaves| FamilySpec::Star { leaves })
                .collect(),
            FamilyKind::Multipartite => {
                if self.parts.is_empty() {
                    return Err(usage("--family multipartite needs --parts"));
                }
                vec![FamilySpec::CompleteMultipartite {
                    parts: self.parts.clone(),
                }]
            }
        };
        Ok(specs)
    }

    /// The single graph these arguments name, with a display label.
    fn graph(&self) -> Result<(String, Graph)> {
        if let Some(path) = &self.graph {
            let text = std::fs::read_to_string(path)?;
            return Ok((path.display().to_string(), parse_edge_list(&text)?));
        }
        match self.specs()?.as_slice() {
            [spec] => Ok((spec.to_string(), spec.build()?)),
            _ => Err(usage("this command takes a single graph, not a range")),
        }
    }
}

fn usage(msg: &str) -> Error {
    Error::InvalidParameter(msg.to_string())
}

/// A report tagged with the graph it describes.
#[derive(Serialize)]
struct Labeled<T: Serialize> {
    graph: String,
    #[serde(flatten)]
    body: T,
}

fn labeled<T: Serialize>(graph: &str, body: T) -> Labeled<T> {
    Labeled {
        graph: graph.to_string(),
        body,
    }
}

fn graph_label(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} [{}]", g.n(), edges.join(" "))
}

struct Ctx {
    format: Format,
    seed: u64,
    config: SolverConfig,
}

impl Ctx {
    fn emit<T: Serialize>(&self, value: &T, plain: impl FnOnce() -> String) -> Result<String> {
        match self.format {
            Format::Json => Ok(serde_json::to_string_pretty(value)? + "\n"),
            Format::Plain => Ok(plain()),
            Format::Csv => Err(usage(
                "csv output is only available for family-table and wn",
            )),
        }
    }
}

/// Runs one command. `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let result = configure(&cli).and_then(|ctx| match cli.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| usage(&e.to_string()))?
            .install(|| dispatch(&cli.command, &ctx)),
        None => dispatch(&cli.command, &ctx),
    });
    match result {
        Ok((ok, stdout)) => Outcome {
            code: if ok { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn configure(cli: &Cli) -> Result<Ctx> {
    let mut config = SolverConfig::default();
    if let Some(cap) = cli.cap_states {
        if cap == 0 {
            return Err(usage("--cap-states must be positive"));
        }
        config.distribution_cap = cap;
    }
    if let Some(cap) = cli.enum_cap {
        if cap == 0 {
            return Err(usage("--enum-cap must be positive"));
        }
        config.enumeration_cap = cap;
    }
    if cli.jobs == Some(0) {
        return Err(usage("--jobs must be positive"));
    }
    Ok(Ctx {
        format: cli.format,
        seed: cli.seed,
        config,
    })
}

/// Returns whether every checked assertion held, and the output text.
fn dispatch(command: &Command, ctx: &Ctx) -> Result<(bool, String)> {
    match command {
        Command::AlphaS(args) => alpha_s(args, ctx).map(|s| (true, s)),
        Command::SecureCovers { graph, minimal } => {
            secure_covers(graph, *minimal, ctx).map(|s| (true, s))
        }
        Command::Solvable {
            graph,
            distribution,
            target,
            any,
        } => solvable(graph, distribution, target.as_deref(), *any, ctx).map(|s| (true, s)),
        Command::Svcp(args) => invariant(args, Invariant::FSvcp, ctx).map(|s| (true, s)),
        Command::Gamma(args) => invariant(args, Invariant::Gamma, ctx).map(|s| (true, s)),
        Command::Sigma(args) => invariant(args, Invariant::Sigma, ctx).map(|s| (true, s)),
        Command::Sandwich {
            graph,
            corpus,
            random,
            vertices,
        } => sandwich(graph, *corpus, *random, *vertices, ctx),
        Command::FamilyTable {
            graph,
            quantity,
            oracle,
        } => family_table(graph, *quantity, *oracle, ctx),
        Command::Wn { n } => wn(*n, ctx).map(|s| (true, s)),
        Command::Reduce { kind, graph } => reduce(*kind, graph, ctx).map(|s| (true, s)),
        Command::VerifyReduction { graph, corpus } => verify_reduction(graph, *corpus, ctx),
        Command::ProbeApex { graph, k } => probe_apex(graph, *k, ctx).map(|s| (true, s)),
    }
}

fn alpha_s(args: &GraphArgs, ctx: &Ctx) -> Result<String> {
    let (label, g) = args.graph()?;
    #[derive(Serialize)]
    struct Out {
        alpha_s: usize,
        cover: CoverSet,
    }
    let cover = minimum_secure_cover(&g)?;
    let out = labeled(
        &label,
        Out {
            alpha_s: cover.len(),
            cover,
        },
    );
    ctx.emit(&out, || {
        format!(
            "alpha_s({label}) = {} via {{{}}}\n",
            out.body.alpha_s, out.body.cover.label
        )
    })
}

fn secure_covers(args: &GraphArgs, minimal: bool, ctx: &Ctx) -> Result<String> {
    let (label, g) = args.graph()?;
    #[derive(Serialize)]
    struct Out {
        minimal_only: bool,
        count: usize,
        covers: Vec<CoverSet>,
    }
    let covers = enumerate_secure_covers_with_cap(&g, minimal, ctx.config.enumeration_cap)?;
    let out = labeled(
        &label,
        Out {
            minimal_only: minimal,
            count: covers.len(),
            covers,
        },
    );
    ctx.emit(&out, || {
        out.body
            .covers
            .iter()
            .map(|c| c.label.clone() + "\n")
            .collect()
    })
}

fn parse_target(text: &str, g: &Graph) -> Result<VertexSet> {
    let mut s = VertexSet::EMPTY;
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let v: usize = part.parse().map_err(|_| Error::Parse {
            line: 1,
            msg: format!("bad target vertex {part:?}"),
        })?;
        g.check_vertex(v)?;
        s.insert(v);
    }
    Ok(s)
}

fn solvable(
    args: &GraphArgs,
    dist: &str,
    target: Option<&str>,
    any: Option<TargetKind>,
    ctx: &Ctx,
) -> Result<String> {
    let (label, g) = args.graph()?;
    g.require_connected()?;
    let d = Distribution::parse(dist, g.n())?;
    let targets = match (target, any.unwrap_or(TargetKind::Secure)) {
        (Some(t), _) => vec![parse_target(t, &g)?],
        (None, TargetKind::Secure) => {
            solver::target_family(&g, Invariant::FSvcp, ctx.config.enumeration_cap)?
        }
        (None, TargetKind::VertexCover) => {
            solver::target_family(&g, Invariant::Sigma, ctx.config.enumeration_cap)?
        }
        (None, TargetKind::All) => vec![g.vertices()],
    };
    let reach = can_reach_any(&g, &d, &targets)?;
    #[derive(Serialize)]
    struct Out {
        distribution: Distribution,
        targets: Vec<VertexSet>,
        reached: Option<VertexSet>,
        #[serde(flatten)]
        reach: Reach,
    }
    let reached = reach.target_index.map(|i| targets[i]);
    let out = labeled(
        &label,
        Out {
            distribution: d,
            targets,
            reached,
            reach,
        },
    );
    ctx.emit(&out, || {
        let mut s = match out.body.reached {
            Some(t) => format!("reachable: {{{}}}\n", t.label()),
            None => "unreachable\n".to_string(),
        };
        for m in out.body.reach.certificate.iter().flat_map(|c| &c.moves) {
            let _ = writeln!(s, "{} -> {}", m.from, m.to);
        }
        s
    })
}

fn invariant_plain(label: &str, r: &InvariantReport) -> String {
    let mut s = format!("{}({label}) = {}\n", r.invariant, r.value);
    if let Some(w) = &r.witness {
        let _ = writeln!(s, "witness: {:?}", w);
    }
    s
}

fn invariant(args: &GraphArgs, inv: Invariant, ctx: &Ctx) -> Result<String> {
    let (label, g) = args.graph()?;
    let report = solver::compute(&g, inv, &ctx.config)?;
    let out = labeled(&label, &report);
    ctx.emit(&out, || invariant_plain(&label, &report))
}

/// `count` connected graphs on `n` vertices, each edge present with
/// probability one half.
fn random_connected_graphs(n: usize, count: usize, seed: u64) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(usage("--vertices must be positive"));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        let g = Graph::new(n, edges)?;
        if g.is_connected() {
            out.push(g);
        }
    }
    Ok(out)
}

fn sandwich(
    args: &GraphArgs,
    corpus: Option<usize>,
    random: Option<usize>,
    vertices: usize,
    ctx: &Ctx,
) -> Result<(bool, String)> {
    let graphs: Vec<(String, Graph)> = match (corpus, random) {
        (Some(_), Some(_)) => return Err(usage("use either --corpus or --random")),
        (Some(max), None) => {
            let mut all = Vec::new();
            for n in 1..=max {
                all.extend(
                    connected_graphs(n)?
                        .into_iter()
                        .map(|g| (graph_label(&g), g)),
                );
            }
            all
        }
        (None, Some(count)) => random_connected_graphs(vertices, count, ctx.seed)?
            .into_iter()
            .map(|g| (graph_label(&g), g))
            .collect(),
        (None, None) => vec![args.graph()?],
    };
    if !args.is_empty() && (corpus.is_some() || random.is_some()) {
        return Err(usage(
            "a graph cannot be combined with --corpus or --random",
        ));
    }
    let reports: Vec<Labeled<SandwichReport>> = graphs
        .iter()
        .map(|(label, g)| solver::check_sandwich(g, &ctx.config).map(|r| labeled(label, r)))
        .collect::<Result<_>>()?;
    let ok = reports.iter().all(|r| r.body.holds());
    #[derive(Serialize)]
    struct Out<'a> {
        graphs: usize,
        violations: usize,
        reports: &'a [Labeled<SandwichReport>],
    }
    let out = Out {
        graphs: reports.len(),
        violations: reports.iter().filter(|r| !r.body.holds()).count(),
        reports: &reports,
    };
    let text = ctx.emit(&out, || {
        let mut s = String::new();
        for r in &reports {
            let b = &r.body;
            let status = if b.holds() {
                "ok".to_string()
            } else {
                b.violations.join("; ")
            };
            let _ = writeln!(
                s,
                "{}: sigma={} f_svcp={} gamma={} d={} {}",
                r.graph, b.sigma, b.f_svcp, b.gamma, b.diameter, status
            );
        }
        s
    })?;
    Ok((ok, text))
}

fn family_table(
    args: &GraphArgs,
    quantity: Quantity,
    oracle: bool,
    ctx: &Ctx,
) -> Result<(bool, String)> {
    let mut rows = Vec::new();
    for spec in args.specs()? {
        let formula: FormulaResult = match quantity {
            Quantity::FSvcp => formulas::f_svcp_formula(&spec),
            Quantity::AlphaS => formulas::alpha_s_formula(&spec),
        };
        let value = if oracle {
            let g = spec.build()?;
            Some(match quantity {
                Quantity::FSvcp => solver::compute_f_svcp(&g, &ctx.config)?.value,
                Quantity::AlphaS => crate::covers::alpha_s(&g)? as u64,
            })
        } else {
            None
        };
        rows.push(FamilyRow::new(&formula, value));
    }
    let ok = rows.iter().all(|r| r.matches != Some(false));
    let text = match ctx.format {
        Format::Csv => formulas::rows_to_csv(&rows)?,
        _ => ctx.emit(&rows, || {
            let mut s = String::new();
            for r in &rows {
                let value = r.value.as_deref().unwrap_or("-");
                let _ = write!(s, "{}\t{}\t{}\t{}", r.family, r.quantity, r.source, value);
                if let Some(o) = r.oracle {
                    let _ = write!(s, "\toracle={o}");
                }
                if let Some(note) = &r.note {
                    let _ = write!(s, "\t# {note}");
                }
                s.push('\n');
            }
            s
        })?,
    };
    Ok((ok, text))
}

fn wn(span: Span, ctx: &Ctx) -> Result<String> {
    #[derive(Serialize)]
    struct Row {
        n: usize,
        /// A number when it fits in 64 bits, otherwise a decimal string.
        w_n: serde_json::Value,
    }
    let rows: Vec<Row> = span
        .values()
        .map(|n| {
            let w = formulas::wn(n);
            let w_n = match u64::try_from(&w) {
                Ok(small) => small.into(),
                Err(_) => w.to_string().into(),
            };
            Row { n, w_n }
        })
        .collect();
    let plain = || {
        rows.iter()
            .map(|r| format!("{} {}\n", r.n, formulas::wn(r.n)))
            .collect::<String>()
    };
    match ctx.format {
        Format::Csv => Ok(format!("n,w_n\n{}", plain().replace(' ', ","))),
        _ => ctx.emit(&rows, plain),
    }
}

fn reduce(kind: ReduceKind, args: &GraphArgs, ctx: &Ctx) -> Result<String> {
    let (label, g) = args.graph()?;
    let inst = match kind {
        ReduceKind::CliqueLayer => reductions::build_clique_layer(&g)?,
        ReduceKind::Apex => reductions::build_apex(&g)?,
    };
    let out = labeled(&label, &inst);
    ctx.emit(&out, || to_edge_list(&inst.graph))
}

fn verify_reduction(args: &GraphArgs, corpus: Option<usize>, ctx: &Ctx) -> Result<(bool, String)> {
    let graphs: Vec<(String, Graph)> = match corpus {
        Some(max) => {
            if !args.is_empty() {
                return Err(usage("a graph cannot be combined with --corpus"));
            }
            let mut all = Vec::new();
            for n in 1..=max {
                all.extend(
                    connected_graphs(n)?
                        .into_iter()
                        .map(|g| (graph_label(&g), g)),
                );
            }
            all
        }
        None => vec![args.graph()?],
    };
    let reports: Vec<Labeled<CorrespondenceReport>> = graphs
        .iter()
        .map(|(label, g)| {
            reductions::verify_clique_layer_correspondence(g).map(|r| labeled(label, r))
        })
        .collect::<Result<_>>()?;
    let ok = reports.iter().all(|r| r.body.holds);
    let text = ctx.emit(&reports, || {
        reports
            .iter()
            .map(|r| {
                let status = if r.body.holds {
                    "holds".to_string()
                } else {
                    format!("{} counterexamples", r.body.counterexamples.len())
                };
                format!(
                    "{}: {} subsets, {status}\n",
                    r.graph, r.body.subsets_checked
                )
            })
            .collect()
    })?;
    Ok((ok, text))
}

fn probe_apex(args: &GraphArgs, k: Option<usize>, ctx: &Ctx) -> Result<String> {
    let (label, g) = args.graph()?;
    let k = match k {
        Some(k) => k,
        None => crate::covers::alpha_s(&g)?,
    };
    let probe = reductions::probe_apex_pebble_counts(&g, k, &ctx.config)?;
    let out = labeled(&label, &probe);
    ctx.emit(&out, || {
        format!(
            "f_svcp(K_1 + {label}) = {}; claimed window {:?}: {}; alternative {:?}: {}\n",
            probe.oracle,
            probe.window,
            probe.in_window,
            probe.alternative,
            probe.matches_alternative
        )
    })
}
