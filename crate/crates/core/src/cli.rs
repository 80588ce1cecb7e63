//! Command-line front end.
//!
//! Exit codes: 0 success, 1 validation violations, 2 unreadable or
//! malformed input, 3 inconsistent configuration, 4 β outside the range
//! where a weighted skeleton is defined.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::error::Error;
use crate::gen;
use crate::graph::{self, WeightedGraph};
use crate::io;
use crate::l1::{self, RotatedFrame};
use crate::metric::{lens_construct, Beta, Metric, Point2, Variant};
use crate::render::{render_scene, LensOutline, Scene, Sites};
use crate::segments::{self, SegmentSet};
use crate::skeleton::{self, ChainReport, Edge, InclusionCheck, PointSet, SkeletonGraph};

/// Where the sites live, as selected by `--metric`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Space {
    Plane(Metric),
    Graph,
    Segments,
}

impl FromStr for Space {
    type Err = Error;

    fn from_str(s: &str) -> crate::Result<Space> {
        match s.trim().to_ascii_lowercase().as_str() {
            "graph" => Ok(Space::Graph),
            "segments" => Ok(Space::Segments),
            _ => s.parse().map(Space::Plane),
        }
    }
}

impl std::fmt::Display for Space {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Space::Plane(m) => write!(f, "{m}"),
            Space::Graph => f.write_str("graph"),
            Space::Segments => f.write_str("segments"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Algorithm {
    Brute,
    Sweep,
    Auto,
}

#[derive(Debug, Parser)]
#[command(name = "proxiskel", version, about = "Generalized beta-skeletons for points, weighted graphs and segments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one skeleton and write its edge list.
    Compute(ComputeArgs),
    /// Run the inclusion, collapse and oracle suites, or check an edge file.
    Validate(ValidateArgs),
    /// Draw a skeleton, optionally with the lens of one site pair.
    Render(RenderArgs),
    /// Time the l1 sweeps over a ladder of input sizes.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Input file: points (text or .json), graph JSON or segment JSON.
    #[arg(long, short)]
    pub input: Option<PathBuf>,
    /// Generate this many random sites instead of reading a file.
    #[arg(long, value_name = "N")]
    pub random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// lp:<p> | l1 | linf | graph | segments
    #[arg(long)]
    pub metric: Option<Space>,
    /// Parameter grid resolution (segments only).
    #[arg(long)]
    pub resolution: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct SkeletonArgs {
    /// A non-negative number or `inf`.
    #[arg(long)]
    pub beta: Beta,
    /// open | closed; defaults to closed below 2 and open from 2 on.
    #[arg(long)]
    pub variant: Option<Variant>,
    #[arg(long, value_enum, default_value_t = Algorithm::Auto)]
    pub algorithm: Algorithm,
}

#[derive(Debug, Clone, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub skeleton: SkeletonArgs,
    /// Edge-list destination; standard output when absent.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ValidateArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Betas of the suite, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub betas: Vec<f64>,
    /// Compare this edge file against a fresh computation instead.
    #[arg(long)]
    pub edges: Option<PathBuf>,
    /// Report destination; standard output when absent.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct RenderArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub skeleton: SkeletonArgs,
    /// Also draw the lens of site pair I J.
    #[arg(long, num_args = 2, value_names = ["I", "J"])]
    pub lens: Option<Vec<usize>>,
    /// SVG destination; standard output when absent.
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    /// l1 | linf
    #[arg(long, default_value = "l1")]
    pub metric: Space,
    /// Below 1 times the small-β sweep, otherwise the large-β sweep stage.
    #[arg(long, default_value = "0.5")]
    pub beta: Beta,
    #[arg(long, value_delimiter = ',', default_value = "2000,4000,8000")]
    pub ladder: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Repetitions per size; the fastest is reported.
    #[arg(long, default_value_t = 3)]
    pub reps: usize,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Config(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BetaOutOfRange { .. } | Error::NoCycle(_) => 4,
        Error::UnsupportedMetric(_)
        | Error::InvalidMetric(_)
        | Error::InvalidBeta(_)
        | Error::ResolutionTooSmall(_)
        | Error::InvalidCandidates(..) => 3,
        _ => 2,
    }
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let res = match cli.command {
        Command::Compute(a) => cmd_compute(&a),
        Command::Validate(a) => cmd_validate(&a),
        Command::Render(a) => cmd_render(&a),
        Command::Bench(a) => cmd_bench(&a),
    };
    match res {
        Ok(code) => code,
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            3
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

/// Loaded sites.
#[derive(Debug, Clone)]
pub enum Input {
    Points(PointSet),
    Graph(WeightedGraph),
    Segments(SegmentSet),
}

impl Input {
    fn n_sites(&self) -> usize {
        match self {
            Input::Points(p) => p.len(),
            Input::Graph(g) => g.n_sites(),
            Input::Segments(s) => s.len(),
        }
    }
}

fn load(args: &InputArgs, space: Space) -> std::result::Result<Input, Failure> {
    if args.resolution.is_some() && space != Space::Segments {
        return Err(Failure::Config("--resolution applies only to --metric segments".into()));
    }
    match (&args.input, args.random) {
        (Some(_), Some(_)) => Err(Failure::Config("give either --input or --random, not both".into())),
        (None, None) => Err(Failure::Config("an input is required: --input FILE or --random N".into())),
        (Some(path), None) => Ok(match space {
            Space::Plane(_) => Input::Points(io::read_points(path)?),
            Space::Graph => Input::Graph(io::read_graph(path)?),
            Space::Segments => Input::Segments(io::read_segments(path)?),
        }),
        (None, Some(n)) => {
            let mut rng = gen::rng_from_seed(args.seed);
            Ok(match space {
                Space::Plane(_) => Input::Points(gen::random_points(&mut rng, n)),
                Space::Graph => {
                    let n = n.max(3);
                    Input::Graph(gen::random_graph(&mut rng, n, n.min(8), 0.3))
                }
                Space::Segments => Input::Segments(gen::random_segments(&mut rng, n)),
            })
        }
    }
}

const DEFAULT_RESOLUTION: usize = 64;

/// A computed skeleton with the provenance written into edge files.
#[derive(Debug, Clone)]
pub struct Computed {
    pub graph: SkeletonGraph,
    pub algorithm: String,
    /// Weighted pairs outside the validity range.
    pub undefined: Vec<Edge>,
    pub segment_witnesses: Option<segments::SegmentSkeleton>,
}

/// Dispatches to the algorithm selected for `space`.
pub fn compute(
    input: &Input,
    space: Space,
    beta: Beta,
    variant: Variant,
    algorithm: Algorithm,
    resolution: Option<usize>,
) -> crate::Result<Computed> {
    let plain = |graph: SkeletonGraph| Computed {
        algorithm: graph.producer.to_string(),
        graph,
        undefined: Vec::new(),
        segment_witnesses: None,
    };
    match (input, space) {
        (Input::Points(ps), Space::Plane(m @ (Metric::L1 | Metric::Linf))) => Ok(plain(match algorithm {
            Algorithm::Brute => l1::l1_bruteforce(ps, m, beta, variant)?,
            _ if beta.value() < 1.0 => l1::sweep_small_beta(ps, m, beta, variant)?,
            _ => {
                let cands = l1::l1_delaunay_candidates(ps, m)?;
                l1::sweep_large_beta(ps, m, beta, variant, &cands)?
            }
        })),
        (Input::Points(ps), Space::Plane(m)) => {
            if algorithm == Algorithm::Sweep {
                return Err(Error::UnsupportedMetric(format!("{m}: the sweep needs l1 or linf")));
            }
            Ok(plain(skeleton::beta_skeleton_bruteforce(ps, m, beta, variant)?))
        }
        (Input::Graph(g), Space::Graph) => {
            if algorithm == Algorithm::Sweep {
                return Err(Error::UnsupportedMetric("graph: the sweep needs l1 or linf".into()));
            }
            let w = graph::weighted_beta_skeleton(g, beta, variant)?;
            Ok(Computed {
                algorithm: w.graph.producer.to_string(),
                graph: w.graph,
                undefined: w.undefined,
                segment_witnesses: None,
            })
        }
        (Input::Segments(ss), Space::Segments) => {
            if algorithm == Algorithm::Sweep {
                return Err(Error::UnsupportedMetric("segments: the sweep needs l1 or linf".into()));
            }
            let m = resolution.unwrap_or(DEFAULT_RESOLUTION);
            let sk = segments::segment_beta_skeleton(ss, beta, variant, m)?;
            Ok(Computed {
                algorithm: format!("{} m={m}", sk.graph.producer),
                graph: sk.graph.clone(),
                undefined: Vec::new(),
                segment_witnesses: Some(sk),
            })
        }
        _ => Err(Error::UnsupportedMetric(format!("{space} does not match the loaded input"))),
    }
}

fn edge_list_text(c: &Computed) -> String {
    let mut text = io::format_edge_list(&c.graph, &c.algorithm);
    if !c.undefined.is_empty() {
        let list: Vec<String> = c.undefined.iter().map(|(i, j)| format!("{i}-{j}")).collect();
        text.insert_str(0, &format!("# undefined: {}\n", list.join(" ")));
    }
    text
}

fn emit(path: Option<&Path>, text: &str) -> crate::Result<()> {
    match path {
        Some(p) => io::write_atomic(p, text.as_bytes()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn scene_sites(input: &Input) -> Sites {
    match input {
        Input::Points(ps) => Sites::Points(ps.points().to_vec()),
        Input::Segments(ss) => Sites::Segments(ss.segments().to_vec()),
        Input::Graph(g) => {
            let n = g.n_vertices;
            let positions = g.coordinates.clone().unwrap_or_else(|| {
                (0..n)
                    .map(|k| {
                        let th = std::f64::consts::TAU * k as f64 / n as f64;
                        Point2::new(th.cos(), th.sin())
                    })
                    .collect()
            });
            Sites::Graph {
                positions,
                edges: g.edges.iter().map(|&(a, b, _)| (a, b)).collect(),
                sites: g.sites.clone(),
            }
        }
    }
}

fn resolve_space(args: &InputArgs) -> Space {
    args.metric.unwrap_or(Space::Plane(Metric::L2))
}

fn cmd_compute(a: &ComputeArgs) -> Outcome {
    let space = resolve_space(&a.input);
    let input = load(&a.input, space)?;
    let s = &a.skeleton;
    let variant = s.variant.unwrap_or_else(|| Variant::default_for(s.beta));
    let c = compute(&input, space, s.beta, variant, s.algorithm, a.input.resolution)?;
    emit(a.output.as_deref(), &edge_list_text(&c))?;
    if let Some(svg) = &a.svg {
        let scene = Scene::new(scene_sites(&input)).with_layer("skeleton", c.graph.edges.iter().copied());
        io::write_atomic(svg, render_scene(&scene)?.as_bytes())?;
    }
    if c.undefined.is_empty() {
        Ok(0)
    } else {
        eprintln!(
            "error: beta {} exceeds the validity bound of {} site pair(s); their edges are omitted",
            s.beta,
            c.undefined.len()
        );
        Ok(4)
    }
}

fn cmd_render(a: &RenderArgs) -> Outcome {
    let space = resolve_space(&a.input);
    let input = load(&a.input, space)?;
    let s = &a.skeleton;
    let variant = s.variant.unwrap_or_else(|| Variant::default_for(s.beta));
    let c = compute(&input, space, s.beta, variant, s.algorithm, a.input.resolution)?;
    let mut scene = Scene::new(scene_sites(&input)).with_layer("skeleton", c.graph.edges.iter().copied());
    if let Some(pair) = &a.lens {
        let (i, j) = (pair[0], pair[1]);
        let n = input.n_sites();
        if i >= n || j >= n || i == j {
            return Err(Failure::Config(format!("--lens {i} {j} is not a pair of the {n} sites")));
        }
        let outline = match (&input, space) {
            (Input::Points(ps), Space::Plane(m @ (Metric::L1 | Metric::Linf))) => {
                LensOutline::from_l1_family(&l1::canonical_lenses_l1(m, ps.get(i), ps.get(j), s.beta)?, "pair-lens")
            }
            (Input::Points(ps), Space::Plane(m)) => {
                LensOutline::from_lens(&lens_construct(m, ps.get(i), ps.get(j), s.beta)?, "pair-lens")
            }
            (Input::Segments(ss), _) => {
                let sk = c.segment_witnesses.as_ref().expect("segment run keeps witnesses");
                match sk.witness_lens(ss, skeleton::edge(i, j)) {
                    Some(l) => LensOutline::from_lens(&l, "witness"),
                    None => return Err(Failure::Config(format!("({i}, {j}) is not an edge, so it has no witness lens"))),
                }
            }
            _ => return Err(Failure::Config("lenses of graph sites are not drawn".into())),
        };
        scene = scene.with_lens(outline);
    }
    emit(a.svg.as_deref(), &render_scene(&scene)?)?;
    Ok(0)
}

fn cmd_validate(a: &ValidateArgs) -> Outcome {
    let (report, title) = match &a.edges {
        Some(path) => validate_edge_file(a, path)?,
        None => {
            let space = resolve_space(&a.input);
            let input = load(&a.input, space)?;
            let title = format!("# suite: {space}, {} sites", input.n_sites());
            (run_suite(&input, space, &a.betas, a.input.resolution)?, title)
        }
    };
    let mut text = format!("{title}\n{report}");
    let _ = writeln!(text, "# violations: {}", report.violation_count());
    emit(a.report.as_deref(), &text)?;
    Ok(if report.holds() { 0 } else { 1 })
}

fn validate_edge_file(a: &ValidateArgs, path: &Path) -> std::result::Result<(ChainReport, String), Failure> {
    let file = io::read_edge_list(path)?;
    let header_space = file.header.get("metric").map(|m| m.parse::<Space>()).transpose()?;
    let space = match (a.input.metric, header_space) {
        (Some(x), Some(y)) if x != y => {
            return Err(Failure::Config(format!("--metric {x} disagrees with the edge file's {y}")))
        }
        (Some(x), _) | (None, Some(x)) => x,
        (None, None) => Space::Plane(Metric::L2),
    };
    let beta: Beta = file
        .header
        .get("beta")
        .ok_or_else(|| Failure::Config("the edge file has no '# beta:' line".into()))?
        .parse()?;
    let variant = match file.header.get("variant") {
        Some(v) => v.parse()?,
        None => Variant::default_for(beta),
    };
    let algo = file.header.get("algorithm").map(String::as_str).unwrap_or("");
    let algorithm = if algo.contains("brute") {
        Algorithm::Brute
    } else if algo.starts_with("sweep") {
        Algorithm::Sweep
    } else {
        Algorithm::Auto
    };
    let resolution = a.input.resolution.or_else(|| {
        algo.split_whitespace()
            .find_map(|w| w.strip_prefix("m="))
            .and_then(|m| m.parse().ok())
    });
    let mut input_args = a.input.clone();
    input_args.resolution = resolution.filter(|_| space == Space::Segments);
    let input = load(&input_args, space)?;
    let fresh = compute(&input, space, beta, variant, algorithm, input_args.resolution)?;
    let listed = file.to_skeleton(input.n_sites(), fresh.graph.setting, beta, variant)?;
    let mut report = ChainReport::default();
    report.push(InclusionCheck::equality(
        format!("file {}", path.display()),
        format!("recomputed G[{beta}] {variant}"),
        &listed,
        &fresh.graph,
    ));
    Ok((report, format!("# edge file check: {space}, {} sites", input.n_sites())))
}

/// Largest input on which the l1 suites also run the brute-force oracle.
const ORACLE_LIMIT: usize = 150;

/// The suite applicable to the input: inclusion chains everywhere, plus
/// collapse and oracle equivalence under l1 / l∞ and grid refinement for
/// segments.
pub fn run_suite(input: &Input, space: Space, betas: &[f64], resolution: Option<usize>) -> crate::Result<ChainReport> {
    let chain_betas = |default: &[f64]| -> Vec<f64> {
        let src = if betas.is_empty() { default } else { betas };
        src.iter().copied().filter(|b| (1.0..=2.0).contains(b)).collect()
    };
    let mut report = ChainReport::default();
    match (input, space) {
        (Input::Points(ps), Space::Plane(m @ (Metric::L1 | Metric::Linf))) => {
            let all: Vec<f64> = if betas.is_empty() { vec![0.3, 0.7, 1.0, 1.5, 2.0, 3.0] } else { betas.to_vec() };
            let cb = chain_betas(&[1.0, 1.5, 2.0]);
            if !cb.is_empty() {
                report.extend(l1::l1_chain_check(ps, m, &cb)?);
            }
            let cands = l1::l1_delaunay_candidates(ps, m)?;
            let mut small: Option<(f64, SkeletonGraph)> = None;
            let mut large: Option<(f64, SkeletonGraph)> = None;
            for &b in &all {
                let beta = Beta::new(b)?;
                let v = Variant::default_for(beta);
                let g = if b < 1.0 {
                    l1::sweep_small_beta(ps, m, beta, v)?
                } else {
                    l1::sweep_large_beta(ps, m, beta, v, &cands)?
                };
                if ps.len() <= ORACLE_LIMIT {
                    let brute = l1::l1_bruteforce(ps, m, beta, v)?;
                    report.push(InclusionCheck::equality(format!("sweep G[{b}]"), format!("brute G[{b}]"), &g, &brute));
                }
                let slot = if b < 1.0 {
                    Some(&mut small)
                } else if b >= 2.0 {
                    Some(&mut large)
                } else {
                    None
                };
                if let Some(slot) = slot {
                    match slot {
                        Some((b0, g0)) => {
                            report.push(InclusionCheck::equality(format!("G[{b}]"), format!("G[{b0}]"), &g, g0))
                        }
                        None => *slot = Some((b, g)),
                    }
                }
            }
        }
        (Input::Points(ps), Space::Plane(m)) => {
            let cb = chain_betas(&[1.0, 1.25, 1.5, 1.75, 2.0]);
            if cb.is_empty() {
                return Err(Error::InvalidBeta("the lp chain needs betas within [1, 2]".into()));
            }
            if m.is_euclidean() {
                report.extend(skeleton::inclusion_chain_check(ps, &cb)?);
            } else {
                let layer = |b: f64, v: Variant| skeleton::beta_skeleton_bruteforce(ps, m, Beta::Finite(b), v);
                let mst = skeleton::emst(ps, m)?;
                let rng = layer(2.0, Variant::Open)?;
                let gg = layer(1.0, Variant::Closed)?;
                let layers = cb
                    .iter()
                    .map(|&b| layer(b, Variant::default_for(Beta::Finite(b))).map(|g| (b, g)))
                    .collect::<crate::Result<Vec<_>>>()?;
                report.extend(skeleton::chain_from_layers(Some(&mst), &rng, &layers, &gg, None));
            }
        }
        (Input::Graph(g), Space::Graph) => {
            report.extend(graph::weighted_chain_check(g, &chain_betas(&[1.0, 1.5, 2.0]))?);
        }
        (Input::Segments(ss), Space::Segments) => {
            let m = resolution.unwrap_or(DEFAULT_RESOLUTION);
            report.extend(segments::chain_check_segments(ss, &chain_betas(&[1.0, 1.5, 2.0]), m)?);
            for (b, v) in [(1.0, Variant::Closed), (2.0, Variant::Open)] {
                report.push(segments::refinement_check(ss, Beta::Finite(b), v, m)?);
            }
        }
        _ => return Err(Error::UnsupportedMetric(format!("{space} does not match the loaded input"))),
    }
    Ok(report)
}

/// One rung of a timing ladder.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub seconds: f64,
    /// Time relative to the previous rung.
    pub ratio: Option<f64>,
}

/// Edges of the Euclidean Delaunay triangulation of the frame images: a
/// linear-size candidate set for timing the large-β sweep.
pub fn bench_candidates(ps: &PointSet, metric: Metric) -> crate::Result<Vec<Edge>> {
    let frame = RotatedFrame::for_metric(metric)?;
    let pts: Vec<Point2> = ps.points().iter().map(|&p| frame.forward(p)).collect();
    Ok(skeleton::delaunay_edges_lenient(&pts))
}

/// Times the small-β sweep (`β < 1`) or the large-β sweep stage with
/// candidates precomputed (`β ≥ 1`) on seeded random inputs, keeping the
/// fastest of `reps` runs per size.
pub fn bench_ladder(metric: Metric, beta: Beta, ladder: &[usize], seed: u64, reps: usize) -> crate::Result<Vec<BenchRow>> {
    RotatedFrame::for_metric(metric)?;
    let mut rows: Vec<BenchRow> = Vec::new();
    for &n in ladder {
        let ps = gen::random_points(&mut gen::rng_from_seed(seed ^ n as u64), n);
        let variant = Variant::default_for(beta);
        let cands = if beta.value() >= 1.0 { bench_candidates(&ps, metric)? } else { Vec::new() };
        let mut best = f64::INFINITY;
        for _ in 0..reps.max(1) {
            let start = Instant::now();
            let g = if beta.value() < 1.0 {
                l1::sweep_small_beta(&ps, metric, beta, variant)?
            } else {
                l1::sweep_large_beta(&ps, metric, beta, variant, &cands)?
            };
            best = best.min(start.elapsed().as_secs_f64());
            std::hint::black_box(g);
        }
        let ratio = rows.last().map(|r| best / r.seconds);
        rows.push(BenchRow { n, seconds: best, ratio });
    }
    Ok(rows)
}

pub fn format_bench(rows: &[BenchRow]) -> String {
    let mut s = String::from("n,seconds,ratio\n");
    for r in rows {
        let ratio = r.ratio.map(|x| format!("{x:.3}")).unwrap_or_default();
        let _ = writeln!(s, "{},{:.9},{}", r.n, r.seconds, ratio);
    }
    s
}

fn cmd_bench(a: &BenchArgs) -> Outcome {
    let Space::Plane(m @ (Metric::L1 | Metric::Linf)) = a.metric else {
        return Err(Failure::Config(format!("bench times the l1 / linf sweeps, not {}", a.metric)));
    };
    if a.ladder.iter().any(|&n| n < 2) {
        return Err(Failure::Config("ladder sizes must be at least 2".into()));
    }
    let rows = bench_ladder(m, a.beta, &a.ladder, a.seed, a.reps)?;
    emit(a.output.as_deref(), &format_bench(&rows))?;
    Ok(0)
}
