use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use cycsub::analysis::{classify, AnalysisParams};
use cycsub::constructions::{
    build_competitor, build_extremal, build_knn, build_star_augmented, degree_check, DegreeCheck,
};
use cycsub::counting::{cyc_count_with, estimate_h, CountOptions, Decider, COUNT_HARD_LIMIT, COUNT_LIMIT};
use cycsub::graph::graph6;
use cycsub::numerics::emit_f_alpha_curve;
use cycsub::verify::{run_suite, Suite, VerifyOptions};
use cycsub::Graph;

const EXIT_PRECONDITION: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_VERIFY: u8 = 4;

#[derive(Parser)]
#[command(name = "cycsub", version, about = "Cyclic vertex subsets of dense regular graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a graph family member and write it as graph6 plus a JSON sidecar.
    Construct(ConstructArgs),
    /// Count cyclic subsets exactly.
    Count(CountArgs),
    /// Estimate the probability that a random induced subgraph is Hamiltonian.
    Estimate(EstimateArgs),
    /// Classify a graph into the bi-dense / two-cliques / near-bipartite cases.
    Analyze(AnalyzeArgs),
    /// Run a named check suite and print a pass/fail table.
    Verify(VerifyArgs),
    /// Tabulate f(alpha) as CSV and optionally plot it as SVG.
    Curve(CurveArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Extremal,
    Knn,
    Star,
    Competitor,
}

#[derive(clap::Args)]
struct ConstructArgs {
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated cycle lengths of the 2-factor (extremal family).
    #[arg(long, value_delimiter = ',')]
    cycles: Vec<usize>,
    /// Star size (competitor family).
    #[arg(long)]
    k: Option<usize>,
    /// graph6 output path, `-` for stdout.
    #[arg(long, default_value = "-")]
    out: String,
    /// Sidecar path; defaults to `<out>.json` when writing to a file.
    #[arg(long)]
    sidecar: Option<PathBuf>,
}

#[derive(clap::Args)]
struct CountArgs {
    /// graph6 input, `-` for stdin.
    input: String,
    /// Largest vertex count counted without --force.
    #[arg(long, default_value_t = COUNT_LIMIT)]
    limit: usize,
    /// Allow graphs up to the hard limit.
    #[arg(long)]
    force: bool,
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Also write the per-size histogram as CSV.
    #[arg(long)]
    histogram: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum DeciderArg {
    Auto,
    Exact,
    Gn,
}

#[derive(clap::Args)]
struct EstimateArgs {
    input: String,
    #[arg(long)]
    p: f64,
    #[arg(long, default_value_t = 100_000)]
    samples: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 0)]
    workers: usize,
    #[arg(long, value_enum, default_value = "auto")]
    decider: DeciderArg,
    /// 2-factor cycle lengths labelling the input as an extremal graph
    /// (required by `--decider gn`).
    #[arg(long, value_delimiter = ',')]
    cycles: Vec<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args)]
struct AnalyzeArgs {
    input: String,
    #[arg(long, default_value_t = 1.0 / 320.0)]
    eps: f64,
    #[arg(long, default_value_t = 0.1)]
    gamma: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// One of balancedcut, chernoff, bindiff, pn, fnsecond, calculus,
    /// gncriterion, builders.
    suite: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    instances: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 0)]
    workers: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args)]
struct CurveArgs {
    #[arg(long, default_value_t = 0.2)]
    alpha_min: f64,
    #[arg(long, default_value_t = 20.0)]
    alpha_max: f64,
    #[arg(long, default_value_t = 400)]
    points: usize,
    #[arg(long)]
    svg: Option<PathBuf>,
    /// CSV path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct InputDigest {
    path: String,
    sha256: String,
}

#[derive(Serialize)]
struct RunManifest {
    subcommand: &'static str,
    args: Vec<String>,
    seed: Option<u64>,
    workers: Option<usize>,
    version: &'static str,
    inputs: Vec<InputDigest>,
    wall_time_ms: u128,
}

#[derive(Serialize)]
struct Output<'a, T: Serialize> {
    manifest: &'a RunManifest,
    result: &'a T,
}

struct Run {
    manifest: RunManifest,
    start: Instant,
}

impl Run {
    fn new(subcommand: &'static str, seed: Option<u64>, workers: Option<usize>) -> Self {
        Run {
            manifest: RunManifest {
                subcommand,
                args: std::env::args().skip(1).collect(),
                seed,
                workers,
                version: env!("CARGO_PKG_VERSION"),
                inputs: Vec::new(),
                wall_time_ms: 0,
            },
            start: Instant::now(),
        }
    }

    fn read_graph(&mut self, input: &str) -> anyhow::Result<Graph> {
        let bytes = if input == "-" {
            let mut buf = Vec::new();
            io::stdin().read_to_end(&mut buf).context("reading stdin")?;
            buf
        } else {
            fs::read(input).with_context(|| format!("reading {input}"))?
        };
        self.manifest.inputs.push(InputDigest {
            path: input.to_string(),
            sha256: hex(&Sha256::digest(&bytes)),
        });
        let text = String::from_utf8(bytes).map_err(|_| cycsub::Error::Parse("input is not UTF-8".into()))?;
        let mut graphs = graph6::decode_all(&text)?;
        if graphs.len() != 1 {
            return Err(cycsub::Error::Parse(format!("expected one graph, found {}", graphs.len())).into());
        }
        Ok(graphs.pop().unwrap())
    }

    fn finish<T: Serialize>(mut self, result: &T, out: Option<&Path>) -> anyhow::Result<()> {
        self.manifest.wall_time_ms = self.start.elapsed().as_millis();
        let json = serde_json::to_string_pretty(&Output {
            manifest: &self.manifest,
            result,
        })?;
        emit(out, &(json + "\n"))
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) if p != Path::new("-") => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        _ => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

#[derive(Debug)]
struct VerificationFailed(String);

impl std::fmt::Display for VerificationFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for VerificationFailed {}

#[derive(Serialize)]
struct Sidecar {
    family: &'static str,
    n: usize,
    parameters: serde_json::Value,
    degree_check: DegreeCheck,
    graph6: String,
}

fn construct(a: ConstructArgs) -> anyhow::Result<()> {
    let run = Run::new("construct", None, None);
    let need_n = || a.n.ok_or_else(|| cycsub::Error::Precondition("--n is required".into()));
    let (family, g, parameters) = match a.family {
        Family::Extremal => {
            let n = need_n()?;
            let eg = build_extremal(n, &a.cycles)?;
            eg.validate()?;
            ("extremal", eg.graph, serde_json::json!({ "n": n, "cycles": a.cycles }))
        }
        Family::Knn => {
            let n = need_n()?;
            ("knn", build_knn(n)?, serde_json::json!({ "n": n }))
        }
        Family::Star => {
            let n = need_n()?;
            ("star", build_star_augmented(n)?, serde_json::json!({ "n": n }))
        }
        Family::Competitor => {
            let k = a.k.ok_or_else(|| cycsub::Error::Precondition("--k is required".into()))?;
            let cg = build_competitor(k)?;
            cg.validate()?;
            ("competitor", cg.graph, serde_json::json!({ "k": k }))
        }
    };
    let check = degree_check(&g);
    let m = g.vertex_count();
    let expected = match a.family {
        Family::Knn => m / 2,
        Family::Star => check.max_degree,
        _ => m / 2 + 1,
    };
    let regular_ok = matches!(a.family, Family::Star) || (check.regular && check.min_degree == expected);
    if !regular_ok {
        return Err(VerificationFailed(format!("{family} graph is not {expected}-regular")).into());
    }
    let code = graph6::encode(&g);
    emit(Some(Path::new(&a.out)), &format!("{code}\n"))?;
    let sidecar = Sidecar {
        family,
        n: m / 2,
        parameters,
        degree_check: check,
        graph6: code,
    };
    let path = match (&a.sidecar, a.out.as_str()) {
        (Some(p), _) => Some(p.clone()),
        (None, "-") => None,
        (None, out) => Some(PathBuf::from(format!("{out}.json"))),
    };
    match path {
        Some(p) => run.finish(&sidecar, Some(&p)),
        None => Ok(()),
    }
}

fn count(a: CountArgs) -> anyhow::Result<()> {
    let mut run = Run::new("count", None, Some(a.workers));
    let g = run.read_graph(&a.input)?;
    let limit = if a.force { COUNT_HARD_LIMIT } else { a.limit };
    let report = cyc_count_with(
        &g,
        CountOptions {
            limit,
            workers: a.workers,
        },
    )?;
    if let Some(h) = &a.histogram {
        fs::write(h, report.histogram_csv()).with_context(|| format!("writing {}", h.display()))?;
    }
    run.finish(&report, a.out.as_deref())
}

fn estimate(a: EstimateArgs) -> anyhow::Result<()> {
    let mut run = Run::new("estimate", Some(a.seed), Some(a.workers));
    let g = run.read_graph(&a.input)?;
    let labelled;
    let decider = match a.decider {
        DeciderArg::Auto => Decider::Auto,
        DeciderArg::Exact => Decider::Exact,
        DeciderArg::Gn => {
            let m = g.vertex_count();
            labelled = build_extremal(m / 2, &a.cycles)?;
            if labelled.graph != g {
                return Err(cycsub::Error::Precondition(
                    "input is not the extremal graph with the given --cycles labelling".into(),
                )
                .into());
            }
            Decider::Gn(&labelled)
        }
    };
    let report = estimate_h(&g, a.p, a.samples, a.seed, decider, a.workers)?;
    run.finish(&report, a.out.as_deref())
}

fn analyze(a: AnalyzeArgs) -> anyhow::Result<()> {
    let mut run = Run::new("analyze", None, None);
    let g = run.read_graph(&a.input)?;
    let params = AnalysisParams {
        eps: a.eps,
        gamma: a.gamma,
        ..Default::default()
    };
    params.validate()?;
    let c = classify(&g, &params)?;
    run.finish(&c, a.out.as_deref())
}

fn verify(a: VerifyArgs) -> anyhow::Result<()> {
    let suite: Suite = a.suite.parse()?;
    let run = Run::new("verify", Some(a.seed), Some(a.workers));
    let report = run_suite(
        suite,
        &VerifyOptions {
            n: a.n,
            instances: a.instances,
            m: a.m,
            seed: a.seed,
            workers: a.workers,
        },
    )?;
    let passed = report.passed;
    run.finish(&report, a.out.as_deref())?;
    if !passed {
        return Err(VerificationFailed(format!("suite {suite} failed")).into());
    }
    Ok(())
}

fn curve(a: CurveArgs) -> anyhow::Result<()> {
    let table = emit_f_alpha_curve(a.alpha_min, a.alpha_max, a.points)?;
    emit(a.out.as_deref(), &table.to_csv())?;
    if let Some(p) = &a.svg {
        fs::write(p, table.to_svg()).with_context(|| format!("writing {}", p.display()))?;
    }
    if !table.above_half {
        return Err(anyhow!(VerificationFailed("curve dips to 1/2 or below".into())));
    }
    Ok(())
}

fn exit_code(e: &anyhow::Error) -> u8 {
    if e.downcast_ref::<VerificationFailed>().is_some() {
        return EXIT_VERIFY;
    }
    match e.downcast_ref::<cycsub::Error>() {
        Some(cycsub::Error::Budget { .. } | cycsub::Error::SearchExhausted { .. }) => EXIT_BUDGET,
        Some(cycsub::Error::Construction(_)) => EXIT_VERIFY,
        _ => EXIT_PRECONDITION,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let r = match cli.cmd {
        Cmd::Construct(a) => construct(a),
        Cmd::Count(a) => count(a),
        Cmd::Estimate(a) => estimate(a),
        Cmd::Analyze(a) => analyze(a),
        Cmd::Verify(a) => verify(a),
        Cmd::Curve(a) => curve(a),
    };
    match r {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
