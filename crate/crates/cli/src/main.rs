//! `colorspan` command-line tool.
//!
//! Exit codes: 0 solved, 2 infeasible, 3 invalid input, 4 budget exceeded,
//! 5 check mismatch or equivalence violation.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use colorspan::generate::{self, Distribution};
use colorspan::geometry::ColoredPointSet;
use colorspan::hardness::{
    certify_equivalence, reduce_is_to_mcis, reduce_is_to_mcis_edge_gadgets_only,
    reduce_mcis_to_mcim,
};
use colorspan::io::{self, GraphFile, ResultRecord};
use colorspan::oracles::{self, OracleBudget, DEFAULT_MAX_STATES};
use colorspan::render::render_svg;
use colorspan::solvers::{self, ColorSpanningMatching, Objective};
use colorspan::Error;

const CHECK_TOLERANCE: f64 = 1e-9;

#[derive(Parser)]
#[command(
    name = "colorspan",
    version,
    about = "Optimal color-spanning matchings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a seeded random instance.
    Gen(GenArgs),
    /// Solve a points or graph file with the polynomial pipeline.
    Solve(SolveArgs),
    /// Solve a points or graph file by exhaustive search.
    Oracle(OracleArgs),
    /// Compare the solver against the oracle.
    Check(CheckArgs),
    /// Apply a hardness reduction to a graph file.
    Reduce(ReduceArgs),
    /// Certify that both reductions preserve feasibility on a graph.
    Certify(CertifyArgs),
    /// Draw a solved points instance as SVG.
    Render(RenderArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Points,
    Graph,
}

#[derive(Args)]
struct GenArgs {
    kind: Kind,
    #[arg(long)]
    n: usize,
    /// Number of colors.
    #[arg(long, conflicts_with = "k")]
    t: Option<usize>,
    /// Half the number of colors.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "uniform")]
    distribution: String,
    /// Require an even number of colors.
    #[arg(long)]
    matching: bool,
    /// Edge probability for graphs.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Integer edge weights in 1..=100.
    #[arg(long)]
    weighted: bool,
    /// Output file (stdout when absent).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    input: PathBuf,
    #[arg(long, default_value = "minsum")]
    objective: String,
    #[arg(long)]
    json: bool,
    /// Include wall time in the record.
    #[arg(long)]
    timing: bool,
    #[arg(long)]
    render_out: Option<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    input: PathBuf,
    #[arg(long, default_value = "minsum")]
    objective: String,
    #[arg(long, default_value_t = DEFAULT_MAX_STATES)]
    budget: u64,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    timing: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    /// Instance to check; omit with --sweep.
    #[arg(required_unless_present = "sweep")]
    input: Option<PathBuf>,
    #[arg(long, default_value = "minsum")]
    objective: String,
    #[arg(long, default_value_t = DEFAULT_MAX_STATES)]
    budget: u64,
    /// Check this many seeded random point instances instead.
    #[arg(long)]
    sweep: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Perturb the solver value to exercise the mismatch path.
    #[arg(long, hide = true)]
    inject_mismatch: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Step {
    Is2mcis,
    Mcis2mcim,
}

#[derive(Args)]
struct ReduceArgs {
    input: PathBuf,
    #[arg(long)]
    step: Step,
    /// Solution size; required for is2mcis.
    #[arg(long)]
    k: Option<usize>,
    /// Use only the per-edge gadgets for is2mcis (unsound with isolated vertices).
    #[arg(long)]
    literal: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Provenance sidecar; defaults to `<output>.prov` when --output is set.
    #[arg(long)]
    provenance: Option<PathBuf>,
}

#[derive(Args)]
struct CertifyArgs {
    input: PathBuf,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_STATES)]
    budget: u64,
}

#[derive(Args)]
struct RenderArgs {
    points: PathBuf,
    result: PathBuf,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

enum Failure {
    Infeasible(String),
    Invalid(String),
    Budget(String),
    Mismatch(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Infeasible(_) => 2,
            Failure::Invalid(_) => 3,
            Failure::Budget(_) => 4,
            Failure::Mismatch(_) => 5,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Infeasible(m)
            | Failure::Invalid(m)
            | Failure::Budget(m)
            | Failure::Mismatch(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            Error::EquivalenceViolation(_) => Failure::Mismatch(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn write(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => {
            fs::write(p, text).map_err(|e| Failure::Invalid(format!("{}: {e}", p.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn with_path<T>(path: &Path, r: colorspan::Result<T>) -> CliResult<T> {
    r.map_err(|e| {
        let f = Failure::from(e);
        match f {
            Failure::Invalid(m) => Failure::Invalid(format!("{}: {m}", path.display())),
            other => other,
        }
    })
}

enum Instance {
    Points(ColoredPointSet),
    Graph(GraphFile),
}

/// Points files have a two-field header, graph files three.
fn load(path: &Path) -> CliResult<Instance> {
    let text = read(path)?;
    let header = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    match header.split_whitespace().count() {
        2 => Ok(Instance::Points(with_path(path, io::parse_points(&text))?)),
        3 => Ok(Instance::Graph(with_path(path, io::parse_graph(&text))?)),
        _ => Err(Failure::Invalid(format!(
            "{}: header must be `n t` (points) or `n m t` (graph)",
            path.display()
        ))),
    }
}

fn parse_objective(s: &str) -> CliResult<Objective> {
    Ok(s.parse::<Objective>()?)
}

fn graph_objective(objective: Objective) -> CliResult<()> {
    if objective == Objective::MinSum {
        Ok(())
    } else {
        Err(Failure::Invalid(format!(
            "graph inputs support only minsum (minimum-weight colorful matching), not {objective}"
        )))
    }
}

fn emit(
    record: ResultRecord,
    json: bool,
    started: Option<Instant>,
    output: Option<&Path>,
) -> CliResult<()> {
    let record = ResultRecord {
        time_ms: started.map(|s| s.elapsed().as_secs_f64() * 1e3),
        ..record
    };
    write(
        output,
        &if json {
            record.to_json()
        } else {
            record.to_text()
        },
    )
}

fn cmd_gen(a: GenArgs) -> CliResult<()> {
    let t = match (a.t, a.k) {
        (Some(t), _) => t,
        (None, Some(k)) => 2 * k,
        (None, None) => return Err(Failure::Invalid("give --t or --k".into())),
    };
    if a.matching && t % 2 != 0 {
        return Err(Failure::Invalid(format!(
            "--matching needs an even number of colors, got {t}"
        )));
    }
    let text = match a.kind {
        Kind::Points => {
            let dist: Distribution = a.distribution.parse()?;
            io::serialize_points(&generate::random_points(a.n, t, dist, a.seed)?)
        }
        Kind::Graph => {
            let file = if t == 0 {
                GraphFile::from_simple(&generate::random_graph(a.n, a.p, a.seed)?)
            } else {
                GraphFile::from_colored(&generate::random_colored_graph(
                    a.n, t, a.p, a.weighted, a.seed,
                )?)
            };
            io::serialize_graph(&file)
        }
    };
    write(a.output.as_deref(), &text)
}

fn solve_points(set: &ColoredPointSet, objective: Objective) -> CliResult<ColorSpanningMatching> {
    Ok(solvers::solve(set, objective)?)
}

fn cmd_solve(a: SolveArgs) -> CliResult<()> {
    let objective = parse_objective(&a.objective)?;
    let instance = load(&a.input)?;
    let started = Instant::now();
    let record = match &instance {
        Instance::Points(set) => {
            ResultRecord::from_spanning(objective, &solve_points(set, objective)?)
        }
        Instance::Graph(file) => {
            graph_objective(objective)?;
            let g = with_path(&a.input, file.to_colored())?;
            match solvers::solve_k_multicolored_matching(&g)? {
                Some(m) => ResultRecord::from_matching(objective, &m),
                None => return Err(Failure::Infeasible("no colorful matching exists".into())),
            }
        }
    };
    if let Some(svg_path) = &a.render_out {
        let Instance::Points(set) = &instance else {
            return Err(Failure::Invalid("--render-out needs a points file".into()));
        };
        write(Some(svg_path), &render_svg(set, &record)?)?;
    }
    emit(
        record,
        a.json,
        a.timing.then_some(started),
        a.output.as_deref(),
    )
}

fn oracle_record(
    instance: &Instance,
    objective: Objective,
    budget: OracleBudget,
) -> CliResult<ResultRecord> {
    match instance {
        Instance::Points(set) => Ok(ResultRecord::from_spanning(
            objective,
            &oracles::brute_force_geometric(set, objective, budget)?,
        )),
        Instance::Graph(file) => {
            graph_objective(objective)?;
            match oracles::brute_force_colorful_graph_matching(&file.to_colored()?, budget)? {
                Some(m) => Ok(ResultRecord::from_matching(objective, &m)),
                None => Err(Failure::Infeasible("no colorful matching exists".into())),
            }
        }
    }
}

fn cmd_oracle(a: OracleArgs) -> CliResult<()> {
    let objective = parse_objective(&a.objective)?;
    let instance = load(&a.input)?;
    let started = Instant::now();
    let record = oracle_record(&instance, objective, OracleBudget::new(a.budget))?;
    emit(
        record,
        a.json,
        a.timing.then_some(started),
        a.output.as_deref(),
    )
}

/// Solver value and oracle value for one instance; `None` means both
/// report infeasible.
fn check_one(
    instance: &Instance,
    objective: Objective,
    budget: OracleBudget,
    inject: bool,
) -> CliResult<Option<(f64, f64)>> {
    let solver = match instance {
        Instance::Points(set) => Some(solve_points(set, objective)?.value(objective)),
        Instance::Graph(file) => {
            graph_objective(objective)?;
            solvers::solve_k_multicolored_matching(&file.to_colored()?)?.map(|m| m.total_weight)
        }
    };
    let oracle = match oracle_record(instance, objective, budget) {
        Ok(r) => Some(r.value),
        Err(Failure::Infeasible(_)) => None,
        Err(e) => return Err(e),
    };
    let solver = solver.map(|v| if inject { v + 1.0 } else { v });
    match (solver, oracle) {
        (Some(s), Some(o)) => Ok(Some((s, o))),
        (None, None) => Ok(None),
        (s, o) => Err(Failure::Mismatch(format!(
            "feasibility differs: solver {s:?}, oracle {o:?}"
        ))),
    }
}

fn verdict(values: Option<(f64, f64)>) -> CliResult<String> {
    match values {
        None => Ok("pass infeasible".into()),
        Some((s, o)) if (s - o).abs() <= CHECK_TOLERANCE => {
            Ok(format!("pass solver={s} oracle={o}"))
        }
        Some((s, o)) => Err(Failure::Mismatch(format!("mismatch solver={s} oracle={o}"))),
    }
}

fn cmd_check(a: CheckArgs) -> CliResult<()> {
    let objective = parse_objective(&a.objective)?;
    let budget = OracleBudget::new(a.budget);
    let Some(count) = a.sweep else {
        let instance = load(
            a.input
                .as_deref()
                .expect("clap requires input without --sweep"),
        )?;
        let line = verdict(check_one(&instance, objective, budget, a.inject_mismatch)?)?;
        println!("{objective}: {line}");
        return Ok(());
    };
    let results: Vec<CliResult<String>> = (0..count)
        .into_par_iter()
        .map(|i| {
            let seed = a.seed.wrapping_add(i as u64);
            let t = 4 + 2 * (i % 2);
            let set = generate::uniform_points(3 * t, t, seed)?;
            verdict(check_one(
                &Instance::Points(set),
                objective,
                budget,
                a.inject_mismatch,
            )?)
        })
        .collect();
    let mut worst: Option<Failure> = None;
    let mut passed = 0;
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Ok(line) => {
                passed += 1;
                println!("instance {i}: {line}");
            }
            Err(f) => {
                println!("instance {i}: {}", f.message());
                if worst.as_ref().is_none_or(|w| f.code() > w.code()) {
                    worst = Some(f);
                }
            }
        }
    }
    println!("{objective}: {passed}/{count} passed");
    match worst {
        None => Ok(()),
        Some(f) => Err(f),
    }
}

fn cmd_reduce(a: ReduceArgs) -> CliResult<()> {
    let file = with_path(&a.input, io::parse_graph(&read(&a.input)?))?;
    let artifact = match a.step {
        Step::Is2mcis => {
            let k =
                a.k.ok_or_else(|| Failure::Invalid("is2mcis needs --k".into()))?;
            let g = with_path(&a.input, file.to_simple())?;
            if a.literal {
                reduce_is_to_mcis_edge_gadgets_only(&g, k)?
            } else {
                reduce_is_to_mcis(&g, k)?
            }
        }
        Step::Mcis2mcim => reduce_mcis_to_mcim(&with_path(&a.input, file.to_colored())?)?,
    };
    write(
        a.output.as_deref(),
        &io::serialize_graph(&GraphFile::from_colored(&artifact.output)),
    )?;
    let sidecar = a.provenance.or_else(|| {
        a.output.as_ref().map(|o| {
            let mut p = o.clone().into_os_string();
            p.push(".prov");
            PathBuf::from(p)
        })
    });
    if let Some(path) = sidecar {
        write(
            Some(&path),
            &io::serialize_provenance(&artifact.vertex_provenance),
        )?;
    }
    Ok(())
}

fn cmd_certify(a: CertifyArgs) -> CliResult<()> {
    let file = with_path(&a.input, io::parse_graph(&read(&a.input)?))?;
    let g = with_path(&a.input, file.to_simple())?;
    let cert = certify_equivalence(&g, a.k, OracleBudget::new(a.budget))?;
    print!("{cert}");
    Ok(())
}

fn cmd_render(a: RenderArgs) -> CliResult<()> {
    let set = with_path(&a.points, io::parse_points(&read(&a.points)?))?;
    let record = with_path(&a.result, ResultRecord::parse(&read(&a.result)?))?;
    write(a.output.as_deref(), &render_svg(&set, &record)?)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(if usage { 3 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Solve(a) => cmd_solve(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Check(a) => cmd_check(a),
        Command::Reduce(a) => cmd_reduce(a),
        Command::Certify(a) => cmd_certify(a),
        Command::Render(a) => cmd_render(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("colorspan: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
