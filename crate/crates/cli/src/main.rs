//! `selsub`: command-line front end for the selective-subset solvers.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use selsub_core::blocks::decompose_blocks;
use selsub_core::geometry::{random_chords, random_udg};
use selsub_core::greedy::greedy_mss;
use selsub_core::ptas::{ptas_mss, Mode, PtasConfig};
use selsub_core::reductions::{reduce_circle, reduce_ds_general, reduce_ds_udg};
use selsub_core::solvers::{
    enumerate_oracle, exact_mss, SolveResult, DEFAULT_NODE_BUDGET,
};
use selsub_core::validator::{covers_boundary, is_selective_subset};
use selsub_core::{Geometry, Instance};

#[derive(Parser)]
#[command(name = "selsub", about = "Minimum selective subset toolkit", version)]
struct Cli {
    /// Worker threads (0 = all available cores).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance file.
    Solve(SolveArgs),
    /// Check whether a vertex set is a selective subset.
    Validate(ValidateArgs),
    /// Print the block decomposition of an instance.
    Blocks { input: PathBuf },
    /// Generate a random instance.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Transform a dominating-set input into a selective-subset instance.
    Reduce(ReduceArgs),
    /// Run a corpus description and emit a report table plus results file.
    Corpus(CorpusArgs),
}

#[derive(Args)]
struct SolveArgs {
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = MethodArg::Exact)]
    method: MethodArg,
    /// Approximation parameter for the ptas method.
    #[arg(long, default_value_t = 0.5)]
    epsilon: f64,
    #[arg(long, value_enum, default_value_t = ModeArg::Udg)]
    mode: ModeArg,
    /// Branch-and-bound node budget.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// Write the ptas expansion trace as JSON.
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Exact,
    Ptas,
    Greedy,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Udg,
    General,
}

#[derive(Args)]
struct ValidateArgs {
    input: PathBuf,
    /// Candidate vertex set, comma-separated (e.g. `--set 1,4,7`).
    #[arg(long)]
    set: String,
}

#[derive(Subcommand)]
enum GenCommand {
    /// Random unit disk instance: points in a square, disks of radius 1.
    Udg {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8.0)]
        side: f64,
        #[arg(long, default_value_t = 3)]
        colors: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Random circle-graph instance from a perfect pairing of positions.
    Chords {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(value_enum)]
    kind: ReduceKind,
    input: PathBuf,
    #[arg(short, long)]
    output: PathBuf,
    /// Copies per vertex for udg2mss.
    #[arg(long, default_value_t = 1)]
    m: usize,
    /// Additional apex vertices for ds2mss.
    #[arg(long, default_value_t = 0)]
    extra_apexes: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReduceKind {
    Ds2mss,
    Udg2mss,
    Circle2mss,
}

#[derive(Args)]
struct CorpusArgs {
    /// Corpus description (JSON).
    spec: PathBuf,
    /// Line-delimited results file.
    #[arg(short, long)]
    output: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Solve(args) => solve(args),
        Command::Validate(args) => validate(args),
        Command::Blocks { input } => blocks(&input),
        Command::Gen(gen) => generate(gen),
        Command::Reduce(args) => reduce(args),
        Command::Corpus(args) => corpus(args),
    }
}

fn load(path: &Path) -> anyhow::Result<Instance> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    Instance::from_json_str(&text)
        .with_context(|| format!("parsing {}", path.display()))
}

fn store(path: &Path, instance: &Instance) -> anyhow::Result<()> {
    fs::write(path, instance.to_json_string())
        .with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn solve(args: SolveArgs) -> anyhow::Result<ExitCode> {
    let instance = load(&args.input)?;
    let graph = &instance.graph;
    let result: SolveResult = match args.method {
        MethodArg::Exact => exact_mss(graph, args.budget)?,
        MethodArg::Greedy => greedy_mss(graph)?,
        MethodArg::Oracle => enumerate_oracle(graph)?,
        MethodArg::Ptas => {
            let mode = match args.mode {
                ModeArg::Udg => Mode::Udg,
                ModeArg::General => Mode::General,
            };
            let mut config = PtasConfig::new(args.epsilon, mode)?;
            config.budget = args.budget;
            let (result, trace) = ptas_mss(graph, &config)?;
            if let Some(path) = &args.trace {
                fs::write(path, serde_json::to_string_pretty(&trace)?)
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            result
        }
    };
    println!("size {}", result.size);
    println!(
        "set {}",
        result
            .chosen
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    println!(
        "nodes {} elapsed_ms {}",
        result.stats.nodes,
        result.stats.elapsed.as_millis()
    );
    Ok(ExitCode::SUCCESS)
}

fn validate(args: ValidateArgs) -> anyhow::Result<ExitCode> {
    let instance = load(&args.input)?;
    let set = parse_set(&args.set)?;
    let verdict = is_selective_subset(&instance.graph, &set)?;
    if verdict.valid {
        println!("valid");
        Ok(ExitCode::SUCCESS)
    } else {
        let witness = verdict.witness.expect("invalid verdict carries a witness");
        println!(
            "invalid: vertex {} (color {}) has no same-colored nearest neighbor",
            witness.vertex,
            instance.graph.color(witness.vertex)
        );
        Ok(ExitCode::FAILURE)
    }
}

fn parse_set(text: &str) -> anyhow::Result<Vec<usize>> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .with_context(|| format!("bad vertex index {s:?}"))
        })
        .collect()
}

fn blocks(input: &Path) -> anyhow::Result<ExitCode> {
    let instance = load(input)?;
    let blocks = decompose_blocks(&instance.graph);
    for block in &blocks {
        println!(
            "block {} color {} vertices {} b1 {} b2 {}{}",
            block.id,
            block.color,
            block.vertices.len(),
            block.b1.len(),
            block.b2.len(),
            if block.is_monochromatic_component() {
                " (monochromatic component)"
            } else {
                ""
            }
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn generate(gen: GenCommand) -> anyhow::Result<ExitCode> {
    match gen {
        GenCommand::Udg {
            n,
            side,
            colors,
            seed,
            output,
        } => {
            let instance = random_udg(n, side, colors, seed)?;
            store(&output, &instance)?;
        }
        GenCommand::Chords { n, seed, output } => {
            let instance = random_chords(n, seed)?;
            store(&output, &instance)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn reduce(args: ReduceArgs) -> anyhow::Result<ExitCode> {
    let instance = load(&args.input)?;
    let out = match args.kind {
        ReduceKind::Ds2mss => reduce_ds_general(&instance.graph, args.extra_apexes)?,
        ReduceKind::Udg2mss => reduce_ds_udg(&instance, args.m)?,
        ReduceKind::Circle2mss => reduce_circle(&instance)?,
    };
    store(&args.output, &out)?;
    Ok(ExitCode::SUCCESS)
}

/// Corpus description: seeded generator entries plus one epsilon for the
/// approximate solver.
#[derive(Deserialize)]
struct CorpusSpec {
    #[serde(default = "default_epsilon")]
    epsilon: f64,
    #[serde(default = "default_budget")]
    budget: u64,
    instances: Vec<CorpusEntry>,
}

fn default_epsilon() -> f64 {
    0.5
}

fn default_budget() -> u64 {
    DEFAULT_NODE_BUDGET
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum CorpusEntry {
    Udg {
        n: usize,
        #[serde(default = "default_side")]
        side: f64,
        #[serde(default = "default_colors")]
        colors: usize,
        seed: u64,
    },
    Chords {
        n: usize,
        seed: u64,
    },
    /// A stored instance file.
    File { path: PathBuf },
}

fn default_side() -> f64 {
    8.0
}

fn default_colors() -> usize {
    3
}

#[derive(Serialize)]
struct CorpusRow {
    name: String,
    n: usize,
    blocks: usize,
    exact: usize,
    ptas: usize,
    greedy: usize,
    ratio: String,
    r_bar_max: usize,
    #[serde(skip)]
    elapsed_ms: u128,
    #[serde(skip)]
    failures: Vec<String>,
}

fn corpus(args: CorpusArgs) -> anyhow::Result<ExitCode> {
    let text = fs::read_to_string(&args.spec)
        .with_context(|| format!("reading {}", args.spec.display()))?;
    let spec: CorpusSpec = serde_json::from_str(&text)
        .with_context(|| format!("parsing {}", args.spec.display()))?;

    let instances: Vec<Instance> = spec
        .instances
        .iter()
        .map(|entry| match entry {
            CorpusEntry::Udg {
                n,
                side,
                colors,
                seed,
            } => Ok(random_udg(*n, *side, *colors, *seed)?),
            CorpusEntry::Chords { n, seed } => Ok(random_chords(*n, *seed)?),
            CorpusEntry::File { path } => load(path),
        })
        .collect::<anyhow::Result<_>>()?;

    let mut rows: Vec<CorpusRow> = instances
        .par_iter()
        .map(|instance| corpus_row(instance, spec.epsilon, spec.budget))
        .collect::<anyhow::Result<_>>()?;
    rows.sort_by(|a, b| a.name.cmp(&b.name));

    println!(
        "{:<24} {:>4} {:>6} {:>5} {:>5} {:>6} {:>7} {:>5} {:>10}",
        "instance", "n", "blocks", "exact", "ptas", "greedy", "ratio", "rbar", "elapsed_ms"
    );
    let mut failed = false;
    let mut lines = String::new();
    for row in &rows {
        println!(
            "{:<24} {:>4} {:>6} {:>5} {:>5} {:>6} {:>7} {:>5} {:>10}",
            row.name,
            row.n,
            row.blocks,
            row.exact,
            row.ptas,
            row.greedy,
            row.ratio,
            row.r_bar_max,
            row.elapsed_ms
        );
        for failure in &row.failures {
            failed = true;
            eprintln!("FAIL {}: {}", row.name, failure);
        }
        lines.push_str(&serde_json::to_string(row)?);
        lines.push('\n');
    }
    fs::write(&args.output, lines)
        .with_context(|| format!("writing {}", args.output.display()))?;
    Ok(if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    })
}

/// Solves one corpus instance with all three methods and cross-checks the
/// solver invariants; failures are recorded, not panicked, so the whole
/// report still prints.
fn corpus_row(instance: &Instance, epsilon: f64, budget: u64) -> anyhow::Result<CorpusRow> {
    let start = std::time::Instant::now();
    let graph = &instance.graph;
    let blocks = decompose_blocks(graph);
    let exact = exact_mss(graph, budget)?;
    let mode = match instance.geometry {
        Some(Geometry::Points(_)) => Mode::Udg,
        _ => Mode::General,
    };
    let mut config = PtasConfig::new(epsilon, mode)?;
    config.budget = budget;
    let (ptas, trace) = ptas_mss(graph, &config)?;
    let greedy = greedy_mss(graph)?;

    let mut failures = Vec::new();
    for (label, result) in [("exact", &exact), ("ptas", &ptas), ("greedy", &greedy)] {
        if !is_selective_subset(graph, &result.chosen)?.valid {
            failures.push(format!("{label} output is not a selective subset"));
        }
        if !covers_boundary(graph, &blocks, &result.chosen) {
            failures.push(format!("{label} output misses a boundary vertex"));
        }
    }
    if (ptas.size as f64) > (1.0 + epsilon) * exact.size as f64 + 1e-9 {
        failures.push(format!(
            "approximation ratio exceeded: {} vs optimum {}",
            ptas.size, exact.size
        ));
    }
    if exact.size > ptas.size || exact.size > greedy.size {
        failures.push("a heuristic beat the exact solver".into());
    }

    let ratio = if exact.size == 0 {
        "1.0000".to_string()
    } else {
        format!("{:.4}", ptas.size as f64 / exact.size as f64)
    };
    Ok(CorpusRow {
        name: instance.name.clone(),
        n: graph.n(),
        blocks: blocks.len(),
        exact: exact.size,
        ptas: ptas.size,
        greedy: greedy.size,
        ratio,
        r_bar_max: trace.records.iter().map(|r| r.r_bar).max().unwrap_or(0),
        elapsed_ms: start.elapsed().as_millis(),
        failures,
    })
}
