use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use reachtop::commands::{
    parse_theories, run_betti, run_complex, run_features, run_happel, run_random, run_reach,
    FeaturesConfig, RandomConfig, Sweep,
};
use reachtop::formats::write_file;
use reachtop::synth::{write_dataset, SynthConfig};
use reachtop::{AdjacencyFormat, CliError};
use reachtop_core::Theory;
use serde::Deserialize;

#[derive(Parser)]
#[command(name = "reachtop", version, about = "Reachability and directed flag homology of weighted digraphs")]
struct Cli {
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Betti curve / Betti integral feature CSVs for a manifest.
    Features(FeaturesArgs),
    /// Synthetic two-class dataset of weighted random digraphs.
    Synth(SynthArgs),
    /// Mean Betti numbers of random digraphs over a grid of edge probabilities.
    RandomExperiment(RandomArgs),
    /// First Hochschild Betti number of a path algebra (acyclic input).
    Happel(InputArgs),
    /// Betti numbers of one digraph.
    Betti(BettiArgs),
    /// Strong components and reachability poset summary.
    Reach(SnapshotArgs),
    /// Simplex counts per dimension.
    Complex(ComplexArgs),
}

#[derive(Args)]
struct InputArgs {
    input: PathBuf,
    #[arg(long, default_value = "edge-list")]
    format: AdjacencyFormat,
}

#[derive(Args)]
struct SnapshotArgs {
    input: PathBuf,
    #[arg(long, default_value = "dense")]
    format: AdjacencyFormat,
    /// Keep only edges of weight at most this value.
    #[arg(long, allow_hyphen_values = true)]
    at: Option<f64>,
}

#[derive(Args)]
struct BettiArgs {
    #[command(flatten)]
    snapshot: SnapshotArgs,
    #[arg(long, default_value = "dflag")]
    theory: Theory,
    #[arg(long, value_delimiter = ',', default_value = "0,1,2")]
    degrees: Vec<usize>,
    #[arg(long, default_value_t = 2)]
    field_char: u32,
}

#[derive(Args)]
struct ComplexArgs {
    #[command(flatten)]
    snapshot: SnapshotArgs,
    #[arg(long, default_value = "dflag")]
    theory: Theory,
    #[arg(long, default_value_t = 3)]
    max_dim: usize,
}

/// Unset flags fall back to `--config`, then to the defaults.
#[derive(Args)]
struct FeaturesArgs {
    #[arg(long)]
    manifest: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON file with any of the flag names (underscored) as keys.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Lower thresholds; default -0.4,-0.35,...,-0.05.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    theta1: Option<Vec<f64>>,
    /// Upper threshold; default 0.
    #[arg(long, allow_hyphen_values = true)]
    theta2: Option<f64>,
    /// Homology degrees; default 0,1,2.
    #[arg(long, value_delimiter = ',')]
    degrees: Option<Vec<usize>>,
    /// Filtration steps; default 10.
    #[arg(long)]
    n: Option<usize>,
    /// Coefficient field characteristic; default 2.
    #[arg(long)]
    field_char: Option<u32>,
    /// dflag, reach or both (default).
    #[arg(long)]
    theory: Option<String>,
    /// betti, betti-integral or both (default).
    #[arg(long)]
    kind: Option<String>,
    /// Bound pre-scan stride; 1 (default) is exact.
    #[arg(long)]
    stride: Option<usize>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct FeaturesFile {
    manifest: Option<PathBuf>,
    out: Option<PathBuf>,
    theta1: Option<OneOrMany>,
    theta2: Option<f64>,
    degrees: Option<Vec<usize>>,
    n: Option<usize>,
    field_char: Option<u32>,
    theory: Option<String>,
    kind: Option<String>,
    stride: Option<usize>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum OneOrMany {
    One(f64),
    Many(Vec<f64>),
}

#[derive(Args)]
struct SynthArgs {
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value_t = 28)]
    subjects: usize,
    #[arg(long, default_value_t = 20)]
    vertices: usize,
    #[arg(long, default_value_t = 0.05)]
    p_a: f64,
    #[arg(long, default_value_t = 0.15)]
    p_b: f64,
    #[arg(long, default_value_t = -0.4, allow_hyphen_values = true)]
    theta1: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    theta2: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct RandomArgs {
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    config: Option<PathBuf>,
    /// Vertices; default 30, or 100 with --paper-scale.
    #[arg(long)]
    n: Option<usize>,
    /// Realisations per probability; default 50.
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    p_min: Option<f64>,
    /// Default 0.3.
    #[arg(long)]
    p_max: Option<f64>,
    /// Grid intervals; default 60.
    #[arg(long)]
    steps: Option<usize>,
    /// Default 0,1,2.
    #[arg(long, value_delimiter = ',')]
    degrees: Option<Vec<usize>>,
    /// dflag, reach or both (default).
    #[arg(long)]
    theory: Option<String>,
    #[arg(long)]
    field_char: Option<u32>,
    #[arg(long)]
    seed: Option<u64>,
    /// n = 100; dflag over [0, 0.5] in 200 steps with r = 200, reach over
    /// [0, 0.1] in 100 steps with r = 300. Explicit flags still win.
    #[arg(long)]
    paper_scale: bool,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RandomFile {
    n: Option<usize>,
    r: Option<usize>,
    p_min: Option<f64>,
    p_max: Option<f64>,
    steps: Option<usize>,
    degrees: Option<Vec<usize>>,
    theory: Option<String>,
    field_char: Option<u32>,
    seed: Option<u64>,
    paper_scale: Option<bool>,
}

fn read_config<T: for<'de> Deserialize<'de> + Default>(path: Option<&Path>) -> Result<T, CliError> {
    let Some(path) = path else {
        return Ok(T::default());
    };
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("{}: invalid config: {e}", path.display())))
}

fn features(a: FeaturesArgs) -> Result<(), CliError> {
    let file: FeaturesFile = read_config(a.config.as_deref())?;
    let manifest = a
        .manifest
        .or(file.manifest)
        .ok_or_else(|| CliError::Usage("--manifest is required".into()))?;
    let out = a
        .out
        .or(file.out)
        .ok_or_else(|| CliError::Usage("--out is required".into()))?;
    let mut cfg = FeaturesConfig::new(manifest, out);
    if let Some(t) = a.theta1.or(file.theta1.map(|t| match t {
        OneOrMany::One(x) => vec![x],
        OneOrMany::Many(v) => v,
    })) {
        cfg.theta1 = t;
    }
    cfg.theta2 = a.theta2.or(file.theta2).unwrap_or(cfg.theta2);
    cfg.degrees = a.degrees.or(file.degrees).unwrap_or(cfg.degrees);
    cfg.n = a.n.or(file.n).unwrap_or(cfg.n);
    cfg.field_char = a.field_char.or(file.field_char).unwrap_or(cfg.field_char);
    cfg.theory = a.theory.or(file.theory).unwrap_or(cfg.theory);
    cfg.kind = a.kind.or(file.kind).unwrap_or(cfg.kind);
    cfg.stride = a.stride.or(file.stride).unwrap_or(cfg.stride);
    for path in run_features(&cfg)? {
        println!("{}", path.display());
    }
    Ok(())
}

fn random(a: RandomArgs) -> Result<(), CliError> {
    let file: RandomFile = read_config(a.config.as_deref())?;
    let paper = a.paper_scale || file.paper_scale.unwrap_or(false);
    let theories = parse_theories(a.theory.or(file.theory).as_deref().unwrap_or("both"))?;
    let (p_min, p_max, steps, r) = (
        a.p_min.or(file.p_min),
        a.p_max.or(file.p_max),
        a.steps.or(file.steps),
        a.r.or(file.r),
    );
    let sweeps = theories
        .into_iter()
        .map(|theory| {
            let (hi, default_steps, default_r) = match (paper, theory) {
                (false, _) => (0.3, 60, 50),
                (true, Theory::DirectedFlag) => (0.5, 200, 200),
                (true, Theory::Reachability) => (0.1, 100, 300),
            };
            Sweep {
                theory,
                p_min: p_min.unwrap_or(0.0),
                p_max: p_max.unwrap_or(hi),
                steps: steps.unwrap_or(default_steps),
                realisations: r.unwrap_or(default_r),
            }
        })
        .collect();
    let cfg = RandomConfig {
        vertices: a.n.or(file.n).unwrap_or(if paper { 100 } else { 30 }),
        degrees: a.degrees.or(file.degrees).unwrap_or(vec![0, 1, 2]),
        field_char: a.field_char.or(file.field_char).unwrap_or(2),
        seed: a.seed.or(file.seed).unwrap_or(0),
        sweeps,
    };
    let csv = run_random(&cfg)?;
    match a.out {
        Some(path) => write_file(&path, &csv),
        None => {
            print!("{csv}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(CliError::Usage("--jobs must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    match cli.command {
        Command::Features(a) => features(a),
        Command::Synth(a) => {
            let cfg = SynthConfig {
                subjects: a.subjects,
                vertices: a.vertices,
                p_a: a.p_a,
                p_b: a.p_b,
                theta1: a.theta1,
                theta2: a.theta2,
                seed: a.seed,
            };
            println!("{}", write_dataset(&cfg, &a.out)?.display());
            Ok(())
        }
        Command::RandomExperiment(a) => random(a),
        Command::Happel(a) => {
            print!("{}", run_happel(&a.input, a.format)?);
            Ok(())
        }
        Command::Betti(a) => {
            let s = a.snapshot;
            print!(
                "{}",
                run_betti(&s.input, s.format, a.theory, &a.degrees, a.field_char, s.at)?
            );
            Ok(())
        }
        Command::Reach(s) => {
            print!("{}", run_reach(&s.input, s.format, s.at)?);
            Ok(())
        }
        Command::Complex(a) => {
            let s = a.snapshot;
            print!("{}", run_complex(&s.input, s.format, a.theory, a.max_dim, s.at)?);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
