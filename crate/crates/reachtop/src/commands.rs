//! Subcommand implementations. Each returns its textual output or the files
//! it wrote; the binary only parses flags and prints.

use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use reachtop_core::hochschild::happel_report;
use reachtop_core::pipeline::{compute_curves, theory_betti, theory_complex, FeatureConfig};
use reachtop_core::random::{linear_grid, mean_betti_experiment, ErExperimentConfig};
use reachtop_core::reach::{reachability_poset, scc};
use reachtop_core::{Digraph, FeatureKind, Prime, Theory, WeightedDigraph};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::export::write_features;
use crate::formats::{load_adjacency, AdjacencyFormat};
use crate::manifest::Manifest;

pub const PAPER_THETA1: [f64; 8] = [-0.4, -0.35, -0.3, -0.25, -0.2, -0.15, -0.1, -0.05];

pub fn parse_prime(p: u32) -> Result<Prime, CliError> {
    Prime::new(p).map_err(|e| CliError::Usage(e.to_string()))
}

/// `dflag`, `reach` or `both`.
pub fn parse_theories(s: &str) -> Result<Vec<Theory>, CliError> {
    match s {
        "both" => Ok(Theory::ALL.to_vec()),
        other => other
            .parse::<Theory>()
            .map(|t| vec![t])
            .map_err(|_| CliError::Usage(format!("unknown theory `{other}`"))),
    }
}

/// `betti`, `betti-integral` or `both`.
pub fn parse_kinds(s: &str) -> Result<Vec<FeatureKind>, CliError> {
    match s {
        "both" => Ok(FeatureKind::ALL.to_vec()),
        other => other
            .parse::<FeatureKind>()
            .map(|k| vec![k])
            .map_err(|_| CliError::Usage(format!("unknown feature kind `{other}`"))),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FeaturesConfig {
    pub manifest: PathBuf,
    pub out: PathBuf,
    pub theta1: Vec<f64>,
    pub theta2: f64,
    pub degrees: Vec<usize>,
    pub n: usize,
    pub field_char: u32,
    pub theory: String,
    pub kind: String,
    pub stride: usize,
}

impl FeaturesConfig {
    pub fn new(manifest: impl Into<PathBuf>, out: impl Into<PathBuf>) -> Self {
        FeaturesConfig {
            manifest: manifest.into(),
            out: out.into(),
            theta1: PAPER_THETA1.to_vec(),
            theta2: 0.0,
            degrees: vec![0, 1, 2],
            n: 10,
            field_char: 2,
            theory: "both".into(),
            kind: "both".into(),
            stride: 1,
        }
    }
}

/// One CSV (plus JSON metadata) per `(theta1, theory, kind)`; returns the
/// CSV paths in the order written.
pub fn run_features(cfg: &FeaturesConfig) -> Result<Vec<PathBuf>, CliError> {
    let prime = parse_prime(cfg.field_char)?;
    let theories = parse_theories(&cfg.theory)?;
    let kinds = parse_kinds(&cfg.kind)?;
    if cfg.theta1.is_empty() {
        return Err(CliError::Usage("at least one theta1 value is required".into()));
    }
    if let Some(&t) = cfg.theta1.iter().find(|&&t| t.is_nan() || t > cfg.theta2) {
        return Err(CliError::Usage(format!(
            "theta1 = {t} must not exceed theta2 = {}",
            cfg.theta2
        )));
    }
    if cfg.degrees.is_empty() {
        return Err(CliError::Usage("at least one degree is required".into()));
    }
    let data = Manifest::load(&cfg.manifest)?;
    let mut written = Vec::new();
    for &theta1 in &cfg.theta1 {
        let graphs = data
            .graphs
            .iter()
            .map(|g| g.threshold(theta1, cfg.theta2))
            .collect::<Result<Vec<WeightedDigraph>, _>>()?;
        for &theory in &theories {
            let mut fc = FeatureConfig::new(&cfg.degrees, cfg.n, prime, theory);
            fc.stride = cfg.stride;
            let curves = compute_curves(&graphs, &fc)?;
            for &kind in &kinds {
                let fm = curves.features(kind, &data.ids, &data.labels)?;
                written.push(write_features(&cfg.out, &fm, theta1, cfg.theta2)?);
            }
        }
    }
    Ok(written)
}

/// One theory's sweep over edge probabilities.
#[derive(Clone, Debug, PartialEq)]
pub struct Sweep {
    pub theory: Theory,
    pub p_min: f64,
    pub p_max: f64,
    pub steps: usize,
    pub realisations: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RandomConfig {
    pub vertices: usize,
    pub degrees: Vec<usize>,
    pub field_char: u32,
    pub seed: u64,
    pub sweeps: Vec<Sweep>,
}

/// CSV with columns `p,degree,mean,std,r,n,theory`.
pub fn run_random(cfg: &RandomConfig) -> Result<String, CliError> {
    let prime = parse_prime(cfg.field_char)?;
    if cfg.degrees.is_empty() {
        return Err(CliError::Usage("at least one degree is required".into()));
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["p", "degree", "mean", "std", "r", "n", "theory"])
        .expect("in-memory write");
    for sweep in &cfg.sweeps {
        if sweep.p_min.is_nan() || sweep.p_min > sweep.p_max {
            return Err(CliError::Usage(format!(
                "empty probability range [{}, {}]",
                sweep.p_min, sweep.p_max
            )));
        }
        let table = mean_betti_experiment(&ErExperimentConfig {
            vertices: cfg.vertices,
            p_grid: linear_grid(sweep.p_min, sweep.p_max, sweep.steps),
            realisations: sweep.realisations,
            degrees: cfg.degrees.clone(),
            theory: sweep.theory,
            prime,
            master_seed: cfg.seed,
        })?;
        for row in &table.rows {
            for (k, j) in table.degrees.iter().enumerate() {
                w.write_record([
                    row.p.to_string(),
                    j.to_string(),
                    row.means[k].to_string(),
                    row.stds[k].to_string(),
                    table.realisations.to_string(),
                    table.vertices.to_string(),
                    table.theory.to_string(),
                ])
                .expect("in-memory write");
            }
        }
    }
    Ok(String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8"))
}

fn big_json(x: &BigUint) -> Value {
    match u64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

fn snapshot(g: &WeightedDigraph, at: Option<f64>) -> Digraph {
    match at {
        Some(w) => g.subgraph_at(w),
        None => g.underlying(),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json serializes") + "\n"
}

/// First Hochschild Betti number of the path algebra by Happel's formula,
/// with the per-edge path counts.
pub fn run_happel(input: &Path, format: AdjacencyFormat) -> Result<String, CliError> {
    let g = load_adjacency(input, format)?.underlying();
    let report = happel_report(&g)?;
    let edges: Vec<Value> = report
        .edges
        .iter()
        .map(|e| json!({"source": e.source, "target": e.target, "paths": big_json(&e.paths)}))
        .collect();
    Ok(pretty(&json!({
        "vertices": g.num_vertices(),
        "edges": g.num_edges(),
        "betti0": report.betti0,
        "betti1": big_json(&report.betti1),
        "edge_paths": edges,
    })))
}

pub fn run_betti(
    input: &Path,
    format: AdjacencyFormat,
    theory: Theory,
    degrees: &[usize],
    field_char: u32,
    at: Option<f64>,
) -> Result<String, CliError> {
    let prime = parse_prime(field_char)?;
    let g = snapshot(&load_adjacency(input, format)?, at);
    let b = theory_betti(&g, degrees, prime, theory)?;
    let betti: serde_json::Map<String, Value> =
        b.iter().map(|(j, v)| (j.to_string(), json!(v))).collect();
    Ok(pretty(&json!({
        "theory": theory.name(),
        "field_char": field_char,
        "weight": at,
        "betti": betti,
    })))
}

pub fn run_reach(input: &Path, format: AdjacencyFormat, at: Option<f64>) -> Result<String, CliError> {
    let g = snapshot(&load_adjacency(input, format)?, at);
    let parts = scc(&g);
    let poset = reachability_poset(&g);
    Ok(pretty(&json!({
        "vertices": g.num_vertices(),
        "edges": g.num_edges(),
        "components": parts.num_components(),
        "component_of": (0..g.num_vertices()).map(|v| parts.component_of(v)).collect::<Vec<_>>(),
        "poset_elements": poset.num_elements(),
        "poset_relations": poset.num_pairs(),
    })))
}

pub fn run_complex(
    input: &Path,
    format: AdjacencyFormat,
    theory: Theory,
    max_dim: usize,
    at: Option<f64>,
) -> Result<String, CliError> {
    let g = snapshot(&load_adjacency(input, format)?, at);
    let c = theory_complex(&g, theory, max_dim);
    Ok(pretty(&json!({
        "theory": theory.name(),
        "max_dim": max_dim,
        "counts": c.counts(),
        "total": c.total_simplices(),
    })))
}
