//! Synthetic two-class datasets: class 0 is `G(n, p_a)`, class 1 is
//! `G(n, p_b)`, weights uniform in `[theta1, theta2]`.

use std::path::{Path, PathBuf};

use reachtop_core::random::{derive_seed, weighted_er};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::formats::{dense_csv, write_file};
use crate::manifest::{Manifest, SubjectEntry, SubjectId};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SynthConfig {
    pub subjects: usize,
    pub vertices: usize,
    pub p_a: f64,
    pub p_b: f64,
    pub theta1: f64,
    pub theta2: f64,
    pub seed: u64,
}

impl Default for SynthConfig {
    fn default() -> Self {
        SynthConfig {
            subjects: 28,
            vertices: 20,
            p_a: 0.05,
            p_b: 0.15,
            theta1: -0.4,
            theta2: 0.0,
            seed: 0,
        }
    }
}

/// Writes `matrices/subject_XXX.csv` and `manifest.json` into `out`. The
/// first `subjects / 2` subjects are class 0. Returns the manifest path.
pub fn write_dataset(cfg: &SynthConfig, out: &Path) -> Result<PathBuf, CliError> {
    if cfg.subjects == 0 {
        return Err(CliError::Usage("at least one subject is required".into()));
    }
    if cfg.p_a == cfg.p_b {
        return Err(CliError::Usage(format!(
            "class probabilities must differ (both are {})",
            cfg.p_a
        )));
    }
    let class_a = cfg.subjects / 2;
    let width = cfg.subjects.to_string().len().max(3);
    let mut entries = Vec::with_capacity(cfg.subjects);
    for i in 0..cfg.subjects {
        let (label, p) = if i < class_a { (0, cfg.p_a) } else { (1, cfg.p_b) };
        let seed = derive_seed(cfg.seed, label as u64, i as u64);
        let g = weighted_er(cfg.vertices, p, cfg.theta1, cfg.theta2, seed)?;
        let rel = PathBuf::from("matrices").join(format!("subject_{i:0width$}.csv"));
        write_file(&out.join(&rel), &dense_csv(&g))?;
        entries.push(SubjectEntry {
            id: SubjectId::Text(format!("subject_{i:0width$}")),
            matrix: rel,
            label,
            format: None,
        });
    }
    let manifest = Manifest { subjects: entries };
    let path = out.join("manifest.json");
    let json = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    write_file(&path, &(json + "\n"))?;
    Ok(path)
}
