//! Feature CSVs and their metadata sidecars.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use reachtop_core::pipeline::FeatureMatrix;
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::formats::write_file;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FeatureMetadata {
    pub theory: String,
    pub kind: String,
    pub degrees_used: Vec<usize>,
    pub dropped_degrees: Vec<usize>,
    /// Grid points keyed by degree.
    pub grids: BTreeMap<String, Vec<f64>>,
    pub theta1: f64,
    pub theta2: f64,
    pub n: usize,
    pub field_char: u32,
    pub subjects: usize,
    pub columns: Vec<String>,
}

impl FeatureMetadata {
    pub fn new(fm: &FeatureMatrix, theta1: f64, theta2: f64) -> Self {
        FeatureMetadata {
            theory: fm.theory.name().to_string(),
            kind: fm.kind.name().to_string(),
            degrees_used: fm.degrees_used.clone(),
            dropped_degrees: fm.dropped_degrees.clone(),
            grids: fm
                .degrees_used
                .iter()
                .zip(&fm.grids)
                .map(|(j, g)| (j.to_string(), g.points().to_vec()))
                .collect(),
            theta1,
            theta2,
            n: fm.steps,
            field_char: fm.prime.get(),
            subjects: fm.rows.len(),
            columns: fm.column_names.clone(),
        }
    }
}

pub fn feature_csv(fm: &FeatureMatrix) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let header = ["subject_id", "label"]
        .into_iter()
        .map(String::from)
        .chain(fm.column_names.iter().cloned());
    w.write_record(header).expect("in-memory write");
    for ((id, label), row) in fm.subject_ids.iter().zip(&fm.labels).zip(&fm.rows) {
        let record = [id.clone(), label.to_string()]
            .into_iter()
            .chain(row.iter().map(|v| v.to_string()));
        w.write_record(record).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

/// File stem for one `(theta1, theory, kind)` configuration.
pub fn feature_stem(fm: &FeatureMatrix, theta1: f64) -> String {
    format!("features_{}_{}_theta1_{theta1}", fm.theory, fm.kind)
}

/// Writes `<stem>.csv` and `<stem>.json` under `dir`; returns the CSV path.
pub fn write_features(
    dir: &Path,
    fm: &FeatureMatrix,
    theta1: f64,
    theta2: f64,
) -> Result<PathBuf, CliError> {
    let stem = feature_stem(fm, theta1);
    let csv_path = dir.join(format!("{stem}.csv"));
    write_file(&csv_path, &feature_csv(fm))?;
    let meta = FeatureMetadata::new(fm, theta1, theta2);
    let json = serde_json::to_string_pretty(&meta).expect("metadata serializes");
    write_file(&dir.join(format!("{stem}.json")), &(json + "\n"))?;
    Ok(csv_path)
}
