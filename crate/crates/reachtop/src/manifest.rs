//! Dataset manifests:
//! `{"subjects": [{"id": ..., "matrix": "path", "label": 0|1}, ...]}`.
//! Matrix paths are relative to the manifest's directory.

use std::fs;
use std::path::{Path, PathBuf};

use reachtop_core::WeightedDigraph;
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::formats::{load_adjacency, AdjacencyFormat};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SubjectId {
    Text(String),
    Number(i64),
}

impl std::fmt::Display for SubjectId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SubjectId::Text(s) => f.write_str(s),
            SubjectId::Number(n) => write!(f, "{n}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubjectEntry {
    pub id: SubjectId,
    pub matrix: PathBuf,
    pub label: u8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<AdjacencyFormat>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub subjects: Vec<SubjectEntry>,
}

/// A loaded dataset, subjects in manifest order.
#[derive(Clone, Debug)]
pub struct Dataset {
    pub ids: Vec<String>,
    pub labels: Vec<u8>,
    pub graphs: Vec<WeightedDigraph>,
}

impl Manifest {
    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::Data(format!("{}: invalid manifest: {e}", path.display())))
    }

    pub fn load(path: &Path) -> Result<Dataset, CliError> {
        let manifest = Self::read(path)?;
        if manifest.subjects.is_empty() {
            return Err(CliError::Data(format!(
                "{}: manifest lists no subjects",
                path.display()
            )));
        }
        let base = path.parent().unwrap_or(Path::new("."));
        let mut ds = Dataset {
            ids: Vec::new(),
            labels: Vec::new(),
            graphs: Vec::new(),
        };
        for s in &manifest.subjects {
            if s.label > 1 {
                return Err(CliError::Data(format!(
                    "subject {}: label {} is not 0 or 1",
                    s.id, s.label
                )));
            }
            let g = load_adjacency(&base.join(&s.matrix), s.format.unwrap_or_default())?;
            ds.ids.push(s.id.to_string());
            ds.labels.push(s.label);
            ds.graphs.push(g);
        }
        Ok(ds)
    }
}
