//! Adjacency file formats.
//!
//! * Dense: `N` rows of `N` comma-separated cells, no header. Cell `(i, j)` is
//!   the weight of `i -> j`; `NaN` or an empty cell means no edge, the
//!   diagonal is ignored.
//! * Edge list: header `source,target,weight`, 0-based ids; the vertex count
//!   is one more than the largest id.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use reachtop_core::graph::{WeightedDigraph, WeightedEdge};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AdjacencyFormat {
    #[default]
    Dense,
    EdgeList,
}

impl FromStr for AdjacencyFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dense" | "dense-matrix" => Ok(AdjacencyFormat::Dense),
            "edge-list" => Ok(AdjacencyFormat::EdgeList),
            other => Err(format!("unknown format `{other}` (expected dense or edge-list)")),
        }
    }
}

impl fmt::Display for AdjacencyFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AdjacencyFormat::Dense => "dense",
            AdjacencyFormat::EdgeList => "edge-list",
        })
    }
}

pub fn load_adjacency(path: &Path, format: AdjacencyFormat) -> Result<WeightedDigraph, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let parsed = match format {
        AdjacencyFormat::Dense => parse_dense(&text),
        AdjacencyFormat::EdgeList => parse_edge_list(&text),
    };
    parsed.map_err(|msg| CliError::Data(format!("{}: {msg}", path.display())))
}

fn parse_cell(cell: &str, row: usize, col: usize) -> Result<Option<f64>, String> {
    let cell = cell.trim();
    if cell.is_empty() {
        return Ok(None);
    }
    let v: f64 = cell
        .parse()
        .map_err(|_| format!("row {}, column {}: cannot parse `{cell}`", row + 1, col + 1))?;
    Ok(if v.is_nan() { None } else { Some(v) })
}

pub fn parse_dense(text: &str) -> Result<WeightedDigraph, String> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows: Vec<Vec<Option<f64>>> = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| e.to_string())?;
        let row = record
            .iter()
            .enumerate()
            .map(|(j, cell)| parse_cell(cell, i, j))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    let n = rows.len();
    if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(format!(
            "matrix is not square: {n} rows but row {} has {} cells",
            i + 1,
            row.len()
        ));
    }
    let edges = rows.iter().enumerate().flat_map(|(i, row)| {
        row.iter().enumerate().filter_map(move |(j, w)| match w {
            Some(weight) if i != j => Some(WeightedEdge {
                source: i,
                target: j,
                weight: *weight,
            }),
            _ => None,
        })
    });
    WeightedDigraph::new(n, edges).map_err(|e| e.to_string())
}

#[derive(Debug, Deserialize, Serialize)]
struct EdgeRow {
    source: usize,
    target: usize,
    weight: f64,
}

pub fn parse_edge_list(text: &str) -> Result<WeightedDigraph, String> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let headers = reader.headers().map_err(|e| e.to_string())?.clone();
    if headers.iter().collect::<Vec<_>>() != ["source", "target", "weight"] {
        return Err(format!(
            "expected header `source,target,weight`, found `{}`",
            headers.iter().collect::<Vec<_>>().join(",")
        ));
    }
    let mut edges = Vec::new();
    let mut n = 0;
    for (i, row) in reader.deserialize::<EdgeRow>().enumerate() {
        let row = row.map_err(|e| format!("row {}: {e}", i + 1))?;
        if row.source == row.target {
            continue;
        }
        n = n.max(row.source + 1).max(row.target + 1);
        edges.push(WeightedEdge {
            source: row.source,
            target: row.target,
            weight: row.weight,
        });
    }
    WeightedDigraph::new(n, edges).map_err(|e| e.to_string())
}

/// Dense CSV with `NaN` for absent edges and on the diagonal.
pub fn dense_csv(g: &WeightedDigraph) -> String {
    let n = g.num_vertices();
    let mut out = String::new();
    for i in 0..n {
        let cells: Vec<String> = (0..n)
            .map(|j| match g.weight(i, j) {
                Some(w) => format!("{w}"),
                None => "NaN".to_string(),
            })
            .collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn edge_list_csv(g: &WeightedDigraph) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for e in g.edges() {
        w.serialize(EdgeRow {
            source: e.source,
            target: e.target,
            weight: e.weight,
        })
        .expect("in-memory write");
    }
    if g.num_edges() == 0 {
        w.write_record(["source", "target", "weight"]).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    let mut f = fs::File::create(path).map_err(|e| CliError::io(path, e))?;
    f.write_all(contents.as_bytes())
        .map_err(|e| CliError::io(path, e))
}
