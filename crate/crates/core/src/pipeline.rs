//! Filtration bounds, filtration grids, Betti curves, Betti integrals and
//! per-subject feature rows for the two homology theories.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::complex::{directed_flag_complex, order_complex, OrderedComplex};
use crate::field::Prime;
use crate::graph::{Digraph, WeightedDigraph};
use crate::homology::{betti, BettiVector, HomologyError};
use crate::par;
use crate::reach::reachability_poset;

/// Which homology a Betti number refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theory {
    /// Homology of the directed flag complex.
    DirectedFlag,
    /// Homology of the order complex of the reachability poset.
    Reachability,
}

impl Theory {
    pub const ALL: [Theory; 2] = [Theory::DirectedFlag, Theory::Reachability];

    pub fn name(self) -> &'static str {
        match self {
            Theory::DirectedFlag => "dflag",
            Theory::Reachability => "reach",
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theory {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dflag" => Ok(Theory::DirectedFlag),
            "reach" => Ok(Theory::Reachability),
            other => Err(format!("unknown theory `{other}` (expected dflag or reach)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FeatureKind {
    /// Concatenated Betti curves, `n + 1` values per degree.
    Betti,
    /// Running trapezoid areas under the curves, `n` values per degree.
    BettiIntegral,
}

impl FeatureKind {
    pub const ALL: [FeatureKind; 2] = [FeatureKind::Betti, FeatureKind::BettiIntegral];

    pub fn name(self) -> &'static str {
        match self {
            FeatureKind::Betti => "betti",
            FeatureKind::BettiIntegral => "betti-integral",
        }
    }

    fn column_prefix(self) -> char {
        match self {
            FeatureKind::Betti => 'b',
            FeatureKind::BettiIntegral => 'g',
        }
    }
}

impl fmt::Display for FeatureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FeatureKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "betti" => Ok(FeatureKind::Betti),
            "betti-integral" => Ok(FeatureKind::BettiIntegral),
            other => Err(format!(
                "unknown feature kind `{other}` (expected betti or betti-integral)"
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum PipelineError {
    EmptyCollection,
    LabelMismatch { graphs: usize, labels: usize },
    InvalidLabel { index: usize, label: u8 },
    TrivialBounds { degree: usize },
    ZeroSteps,
    ZeroStride,
    TooFewPoints { points: usize },
    Homology(HomologyError),
}

impl fmt::Display for PipelineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PipelineError::EmptyCollection => f.write_str("no graphs given"),
            PipelineError::LabelMismatch { graphs, labels } => {
                write!(f, "{graphs} graphs but {labels} labels/ids")
            }
            PipelineError::InvalidLabel { index, label } => {
                write!(f, "subject {index} has label {label}; labels must be 0 or 1")
            }
            PipelineError::TrivialBounds { degree } => {
                write!(f, "degree {degree} has no nontrivial homology in the collection")
            }
            PipelineError::ZeroSteps => f.write_str("the number of filtration steps must be positive"),
            PipelineError::ZeroStride => f.write_str("the scan stride must be positive"),
            PipelineError::TooFewPoints { points } => {
                write!(f, "a Betti integral needs at least 2 curve points, got {points}")
            }
            PipelineError::Homology(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for PipelineError {}

impl From<HomologyError> for PipelineError {
    fn from(e: HomologyError) -> Self {
        PipelineError::Homology(e)
    }
}

/// The complex whose homology `theory` computes, enumerated to `max_dim`.
pub fn theory_complex(g: &Digraph, theory: Theory, max_dim: usize) -> OrderedComplex {
    match theory {
        Theory::DirectedFlag => directed_flag_complex(g, max_dim),
        Theory::Reachability => order_complex(&reachability_poset(g), max_dim),
    }
}

/// Betti numbers of `g` in the requested degrees for the given theory.
pub fn theory_betti(
    g: &Digraph,
    degrees: &[usize],
    prime: Prime,
    theory: Theory,
) -> Result<BettiVector, HomologyError> {
    let Some(&top) = degrees.iter().max() else {
        return Ok(BettiVector::new());
    };
    betti(&theory_complex(g, theory, top + 1), degrees, prime)
}

fn beta_at(
    g: &WeightedDigraph,
    w: f64,
    degree: usize,
    prime: Prime,
    theory: Theory,
) -> Result<usize, HomologyError> {
    Ok(theory_betti(&g.subgraph_at(w), &[degree], prime, theory)?.beta(degree))
}

/// Smallest and largest filtration value with nontrivial homology in a
/// given degree, over a collection of graphs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FiltrationBounds {
    pub degree: usize,
    /// `(k, K)`; `None` when no graph ever has nontrivial homology.
    pub range: Option<(f64, f64)>,
}

impl FiltrationBounds {
    pub fn nontrivial(&self) -> bool {
        self.range.is_some()
    }
}

fn merge_range(a: Option<(f64, f64)>, b: Option<(f64, f64)>) -> Option<(f64, f64)> {
    match (a, b) {
        (Some((lo1, hi1)), Some((lo2, hi2))) => Some((lo1.min(lo2), hi1.max(hi2))),
        (x, None) | (None, x) => x,
    }
}

/// Exact bounds: every distinct weight of every graph is examined. Degree 0
/// uses the full weight range of the collection.
pub fn filtration_bounds(
    graphs: &[WeightedDigraph],
    degree: usize,
    prime: Prime,
    theory: Theory,
) -> Result<FiltrationBounds, PipelineError> {
    filtration_bounds_strided(graphs, degree, prime, theory, 1)
}

/// Like [`filtration_bounds`], but only every `stride`-th weight (and the
/// last) is examined first; the gaps next to the outermost hits are then
/// scanned exactly. With `stride == 1` this is the exact scan.
pub fn filtration_bounds_strided(
    graphs: &[WeightedDigraph],
    degree: usize,
    prime: Prime,
    theory: Theory,
    stride: usize,
) -> Result<FiltrationBounds, PipelineError> {
    if graphs.is_empty() {
        return Err(PipelineError::EmptyCollection);
    }
    if stride == 0 {
        return Err(PipelineError::ZeroStride);
    }
    if degree == 0 {
        let range = graphs
            .iter()
            .map(|g| {
                let w = g.distinct_weights();
                Some((*w.first()?, *w.last()?))
            })
            .fold(None, merge_range);
        return Ok(FiltrationBounds { degree, range });
    }

    let per_graph: Vec<Result<Option<(f64, f64)>, HomologyError>> =
        par::map_range(graphs.len(), |i| {
            graph_bounds(&graphs[i], degree, prime, theory, stride)
        });
    let mut range = None;
    for r in per_graph {
        range = merge_range(range, r?);
    }
    Ok(FiltrationBounds { degree, range })
}

fn graph_bounds(
    g: &WeightedDigraph,
    degree: usize,
    prime: Prime,
    theory: Theory,
    stride: usize,
) -> Result<Option<(f64, f64)>, HomologyError> {
    let weights = g.distinct_weights();
    if weights.is_empty() {
        return Ok(None);
    }
    let last = weights.len() - 1;
    let hit = |i: usize| -> Result<bool, HomologyError> {
        Ok(beta_at(g, weights[i], degree, prime, theory)? != 0)
    };
    let mut samples: Vec<usize> = (0..=last).step_by(stride).collect();
    if samples.last() != Some(&last) {
        samples.push(last);
    }
    let mut first_hit = None;
    let mut last_hit = None;
    for (k, &i) in samples.iter().enumerate() {
        if hit(i)? {
            first_hit.get_or_insert(k);
            last_hit = Some(k);
        }
    }
    let (Some(fk), Some(lk)) = (first_hit, last_hit) else {
        return Ok(None);
    };
    let mut lo = samples[fk];
    if fk > 0 {
        if let Some(i) = (samples[fk - 1] + 1..samples[fk])
            .map(|i| hit(i).map(|h| (i, h)))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .find(|&(_, h)| h)
        {
            lo = i.0;
        }
    }
    let mut hi = samples[lk];
    if lk + 1 < samples.len() {
        if let Some(i) = (samples[lk] + 1..samples[lk + 1])
            .rev()
            .map(|i| hit(i).map(|h| (i, h)))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .find(|&(_, h)| h)
        {
            hi = i.0;
        }
    }
    Ok(Some((weights[lo], weights[hi])))
}

/// `n + 1` equally spaced filtration values from `k` to `K` inclusive.
#[derive(Clone, Debug, PartialEq)]
pub struct FiltrationGrid {
    points: Vec<f64>,
}

impl FiltrationGrid {
    /// `x_s = k + s (K - k) / n`, with the last point pinned to `K`.
    pub fn new(lower: f64, upper: f64, steps: usize) -> Result<Self, PipelineError> {
        if steps == 0 {
            return Err(PipelineError::ZeroSteps);
        }
        let mut points: Vec<f64> = (0..=steps)
            .map(|s| lower + (s as f64) * (upper - lower) / steps as f64)
            .collect();
        points[steps] = upper;
        Ok(FiltrationGrid { points })
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    /// Number of subintervals `n`.
    pub fn steps(&self) -> usize {
        self.points.len() - 1
    }
}

pub fn filtration_grid(
    bounds: &FiltrationBounds,
    steps: usize,
) -> Result<FiltrationGrid, PipelineError> {
    let (lo, hi) = bounds.range.ok_or(PipelineError::TrivialBounds {
        degree: bounds.degree,
    })?;
    FiltrationGrid::new(lo, hi, steps)
}

#[derive(Clone, Debug, PartialEq)]
pub struct BettiCurve {
    pub degree: usize,
    pub grid: FiltrationGrid,
    pub values: Vec<usize>,
}

/// `β_j` of the snapshot `G[x_s]` at every grid point.
pub fn betti_curve(
    g: &WeightedDigraph,
    degree: usize,
    grid: &FiltrationGrid,
    prime: Prime,
    theory: Theory,
) -> Result<BettiCurve, HomologyError> {
    let pts = grid.points();
    let values = par::map_range(pts.len(), |s| beta_at(g, pts[s], degree, prime, theory))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BettiCurve {
        degree,
        grid: grid.clone(),
        values,
    })
}

/// Running trapezoid areas: element `i` (1-based) is the area under the
/// curve between `x_0` and `x_i`.
pub fn betti_integral(curve: &BettiCurve) -> Result<Vec<f64>, PipelineError> {
    let x = curve.grid.points();
    let y = &curve.values;
    if y.len() < 2 || x.len() != y.len() {
        return Err(PipelineError::TooFewPoints { points: y.len() });
    }
    let mut acc = 0.0;
    Ok((0..y.len() - 1)
        .map(|k| {
            acc += (y[k + 1] + y[k]) as f64 / 2.0 * (x[k + 1] - x[k]);
            acc
        })
        .collect())
}

/// Parameters shared by every subject of a feature computation.
#[derive(Clone, Debug, PartialEq)]
pub struct FeatureConfig {
    pub degrees: Vec<usize>,
    pub steps: usize,
    pub prime: Prime,
    pub theory: Theory,
    /// Stride of the bound scan; 1 is exact.
    pub stride: usize,
}

impl FeatureConfig {
    pub fn new(degrees: &[usize], steps: usize, prime: Prime, theory: Theory) -> Self {
        FeatureConfig {
            degrees: degrees.to_vec(),
            steps,
            prime,
            theory,
            stride: 1,
        }
    }
}

/// Betti curves of a collection on per-degree grids. Degrees whose bounds
/// are trivial are listed in `dropped_degrees` and carry no curves.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveSet {
    pub theory: Theory,
    pub prime: Prime,
    pub steps: usize,
    pub degrees_used: Vec<usize>,
    pub dropped_degrees: Vec<usize>,
    pub grids: Vec<FiltrationGrid>,
    /// `curves[subject][k]` belongs to `degrees_used[k]`.
    pub curves: Vec<Vec<BettiCurve>>,
}

pub fn compute_curves(
    graphs: &[WeightedDigraph],
    cfg: &FeatureConfig,
) -> Result<CurveSet, PipelineError> {
    if graphs.is_empty() {
        return Err(PipelineError::EmptyCollection);
    }
    if cfg.steps == 0 {
        return Err(PipelineError::ZeroSteps);
    }
    let mut degrees = cfg.degrees.clone();
    degrees.sort_unstable();
    degrees.dedup();

    let mut degrees_used = Vec::new();
    let mut dropped_degrees = Vec::new();
    let mut grids = Vec::new();
    for &j in &degrees {
        let bounds = filtration_bounds_strided(graphs, j, cfg.prime, cfg.theory, cfg.stride)?;
        if bounds.nontrivial() {
            grids.push(filtration_grid(&bounds, cfg.steps)?);
            degrees_used.push(j);
        } else {
            dropped_degrees.push(j);
        }
    }

    let curves = par::map_range(graphs.len(), |i| {
        degrees_used
            .iter()
            .zip(&grids)
            .map(|(&j, grid)| betti_curve(&graphs[i], j, grid, cfg.prime, cfg.theory))
            .collect::<Result<Vec<_>, _>>()
    })
    .into_iter()
    .collect::<Result<Vec<_>, _>>()?;

    Ok(CurveSet {
        theory: cfg.theory,
        prime: cfg.prime,
        steps: cfg.steps,
        degrees_used,
        dropped_degrees,
        grids,
        curves,
    })
}

/// Per-subject feature rows with labels.
#[derive(Clone, Debug, PartialEq)]
pub struct FeatureMatrix {
    pub theory: Theory,
    pub kind: FeatureKind,
    pub prime: Prime,
    pub steps: usize,
    pub degrees_used: Vec<usize>,
    pub dropped_degrees: Vec<usize>,
    pub grids: Vec<FiltrationGrid>,
    pub subject_ids: Vec<String>,
    pub labels: Vec<u8>,
    pub column_names: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl CurveSet {
    pub fn features(
        &self,
        kind: FeatureKind,
        subject_ids: &[String],
        labels: &[u8],
    ) -> Result<FeatureMatrix, PipelineError> {
        check_labels(self.curves.len(), subject_ids, labels)?;
        let (first, last) = match kind {
            FeatureKind::Betti => (0, self.steps),
            FeatureKind::BettiIntegral => (1, self.steps),
        };
        let column_names = self
            .degrees_used
            .iter()
            .flat_map(|j| {
                (first..=last).map(move |s| format!("{}{j}_s{s}", kind.column_prefix()))
            })
            .collect();
        let mut rows = Vec::with_capacity(self.curves.len());
        for subject in &self.curves {
            let mut row = Vec::new();
            for curve in subject {
                match kind {
                    FeatureKind::Betti => row.extend(curve.values.iter().map(|&v| v as f64)),
                    FeatureKind::BettiIntegral => row.extend(betti_integral(curve)?),
                }
            }
            rows.push(row);
        }
        Ok(FeatureMatrix {
            theory: self.theory,
            kind,
            prime: self.prime,
            steps: self.steps,
            degrees_used: self.degrees_used.clone(),
            dropped_degrees: self.dropped_degrees.clone(),
            grids: self.grids.clone(),
            subject_ids: subject_ids.to_vec(),
            labels: labels.to_vec(),
            column_names,
            rows,
        })
    }
}

fn check_labels(n: usize, ids: &[String], labels: &[u8]) -> Result<(), PipelineError> {
    if labels.len() != n || ids.len() != n {
        return Err(PipelineError::LabelMismatch {
            graphs: n,
            labels: labels.len().min(ids.len()),
        });
    }
    if let Some((index, &label)) = labels.iter().enumerate().find(|(_, &l)| l > 1) {
        return Err(PipelineError::InvalidLabel { index, label });
    }
    Ok(())
}

/// Bounds, grids, curves and feature rows in one call.
pub fn assemble_features(
    graphs: &[WeightedDigraph],
    subject_ids: &[String],
    labels: &[u8],
    cfg: &FeatureConfig,
    kind: FeatureKind,
) -> Result<FeatureMatrix, PipelineError> {
    if graphs.is_empty() {
        return Err(PipelineError::EmptyCollection);
    }
    check_labels(graphs.len(), subject_ids, labels)?;
    compute_curves(graphs, cfg)?.features(kind, subject_ids, labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::WeightedEdge;
    use alloc::vec;

    fn we(source: usize, target: usize, weight: f64) -> WeightedEdge {
        WeightedEdge {
            source,
            target,
            weight,
        }
    }

    fn weighted_cycle() -> WeightedDigraph {
        WeightedDigraph::new(3, [we(0, 1, 0.1), we(1, 2, 0.2), we(2, 0, 0.3)]).unwrap()
    }

    #[test]
    fn theories_differ_on_a_cycle() {
        let g = weighted_cycle().underlying();
        let d = theory_betti(&g, &[0, 1], Prime::TWO, Theory::DirectedFlag).unwrap();
        let r = theory_betti(&g, &[0, 1], Prime::TWO, Theory::Reachability).unwrap();
        assert_eq!((d.beta(0), d.beta(1)), (1, 1));
        assert_eq!((r.beta(0), r.beta(1)), (1, 0));
    }

    #[test]
    fn parse_names() {
        assert_eq!("dflag".parse::<Theory>(), Ok(Theory::DirectedFlag));
        assert_eq!("reach".parse::<Theory>(), Ok(Theory::Reachability));
        assert!("both".parse::<Theory>().is_err());
        assert_eq!("betti-integral".parse::<FeatureKind>(), Ok(FeatureKind::BettiIntegral));
    }

    #[test]
    fn bounds_examples() {
        let g = weighted_cycle();
        let b1 = filtration_bounds(core::slice::from_ref(&g), 1, Prime::TWO, Theory::DirectedFlag).unwrap();
        assert_eq!(b1.range, Some((0.3, 0.3)));
        let b0 = filtration_bounds(core::slice::from_ref(&g), 0, Prime::TWO, Theory::DirectedFlag).unwrap();
        assert_eq!(b0.range, Some((0.1, 0.3)));
        let b2 = filtration_bounds(core::slice::from_ref(&g), 2, Prime::TWO, Theory::DirectedFlag).unwrap();
        assert!(!b2.nontrivial());
        let r1 = filtration_bounds(&[g], 1, Prime::TWO, Theory::Reachability).unwrap();
        assert!(!r1.nontrivial());
        assert_eq!(
            filtration_bounds(&[], 1, Prime::TWO, Theory::DirectedFlag),
            Err(PipelineError::EmptyCollection)
        );
    }

    #[test]
    fn bounds_pick_the_middle_weight() {
        // β1(reach) of the crown 0->2, 0->3, 1->2, 1->3 is 1; the edge 2->0
        // merges 0 and 2 into one component and kills it.
        let g = WeightedDigraph::new(
            4,
            [we(0, 2, 1.0), we(0, 3, 2.0), we(1, 2, 3.0), we(1, 3, 4.0), we(2, 0, 5.0)],
        )
        .unwrap();
        let curve: Vec<usize> = [1.0, 2.0, 3.0, 4.0, 5.0]
            .iter()
            .map(|&w| beta_at(&g, w, 1, Prime::TWO, Theory::Reachability).unwrap())
            .collect();
        assert_eq!(curve, vec![0, 0, 0, 1, 0]);
        let b = filtration_bounds(core::slice::from_ref(&g), 1, Prime::TWO, Theory::Reachability).unwrap();
        assert_eq!(b.range, Some((4.0, 4.0)));
        // samples at indices 0, 3, 4 hit index 3
        let s = filtration_bounds_strided(core::slice::from_ref(&g), 1, Prime::TWO, Theory::Reachability, 3)
            .unwrap();
        assert_eq!(s.range, Some((4.0, 4.0)));
        // samples at indices 0, 2, 4 straddle the only hit: the coarse scan misses it
        let s = filtration_bounds_strided(&[g], 1, Prime::TWO, Theory::Reachability, 2).unwrap();
        assert_eq!(s.range, None);
    }

    #[test]
    fn strided_scan_refines_edges_of_a_run() {
        // a 3-cycle closes at weight 3 and stays open through weight 6
        let g = WeightedDigraph::new(
            6,
            [we(0, 1, 1.0), we(1, 2, 2.0), we(2, 0, 3.0), we(3, 4, 4.0), we(4, 5, 5.0), we(3, 5, 6.0)],
        )
        .unwrap();
        for stride in 1..7 {
            let s = filtration_bounds_strided(core::slice::from_ref(&g), 1, Prime::TWO, Theory::DirectedFlag, stride)
                .unwrap();
            assert_eq!(s.range, Some((3.0, 6.0)), "stride {stride}");
        }
        assert_eq!(
            filtration_bounds_strided(&[g], 1, Prime::TWO, Theory::DirectedFlag, 0),
            Err(PipelineError::ZeroStride)
        );
    }

    #[test]
    fn grid_examples() {
        let g = FiltrationGrid::new(0.0, 1.0, 10).unwrap();
        let expect: Vec<f64> = (0..=10).map(|s| s as f64 / 10.0).collect();
        assert_eq!(g.points(), expect.as_slice());
        let flat = FiltrationGrid::new(0.5, 0.5, 4).unwrap();
        assert_eq!(flat.points(), &[0.5; 5]);
        assert_eq!(FiltrationGrid::new(0.0, 1.0, 0), Err(PipelineError::ZeroSteps));
        let trivial = FiltrationBounds {
            degree: 2,
            range: None,
        };
        assert_eq!(
            filtration_grid(&trivial, 10),
            Err(PipelineError::TrivialBounds { degree: 2 })
        );
        let paper = filtration_grid(
            &FiltrationBounds {
                degree: 1,
                range: Some((-0.4, 0.0)),
            },
            10,
        )
        .unwrap();
        assert_eq!(paper.points().len(), 11);
        assert_eq!(paper.points()[10], 0.0);
    }

    #[test]
    fn curve_of_weighted_cycle() {
        let grid = FiltrationGrid {
            points: vec![0.05, 0.15, 0.25, 0.35],
        };
        let c = betti_curve(&weighted_cycle(), 1, &grid, Prime::TWO, Theory::DirectedFlag).unwrap();
        assert_eq!(c.values, vec![0, 0, 0, 1]);
        let c0 = betti_curve(&weighted_cycle(), 0, &grid, Prime::TWO, Theory::DirectedFlag).unwrap();
        assert_eq!(c0.values, vec![3, 2, 1, 1]);
    }

    #[test]
    fn integral_examples() {
        let curve = |values: Vec<usize>, h: f64| BettiCurve {
            degree: 0,
            grid: FiltrationGrid::new(0.0, h * (values.len() - 1) as f64, values.len() - 1).unwrap(),
            values,
        };
        assert_eq!(betti_integral(&curve(vec![0, 2], 0.1)).unwrap(), vec![0.1]);
        assert_eq!(betti_integral(&curve(vec![1, 3, 1], 0.5)).unwrap(), vec![1.0, 2.0]);
        let single = BettiCurve {
            degree: 0,
            grid: FiltrationGrid { points: vec![0.0] },
            values: vec![1],
        };
        assert_eq!(
            betti_integral(&single),
            Err(PipelineError::TooFewPoints { points: 1 })
        );
    }

    #[test]
    fn feature_shapes() {
        let g = WeightedDigraph::new(2, [we(0, 1, 0.5)]).unwrap();
        let cfg = FeatureConfig::new(&[0], 1, Prime::TWO, Theory::DirectedFlag);
        let fm = assemble_features(&[g], &["s".into()], &[1], &cfg, FeatureKind::Betti).unwrap();
        assert_eq!(fm.rows, vec![vec![1.0, 1.0]]);
        assert_eq!(fm.column_names, vec!["b0_s0", "b0_s1"]);
    }

    #[test]
    fn feature_errors() {
        let g = weighted_cycle();
        let cfg = FeatureConfig::new(&[0, 1], 10, Prime::TWO, Theory::DirectedFlag);
        assert_eq!(
            assemble_features(&[], &[], &[], &cfg, FeatureKind::Betti),
            Err(PipelineError::EmptyCollection)
        );
        assert!(matches!(
            assemble_features(core::slice::from_ref(&g), &["a".into()], &[], &cfg, FeatureKind::Betti),
            Err(PipelineError::LabelMismatch { .. })
        ));
        assert!(matches!(
            assemble_features(&[g], &["a".into()], &[2], &cfg, FeatureKind::Betti),
            Err(PipelineError::InvalidLabel { .. })
        ));
    }

    #[test]
    fn dropped_degrees_are_recorded() {
        let cfg = FeatureConfig::new(&[0, 1, 2], 10, Prime::TWO, Theory::Reachability);
        let fm = assemble_features(
            &[weighted_cycle()],
            &["a".into()],
            &[0],
            &cfg,
            FeatureKind::BettiIntegral,
        )
        .unwrap();
        assert_eq!(fm.degrees_used, vec![0]);
        assert_eq!(fm.dropped_degrees, vec![1, 2]);
        assert_eq!(fm.rows[0].len(), 10);
        assert_eq!(fm.column_names[0], "g0_s1");
    }
}
