//! Erdős–Rényi random digraphs and mean-Betti sweeps over edge probability.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::field::Prime;
use crate::graph::{Digraph, WeightedDigraph, WeightedEdge};
use crate::homology::HomologyError;
use crate::par;
use crate::pipeline::{theory_betti, Theory};

#[derive(Clone, Debug, PartialEq)]
pub enum RandomError {
    InvalidProbability(f64),
    InvalidRange { lower: f64, upper: f64 },
    NoRealisations,
    Homology(HomologyError),
}

impl fmt::Display for RandomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RandomError::InvalidProbability(p) => write!(f, "edge probability {p} is not in [0, 1]"),
            RandomError::InvalidRange { lower, upper } => {
                write!(f, "weight range [{lower}, {upper}] is empty or not finite")
            }
            RandomError::NoRealisations => f.write_str("at least one realisation is required"),
            RandomError::Homology(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for RandomError {}

impl From<HomologyError> for RandomError {
    fn from(e: HomologyError) -> Self {
        RandomError::Homology(e)
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Counter-based seed derivation: the seed of work unit `(a, b)` depends
/// only on the master seed and the two indices.
pub fn derive_seed(master: u64, a: u64, b: u64) -> u64 {
    splitmix64(splitmix64(splitmix64(master) ^ a) ^ b.rotate_left(32))
}

// Uniform in [0, 1) with 53 random bits.
fn unit_f64(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

fn check_probability(p: f64) -> Result<(), RandomError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(RandomError::InvalidProbability(p))
    }
}

/// `G(n, p)`: every ordered pair `(u, v)`, `u != v`, is an edge
/// independently with probability `p`.
pub fn er_digraph(n: usize, p: f64, seed: u64) -> Result<Digraph, RandomError> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && unit_f64(&mut rng) < p {
                edges.push((u, v));
            }
        }
    }
    Ok(Digraph::from_sorted_unique(n, edges))
}

/// `G(n, p)` with every edge weight drawn uniformly from `[lower, upper]`.
pub fn weighted_er(
    n: usize,
    p: f64,
    lower: f64,
    upper: f64,
    seed: u64,
) -> Result<WeightedDigraph, RandomError> {
    check_probability(p)?;
    if !(lower.is_finite() && upper.is_finite() && lower <= upper) {
        return Err(RandomError::InvalidRange { lower, upper });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && unit_f64(&mut rng) < p {
                let weight = (lower + unit_f64(&mut rng) * (upper - lower)).min(upper);
                edges.push(WeightedEdge {
                    source: u,
                    target: v,
                    weight,
                });
            }
        }
    }
    Ok(WeightedDigraph::new(n, edges).expect("generated edges are valid"))
}

/// `steps + 1` equally spaced values from `lower` to `upper`.
pub fn linear_grid(lower: f64, upper: f64, steps: usize) -> Vec<f64> {
    if steps == 0 {
        return vec![lower];
    }
    let mut v: Vec<f64> = (0..=steps)
        .map(|s| lower + s as f64 * (upper - lower) / steps as f64)
        .collect();
    v[steps] = upper;
    v
}

#[derive(Clone, Debug, PartialEq)]
pub struct ErExperimentConfig {
    pub vertices: usize,
    pub p_grid: Vec<f64>,
    pub realisations: usize,
    pub degrees: Vec<usize>,
    pub theory: Theory,
    pub prime: Prime,
    pub master_seed: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MeanBettiRow {
    pub p: f64,
    /// Aligned with [`MeanBettiTable::degrees`].
    pub means: Vec<f64>,
    /// Sample standard deviations (zero for a single realisation).
    pub stds: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MeanBettiTable {
    pub vertices: usize,
    pub realisations: usize,
    pub theory: Theory,
    pub degrees: Vec<usize>,
    pub rows: Vec<MeanBettiRow>,
}

impl MeanBettiTable {
    pub fn means_for(&self, degree: usize) -> Option<Vec<f64>> {
        let k = self.degrees.iter().position(|&d| d == degree)?;
        Some(self.rows.iter().map(|r| r.means[k]).collect())
    }

    /// First and last `p` whose mean `β_degree` exceeds `fraction` of its
    /// maximum over the grid; `None` if the mean is identically zero.
    pub fn support_window(&self, degree: usize, fraction: f64) -> Option<(f64, f64)> {
        let means = self.means_for(degree)?;
        let max = means.iter().copied().fold(0.0, f64::max);
        if max <= 0.0 {
            return None;
        }
        let cut = fraction * max;
        let above: Vec<f64> = self
            .rows
            .iter()
            .zip(&means)
            .filter(|(_, &m)| m > cut)
            .map(|(r, _)| r.p)
            .collect();
        Some((*above.first()?, *above.last()?))
    }
}

/// Mean and sample standard deviation of Betti numbers over `realisations`
/// random digraphs per grid probability. Deterministic given the config.
pub fn mean_betti_experiment(cfg: &ErExperimentConfig) -> Result<MeanBettiTable, RandomError> {
    if cfg.realisations == 0 {
        return Err(RandomError::NoRealisations);
    }
    for &p in &cfg.p_grid {
        check_probability(p)?;
    }
    let r = cfg.realisations;
    let samples: Vec<Result<Vec<usize>, RandomError>> =
        par::map_range(cfg.p_grid.len() * r, |task| {
            let (pi, ri) = (task / r, task % r);
            let seed = derive_seed(cfg.master_seed, pi as u64, ri as u64);
            let g = er_digraph(cfg.vertices, cfg.p_grid[pi], seed)?;
            let b = theory_betti(&g, &cfg.degrees, cfg.prime, cfg.theory)?;
            Ok(cfg.degrees.iter().map(|&d| b.beta(d)).collect())
        });
    let samples = samples.into_iter().collect::<Result<Vec<_>, _>>()?;

    let rows = cfg
        .p_grid
        .iter()
        .enumerate()
        .map(|(pi, &p)| {
            let block = &samples[pi * r..(pi + 1) * r];
            let (means, stds) = (0..cfg.degrees.len())
                .map(|k| {
                    // exact integer sums, so the result is schedule independent
                    let sum: u128 = block.iter().map(|s| s[k] as u128).sum();
                    let sum_sq: u128 = block.iter().map(|s| (s[k] as u128).pow(2)).sum();
                    let n = r as u128;
                    let mean = sum as f64 / r as f64;
                    let std = if r > 1 {
                        let num = n * sum_sq - sum * sum;
                        libm::sqrt(num as f64 / (n * (n - 1)) as f64)
                    } else {
                        0.0
                    };
                    (mean, std)
                })
                .unzip();
            MeanBettiRow { p, means, stds }
        })
        .collect();

    Ok(MeanBettiTable {
        vertices: cfg.vertices,
        realisations: r,
        theory: cfg.theory,
        degrees: cfg.degrees.clone(),
        rows,
    })
}
