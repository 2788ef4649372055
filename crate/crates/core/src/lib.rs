//! Persistent reachability homology and directed-flag persistent homology of
//! weighted digraphs.
//!
//! The crate is `no_std` (it needs `alloc`). Enabling the `parallel` feature
//! pulls in `std` and `rayon` and fans independent work units (subjects, grid
//! points, random realisations) out over a thread pool; results are
//! bit-identical with and without it.
//!
//! Module map:
//!
//! * [`graph`]: weighted and unweighted digraphs, thresholding, sublevel snapshots.
//! * [`reach`]: strongly connected components, condensation, reachability posets.
//! * [`complex`]: directed flag complexes and order complexes.
//! * [`homology`]: boundary matrices and Betti numbers over a prime field.
//! * [`hochschild`]: path counting, Happel's formula, Hochschild cochain oracles.
//! * [`pipeline`]: filtration bounds, grids, Betti curves and integrals, feature rows.
//! * [`random`]: Erdős–Rényi digraphs and mean-Betti sweeps.
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bitset;
pub mod complex;
pub mod field;
pub mod graph;
pub mod hochschild;
pub mod homology;
pub mod pipeline;
pub mod random;
pub mod reach;

mod par;

pub use complex::OrderedComplex;
pub use field::Prime;
pub use graph::{Digraph, GraphError, WeightedDigraph, WeightedEdge};
pub use homology::{BettiVector, FieldMatrix, HomologyError};
pub use pipeline::{FeatureKind, Theory};
pub use reach::{Poset, SccPartition};
