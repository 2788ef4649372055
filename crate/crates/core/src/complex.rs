//! Ordered (semi-simplicial) complexes: directed flag complexes of digraphs
//! and order complexes of posets.
//!
//! A `d`-simplex is an ordered tuple of `d + 1` distinct vertices; its `i`-th
//! face deletes position `i`. Reciprocal edges therefore give two distinct
//! 1-simplices. Within each dimension simplices are sorted lexicographically.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::BitSet;
use crate::graph::Digraph;
use crate::par;
use crate::reach::{poset_digraph, Poset};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexError {
    WrongArity { dim: usize, len: usize },
    RepeatedVertex { dim: usize, index: usize },
    VertexOutOfRange { vertex: u32 },
    Duplicate { dim: usize, index: usize },
    MissingFace { dim: usize, index: usize, position: usize },
}

impl fmt::Display for ComplexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexError::WrongArity { dim, len } => {
                write!(f, "a {dim}-simplex needs {} vertices, got {len}", dim + 1)
            }
            ComplexError::RepeatedVertex { dim, index } => {
                write!(f, "{dim}-simplex #{index} repeats a vertex")
            }
            ComplexError::VertexOutOfRange { vertex } => write!(f, "vertex {vertex} out of range"),
            ComplexError::Duplicate { dim, index } => {
                write!(f, "{dim}-simplex #{index} is listed twice")
            }
            ComplexError::MissingFace {
                dim,
                index,
                position,
            } => write!(
                f,
                "face {position} of {dim}-simplex #{index} is not in the complex"
            ),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ComplexError {}

// One dimension's simplices, stored flat with stride dim + 1.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Layer {
    data: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedComplex {
    num_vertices: usize,
    max_dim: usize,
    layers: Vec<Layer>,
}

impl OrderedComplex {
    /// Builds a complex from an explicit list of simplices of dimension
    /// `1..=max_dim`; vertices `0..num_vertices` are implied. The list is
    /// sorted and checked for closure under faces.
    pub fn from_simplices<I, S>(
        num_vertices: usize,
        max_dim: usize,
        simplices: I,
    ) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[u32]>,
    {
        let mut buckets: Vec<Vec<Vec<u32>>> = vec![Vec::new(); max_dim + 1];
        buckets[0] = (0..num_vertices as u32).map(|v| vec![v]).collect();
        for s in simplices {
            let s = s.as_ref();
            if s.is_empty() || s.len() > max_dim + 1 {
                return Err(ComplexError::WrongArity {
                    dim: max_dim,
                    len: s.len(),
                });
            }
            if let Some(&v) = s.iter().find(|&&v| v as usize >= num_vertices) {
                return Err(ComplexError::VertexOutOfRange { vertex: v });
            }
            if s.len() > 1 {
                buckets[s.len() - 1].push(s.to_vec());
            }
        }
        let mut layers = Vec::with_capacity(max_dim + 1);
        for (d, mut bucket) in buckets.into_iter().enumerate() {
            bucket.sort_unstable();
            if let Some(i) = bucket.windows(2).position(|w| w[0] == w[1]) {
                return Err(ComplexError::Duplicate { dim: d, index: i + 1 });
            }
            for (i, s) in bucket.iter().enumerate() {
                let mut sorted = s.clone();
                sorted.sort_unstable();
                if sorted.windows(2).any(|w| w[0] == w[1]) {
                    return Err(ComplexError::RepeatedVertex { dim: d, index: i });
                }
            }
            layers.push(Layer {
                data: bucket.concat(),
            });
        }
        let c = OrderedComplex {
            num_vertices,
            max_dim,
            layers,
        };
        c.check_closure()?;
        Ok(c)
    }

    #[inline]
    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    /// Enumeration cap: no simplices above this dimension were produced.
    #[inline]
    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    /// Number of `d`-simplices; zero above `max_dim`.
    pub fn num_simplices(&self, d: usize) -> usize {
        self.layers.get(d).map_or(0, |l| l.data.len() / (d + 1))
    }

    pub fn counts(&self) -> Vec<usize> {
        (0..=self.max_dim).map(|d| self.num_simplices(d)).collect()
    }

    pub fn total_simplices(&self) -> usize {
        self.counts().iter().sum()
    }

    /// Highest dimension holding at least one simplex.
    pub fn top_dim(&self) -> Option<usize> {
        (0..=self.max_dim).rev().find(|&d| self.num_simplices(d) > 0)
    }

    #[inline]
    pub fn simplex(&self, d: usize, i: usize) -> &[u32] {
        &self.layers[d].data[i * (d + 1)..(i + 1) * (d + 1)]
    }

    pub fn simplices(&self, d: usize) -> impl Iterator<Item = &[u32]> + '_ {
        self.layers
            .get(d)
            .map(|l| l.data.as_slice())
            .unwrap_or(&[])
            .chunks_exact(d + 1)
    }

    /// Position of `tuple` among the `(tuple.len() - 1)`-simplices.
    pub fn index_of(&self, tuple: &[u32]) -> Option<usize> {
        let d = tuple.len().checked_sub(1)?;
        let n = self.num_simplices(d);
        let (mut lo, mut hi) = (0, n);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.simplex(d, mid).cmp(tuple) {
                core::cmp::Ordering::Less => lo = mid + 1,
                core::cmp::Ordering::Greater => hi = mid,
                core::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    /// Verifies that every face of every listed simplex is listed.
    pub fn check_closure(&self) -> Result<(), ComplexError> {
        let mut face = Vec::new();
        for d in 1..=self.max_dim {
            for (i, s) in self.simplices(d).enumerate() {
                for pos in 0..=d {
                    face.clear();
                    face.extend(s.iter().enumerate().filter(|&(k, _)| k != pos).map(|(_, &v)| v));
                    if self.index_of(&face).is_none() {
                        return Err(ComplexError::MissingFace {
                            dim: d,
                            index: i,
                            position: pos,
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

fn expand(
    succ: &[BitSet],
    prefix: &mut Vec<u32>,
    candidates: &BitSet,
    max_dim: usize,
    out: &mut [Vec<u32>],
) {
    let d = prefix.len() - 1;
    out[d].extend_from_slice(prefix);
    if d == max_dim {
        return;
    }
    for v in candidates.iter() {
        let mut next = candidates.clone();
        next.intersect_with(&succ[v]);
        prefix.push(v as u32);
        expand(succ, prefix, &next, max_dim, out);
        prefix.pop();
    }
}

/// Directed flag complex `dFl(G)` up to dimension `max_dim`: the
/// `d`-simplices are the directed `(d+1)`-cliques of `g`.
pub fn directed_flag_complex(g: &Digraph, max_dim: usize) -> OrderedComplex {
    let succ = g.successor_sets();
    let n = g.num_vertices();
    // Per start vertex; concatenating in vertex order keeps each dimension
    // lexicographically sorted.
    let per_vertex: Vec<Vec<Vec<u32>>> = par::map_range(n, |v| {
        let mut out = vec![Vec::new(); max_dim + 1];
        let mut prefix = vec![v as u32];
        expand(&succ, &mut prefix, &succ[v], max_dim, &mut out);
        out
    });
    let mut layers = vec![Layer::default(); max_dim + 1];
    for chunk in per_vertex {
        for (layer, data) in layers.iter_mut().zip(chunk) {
            layer.data.extend_from_slice(&data);
        }
    }
    OrderedComplex {
        num_vertices: n,
        max_dim,
        layers,
    }
}

/// Order complex of `p`: simplices are the strict chains `x_0 < ... < x_k`.
pub fn order_complex(p: &Poset, max_dim: usize) -> OrderedComplex {
    directed_flag_complex(&poset_digraph(p), max_dim)
}
