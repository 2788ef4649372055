//! Weighted and unweighted simple digraphs and the sublevel filtration.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::BitSet;

#[derive(Clone, Debug, PartialEq)]
pub enum GraphError {
    SelfLoop { vertex: usize },
    DuplicateEdge { source: usize, target: usize },
    VertexOutOfRange { vertex: usize, num_vertices: usize },
    NanWeight { source: usize, target: usize },
    InvertedThresholds { lower: f64, upper: f64 },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateEdge { source, target } => {
                write!(f, "duplicate edge {source} -> {target}")
            }
            GraphError::VertexOutOfRange {
                vertex,
                num_vertices,
            } => write!(
                f,
                "vertex {vertex} out of range for a graph with {num_vertices} vertices"
            ),
            GraphError::NanWeight { source, target } => {
                write!(f, "edge {source} -> {target} has a NaN weight")
            }
            GraphError::InvertedThresholds { lower, upper } => {
                write!(f, "lower threshold {lower} exceeds upper threshold {upper}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for GraphError {}

fn check_endpoints(n: usize, s: usize, t: usize) -> Result<(), GraphError> {
    for v in [s, t] {
        if v >= n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                num_vertices: n,
            });
        }
    }
    if s == t {
        return Err(GraphError::SelfLoop { vertex: s });
    }
    Ok(())
}

/// Finite simple digraph without self-loops. Edges are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Digraph {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
    // successors[v] is sorted ascending
    successors: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn new<I>(num_vertices: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (s, t) in edges {
            check_endpoints(num_vertices, s, t)?;
            list.push((s, t));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge {
                source: w[0].0,
                target: w[0].1,
            });
        }
        Ok(Self::from_sorted_unique(num_vertices, list))
    }

    pub fn empty(num_vertices: usize) -> Self {
        Self::from_sorted_unique(num_vertices, Vec::new())
    }

    pub(crate) fn from_sorted_unique(num_vertices: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut successors = vec![Vec::new(); num_vertices];
        for &(s, t) in &edges {
            successors[s].push(t);
        }
        Digraph {
            num_vertices,
            edges,
            successors,
        }
    }

    #[inline]
    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    #[inline]
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn successors(&self, v: usize) -> &[usize] {
        &self.successors[v]
    }

    pub fn has_edge(&self, s: usize, t: usize) -> bool {
        s < self.num_vertices && self.successors[s].binary_search(&t).is_ok()
    }

    /// Out-neighbourhoods as bitsets.
    pub fn successor_sets(&self) -> Vec<BitSet> {
        self.successors
            .iter()
            .map(|succ| {
                let mut set = BitSet::new(self.num_vertices);
                for &t in succ {
                    set.insert(t);
                }
                set
            })
            .collect()
    }

    /// Weakly connected component label of every vertex, labels numbered by
    /// smallest member.
    pub fn weak_components(&self) -> (usize, Vec<usize>) {
        let mut parent: Vec<usize> = (0..self.num_vertices).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(s, t) in &self.edges {
            let (a, b) = (find(&mut parent, s), find(&mut parent, t));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut label = vec![usize::MAX; self.num_vertices];
        let mut count = 0;
        let mut out = vec![0; self.num_vertices];
        for v in 0..self.num_vertices {
            let r = find(&mut parent, v);
            if label[r] == usize::MAX {
                label[r] = count;
                count += 1;
            }
            out[v] = label[r];
        }
        (count, out)
    }

    /// Subgraph induced on `vertices` (kept in the given order, renumbered 0..).
    pub fn induced(&self, vertices: &[usize]) -> Digraph {
        let mut index = vec![usize::MAX; self.num_vertices];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(s, t)| index[s] != usize::MAX && index[t] != usize::MAX)
            .map(|&(s, t)| (index[s], index[t]))
            .collect();
        edges.sort_unstable();
        Digraph::from_sorted_unique(vertices.len(), edges)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WeightedEdge {
    pub source: usize,
    pub target: usize,
    pub weight: f64,
}

/// Finite simple digraph with a real weight on every edge.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedDigraph {
    num_vertices: usize,
    // sorted by (source, target)
    edges: Vec<WeightedEdge>,
}

impl WeightedDigraph {
    pub fn new<I>(num_vertices: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = WeightedEdge>,
    {
        let mut list: Vec<WeightedEdge> = Vec::new();
        for e in edges {
            check_endpoints(num_vertices, e.source, e.target)?;
            if e.weight.is_nan() {
                return Err(GraphError::NanWeight {
                    source: e.source,
                    target: e.target,
                });
            }
            list.push(e);
        }
        list.sort_unstable_by_key(|e| (e.source, e.target));
        if let Some(w) = list
            .windows(2)
            .find(|w| (w[0].source, w[0].target) == (w[1].source, w[1].target))
        {
            return Err(GraphError::DuplicateEdge {
                source: w[0].source,
                target: w[0].target,
            });
        }
        Ok(WeightedDigraph {
            num_vertices,
            edges: list,
        })
    }

    #[inline]
    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    #[inline]
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[WeightedEdge] {
        &self.edges
    }

    pub fn weight(&self, source: usize, target: usize) -> Option<f64> {
        self.edges
            .binary_search_by_key(&(source, target), |e| (e.source, e.target))
            .ok()
            .map(|i| self.edges[i].weight)
    }

    /// Keeps the edges with `lower <= weight <= upper`. Vertices are kept.
    pub fn threshold(&self, lower: f64, upper: f64) -> Result<WeightedDigraph, GraphError> {
        if lower.is_nan() || upper.is_nan() || lower > upper {
            return Err(GraphError::InvertedThresholds { lower, upper });
        }
        Ok(WeightedDigraph {
            num_vertices: self.num_vertices,
            edges: self
                .edges
                .iter()
                .filter(|e| lower <= e.weight && e.weight <= upper)
                .copied()
                .collect(),
        })
    }

    /// Distinct edge weights, strictly increasing.
    pub fn distinct_weights(&self) -> Vec<f64> {
        let mut w: Vec<f64> = self.edges.iter().map(|e| e.weight).collect();
        w.sort_unstable_by(f64::total_cmp);
        w.dedup();
        w
    }

    /// The snapshot `G[w]`: all vertices, edges of weight at most `w`.
    pub fn subgraph_at(&self, w: f64) -> Digraph {
        let edges = self
            .edges
            .iter()
            .filter(|e| e.weight <= w)
            .map(|e| (e.source, e.target))
            .collect();
        Digraph::from_sorted_unique(self.num_vertices, edges)
    }

    pub fn underlying(&self) -> Digraph {
        Digraph::from_sorted_unique(
            self.num_vertices,
            self.edges.iter().map(|e| (e.source, e.target)).collect(),
        )
    }
}
