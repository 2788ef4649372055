//! Strongly connected components, condensation and reachability posets.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::BitSet;
use crate::graph::Digraph;

/// Partition of the vertices into strongly connected components.
///
/// Components are numbered by their smallest vertex, so on an acyclic
/// digraph every vertex is its own component with the same id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SccPartition {
    component_of: Vec<usize>,
    num_components: usize,
    // components in a topological order of the condensation
    topo: Vec<usize>,
}

impl SccPartition {
    #[inline]
    pub fn num_components(&self) -> usize {
        self.num_components
    }

    #[inline]
    pub fn component_of(&self, v: usize) -> usize {
        self.component_of[v]
    }

    /// Component ids in an order where every condensation edge points
    /// forward.
    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_components];
        for (v, &c) in self.component_of.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

/// Tarjan's algorithm, iterative.
pub fn scc(g: &Digraph) -> SccPartition {
    const UNSEEN: usize = usize::MAX;
    let n = g.num_vertices();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut emitted = vec![UNSEEN; n];
    let mut next_index = 0;
    let mut next_comp = 0;
    // (vertex, position in its successor list)
    let mut calls: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        calls.push((root, 0));

        while let Some(&mut (v, ref mut pos)) = calls.last_mut() {
            let succ = g.successors(v);
            if *pos < succ.len() {
                let w = succ[*pos];
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    calls.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            calls.pop();
            if let Some(&(parent, _)) = calls.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    emitted[w] = next_comp;
                    if w == v {
                        break;
                    }
                }
                next_comp += 1;
            }
        }
    }

    // Renumber by smallest member; vertices are scanned in order.
    let mut rename = vec![UNSEEN; next_comp];
    let mut count = 0;
    for &c in &emitted {
        if rename[c] == UNSEEN {
            rename[c] = count;
            count += 1;
        }
    }
    let component_of = emitted.iter().map(|&c| rename[c]).collect();
    // Tarjan emits sinks first.
    let topo = (0..next_comp).rev().map(|c| rename[c]).collect();
    SccPartition {
        component_of,
        num_components: next_comp,
        topo,
    }
}

/// Condensation `c(G)`: one vertex per component, no self-loops.
pub fn condensation(g: &Digraph) -> Digraph {
    condensation_with(g, &scc(g))
}

fn condensation_with(g: &Digraph, part: &SccPartition) -> Digraph {
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(s, t)| (part.component_of(s), part.component_of(t)))
        .filter(|(a, b)| a != b)
        .collect();
    edges.sort_unstable();
    edges.dedup();
    Digraph::from_sorted_unique(part.num_components(), edges)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PosetError {
    OutOfRange { element: usize },
    Reflexive { element: usize },
    NotAntisymmetric { a: usize, b: usize },
    NotTransitive { a: usize, b: usize, c: usize },
}

impl fmt::Display for PosetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetError::OutOfRange { element } => write!(f, "element {element} out of range"),
            PosetError::Reflexive { element } => write!(f, "relation contains {element} < {element}"),
            PosetError::NotAntisymmetric { a, b } => {
                write!(f, "relation contains both {a} < {b} and {b} < {a}")
            }
            PosetError::NotTransitive { a, b, c } => {
                write!(f, "{a} < {b} < {c} but not {a} < {c}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for PosetError {}

/// Finite strict partial order, stored as its full transitive closure.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poset {
    // above[x] = { y : x < y }
    above: Vec<BitSet>,
}

impl Poset {
    /// Builds a poset from its strict relation, which must already be
    /// irreflexive, antisymmetric and transitively closed.
    pub fn new<I>(num_elements: usize, pairs: I) -> Result<Self, PosetError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut above = vec![BitSet::new(num_elements); num_elements];
        for (x, y) in pairs {
            for e in [x, y] {
                if e >= num_elements {
                    return Err(PosetError::OutOfRange { element: e });
                }
            }
            if x == y {
                return Err(PosetError::Reflexive { element: x });
            }
            above[x].insert(y);
        }
        for x in 0..num_elements {
            for y in above[x].iter() {
                if above[y].contains(x) {
                    return Err(PosetError::NotAntisymmetric { a: x, b: y });
                }
                for z in above[y].iter() {
                    if !above[x].contains(z) {
                        return Err(PosetError::NotTransitive { a: x, b: y, c: z });
                    }
                }
            }
        }
        Ok(Poset { above })
    }

    pub fn chain(n: usize) -> Self {
        let mut above = vec![BitSet::new(n); n];
        for (x, set) in above.iter_mut().enumerate() {
            for y in x + 1..n {
                set.insert(y);
            }
        }
        Poset { above }
    }

    pub fn antichain(n: usize) -> Self {
        Poset {
            above: vec![BitSet::new(n); n],
        }
    }

    /// Face poset of the simplicial complex generated by `facets` (each a
    /// list of vertex labels), ordered by inclusion. Returns the poset and
    /// the sorted vertex set of every element, elements sorted by
    /// (dimension, vertices).
    pub fn face_poset(facets: &[Vec<usize>]) -> (Poset, Vec<Vec<usize>>) {
        let mut faces: Vec<Vec<usize>> = Vec::new();
        for facet in facets {
            let mut f = facet.clone();
            f.sort_unstable();
            f.dedup();
            let k = f.len();
            assert!(k < usize::BITS as usize, "facet too large");
            for mask in 1usize..(1 << k) {
                faces.push((0..k).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect());
            }
        }
        faces.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        faces.dedup();
        let n = faces.len();
        let mut above = vec![BitSet::new(n); n];
        for (i, a) in faces.iter().enumerate() {
            for (j, b) in faces.iter().enumerate() {
                if a.len() < b.len() && a.iter().all(|v| b.binary_search(v).is_ok()) {
                    above[i].insert(j);
                }
            }
        }
        (Poset { above }, faces)
    }

    #[inline]
    pub fn num_elements(&self) -> usize {
        self.above.len()
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    /// Elements strictly above `x`.
    #[inline]
    pub fn above(&self, x: usize) -> &BitSet {
        &self.above[x]
    }

    pub fn num_pairs(&self) -> usize {
        self.above.iter().map(BitSet::count).sum()
    }

    /// All pairs `(x, y)` with `x < y`, in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.above
            .iter()
            .enumerate()
            .flat_map(|(x, set)| set.iter().map(move |y| (x, y)))
    }
}

/// The reachability poset `R(G)`: components of `G` ordered by reachability.
pub fn reachability_poset(g: &Digraph) -> Poset {
    let part = scc(g);
    let cond = condensation_with(g, &part);
    let n = part.num_components();
    let mut above = vec![BitSet::new(n); n];
    for &x in part.topological_order().iter().rev() {
        let mut set = BitSet::new(n);
        for &y in cond.successors(x) {
            set.insert(y);
            set.union_with(&above[y]);
        }
        above[x] = set;
    }
    Poset { above }
}

/// The digraph `G(P)` with an edge `p -> q` whenever `p < q`.
pub fn poset_digraph(p: &Poset) -> Digraph {
    Digraph::from_sorted_unique(p.num_elements(), p.pairs().collect())
}
