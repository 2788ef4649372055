//! Path counting, Happel's formula for `dim HH¹` of a path algebra, and
//! explicit Hochschild cochain computations for small finite-dimensional
//! algebras (path algebras and incidence algebras).

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::field::Prime;
use crate::graph::Digraph;
use crate::homology::{BettiVector, FieldMatrix};
use crate::reach::Poset;

/// Largest algebra dimension accepted by the constructors and the cochain
/// computation.
pub const ALGEBRA_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HochschildError {
    Cyclic,
    Disconnected { components: usize },
    Guard { dim: usize, limit: usize },
    UnsupportedDegree(usize),
    NotAssociative { a: usize, b: usize, c: usize },
    BadUnit { basis: usize },
    BadTable,
}

impl fmt::Display for HochschildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HochschildError::Cyclic => f.write_str("digraph has a directed cycle"),
            HochschildError::Disconnected { components } => {
                write!(f, "digraph has {components} weakly connected components, expected 1")
            }
            HochschildError::Guard { dim, limit } => {
                write!(f, "algebra of dimension {dim} exceeds the limit {limit}")
            }
            HochschildError::UnsupportedDegree(d) => {
                write!(f, "Hochschild degree {d} is not supported (only 0 and 1)")
            }
            HochschildError::NotAssociative { a, b, c } => {
                write!(f, "multiplication is not associative on basis ({a}, {b}, {c})")
            }
            HochschildError::BadUnit { basis } => {
                write!(f, "unit does not act as identity on basis element {basis}")
            }
            HochschildError::BadTable => f.write_str("multiplication table has the wrong shape"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for HochschildError {}

fn topological_order(g: &Digraph) -> Result<Vec<usize>, HochschildError> {
    let n = g.num_vertices();
    let mut indeg = vec![0usize; n];
    for &(_, t) in g.edges() {
        indeg[t] += 1;
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in g.successors(v) {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push_back(w);
            }
        }
    }
    if order.len() == n {
        Ok(order)
    } else {
        Err(HochschildError::Cyclic)
    }
}

// counts[x] = number of paths x ~> target, given a topological order.
fn counts_to(g: &Digraph, order: &[usize], target: usize) -> Vec<BigUint> {
    let mut counts = vec![BigUint::zero(); g.num_vertices()];
    for &x in order.iter().rev() {
        let mut c = if x == target {
            BigUint::one()
        } else {
            BigUint::zero()
        };
        for &y in g.successors(x) {
            c += &counts[y];
        }
        counts[x] = c;
    }
    counts
}

/// Number of directed paths from `u` to `v` in an acyclic digraph, the
/// trivial path included when `u == v`.
pub fn count_paths(g: &Digraph, u: usize, v: usize) -> Result<BigUint, HochschildError> {
    let order = topological_order(g)?;
    Ok(counts_to(g, &order, v).swap_remove(u))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePaths {
    pub source: usize,
    pub target: usize,
    pub paths: BigUint,
}

/// Happel's formula evaluated componentwise, with the per-edge path counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HappelReport {
    pub betti0: usize,
    pub betti1: BigUint,
    pub edges: Vec<EdgePaths>,
}

pub fn happel_report(g: &Digraph) -> Result<HappelReport, HochschildError> {
    let order = topological_order(g)?;
    let mut by_target: BTreeMap<usize, Vec<BigUint>> = BTreeMap::new();
    let mut edges = Vec::with_capacity(g.num_edges());
    let mut sum = BigUint::zero();
    for &(s, t) in g.edges() {
        let counts = by_target
            .entry(t)
            .or_insert_with(|| counts_to(g, &order, t));
        sum += &counts[s];
        edges.push(EdgePaths {
            source: s,
            target: t,
            paths: counts[s].clone(),
        });
    }
    let (betti0, _) = g.weak_components();
    // Σ over components of (1 - |V_c| + Σ_{e in c} paths); every edge has at
    // least one path, and a component on m vertices has at least m - 1 edges.
    let betti1 = sum + BigUint::from(betti0) - BigUint::from(g.num_vertices());
    Ok(HappelReport {
        betti0,
        betti1,
        edges,
    })
}

/// `1 - |V| + Σ_e #paths(s(e), t(e))` for a connected acyclic digraph.
pub fn happel_betti1(g: &Digraph) -> Result<BigUint, HochschildError> {
    let report = happel_report(g)?;
    if report.betti0 != 1 {
        return Err(HochschildError::Disconnected {
            components: report.betti0,
        });
    }
    Ok(report.betti1)
}

/// Happel's formula summed over weakly connected components; returns
/// `(β⁰, β¹)`.
pub fn happel_betti1_components(g: &Digraph) -> Result<(usize, BigUint), HochschildError> {
    let report = happel_report(g)?;
    Ok((report.betti0, report.betti1))
}

/// Sparse integer coefficient vector: `(basis index, coefficient)`, sorted,
/// no zeros.
pub type Coeffs = Vec<(usize, i64)>;

/// Finite-dimensional associative unital algebra given by integer structure
/// constants; coefficients are reduced into a prime field on use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    labels: Vec<String>,
    // table[i * dim + j] = basis_i * basis_j
    table: Vec<Coeffs>,
    unit: Coeffs,
}

fn normalize(mut v: Vec<(usize, i64)>) -> Coeffs {
    v.sort_unstable_by_key(|e| e.0);
    let mut out: Coeffs = Vec::with_capacity(v.len());
    for (i, c) in v {
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 += c,
            _ => out.push((i, c)),
        }
    }
    out.retain(|e| e.1 != 0);
    out
}

impl FiniteAlgebra {
    /// Checks associativity on all basis triples and the unit laws on all
    /// basis elements.
    pub fn new(
        labels: Vec<String>,
        table: Vec<Coeffs>,
        unit: Coeffs,
    ) -> Result<Self, HochschildError> {
        let dim = labels.len();
        if dim == 0 || table.len() != dim * dim {
            return Err(HochschildError::BadTable);
        }
        let alg = FiniteAlgebra {
            labels,
            table: table.into_iter().map(normalize).collect(),
            unit: normalize(unit),
        };
        if alg
            .table
            .iter()
            .flatten()
            .chain(&alg.unit)
            .any(|&(i, _)| i >= dim)
        {
            return Err(HochschildError::BadTable);
        }
        for b in 0..dim {
            let basis = vec![(b, 1)];
            if alg.mul(&alg.unit, &basis) != basis || alg.mul(&basis, &alg.unit) != basis {
                return Err(HochschildError::BadUnit { basis: b });
            }
        }
        for a in 0..dim {
            for b in 0..dim {
                let ab = alg.basis_product(a, b);
                for c in 0..dim {
                    let left = alg.mul(ab, &[(c, 1)]);
                    let right = alg.mul(&[(a, 1)], alg.basis_product(b, c));
                    if left != right {
                        return Err(HochschildError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(alg)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &Coeffs {
        &self.unit
    }

    #[inline]
    pub fn basis_product(&self, a: usize, b: usize) -> &Coeffs {
        &self.table[a * self.dim() + b]
    }

    pub fn mul(&self, x: &[(usize, i64)], y: &[(usize, i64)]) -> Coeffs {
        let mut acc = Vec::new();
        for &(a, ca) in x {
            for &(b, cb) in y {
                for &(k, ck) in self.basis_product(a, b) {
                    acc.push((k, ca * cb * ck));
                }
            }
        }
        normalize(acc)
    }
}

/// Path algebra `kG` of an acyclic digraph. Basis: trivial paths `e_v`
/// first, then paths by length and vertex sequence. The product `γ·γ'`
/// concatenates when `γ` ends where `γ'` starts and is zero otherwise.
pub fn path_algebra(g: &Digraph) -> Result<FiniteAlgebra, HochschildError> {
    let order = topological_order(g)?;
    let n = g.num_vertices();
    let mut total = BigUint::zero();
    for v in 0..n {
        for c in counts_to(g, &order, v) {
            total += c;
        }
    }
    if total > BigUint::from(ALGEBRA_LIMIT) {
        let dim = usize::try_from(&total).unwrap_or(usize::MAX);
        return Err(HochschildError::Guard {
            dim,
            limit: ALGEBRA_LIMIT,
        });
    }

    let mut paths: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut frontier = paths.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in &frontier {
            for &w in g.successors(*p.last().expect("paths are nonempty")) {
                let mut q = p.clone();
                q.push(w);
                next.push(q);
            }
        }
        next.sort_unstable();
        paths.extend(next.iter().cloned());
        frontier = next;
    }
    let index: BTreeMap<&[usize], usize> =
        paths.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let dim = paths.len();
    let mut table = Vec::with_capacity(dim * dim);
    for a in &paths {
        for b in &paths {
            if a.last() == b.first() {
                let mut c = a.clone();
                c.extend_from_slice(&b[1..]);
                table.push(vec![(index[c.as_slice()], 1)]);
            } else {
                table.push(Vec::new());
            }
        }
    }
    let labels = paths
        .iter()
        .map(|p| {
            if p.len() == 1 {
                format!("e{}", p[0])
            } else {
                p.iter()
                    .map(|v| format!("{v}"))
                    .collect::<Vec<_>>()
                    .join("->")
            }
        })
        .collect();
    let unit = (0..n).map(|v| (v, 1)).collect();
    FiniteAlgebra::new(labels, table, unit)
}

/// Incidence algebra `kP`: basis `e_xy` for `x <= y`, with
/// `e_xy · e_zw = e_xw` when `y = z` and zero otherwise.
pub fn incidence_algebra(p: &Poset) -> Result<FiniteAlgebra, HochschildError> {
    let n = p.num_elements();
    let dim = n + p.num_pairs();
    if dim > ALGEBRA_LIMIT {
        return Err(HochschildError::Guard {
            dim,
            limit: ALGEBRA_LIMIT,
        });
    }
    let mut basis: Vec<(usize, usize)> = (0..n).map(|x| (x, x)).chain(p.pairs()).collect();
    basis.sort_unstable();
    let index: BTreeMap<(usize, usize), usize> =
        basis.iter().enumerate().map(|(i, &xy)| (xy, i)).collect();
    let mut table = Vec::with_capacity(dim * dim);
    for &(x, y) in &basis {
        for &(z, w) in &basis {
            if y == z {
                table.push(vec![(index[&(x, w)], 1)]);
            } else {
                table.push(Vec::new());
            }
        }
    }
    let labels = basis.iter().map(|(x, y)| format!("e{x},{y}")).collect();
    let unit = (0..n).map(|x| (index[&(x, x)], 1)).collect();
    FiniteAlgebra::new(labels, table, unit)
}

/// Ranks of `HH⁰(A, A)` and `HH¹(A, A)` from the cochain complex
/// `A -> Hom(A, A) -> Hom(A ⊗ A, A)` with the standard Hochschild
/// differential.
pub fn hh_cochain_betti(
    a: &FiniteAlgebra,
    degrees: &[usize],
    prime: Prime,
) -> Result<BettiVector, HochschildError> {
    if let Some(&d) = degrees.iter().find(|&&d| d > 1) {
        return Err(HochschildError::UnsupportedDegree(d));
    }
    let d = a.dim();
    if d > ALGEBRA_LIMIT {
        return Err(HochschildError::Guard {
            dim: d,
            limit: ALGEBRA_LIMIT,
        });
    }

    // δ⁰: m ↦ (x ↦ x·m - m·x); rows (x, k), column per basis element m.
    let mut delta0 = FieldMatrix::zeros(d * d, 0, prime);
    for m in 0..d {
        let mut entries = Vec::new();
        for x in 0..d {
            for &(k, c) in a.basis_product(x, m) {
                entries.push((x * d + k, c));
            }
            for &(k, c) in a.basis_product(m, x) {
                entries.push((x * d + k, -c));
            }
        }
        delta0.push_column(entries);
    }
    let rank0 = delta0.rank();

    let mut out = BettiVector::new();
    if degrees.contains(&0) {
        out.insert(0, d - rank0);
    }
    if degrees.contains(&1) {
        // (i, j) pairs whose product has a component on each basis element.
        let mut hits: Vec<Vec<(usize, usize, i64)>> = vec![Vec::new(); d];
        for i in 0..d {
            for j in 0..d {
                for &(k, c) in a.basis_product(i, j) {
                    hits[k].push((i, j, c));
                }
            }
        }
        // δ¹f(x, y) = x·f(y) - f(x·y) + f(x)·y. Column (b, c) is the map
        // sending basis b to basis c; rows (x, y, k).
        let row = |x: usize, y: usize, k: usize| (x * d + y) * d + k;
        let mut delta1 = FieldMatrix::zeros(d * d * d, 0, prime);
        for b in 0..d {
            for c in 0..d {
                let mut entries = Vec::new();
                for x in 0..d {
                    for &(k, v) in a.basis_product(x, c) {
                        entries.push((row(x, b, k), v));
                    }
                }
                for &(x, y, lambda) in &hits[b] {
                    entries.push((row(x, y, c), -lambda));
                }
                for y in 0..d {
                    for &(k, v) in a.basis_product(c, y) {
                        entries.push((row(b, y, k), v));
                    }
                }
                delta1.push_column(entries);
            }
        }
        let rank1 = delta1.rank();
        out.insert(1, d * d - rank1 - rank0);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dg(n: usize, e: &[(usize, usize)]) -> Digraph {
        Digraph::new(n, e.iter().copied()).unwrap()
    }

    fn big(x: u32) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn path_counts() {
        let tri = dg(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(count_paths(&tri, 0, 2).unwrap(), big(2));
        assert_eq!(count_paths(&tri, 1, 1).unwrap(), big(1));
        assert_eq!(count_paths(&tri, 2, 0).unwrap(), big(0));
        let diamond = dg(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(count_paths(&diamond, 0, 3).unwrap(), big(2));
        assert_eq!(
            count_paths(&dg(2, &[(0, 1), (1, 0)]), 0, 1),
            Err(HochschildError::Cyclic)
        );
    }

    #[test]
    fn path_counts_do_not_overflow() {
        // chain of 70 diamonds: 2^70 paths end to end
        let k = 70;
        let mut edges = Vec::new();
        for i in 0..k {
            let (s, a, b, t) = (3 * i, 3 * i + 1, 3 * i + 2, 3 * i + 3);
            edges.extend([(s, a), (s, b), (a, t), (b, t)]);
        }
        let g = dg(3 * k + 1, &edges);
        assert_eq!(count_paths(&g, 0, 3 * k).unwrap(), BigUint::one() << 70);
    }

    #[test]
    fn happel_needs_connected_acyclic() {
        assert_eq!(
            happel_betti1(&dg(3, &[(0, 1)])),
            Err(HochschildError::Disconnected { components: 2 })
        );
        assert_eq!(
            happel_betti1(&dg(2, &[(0, 1), (1, 0)])),
            Err(HochschildError::Cyclic)
        );
        assert_eq!(happel_betti1(&dg(1, &[])).unwrap(), big(0));
    }

    #[test]
    fn happel_components() {
        let two = dg(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        assert_eq!(happel_betti1_components(&two).unwrap(), (2, big(4)));
        assert_eq!(happel_betti1_components(&Digraph::empty(5)).unwrap(), (5, big(0)));
        let t4 = dg(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(happel_betti1_components(&t4).unwrap(), (1, big(8)));
    }

    #[test]
    fn path_algebra_dimensions() {
        assert_eq!(path_algebra(&Digraph::empty(1)).unwrap().dim(), 1);
        let e = path_algebra(&dg(2, &[(0, 1)])).unwrap();
        assert_eq!(e.dim(), 3);
        assert_eq!(e.labels(), &["e0", "e1", "0->1"]);
        assert_eq!(path_algebra(&dg(3, &[(0, 1), (1, 2), (0, 2)])).unwrap().dim(), 7);
        assert_eq!(
            path_algebra(&dg(2, &[(0, 1), (1, 0)])),
            Err(HochschildError::Cyclic)
        );
        // T_8 has 2^7 - 1 + ... paths, far above the guard
        let t8 = Digraph::new(8, (0..8).flat_map(|i| (i + 1..8).map(move |j| (i, j)))).unwrap();
        assert!(matches!(path_algebra(&t8), Err(HochschildError::Guard { .. })));
    }

    #[test]
    fn incidence_algebra_dimensions() {
        assert_eq!(incidence_algebra(&Poset::antichain(4)).unwrap().dim(), 4);
        assert_eq!(incidence_algebra(&Poset::chain(2)).unwrap().dim(), 3);
        assert_eq!(incidence_algebra(&Poset::chain(3)).unwrap().dim(), 6);
        assert!(matches!(
            incidence_algebra(&Poset::chain(11)),
            Err(HochschildError::Guard { .. })
        ));
    }

    #[test]
    fn algebra_self_checks() {
        let labels = vec![String::from("1"), String::from("x")];
        // x·x = x + 1 is associative (it is commutative and 2-dimensional),
        // but a broken unit must be caught.
        let table = vec![vec![(0, 1)], vec![(1, 1)], vec![(1, 1)], vec![(0, 1), (1, 1)]];
        assert!(FiniteAlgebra::new(labels.clone(), table.clone(), vec![(0, 1)]).is_ok());
        assert_eq!(
            FiniteAlgebra::new(labels.clone(), table, vec![(1, 1)]),
            Err(HochschildError::BadUnit { basis: 0 })
        );
        // a·a = b, everything else zero except unit products: (a·a)·b vs a·(a·b)
        let labels3 = vec![String::from("1"), String::from("a"), String::from("b")];
        let mut t = vec![Vec::new(); 9];
        for i in 0..3 {
            t[i] = vec![(i, 1)];
            t[i * 3] = vec![(i, 1)];
        }
        t[4] = vec![(2, 1)]; // a·a = b
        t[7] = vec![(1, 1)]; // b·a = a
        assert!(matches!(
            FiniteAlgebra::new(labels3, t, vec![(0, 1)]),
            Err(HochschildError::NotAssociative { .. })
        ));
    }

    #[test]
    fn cochain_examples() {
        let tri = path_algebra(&dg(3, &[(0, 1), (1, 2), (0, 2)])).unwrap();
        let b = hh_cochain_betti(&tri, &[0, 1], Prime::TWO).unwrap();
        assert_eq!((b.beta(0), b.beta(1)), (1, 2));

        let k = path_algebra(&Digraph::empty(1)).unwrap();
        let b = hh_cochain_betti(&k, &[0, 1], Prime::TWO).unwrap();
        assert_eq!((b.beta(0), b.beta(1)), (1, 0));

        let c3 = incidence_algebra(&Poset::chain(3)).unwrap();
        let b = hh_cochain_betti(&c3, &[0, 1], Prime::new(3).unwrap()).unwrap();
        assert_eq!((b.beta(0), b.beta(1)), (1, 0));

        assert_eq!(
            hh_cochain_betti(&c3, &[2], Prime::TWO),
            Err(HochschildError::UnsupportedDegree(2))
        );
    }
}
