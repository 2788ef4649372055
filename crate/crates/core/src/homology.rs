//! Boundary matrices and Betti numbers over a prime field.
//!
//! [`betti`] reduces sparse boundary columns (pivot on the lowest nonzero
//! row, with clearing between consecutive dimensions). [`betti_oracle`] is a
//! dense, basis-constructing cross-check meant for small complexes only.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::OrderedComplex;
use crate::field::Prime;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomologyError {
    /// Degree `degree` needs simplices of dimension `degree + 1`.
    InsufficientMaxDim { degree: usize, max_dim: usize },
    BoundaryOutOfRange { j: usize, max_dim: usize },
    OracleGuard { simplices: usize, limit: usize },
}

impl fmt::Display for HomologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomologyError::InsufficientMaxDim { degree, max_dim } => write!(
                f,
                "degree {degree} needs a complex enumerated to dimension {}, got {max_dim}",
                degree + 1
            ),
            HomologyError::BoundaryOutOfRange { j, max_dim } => write!(
                f,
                "boundary map {j} requested on a complex capped at dimension {max_dim}"
            ),
            HomologyError::OracleGuard { simplices, limit } => write!(
                f,
                "oracle refuses a complex with {simplices} simplices (limit {limit})"
            ),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for HomologyError {}

/// Sparse matrix over `GF(p)`, stored by columns. Each column is a list of
/// `(row, value)` with strictly increasing rows and nonzero values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldMatrix {
    rows: usize,
    prime: Prime,
    cols: Vec<Vec<(u32, u32)>>,
}

impl FieldMatrix {
    pub fn zeros(rows: usize, cols: usize, prime: Prime) -> Self {
        FieldMatrix {
            rows,
            prime,
            cols: vec![Vec::new(); cols],
        }
    }

    /// Builds from dense rows of signed integers, reduced mod `prime`.
    pub fn from_dense(rows: &[Vec<i64>], prime: Prime) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = FieldMatrix::zeros(nrows, ncols, prime);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged dense matrix");
            for (c, &x) in row.iter().enumerate() {
                let v = prime.reduce(x);
                if v != 0 {
                    m.cols[c].push((r as u32, v));
                }
            }
        }
        m
    }

    /// Appends a column given as `(row, value)` entries in any order;
    /// repeated rows are summed.
    pub fn push_column<I>(&mut self, entries: I)
    where
        I: IntoIterator<Item = (usize, i64)>,
    {
        let p = self.prime;
        let mut col: Vec<(u32, u32)> = Vec::new();
        for (r, x) in entries {
            assert!(r < self.rows, "row {r} out of range");
            col.push((r as u32, p.reduce(x)));
        }
        col.sort_unstable_by_key(|e| e.0);
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(col.len());
        for (r, v) in col {
            match merged.last_mut() {
                Some(last) if last.0 == r => last.1 = p.add(last.1, v),
                _ => merged.push((r, v)),
            }
        }
        merged.retain(|e| e.1 != 0);
        self.cols.push(merged);
    }

    #[inline]
    pub fn num_rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn num_cols(&self) -> usize {
        self.cols.len()
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn column(&self, c: usize) -> &[(u32, u32)] {
        &self.cols[c]
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        let col = &self.cols[c];
        col.binary_search_by_key(&(r as u32), |e| e.0)
            .map_or(0, |i| col[i].1)
    }

    pub fn to_dense(&self) -> Vec<Vec<u32>> {
        let mut out = vec![vec![0; self.cols.len()]; self.rows];
        for (c, col) in self.cols.iter().enumerate() {
            for &(r, v) in col {
                out[r as usize][c] = v;
            }
        }
        out
    }

    /// `self * rhs`.
    pub fn mul(&self, rhs: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.num_cols(), rhs.num_rows(), "dimension mismatch");
        assert_eq!(self.prime, rhs.prime, "field mismatch");
        let p = self.prime;
        let mut out = FieldMatrix::zeros(self.rows, 0, p);
        for rcol in &rhs.cols {
            let mut acc = vec![0u32; self.rows];
            for &(k, b) in rcol {
                for &(r, a) in &self.cols[k as usize] {
                    acc[r as usize] = p.add(acc[r as usize], p.mul(a, b));
                }
            }
            out.cols.push(
                acc.iter()
                    .enumerate()
                    .filter(|e| *e.1 != 0)
                    .map(|(r, &v)| (r as u32, v))
                    .collect(),
            );
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn rank(&self) -> usize {
        self.reduce(None).rank
    }

    // Column reduction; columns listed in `skip` are known to reduce to zero.
    fn reduce(&self, skip: Option<&[bool]>) -> Reduction {
        let p = self.prime;
        let mut pivot_col: Vec<u32> = vec![u32::MAX; self.rows];
        let mut reduced: Vec<Vec<(u32, u32)>> = Vec::with_capacity(self.cols.len());
        let mut pivots: Vec<Option<u32>> = Vec::with_capacity(self.cols.len());
        let mut rank = 0;
        let mut scratch = Vec::new();
        for (c, col) in self.cols.iter().enumerate() {
            if skip.is_some_and(|s| s[c]) {
                reduced.push(Vec::new());
                pivots.push(None);
                continue;
            }
            let mut cur = col.clone();
            while let Some(&(low, v)) = cur.last() {
                let k = pivot_col[low as usize];
                if k == u32::MAX {
                    break;
                }
                let other = &reduced[k as usize];
                let w = other.last().expect("pivot column is nonzero").1;
                // cur -= (v / w) * other
                let factor = p.neg(p.mul(v, p.inv(w)));
                axpy(p, factor, other, &cur, &mut scratch);
                core::mem::swap(&mut cur, &mut scratch);
            }
            match cur.last() {
                Some(&(low, _)) => {
                    pivot_col[low as usize] = c as u32;
                    pivots.push(Some(low));
                    rank += 1;
                }
                None => pivots.push(None),
            }
            reduced.push(cur);
        }
        Reduction { rank, pivots }
    }
}

struct Reduction {
    rank: usize,
    // pivot row of each reduced column
    pivots: Vec<Option<u32>>,
}

// out = y + a * x, both sparse and sorted by row.
fn axpy(p: Prime, a: u32, x: &[(u32, u32)], y: &[(u32, u32)], out: &mut Vec<(u32, u32)>) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, p.mul(a, x[i].1)));
            i += 1;
        } else if take_y {
            out.push(y[j]);
            j += 1;
        } else {
            let v = p.add(y[j].1, p.mul(a, x[i].1));
            if v != 0 {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
}

/// Boundary map `∂_j`: rows are `(j-1)`-simplices, columns `j`-simplices;
/// the column of `σ` carries `(-1)^i` at the face deleting position `i`.
pub fn boundary_matrix(
    c: &OrderedComplex,
    j: usize,
    prime: Prime,
) -> Result<FieldMatrix, HomologyError> {
    if j == 0 || j > c.max_dim() {
        return Err(HomologyError::BoundaryOutOfRange {
            j,
            max_dim: c.max_dim(),
        });
    }
    let mut m = FieldMatrix::zeros(c.num_simplices(j - 1), 0, prime);
    let mut face = Vec::with_capacity(j);
    for s in c.simplices(j) {
        let mut entries = Vec::with_capacity(j + 1);
        for pos in 0..=j {
            face.clear();
            face.extend_from_slice(&s[..pos]);
            face.extend_from_slice(&s[pos + 1..]);
            let row = c.index_of(&face).expect("complex is closed under faces");
            entries.push((row, if pos % 2 == 0 { 1 } else { -1 }));
        }
        m.push_column(entries);
    }
    Ok(m)
}

/// Betti numbers by degree. Degrees never computed read as absent.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiVector {
    by_degree: BTreeMap<usize, usize>,
}

impl BettiVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, degree: usize, value: usize) {
        self.by_degree.insert(degree, value);
    }

    /// `β_j` if computed. Degrees above the largest computed one read as 0.
    pub fn get(&self, degree: usize) -> Option<usize> {
        match self.by_degree.get(&degree) {
            Some(&v) => Some(v),
            None if self.max_degree().is_none_or(|m| degree > m) => Some(0),
            None => None,
        }
    }

    /// `β_j`, treating anything not computed as zero.
    pub fn beta(&self, degree: usize) -> usize {
        self.get(degree).unwrap_or(0)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.by_degree.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.by_degree.iter().map(|(&d, &v)| (d, v))
    }
}

impl FromIterator<(usize, usize)> for BettiVector {
    fn from_iter<T: IntoIterator<Item = (usize, usize)>>(iter: T) -> Self {
        BettiVector {
            by_degree: iter.into_iter().collect(),
        }
    }
}

fn check_degrees(c: &OrderedComplex, degrees: &[usize]) -> Result<(), HomologyError> {
    if let Some(&d) = degrees.iter().max() {
        if d + 1 > c.max_dim() {
            return Err(HomologyError::InsufficientMaxDim {
                degree: d,
                max_dim: c.max_dim(),
            });
        }
    }
    Ok(())
}

/// `β_j = #j-simplices - rank ∂_j - rank ∂_{j+1}` for every requested degree.
pub fn betti(
    c: &OrderedComplex,
    degrees: &[usize],
    prime: Prime,
) -> Result<BettiVector, HomologyError> {
    check_degrees(c, degrees)?;
    let mut needed: Vec<usize> = degrees
        .iter()
        .flat_map(|&j| [j, j + 1])
        .filter(|&k| k >= 1)
        .collect();
    needed.sort_unstable();
    needed.dedup();

    // Highest dimension first so pivots of ∂_{k+1} can clear columns of ∂_k.
    let mut ranks: BTreeMap<usize, usize> = BTreeMap::new();
    let mut cleared: Option<(usize, Vec<bool>)> = None;
    for &k in needed.iter().rev() {
        let m = boundary_matrix(c, k, prime)?;
        let skip = match &cleared {
            Some((dim, mask)) if *dim == k => Some(mask.as_slice()),
            _ => None,
        };
        let red = m.reduce(skip);
        // A pivot row of ∂_k is a (k-1)-simplex whose column in ∂_{k-1}
        // reduces to zero.
        let mut mask = vec![false; m.num_rows()];
        let mut cleared_count = 0;
        for low in red.pivots.iter().flatten() {
            mask[*low as usize] = true;
            cleared_count += 1;
        }
        debug_assert_eq!(cleared_count, red.rank);
        ranks.insert(k, red.rank);
        cleared = Some((k - 1, mask));
    }

    Ok(degrees
        .iter()
        .map(|&j| {
            let n = c.num_simplices(j);
            let r_j = if j == 0 { 0 } else { ranks[&j] };
            let r_next = ranks[&(j + 1)];
            (j, n - r_j - r_next)
        })
        .collect())
}

/// Largest complex (total simplex count) the oracle accepts.
pub const ORACLE_LIMIT: usize = 256;

/// Independent Betti computation: builds explicit kernel bases of `∂_j` and
/// image spanning sets of `∂_{j+1}` by dense row echelon on the transposed
/// boundary matrices, and returns `dim ker - dim im`.
pub fn betti_oracle(
    c: &OrderedComplex,
    degrees: &[usize],
    prime: Prime,
) -> Result<BettiVector, HomologyError> {
    let total = c.total_simplices();
    if total > ORACLE_LIMIT {
        return Err(HomologyError::OracleGuard {
            simplices: total,
            limit: ORACLE_LIMIT,
        });
    }
    check_degrees(c, degrees)?;
    let mut out = BettiVector::new();
    for &j in degrees {
        let n_j = c.num_simplices(j);
        let kernel = if j == 0 {
            identity(n_j)
        } else {
            kernel_basis(&boundary_matrix(c, j, prime)?.to_dense(), prime)
        };
        let image = echelon_rows(transpose(&boundary_matrix(c, j + 1, prime)?.to_dense()), prime);
        if j > 0 {
            let d = boundary_matrix(c, j, prime)?.to_dense();
            for v in kernel.iter().chain(&image) {
                assert!(apply(&d, v, prime).iter().all(|&x| x == 0), "oracle basis check failed");
            }
        }
        out.insert(j, kernel.len() - image.len());
    }
    Ok(out)
}

fn identity(n: usize) -> Vec<Vec<u32>> {
    (0..n)
        .map(|i| {
            let mut r = vec![0; n];
            r[i] = 1;
            r
        })
        .collect()
}

fn transpose(m: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|c| (0..rows).map(|r| m[r][c]).collect()).collect()
}

fn apply(m: &[Vec<u32>], v: &[u32], p: Prime) -> Vec<u32> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0, |acc, (&a, &b)| p.add(acc, p.mul(a, b)))
        })
        .collect()
}

// Forward elimination on rows, returning the nonzero echelon rows.
fn echelon_rows(mut rows: Vec<Vec<u32>>, p: Prime) -> Vec<Vec<u32>> {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = p.inv(rows[rank][col]);
        for x in rows[rank].iter_mut() {
            *x = p.mul(*x, inv);
        }
        for r in rank + 1..rows.len() {
            let f = rows[r][col];
            if f != 0 {
                for k in col..width {
                    let sub = p.mul(f, rows[rank][k]);
                    rows[r][k] = p.sub(rows[r][k], sub);
                }
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

// Kernel of the map with matrix `m` (rows x cols): eliminate on [mᵀ | I];
// rows whose left block vanishes carry kernel vectors on the right.
fn kernel_basis(m: &[Vec<u32>], p: Prime) -> Vec<Vec<u32>> {
    let t = transpose(m);
    let n = t.len();
    let left = m.len();
    let mut aug: Vec<Vec<u32>> = t
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.resize(left, 0);
            row.extend((0..n).map(|k| u32::from(k == i)));
            row
        })
        .collect();
    let mut rank = 0;
    for col in 0..left {
        let Some(piv) = (rank..n).find(|&r| aug[r][col] != 0) else {
            continue;
        };
        aug.swap(rank, piv);
        let inv = p.inv(aug[rank][col]);
        for x in aug[rank].iter_mut() {
            *x = p.mul(*x, inv);
        }
        for r in 0..n {
            if r != rank && aug[r][col] != 0 {
                let f = aug[r][col];
                for k in 0..left + n {
                    let sub = p.mul(f, aug[rank][k]);
                    aug[r][k] = p.sub(aug[r][k], sub);
                }
            }
        }
        rank += 1;
    }
    aug.into_iter()
        .skip(rank)
        .map(|row| row[left..].to_vec())
        .collect()
}
