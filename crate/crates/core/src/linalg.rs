//! Sparse matrices over the rationals and fraction-free elimination.
//!
//! Every row is scaled to a primitive integer vector before elimination.
//! Small matrices go through dense Bareiss elimination; larger ones through
//! a sparse row-by-row echelon build where each combination is divided by the
//! content of the result. Both produce the same echelon row space, from which
//! kernels are read off by back substitution.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::Scalar;

/// Matrices with fewer columns than this use dense Bareiss elimination.
pub const DENSE_COLUMN_LIMIT: usize = 256;

/// A sparse vector: sorted `(index, value)` pairs with no zeros stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseVector {
    dim: usize,
    entries: Vec<(usize, Scalar)>,
}

impl SparseVector {
    pub fn zero(dim: usize) -> Self {
        SparseVector { dim, entries: Vec::new() }
    }

    /// Builds a vector from arbitrary `(index, value)` pairs; repeated
    /// indices are summed.
    pub fn from_pairs(dim: usize, pairs: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut map: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, v) in pairs {
            assert!(i < dim, "index {i} out of bounds for dimension {dim}");
            *map.entry(i).or_default() += &v;
        }
        SparseVector { dim, entries: map.into_iter().filter(|(_, v)| !v.is_zero()).collect() }
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        SparseVector {
            dim: values.len(),
            entries: values.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }
}

/// A sparse matrix stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, Scalar)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = SparseMatrix::zeros(k, k);
        for i in 0..k {
            m.data[i].push((i, Scalar::one()));
        }
        m
    }

    /// Builds from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets(rows: usize, cols: usize, triplets: impl IntoIterator<Item = (usize, usize, Scalar)>) -> Self {
        let mut maps: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); rows];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "entry ({r},{c}) out of bounds for {rows}x{cols}");
            *maps[r].entry(c).or_default() += &v;
        }
        SparseMatrix {
            rows,
            cols,
            data: maps.into_iter().map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect()).collect(),
        }
    }

    pub fn from_dense(rows: &[Vec<Scalar>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let triplets = rows.iter().enumerate().flat_map(|(r, row)| {
            assert_eq!(row.len(), cols, "ragged dense matrix");
            row.iter().enumerate().map(move |(c, v)| (r, c, v.clone()))
        });
        SparseMatrix::from_triplets(rows.len(), cols, triplets)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let dense: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|&v| Scalar::from(v)).collect()).collect();
        SparseMatrix::from_dense(&dense)
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[SparseVector]) -> Self {
        let triplets = columns.iter().enumerate().flat_map(|(c, v)| {
            assert_eq!(v.dim(), rows);
            v.entries().iter().map(move |(r, x)| (*r, c, x.clone()))
        });
        SparseMatrix::from_triplets(rows, columns.len(), triplets)
    }

    /// Builds a matrix whose rows are the given vectors.
    pub fn from_rows(cols: usize, rows: &[SparseVector]) -> Self {
        SparseMatrix {
            rows: rows.len(),
            cols,
            data: rows
                .iter()
                .map(|v| {
                    assert_eq!(v.dim(), cols);
                    v.entries().to_vec()
                })
                .collect(),
        }
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(blocks: &[SparseMatrix]) -> Self {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let mut data = Vec::new();
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            data.extend(b.data.iter().cloned());
        }
        SparseMatrix { rows: data.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        match self.data[r].binary_search_by_key(&c, |(j, _)| *j) {
            Ok(k) => self.data[r][k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn row(&self, r: usize) -> &[(usize, Scalar)] {
        &self.data[r]
    }

    /// `self - other`, entrywise.
    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let triplets = self
            .data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v.clone())))
            .chain(other.data.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, -v))));
        SparseMatrix::from_triplets(self.rows, self.cols, triplets)
    }

    pub fn mul_vec(&self, v: &SparseVector) -> SparseVector {
        assert_eq!(v.dim(), self.cols);
        let dense = v.to_dense();
        let out = self
            .data
            .iter()
            .map(|row| row.iter().filter(|(c, _)| !dense[*c].is_zero()).map(|(c, x)| x * &dense[*c]).sum::<Scalar>());
        SparseVector::from_dense(&out.collect::<Vec<_>>())
    }
}

/// Which elimination kernel to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Elimination {
    /// Dense Bareiss for matrices with fewer than [`DENSE_COLUMN_LIMIT`]
    /// columns and no more rows than columns, sparse otherwise. Tall stacks
    /// of sparse blocks mostly reduce to zero rows, which the sparse path
    /// discards cheaply.
    #[default]
    Auto,
    Dense,
    Sparse,
}

/// An integer row in echelon form: its leading column and sorted entries.
type IntRow = Vec<(usize, BigInt)>;

fn primitive_row(row: &[(usize, Scalar)]) -> IntRow {
    if row.is_empty() {
        return Vec::new();
    }
    let lcm = row.iter().fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    let ints: IntRow = row.iter().map(|(c, v)| (*c, v.numer() * (&lcm / v.denom()))).collect();
    make_primitive(ints)
}

fn make_primitive(mut row: IntRow) -> IntRow {
    let Some(mut g) = row.first().map(|(_, v)| v.abs()) else {
        return row;
    };
    for (_, v) in &row[1..] {
        if g.is_one() {
            break;
        }
        g = g.gcd(v);
    }
    // Normalize sign so the leading entry is positive.
    if row[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
    row
}

/// `s * a - t * b` for sorted sparse integer rows.
fn combine(s: &BigInt, a: &IntRow, t: &BigInt, b: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map_or(usize::MAX, |e| e.0);
        let cb = b.get(j).map_or(usize::MAX, |e| e.0);
        if ca < cb {
            out.push((ca, s * &a[i].1));
            i += 1;
        } else if cb < ca {
            out.push((cb, -(t * &b[j].1)));
            j += 1;
        } else {
            let v = s * &a[i].1 - t * &b[j].1;
            if !v.is_zero() {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Row echelon form with one row per pivot column, keyed by pivot column.
struct Echelon {
    cols: usize,
    pivots: BTreeMap<usize, IntRow>,
}

fn echelon_sparse(m: &SparseMatrix) -> Echelon {
    let mut pivots: BTreeMap<usize, IntRow> = BTreeMap::new();
    for row in &m.data {
        let mut r = primitive_row(row);
        while let Some(&(lead, _)) = r.first() {
            match pivots.get(&lead) {
                Some(p) => {
                    let (pl, rl) = (&p[0].1, &r[0].1);
                    let g = pl.gcd(rl);
                    let (s, t) = (pl / &g, rl / &g);
                    r = make_primitive(combine(&s, &r, &t, p));
                }
                None => {
                    pivots.insert(lead, r);
                    break;
                }
            }
        }
    }
    Echelon { cols: m.cols, pivots }
}

fn echelon_dense(m: &SparseMatrix) -> Echelon {
    let cols = m.cols;
    let mut a: Vec<Vec<BigInt>> = m
        .data
        .iter()
        .map(|row| {
            let mut dense = vec![BigInt::zero(); cols];
            for (c, v) in primitive_row(row) {
                dense[c] = v;
            }
            dense
        })
        .filter(|r| r.iter().any(|v| !v.is_zero()))
        .collect();
    let nrows = a.len();
    let mut prev = BigInt::one();
    let mut k = 0;
    let mut pivots = BTreeMap::new();
    for col in 0..cols {
        if k == nrows {
            break;
        }
        let Some(pr) = (k..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(k, pr);
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[col];
        for row in bottom.iter_mut() {
            let factor = row[col].clone();
            for j in col..cols {
                let v = (pivot * &row[j] - &factor * &pivot_row[j]).div_floor(&prev);
                row[j] = v;
            }
            debug_assert!(row[col].is_zero());
        }
        prev = pivot.clone();
        let int_row: IntRow =
            a[k].iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(c, v)| (c, v.clone())).collect();
        pivots.insert(col, make_primitive(int_row));
        k += 1;
    }
    Echelon { cols, pivots }
}

fn echelon(m: &SparseMatrix, how: Elimination) -> Echelon {
    match how {
        Elimination::Dense => echelon_dense(m),
        Elimination::Sparse => echelon_sparse(m),
        Elimination::Auto if m.cols < DENSE_COLUMN_LIMIT && m.rows <= m.cols => echelon_dense(m),
        Elimination::Auto => echelon_sparse(m),
    }
}

impl Echelon {
    fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn kernel(&self) -> Vec<SparseVector> {
        let free: Vec<usize> = (0..self.cols).filter(|c| !self.pivots.contains_key(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x: BTreeMap<usize, Scalar> = BTreeMap::new();
                x.insert(f, Scalar::one());
                for (&lead, row) in self.pivots.iter().rev() {
                    let mut acc = Scalar::zero();
                    for (c, v) in &row[1..] {
                        if let Some(xc) = x.get(c) {
                            acc += &(xc * &Scalar::from(v.clone()));
                        }
                    }
                    if !acc.is_zero() {
                        let lead_coeff = Scalar::from(row[0].1.clone());
                        x.insert(lead, -(acc / lead_coeff));
                    }
                }
                SparseVector::from_pairs(self.cols, x)
            })
            .collect()
    }
}

/// A basis of `{v : Mv = 0}`, one vector per non-pivot column `f`, with a 1
/// in coordinate `f` and zeros at every other non-pivot coordinate.
pub fn nullspace_basis(m: &SparseMatrix) -> Vec<SparseVector> {
    nullspace_basis_using(m, Elimination::Auto)
}

pub fn nullspace_basis_using(m: &SparseMatrix, how: Elimination) -> Vec<SparseVector> {
    echelon(m, how).kernel()
}

pub fn rank(m: &SparseMatrix) -> usize {
    rank_using(m, Elimination::Auto)
}

pub fn rank_using(m: &SparseMatrix, how: Elimination) -> usize {
    echelon(m, how).rank()
}

/// Rank of a set of vectors of a common dimension.
pub fn rank_of_vectors(dim: usize, vectors: &[SparseVector]) -> usize {
    rank(&SparseMatrix::from_rows(dim, vectors))
}
