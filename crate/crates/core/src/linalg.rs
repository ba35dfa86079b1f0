//! Exact sparse linear algebra: matrices between weight spaces, kernels, spans.
//!
//! Elimination uses a fixed pivot rule (first non-zero column, earliest row),
//! so kernel and span bases are reproducible.

use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// A sparse vector as (index, value) pairs sorted by index, no zeros stored.
pub type SparseVec<S> = Vec<(usize, S)>;

/// `a + factor * b` on sorted sparse vectors.
pub fn axpy<S: Scalar>(a: &[(usize, S)], factor: &S, b: &[(usize, S)]) -> SparseVec<S> {
    if factor.is_zero() {
        return a.to_vec();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, factor.clone() * b[j].1.clone()));
            j += 1;
        } else {
            let v = a[i].1.clone() + factor.clone() * b[j].1.clone();
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn scale<S: Scalar>(v: &mut SparseVec<S>, c: &S) {
    for (_, x) in v.iter_mut() {
        *x *= c;
    }
}

/// A sparse `rows x cols` matrix stored by columns.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<S> {
    rows: usize,
    cols: Vec<SparseVec<S>>,
}

impl<S: Scalar> SparseMatrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols: vec![Vec::new(); cols] }
    }

    /// Columns must be sorted sparse vectors with indices below `rows`.
    pub fn from_columns(rows: usize, cols: Vec<SparseVec<S>>) -> Self {
        debug_assert!(cols.iter().all(|c| c.windows(2).all(|w| w[0].0 < w[1].0)));
        debug_assert!(cols.iter().all(|c| c.iter().all(|(i, _)| *i < rows)));
        SparseMatrix { rows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, S)] {
        &self.cols[j]
    }

    pub fn get(&self, i: usize, j: usize) -> S {
        match self.cols[j].binary_search_by_key(&i, |(r, _)| *r) {
            Ok(p) => self.cols[j][p].1.clone(),
            Err(_) => S::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    /// Row vectors (functionals on the column space).
    pub fn rows(&self) -> Vec<SparseVec<S>> {
        let mut rows: Vec<SparseVec<S>> = vec![Vec::new(); self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                rows[*i].push((j, v.clone()));
            }
        }
        rows
    }

    pub fn transpose(&self) -> Self {
        SparseMatrix { rows: self.cols.len(), cols: self.rows() }
    }

    pub fn mul_vec(&self, x: &[(usize, S)]) -> SparseVec<S> {
        let mut acc: BTreeMap<usize, S> = BTreeMap::new();
        for (j, xj) in x {
            for (i, a) in &self.cols[*j] {
                let e = acc.entry(*i).or_insert_with(S::zero);
                *e += &(a.clone() * xj.clone());
            }
        }
        acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    pub fn mul(&self, other: &SparseMatrix<S>) -> SparseMatrix<S> {
        assert_eq!(self.ncols(), other.nrows(), "matrix product shape mismatch");
        SparseMatrix { rows: self.rows, cols: other.cols.iter().map(|c| self.mul_vec(c)).collect() }
    }

    pub fn add_scaled(&self, other: &SparseMatrix<S>, c: &S) -> SparseMatrix<S> {
        assert_eq!((self.nrows(), self.ncols()), (other.nrows(), other.ncols()));
        SparseMatrix { rows: self.rows, cols: self.cols.iter().zip(&other.cols).map(|(a, b)| axpy(a, c, b)).collect() }
    }

    /// Multiplies row `i` by `d[i]`.
    pub fn scale_rows(&self, d: &[S]) -> SparseMatrix<S> {
        let cols = self.cols.iter().map(|c| c.iter().map(|(i, v)| (*i, v.clone() * d[*i].clone())).collect()).collect();
        SparseMatrix { rows: self.rows, cols }
    }

    /// First entry where the two matrices differ, as (row, col, self, other).
    pub fn first_difference(&self, other: &SparseMatrix<S>) -> Option<(usize, usize, S, S)> {
        for j in 0..self.ncols().max(other.ncols()) {
            let empty = Vec::new();
            let a = self.cols.get(j).unwrap_or(&empty);
            let b = other.cols.get(j).unwrap_or(&empty);
            let diff = axpy(a, &-S::one(), b);
            if let Some((i, _)) = diff.first() {
                return Some((*i, j, self.get(*i, j), other.get(*i, j)));
            }
        }
        None
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.ncols());
        for r in self.rows() {
            ech.insert(r);
        }
        ech.rank()
    }
}

/// Row-echelon accumulator. Rows are reduced on insertion; each pivot row is
/// normalised to leading coefficient 1.
#[derive(Clone, Debug)]
pub struct Echelon<S> {
    width: usize,
    // pivot column -> row with that leading column
    pivots: BTreeMap<usize, SparseVec<S>>,
}

impl<S: Scalar> Echelon<S> {
    pub fn new(width: usize) -> Self {
        Echelon { width, pivots: BTreeMap::new() }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the current pivots; the remainder has no entry
    /// in a pivot column before its own leading column.
    pub fn reduce(&self, mut row: SparseVec<S>) -> SparseVec<S> {
        let mut start = 0;
        loop {
            let Some(pos) = row[start..].iter().position(|(c, _)| self.pivots.contains_key(c)) else {
                return row;
            };
            let idx = start + pos;
            let (col, val) = row[idx].clone();
            let piv = &self.pivots[&col];
            row = axpy(&row, &-val, piv);
            // entries before idx are untouched since the pivot row starts at col
            start = idx;
        }
    }

    /// Inserts a row; returns `true` if it increased the rank.
    pub fn insert(&mut self, row: SparseVec<S>) -> bool {
        let mut row = self.reduce(row);
        let Some((lead, val)) = row.first().cloned() else {
            return false;
        };
        let inv = S::one() / val;
        scale(&mut row, &inv);
        self.pivots.insert(lead, row);
        true
    }

    pub fn contains(&self, row: SparseVec<S>) -> bool {
        self.reduce(row).is_empty()
    }

    /// Fully reduced rows, ordered by pivot column.
    pub fn reduced_rows(&self) -> Vec<SparseVec<S>> {
        let mut done: BTreeMap<usize, SparseVec<S>> = BTreeMap::new();
        for (&col, row) in self.pivots.iter().rev() {
            let mut r = row.clone();
            // eliminate later pivots (already fully reduced)
            loop {
                let hit = r.iter().skip(1).find(|(c, _)| done.contains_key(c)).cloned();
                match hit {
                    Some((c, v)) => r = axpy(&r, &-v, &done[&c]),
                    None => break,
                }
            }
            done.insert(col, r);
        }
        done.into_values().collect()
    }

    /// Basis of `{x : row . x = 0 for every inserted row}`, one vector per free
    /// column, in increasing free-column order.
    pub fn kernel(&self) -> Vec<SparseVec<S>> {
        let rref = self.reduced_rows();
        let pivot_cols: Vec<usize> = rref.iter().map(|r| r[0].0).collect();
        let mut free_to_entries: BTreeMap<usize, Vec<(usize, S)>> = BTreeMap::new();
        for r in &rref {
            let p = r[0].0;
            for (c, v) in &r[1..] {
                free_to_entries.entry(*c).or_default().push((p, -v.clone()));
            }
        }
        let is_pivot = {
            let mut flags = vec![false; self.width];
            for p in &pivot_cols {
                flags[*p] = true;
            }
            flags
        };
        (0..self.width)
            .filter(|c| !is_pivot[*c])
            .map(|f| {
                let mut v = free_to_entries.remove(&f).unwrap_or_default();
                v.push((f, S::one()));
                v.sort_by_key(|(i, _)| *i);
                v
            })
            .collect()
    }
}

/// Kernel of the vertically stacked matrices (all with the same column count).
pub fn stacked_kernel<S: Scalar>(width: usize, mats: &[&SparseMatrix<S>]) -> Vec<SparseVec<S>> {
    let mut ech = Echelon::new(width);
    for m in mats {
        assert_eq!(m.ncols(), width, "stacked matrices need equal column counts");
        for r in m.rows() {
            ech.insert(r);
        }
    }
    ech.kernel()
}

/// A subspace of a coordinate space, kept as an echelon basis.
#[derive(Clone, Debug)]
pub struct Subspace<S> {
    ech: Echelon<S>,
}

impl<S: Scalar> Subspace<S> {
    pub fn new(ambient_dim: usize) -> Self {
        Subspace { ech: Echelon::new(ambient_dim) }
    }

    pub fn spanned_by<I: IntoIterator<Item = SparseVec<S>>>(ambient_dim: usize, vecs: I) -> Self {
        let mut s = Self::new(ambient_dim);
        for v in vecs {
            s.insert(v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.ech.width()
    }

    pub fn dim(&self) -> usize {
        self.ech.rank()
    }

    pub fn insert(&mut self, v: SparseVec<S>) -> bool {
        self.ech.insert(v)
    }

    pub fn contains(&self, v: SparseVec<S>) -> bool {
        self.ech.contains(v)
    }

    /// Reduced-echelon basis.
    pub fn basis(&self) -> Vec<SparseVec<S>> {
        self.ech.reduced_rows()
    }

    pub fn contains_subspace(&self, other: &Subspace<S>) -> bool {
        other.basis().into_iter().all(|v| self.contains(v))
    }
}
