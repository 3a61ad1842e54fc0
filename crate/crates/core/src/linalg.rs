//! Exact linear algebra over a [`FieldCtx`].
//!
//! Everything reduces to one routine: reduced row echelon form of a list of
//! sparse rows. Pivot rows are scaled to 1 and eliminated with exact
//! (reduced) field arithmetic; among candidate rows the entry of lowest
//! total degree is taken as pivot.

use std::fmt;

use crate::field::{FieldCtx, RatFunc};
use crate::{Error, Result};

pub type Vector = Vec<RatFunc>;

/// Sparse row: (column, nonzero entry), sorted by column.
pub(crate) type SparseRow = Vec<(usize, RatFunc)>;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    ctx: FieldCtx,
    rows: usize,
    cols: usize,
    entries: Vec<RatFunc>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.render()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub(crate) fn to_sparse(v: &[RatFunc]) -> SparseRow {
    v.iter().enumerate().filter(|(_, e)| !e.is_zero()).map(|(i, e)| (i, e.clone())).collect()
}

pub(crate) fn to_dense(ctx: &FieldCtx, row: &SparseRow, n: usize) -> Vector {
    let mut out = vec![ctx.zero(); n];
    for (c, e) in row {
        out[*c] = e.clone();
    }
    out
}

/// row + a * other.
pub(crate) fn axpy(row: &SparseRow, a: &RatFunc, other: &SparseRow) -> Result<SparseRow> {
    let mut out = Vec::with_capacity(row.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < other.len() {
        let take_row = j >= other.len() || (i < row.len() && row[i].0 < other[j].0);
        let take_other = i >= row.len() || (j < other.len() && other[j].0 < row[i].0);
        if take_row {
            out.push(row[i].clone());
            i += 1;
        } else if take_other {
            let e = if a.is_one() { other[j].1.clone() } else { a.mul(&other[j].1)? };
            out.push((other[j].0, e));
            j += 1;
        } else {
            let prod = if a.is_one() { other[j].1.clone() } else { a.mul(&other[j].1)? };
            let s = row[i].1.add(&prod)?;
            if !s.is_zero() {
                out.push((row[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    Ok(out)
}

fn scale(row: &SparseRow, a: &RatFunc) -> Result<SparseRow> {
    if a.is_one() {
        return Ok(row.clone());
    }
    row.iter().map(|(c, e)| Ok((*c, e.mul(a)?))).collect()
}

fn entry(row: &SparseRow, col: usize) -> Option<&RatFunc> {
    row.binary_search_by_key(&col, |(c, _)| *c).ok().map(|k| &row[k].1)
}

/// Reduced row echelon form. Returns normalized pivot rows (pivot entry 1,
/// sorted by pivot column) and their pivot columns. Columns at or beyond
/// `stop` are never used as pivots.
pub(crate) fn rref(rows: Vec<SparseRow>, stop: usize) -> Result<(Vec<SparseRow>, Vec<usize>)> {
    let mut pending: Vec<SparseRow> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let mut pivots: Vec<(usize, SparseRow)> = Vec::new();
    loop {
        // next pivot column = smallest leading column among pending rows
        let Some(col) = pending.iter().filter_map(|r| r.first().map(|(c, _)| *c)).min() else {
            break;
        };
        if col >= stop {
            break;
        }
        let mut best: Option<(u32, usize)> = None;
        for (k, r) in pending.iter().enumerate() {
            if r[0].0 == col {
                let w = r[0].1.weight();
                if best.is_none_or(|(bw, _)| w < bw) {
                    best = Some((w, k));
                }
            }
        }
        let (_, k) = best.expect("some row leads at col");
        let prow = pending.swap_remove(k);
        let prow = scale(&prow, &prow[0].1.inv()?)?;
        for r in pending.iter_mut() {
            if r[0].0 == col {
                let a = r[0].1.clone();
                *r = axpy(r, &a, &prow)?;
            }
        }
        pending.retain(|r| !r.is_empty());
        pivots.push((col, prow));
    }
    // back substitution: clear pivot columns above
    pivots.sort_by_key(|(c, _)| *c);
    for k in (0..pivots.len()).rev() {
        let (col, prow) = pivots[k].clone();
        for (_, r) in pivots[..k].iter_mut() {
            if let Some(a) = entry(r, col).cloned() {
                *r = axpy(r, &a, &prow)?;
            }
        }
    }
    let cols = pivots.iter().map(|(c, _)| *c).collect();
    Ok((pivots.into_iter().map(|(_, r)| r).collect(), cols))
}

impl Matrix {
    pub fn zeros(ctx: &FieldCtx, rows: usize, cols: usize) -> Matrix {
        Matrix { ctx: ctx.clone(), rows, cols, entries: vec![ctx.zero(); rows * cols] }
    }

    pub fn identity(ctx: &FieldCtx, n: usize) -> Matrix {
        let mut m = Matrix::zeros(ctx, n, n);
        for i in 0..n {
            m.entries[i * n + i] = ctx.one();
        }
        m
    }

    pub fn from_rows(ctx: &FieldCtx, rows: Vec<Vector>) -> Result<Matrix> {
        let cols = rows.first().map_or(0, |r| r.len());
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            for e in &r {
                if e.ctx() != ctx {
                    return Err(Error::ContextMismatch);
                }
            }
            entries.extend(r);
        }
        Ok(Matrix { ctx: ctx.clone(), rows: nrows, cols, entries })
    }

    pub fn from_columns(ctx: &FieldCtx, nrows: usize, columns: &[Vector]) -> Result<Matrix> {
        let mut m = Matrix::zeros(ctx, nrows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != nrows {
                return Err(Error::DimensionMismatch("column length".into()));
            }
            for (i, e) in c.iter().enumerate() {
                m.set(i, j, e.clone());
            }
        }
        Ok(m)
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFunc {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RatFunc) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[RatFunc] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.ctx, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn add(&self, o: &Matrix) -> Result<Matrix> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::DimensionMismatch("matrix sum".into()));
        }
        let entries =
            self.entries.iter().zip(&o.entries).map(|(a, b)| a.add(b)).collect::<Result<_>>()?;
        Ok(Matrix { ctx: self.ctx.clone(), rows: self.rows, cols: self.cols, entries })
    }

    pub fn mul(&self, o: &Matrix) -> Result<Matrix> {
        if self.cols != o.rows {
            return Err(Error::DimensionMismatch("matrix product".into()));
        }
        let mut out = Matrix::zeros(&self.ctx, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let s = out.get(i, j).add(&a.mul(b)?)?;
                        out.set(i, j, s);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[RatFunc]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch("matrix-vector product".into()));
        }
        (0..self.rows)
            .map(|i| {
                let mut acc = self.ctx.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b)?)?;
                    }
                }
                Ok(acc)
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    fn sparse_rows(&self) -> Vec<SparseRow> {
        (0..self.rows).map(|i| to_sparse(self.row(i))).collect()
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(rref(self.sparse_rows(), self.cols)?.0.len())
    }

    /// One solution of `self * s = b`, or `None` if inconsistent. The result
    /// is re-substituted before being returned.
    pub fn solve(&self, b: &[RatFunc]) -> Result<Option<Vector>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch("right-hand side".into()));
        }
        let rows: Vec<SparseRow> = (0..self.rows)
            .map(|i| {
                let mut r = to_sparse(self.row(i));
                if !b[i].is_zero() {
                    r.push((self.cols, b[i].clone()));
                }
                r
            })
            .collect();
        let (red, pivots) = rref(rows, self.cols + 1)?;
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut s = vec![self.ctx.zero(); self.cols];
        for (r, &p) in red.iter().zip(&pivots) {
            if let Some(v) = entry(r, self.cols) {
                s[p] = v.clone();
            }
        }
        if self.mul_vec(&s)? != b {
            return Err(Error::ContractViolation("solve re-substitution failed".into()));
        }
        Ok(Some(s))
    }

    /// Basis of the null space, one vector per free column.
    pub fn kernel_basis(&self) -> Result<Vec<Vector>> {
        let (red, pivots) = rref(self.sparse_rows(), self.cols)?;
        let mut out = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![self.ctx.zero(); self.cols];
            v[f] = self.ctx.one();
            for (r, &p) in red.iter().zip(&pivots) {
                if let Some(e) = entry(r, f) {
                    v[p] = e.clone();
                }
            }
            out.push(v);
        }
        for v in &out {
            if self.mul_vec(v)?.iter().any(|e| !e.is_zero()) {
                return Err(Error::ContractViolation("kernel vector not annihilated".into()));
            }
        }
        Ok(out)
    }

    /// Canonical (reduced echelon) basis of the column space.
    pub fn image_basis(&self) -> Result<Vec<Vector>> {
        let t = self.transpose();
        let (red, _) = rref(t.sparse_rows(), t.cols)?;
        Ok(red.iter().map(|r| to_dense(&self.ctx, r, self.rows)).collect())
    }

    pub fn inverse(&self) -> Result<Option<Matrix>> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let rows: Vec<SparseRow> = (0..n)
            .map(|i| {
                let mut r = to_sparse(self.row(i));
                r.push((n + i, self.ctx.one()));
                r
            })
            .collect();
        let (red, pivots) = rref(rows, n)?;
        if pivots.len() < n {
            return Ok(None);
        }
        let mut inv = Matrix::zeros(&self.ctx, n, n);
        for (i, r) in red.iter().enumerate() {
            for (c, e) in r {
                if *c >= n {
                    inv.set(i, c - n, e.clone());
                }
            }
        }
        Ok(Some(inv))
    }
}

/// A subspace of F^n held in reduced row echelon form. Two subspaces are
/// equal iff their canonical bases are equal.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ctx: FieldCtx,
    ambient: usize,
    rows: Vec<SparseRow>,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {})", self.rows.len(), self.ambient)
    }
}

impl Subspace {
    pub fn span(ctx: &FieldCtx, ambient: usize, vectors: &[Vector]) -> Result<Subspace> {
        let rows = vectors
            .iter()
            .map(|v| {
                if v.len() != ambient {
                    Err(Error::DimensionMismatch("vector length".into()))
                } else {
                    Ok(to_sparse(v))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Subspace::from_sparse(ctx, ambient, rows)
    }

    pub(crate) fn from_sparse(ctx: &FieldCtx, ambient: usize, rows: Vec<SparseRow>) -> Result<Subspace> {
        let (rows, pivots) = rref(rows, ambient)?;
        Ok(Subspace { ctx: ctx.clone(), ambient, rows, pivots })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> Vec<Vector> {
        self.rows.iter().map(|r| to_dense(&self.ctx, r, self.ambient)).collect()
    }

    /// Coordinates with respect to the canonical basis, or `None` if outside.
    pub fn coordinates(&self, v: &[RatFunc]) -> Result<Option<Vector>> {
        let mut rest = to_sparse(v);
        let mut coords = Vec::with_capacity(self.rows.len());
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            let c = entry(&rest, p).cloned().unwrap_or_else(|| self.ctx.zero());
            if !c.is_zero() {
                rest = axpy(&rest, &c, r)?;
            }
            coords.push(c);
        }
        Ok(if rest.is_empty() { Some(coords) } else { None })
    }

    /// Remainder of v after reduction by the canonical basis; zero iff v is
    /// in the subspace.
    pub(crate) fn residue(&self, v: &[RatFunc]) -> Result<SparseRow> {
        let mut rest = to_sparse(v);
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if let Some(c) = entry(&rest, p).cloned() {
                rest = axpy(&rest, &c, r)?;
            }
        }
        Ok(rest)
    }

    pub fn contains(&self, v: &[RatFunc]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    pub fn contains_subspace(&self, o: &Subspace) -> Result<bool> {
        for v in o.basis() {
            if !self.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, o: &Subspace) -> Result<Subspace> {
        let mut rows = self.rows.clone();
        rows.extend(o.rows.iter().cloned());
        Subspace::from_sparse(&self.ctx, self.ambient, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> FieldCtx {
        FieldCtx::new(&["x", "y"]).unwrap()
    }

    fn m(k: &FieldCtx, rows: &[&[&str]]) -> Matrix {
        Matrix::from_rows(k, rows.iter().map(|r| r.iter().map(|s| k.parse(s).unwrap()).collect()).collect())
            .unwrap()
    }

    fn v(k: &FieldCtx, xs: &[&str]) -> Vector {
        xs.iter().map(|s| k.parse(s).unwrap()).collect()
    }

    #[test]
    fn solve_examples() {
        let k = ctx();
        let id = Matrix::identity(&k, 2);
        assert_eq!(id.solve(&v(&k, &["x", "y"])).unwrap(), Some(v(&k, &["x", "y"])));
        let a = m(&k, &[&["x", "0"], &["0", "x"]]);
        assert_eq!(a.solve(&v(&k, &["x^2", "x"])).unwrap(), Some(v(&k, &["x", "1"])));
        let z = m(&k, &[&["0"]]);
        assert_eq!(z.solve(&v(&k, &["1"])).unwrap(), None);
    }

    #[test]
    fn kernel_examples() {
        let k = ctx();
        assert_eq!(Matrix::zeros(&k, 2, 2).kernel_basis().unwrap().len(), 2);
        assert!(Matrix::identity(&k, 3).kernel_basis().unwrap().is_empty());
        assert_eq!(m(&k, &[&["1", "1"]]).kernel_basis().unwrap(), vec![v(&k, &["1", "1"])]);
    }

    #[test]
    fn image_examples() {
        let k = ctx();
        assert_eq!(Matrix::identity(&k, 3).image_basis().unwrap().len(), 3);
        assert!(Matrix::zeros(&k, 2, 2).image_basis().unwrap().is_empty());
        let a = m(&k, &[&["x", "x^2"], &["1", "x"]]);
        assert_eq!(a.image_basis().unwrap().len(), 1);
        assert_eq!(a.rank().unwrap() + a.kernel_basis().unwrap().len(), 2);
    }

    #[test]
    fn inverse_round_trip() {
        let k = ctx();
        let a = m(&k, &[&["x", "1"], &["y", "x + 1"]]);
        let inv = a.inverse().unwrap().unwrap();
        assert!(a.mul(&inv).unwrap().is_identity());
        assert!(m(&k, &[&["x", "x"], &["1", "1"]]).inverse().unwrap().is_none());
    }

    #[test]
    fn subspace_equality_is_canonical() {
        let k = ctx();
        let s1 = Subspace::span(&k, 2, &[v(&k, &["x", "1"]), v(&k, &["1", "0"])]).unwrap();
        let s2 = Subspace::span(&k, 2, &[v(&k, &["0", "y"]), v(&k, &["1", "1"])]).unwrap();
        assert_eq!(s1, s2);
        let l1 = Subspace::span(&k, 2, &[v(&k, &["x", "x^2"])]).unwrap();
        let l2 = Subspace::span(&k, 2, &[v(&k, &["1/x", "1"])]).unwrap();
        assert_eq!(l1, l2);
        assert!(l1.contains(&v(&k, &["y", "x*y"])).unwrap());
        assert!(!l1.contains(&v(&k, &["1", "1"])).unwrap());
    }
}
