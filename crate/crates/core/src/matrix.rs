//! Dense exact matrices: row reduction, kernels, solving, rank.
//!
//! Everything downstream reduces to the three primitives here — `rank`,
//! `kernel_basis` and `solve` — run over canonical scalars. Matrices are
//! row-major and act on column vectors, so a map `k^m -> k^n` is an
//! `n x m` matrix and composition is matrix product.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            field,
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let entries: Vec<Scalar> = rows.into_iter().flatten().collect();
        if entries.iter().any(|e| e.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Matrix {
            field,
            rows: r,
            cols: c,
            entries,
        })
    }

    pub fn from_flat(field: FieldSpec, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if entries.iter().any(|e| e.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_i64(field: FieldSpec, data: &[&[i64]]) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        Matrix::from_fn(field, rows, cols, |i, j| field.from_i64(data[i][j]))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn neg(&self) -> Matrix {
        self.map(|e| e.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        self.map(|e| if e.is_zero() { e.clone() } else { e.mul(c) })
    }

    fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, other.rows,
            "matrix product shape mismatch {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Matrix::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for j in 0..self.cols {
                    let a = self.at(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = acc.add(&a.mul(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    /// Stacks `[self; other]` vertically.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Stacks `[self | other]` horizontally.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                other.at(i, j - self.cols).clone()
            }
        })
    }

    /// Assembles a block matrix from a grid of blocks. Every row of blocks
    /// must agree in height and every column of blocks in width.
    pub fn from_blocks(field: FieldSpec, grid: &[Vec<&Matrix>]) -> Matrix {
        let row_heights: Vec<usize> = grid.iter().map(|r| r[0].rows).collect();
        let col_widths: Vec<usize> = grid
            .first()
            .map(|r| r.iter().map(|b| b.cols).collect())
            .unwrap_or_default();
        let rows: usize = row_heights.iter().sum();
        let cols: usize = col_widths.iter().sum();
        let mut out = Matrix::zero(field, rows, cols);
        let mut roff = 0;
        for (bi, blocks) in grid.iter().enumerate() {
            let mut coff = 0;
            for (bj, block) in blocks.iter().enumerate() {
                assert_eq!(block.rows, row_heights[bi]);
                assert_eq!(block.cols, col_widths[bj]);
                for i in 0..block.rows {
                    for j in 0..block.cols {
                        if !block.at(i, j).is_zero() {
                            out.set(roff + i, coff + j, block.at(i, j).clone());
                        }
                    }
                }
                coff += block.cols;
            }
            roff += row_heights[bi];
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn submatrix_cols(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, cols.len(), |i, j| {
            self.at(i, cols[j]).clone()
        })
    }

    pub fn submatrix_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, rows.len(), self.cols, |i, j| {
            self.at(rows[i], j).clone()
        })
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            // prefer the simplest nonzero pivot to keep entries small
            let mut best: Option<(usize, usize)> = None;
            for r in row..self.rows {
                let e = self.at(r, col);
                if !e.is_zero() {
                    let c = e.complexity();
                    if best.map_or(true, |(_, bc)| c < bc) {
                        best = Some((r, c));
                    }
                }
            }
            let Some((piv, _)) = best else { continue };
            self.swap_rows(row, piv);
            let inv = self.at(row, col).inv().unwrap();
            if !inv.is_one() {
                for j in col..self.cols {
                    let e = self.at(row, j);
                    if !e.is_zero() {
                        let v = e.mul(&inv);
                        self.set(row, j, v);
                    }
                }
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.at(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..self.cols {
                    let e = self.at(row, j);
                    if e.is_zero() {
                        continue;
                    }
                    let v = self.at(r, j).sub(&factor.mul(e));
                    self.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// A basis of the right null space, returned as the columns of a matrix
    /// with `cols() - rank()` columns.
    pub fn kernel_basis(&self) -> Matrix {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zero(self.field, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis.set(fc, k, self.field.one());
            for (r, &pc) in pivots.iter().enumerate() {
                let e = m.at(r, fc);
                if !e.is_zero() {
                    basis.set(pc, k, e.neg());
                }
            }
        }
        basis
    }

    /// Solves `self * x = b` exactly; `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let rhs = Matrix::from_fn(self.field, self.rows, 1, |i, _| b[i].clone());
        self.solve_matrix(&rhs).map(|x| x.column(0))
    }

    /// Solves `self * X = B` for all columns at once.
    pub fn solve_matrix(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows);
        let mut aug = self.hstack(b);
        let pivots = aug.rref_in_place();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zero(self.field, self.cols, b.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                let e = aug.at(r, self.cols + j);
                if !e.is_zero() {
                    x.set(pc, j, e.clone());
                }
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let id = Matrix::identity(self.field, self.rows);
        let x = self.solve_matrix(&id)?;
        if self.mul(&x) == id {
            Some(x)
        } else {
            None
        }
    }

    /// A basis of the column space: the columns of `self` sitting at the
    /// pivot positions of its echelon form.
    pub fn image_basis(&self) -> Matrix {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        self.submatrix_cols(&pivots)
    }
}

/// Coordinates on the quotient `k^n / span(columns of sub)`: a projection
/// whose kernel is exactly the subspace, together with a section.
pub struct QuotientData {
    /// `(n - r) x n`, surjective, kernel = subspace.
    pub projection: Matrix,
    /// `n x (n - r)` with `projection * section = id`.
    pub section: Matrix,
}

pub fn quotient_data(sub: &Matrix) -> QuotientData {
    let field = sub.field();
    let n = sub.rows();
    let basis = sub.image_basis();
    let r = basis.cols();
    // coordinates not hit by a pivot of the subspace complete it to a basis
    let mut bt = basis.transpose();
    let pivot_coords = bt.rref_in_place();
    let free: Vec<usize> = (0..n).filter(|c| !pivot_coords.contains(c)).collect();
    let mut section = Matrix::zero(field, n, free.len());
    for (k, &c) in free.iter().enumerate() {
        section.set(c, k, field.one());
    }
    let full = basis.hstack(&section);
    let inv = full.inverse().expect("subspace basis plus complement is invertible");
    let proj_rows: Vec<usize> = (r..n).collect();
    QuotientData {
        projection: inv.submatrix_rows(&proj_rows),
        section,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn kernel_of_zero_matrix() {
        let m = Matrix::zero(q(), 2, 2);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 2);
        assert_eq!(k, Matrix::identity(q(), 2));
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let m = Matrix::identity(q(), 3);
        assert_eq!(m.kernel_basis().cols(), 0);
    }

    #[test]
    fn kernel_of_rank_one_matrix() {
        // row-reduction oracle: [[1,2],[2,4]] has kernel spanned by (2,-1)
        let m = Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        let v = k.column(0);
        // proportional to (2, -1)
        let lhs = v[0].mul(&q().from_i64(-1));
        let rhs = v[1].mul(&q().from_i64(2));
        assert_eq!(lhs, rhs);
        assert!(m.apply(&v).iter().all(|e| e.is_zero()));
    }

    #[test]
    fn solve_identity_returns_rhs() {
        let m = Matrix::identity(q(), 2);
        let b = vec![q().from_i64(3), q().from_i64(1)];
        assert_eq!(m.solve(&b).unwrap(), b);
    }

    #[test]
    fn solve_zero_matrix_nonzero_rhs_fails() {
        let m = Matrix::zero(q(), 2, 2);
        let b = vec![q().from_i64(1), q().zero()];
        assert!(m.solve(&b).is_none());
    }

    #[test]
    fn solve_upper_triangular() {
        // back-substitution oracle: [[1,1],[0,1]] x = (3,1) has x = (2,1)
        let m = Matrix::from_i64(q(), &[&[1, 1], &[0, 1]]);
        let b = vec![q().from_i64(3), q().from_i64(1)];
        assert_eq!(m.solve(&b).unwrap(), vec![q().from_i64(2), q().from_i64(1)]);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::zero(q(), 3, 4).rank(), 0);
        assert_eq!(Matrix::identity(q(), 4).rank(), 4);
        assert_eq!(Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn rank_over_prime_field_differs_from_rationals() {
        let f5 = FieldSpec::prime(5).unwrap();
        let m = Matrix::from_i64(f5, &[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(), 1);
        let m = Matrix::from_i64(f5, &[&[1, 2], &[2, 9]]);
        // det = 5 = 0 mod 5
        assert_eq!(m.rank(), 1);
        let m = Matrix::from_i64(q(), &[&[1, 2], &[2, 9]]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn quotient_data_properties() {
        let sub = Matrix::from_i64(q(), &[&[1, 0], &[1, 1], &[0, 1]]);
        let qd = quotient_data(&sub);
        assert_eq!(qd.projection.rows(), 1);
        assert!(qd.projection.mul(&sub).is_zero());
        assert_eq!(
            qd.projection.mul(&qd.section),
            Matrix::identity(q(), 1)
        );
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_i64(q(), &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(q(), 2));
        assert!(Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
