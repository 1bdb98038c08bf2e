use std::fmt;

use super::field::{Field, Symbol};
use crate::error::{Error, Result};

/// Dense row-major matrix over GF(q).
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Symbol>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:?} {}x{}", self.field, self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Result of row reduction.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub matrix: Matrix,
    pub rank: usize,
    /// Pivot column of each nonzero row, ascending.
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows of equal length `cols`. An empty row list
    /// gives a `0 x cols` matrix.
    pub fn from_rows(field: &Field, cols: usize, rows: &[Vec<Symbol>]) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::LengthMismatch(row.len(), cols));
            }
            if let Some(&bad) = row.iter().find(|&&s| s as usize >= field.q()) {
                return Err(Error::InvalidSymbol {
                    symbol: bad as usize,
                    q: field.q(),
                });
            }
            data.extend_from_slice(row);
        }
        Ok(Matrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Symbol {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Symbol) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Symbol] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Symbol>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Symbol> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Submatrix keeping the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(&self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                m.set(r, j, self.get(r, c));
            }
        }
        m
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch(self.cols, other.rows));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// `v * self` for a row vector `v` of length `rows`.
    pub fn vec_mul(&self, v: &[Symbol]) -> Vec<Symbol> {
        let f = &self.field;
        let mut out = vec![0; self.cols];
        for (r, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(a, self.get(r, c)));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&s| s == 0)
    }

    /// Reduced row-echelon form. Pivots are taken column by column from the
    /// left, using the lowest-index row with a nonzero entry.
    pub fn echelon(&self) -> Echelon {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..m.cols {
            if pr == m.rows {
                break;
            }
            let Some(sel) = (pr..m.rows).find(|&r| m.get(r, c) != 0) else {
                continue;
            };
            m.swap_rows(pr, sel);
            let inv = f.inv(m.get(pr, c)).expect("pivot is nonzero");
            m.scale_row(pr, inv);
            for r in 0..m.rows {
                let factor = m.get(r, c);
                if r != pr && factor != 0 {
                    m.add_row_multiple(r, pr, f.neg(factor));
                }
            }
            pivots.push(c);
            pr += 1;
        }
        Echelon {
            matrix: m,
            rank: pr,
            pivots,
        }
    }

    /// RREF and rank.
    pub fn rref(&self) -> (Matrix, usize) {
        let e = self.echelon();
        (e.matrix, e.rank)
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank
    }

    /// The nonzero rows of the RREF, i.e. a canonical basis of the row space.
    pub fn row_space_basis(&self) -> Matrix {
        let e = self.echelon();
        let rows: Vec<Vec<Symbol>> = (0..e.rank).map(|r| e.matrix.row(r).to_vec()).collect();
        Matrix::from_rows(&self.field, self.cols, &rows).expect("rows come from a valid matrix")
    }

    /// Basis of `{ v : self * v^T = 0 }`, one row per free column in
    /// ascending order. The row for free column `f` has a 1 at `f`, zeros at
    /// the other free columns, and the negated RREF entries at the pivots.
    pub fn nullspace(&self) -> Matrix {
        let f = &self.field;
        let e = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !e.pivots.contains(c)).collect();
        let mut out = Matrix::zeros(f, free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out.set(i, fc, 1);
            for (r, &pc) in e.pivots.iter().enumerate() {
                out.set(i, pc, f.neg(e.matrix.get(r, fc)));
            }
        }
        out
    }

    /// Whether both matrices span the same row space.
    pub fn same_row_space(&self, other: &Matrix) -> bool {
        self.cols == other.cols && self.row_space_basis() == other.row_space_basis()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: Symbol) {
        for c in 0..self.cols {
            let v = self.field.mul(self.get(r, c), s);
            self.set(r, c, v);
        }
    }

    /// row[dst] += s * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, s: Symbol) {
        for c in 0..self.cols {
            let v = self
                .field
                .add(self.get(dst, c), self.field.mul(s, self.get(src, c)));
            self.set(dst, c, v);
        }
    }
}

/// Canonical representative of `v` modulo the span of `basis`, where `basis`
/// is in reduced row-echelon form with the given pivots. Two vectors have the
/// same representative exactly when their difference lies in the span.
pub fn reduce_modulo(v: &[Symbol], basis: &Echelon) -> Vec<Symbol> {
    let f = basis.matrix.field();
    let mut out = v.to_vec();
    for (r, &pc) in basis.pivots.iter().enumerate() {
        let coef = out[pc];
        if coef != 0 {
            let neg = f.neg(coef);
            for (c, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(neg, basis.matrix.get(r, c)));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(q: usize) -> Field {
        Field::new(q).unwrap()
    }

    #[test]
    fn identity_is_reduced() {
        let f = gf(5);
        let i = Matrix::identity(&f, 4);
        let (r, rank) = i.rref();
        assert_eq!(r, i);
        assert_eq!(rank, 4);
    }

    #[test]
    fn duplicate_rows_over_gf2() {
        let f = gf(2);
        let m = Matrix::from_rows(&f, 2, &[vec![1, 1], vec![1, 1]]).unwrap();
        let (r, rank) = m.rref();
        assert_eq!(rank, 1);
        assert_eq!(r.row_vecs(), vec![vec![1, 1], vec![0, 0]]);
    }

    #[test]
    fn gf3_elimination_by_hand() {
        // R2 <- R2 - 2 R1 = [0, 0, 1]; no further elimination needed.
        let f = gf(3);
        let m = Matrix::from_rows(&f, 3, &[vec![1, 2, 0], vec![2, 1, 1]]).unwrap();
        let (r, rank) = m.rref();
        assert_eq!(rank, 2);
        assert_eq!(r.row_vecs(), vec![vec![1, 2, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn nullspace_of_all_ones_row() {
        let f = gf(2);
        let g = Matrix::from_rows(&f, 3, &[vec![1, 1, 1]]).unwrap();
        let ns = g.nullspace();
        assert_eq!(ns.row_vecs(), vec![vec![1, 1, 0], vec![1, 0, 1]]);
        // Enumeration oracle: the vectors orthogonal to 111 are exactly the even-weight ones.
        let mut orth = Vec::new();
        for x in 0..8u8 {
            let v = [(x >> 2) & 1, (x >> 1) & 1, x & 1];
            if v.iter().map(|&b| b as u32).sum::<u32>() % 2 == 0 {
                orth.push(v.to_vec());
            }
        }
        let spanned = Matrix::from_rows(&f, 3, &orth).unwrap();
        assert!(spanned.same_row_space(&ns));
    }

    #[test]
    fn full_rank_square_has_trivial_nullspace() {
        let f = gf(7);
        let m = Matrix::from_rows(&f, 2, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(m.nullspace().rows(), 0);
    }

    #[test]
    fn hamming_generator_orthogonal_to_nullspace() {
        let f = gf(2);
        let g = Matrix::from_rows(
            &f,
            7,
            &[
                vec![1, 0, 0, 0, 0, 1, 1],
                vec![0, 1, 0, 0, 1, 0, 1],
                vec![0, 0, 1, 0, 1, 1, 0],
                vec![0, 0, 0, 1, 1, 1, 1],
            ],
        )
        .unwrap();
        let h = g.nullspace();
        assert_eq!(h.rows(), 3);
        assert!(g.mul(&h.transpose()).unwrap().is_zero());
    }

    #[test]
    fn reduce_modulo_detects_membership() {
        let f = gf(3);
        let basis = Matrix::from_rows(&f, 3, &[vec![1, 1, 0]]).unwrap().echelon();
        assert_eq!(reduce_modulo(&[2, 2, 0], &basis), vec![0, 0, 0]);
        assert_eq!(
            reduce_modulo(&[1, 0, 1], &basis),
            reduce_modulo(&[2, 1, 1], &basis)
        );
        assert_ne!(reduce_modulo(&[1, 0, 0], &basis), vec![0, 0, 0]);
    }

    fn random_matrix() -> impl Strategy<Value = (usize, usize, usize, Vec<u8>)> {
        (prop::sample::select(vec![2usize, 3, 4, 5]), 1usize..6, 1usize..=12).prop_flat_map(
            |(q, rows, cols)| {
                (
                    Just(q),
                    Just(rows),
                    Just(cols),
                    prop::collection::vec(0u8..q as u8, rows * cols),
                )
            },
        )
    }

    proptest! {
        #[test]
        fn rref_is_idempotent((q, rows, cols, data) in random_matrix()) {
            let f = gf(q);
            let m = Matrix { field: f, rows, cols, data };
            let (r1, k1) = m.rref();
            let (r2, k2) = r1.rref();
            prop_assert_eq!(k1, k2);
            prop_assert_eq!(r1, r2);
        }

        #[test]
        fn double_nullspace_spans_original((q, rows, cols, data) in random_matrix()) {
            let f = gf(q);
            let m = Matrix { field: f, rows, cols, data };
            let ns = m.nullspace();
            prop_assert_eq!(ns.rows(), cols - m.rank());
            prop_assert!(m.mul(&ns.transpose()).unwrap().is_zero());
            let back = ns.nullspace();
            prop_assert!(back.same_row_space(&m));
        }
    }
}
