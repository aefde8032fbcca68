//! Dense 0/1 matrices and permutations.

use std::fmt;

use crate::error::{Error, Result};

/// A 0/1 matrix stored row-major.
///
/// Plays the role of a biadjacency matrix `A(B)` of a bigraph or, when
/// square and symmetric, of an adjacency matrix with an explicit diagonal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            bits: vec![false; rows * cols],
        }
    }

    pub fn ones(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            bits: vec![true; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.bits[i * cols + j] = f(i, j);
            }
        }
        m
    }

    /// Builds a matrix from literal rows of 0s and 1s.
    ///
    /// Panics on ragged input or entries other than 0 and 1; meant for
    /// tests and fixed data.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), cols, "ragged matrix literal");
            for (j, &v) in row.iter().enumerate() {
                assert!(v <= 1, "matrix entries must be 0 or 1");
                m.bits[i * cols + j] = v == 1;
            }
        }
        m
    }

    /// Decodes the low `rows * cols` bits of `mask`, bit `i * cols + j` being cell (i, j).
    pub fn from_mask(rows: usize, cols: usize, mask: u64) -> Self {
        Self::from_fn(rows, cols, |i, j| mask >> (i * cols + j) & 1 == 1)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        self.bits[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        debug_assert!(i < self.rows && j < self.cols);
        self.bits[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[bool] {
        &self.bits[i * self.cols..(i + 1) * self.cols]
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_all_ones(&self) -> bool {
        self.bits.iter().all(|&b| b)
    }

    /// Zero cells in row-major order.
    pub fn zero_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self.get(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn and(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape());
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) && other.get(i, j))
    }

    pub fn or(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape());
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) || other.get(i, j))
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Column index of the last 1 in row `i`.
    pub fn last_one_in_row(&self, i: usize) -> Option<usize> {
        (0..self.cols).rev().find(|&j| self.get(i, j))
    }

    /// Row index of the last 1 in column `j`.
    pub fn last_one_in_col(&self, j: usize) -> Option<usize> {
        (0..self.rows).rev().find(|&i| self.get(i, j))
    }

    /// The matrix with row `i` taken from `rows[i]` and column `j` from `cols[j]`.
    pub fn permuted(&self, rows: &Permutation, cols: &Permutation) -> Result<Self> {
        if rows.len() != self.rows || cols.len() != self.cols {
            return Err(Error::Shape(format!(
                "arrangement {}x{} for a {}x{} matrix",
                rows.len(),
                cols.len(),
                self.rows,
                self.cols
            )));
        }
        Ok(Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(rows[i], cols[j])
        }))
    }
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                f.write_str(if self.get(i, j) { "1" } else { "0" })?;
            }
            if i + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(" ")?;
            }
            for j in 0..self.cols {
                f.write_str(if self.get(i, j) { "1" } else { "0" })?;
            }
        }
        f.write_str("]")
    }
}

/// A bijection on `0..n`; position `i` holds the original index placed there.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn new(map: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; map.len()];
        for &v in &map {
            if v >= map.len() || seen[v] {
                return Err(Error::Mismatch(format!("{map:?} is not a permutation")));
            }
            seen[v] = true;
        }
        Ok(Self(map))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (pos, &v) in self.0.iter().enumerate() {
            inv[v] = pos;
        }
        Self(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }
}

impl std::ops::Index<usize> for Permutation {
    type Output = usize;

    fn index(&self, i: usize) -> &usize {
        &self.0[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mask_round_trip() {
        let m = BinaryMatrix::from_rows(&[[1, 1, 0], [0, 1, 1]]);
        let mut mask = 0u64;
        for i in 0..2 {
            for j in 0..3 {
                if m.get(i, j) {
                    mask |= 1 << (i * 3 + j);
                }
            }
        }
        assert_eq!(BinaryMatrix::from_mask(2, 3, mask), m);
    }

    #[test]
    fn permutation_rejects_non_bijection() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![2, 0]).is_err());
        let p = Permutation::new(vec![2, 0, 1]).unwrap();
        assert_eq!(p.inverse().as_slice(), &[1, 2, 0]);
    }

    #[test]
    fn permuted_moves_rows_and_columns() {
        let m = BinaryMatrix::from_rows(&[[1, 0], [0, 0]]);
        let swap = Permutation::new(vec![1, 0]).unwrap();
        let p = m.permuted(&swap, &swap).unwrap();
        assert_eq!(p, BinaryMatrix::from_rows(&[[0, 0], [0, 1]]));
        assert!(m.permuted(&Permutation::identity(3), &swap).is_err());
    }

    #[test]
    fn last_ones() {
        let m = BinaryMatrix::from_rows(&[[1, 1, 0], [0, 0, 0], [1, 0, 0]]);
        assert_eq!(m.last_one_in_row(0), Some(1));
        assert_eq!(m.last_one_in_row(1), None);
        assert_eq!(m.last_one_in_col(0), Some(2));
        assert_eq!(m.last_one_in_col(2), None);
    }
}
