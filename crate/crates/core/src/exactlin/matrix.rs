use std::fmt;

use super::scalar::{Field, Scalar};
use super::sparse::SparseVec;
use crate::error::Error;

/// A sparse matrix stored by rows. A linear map `V -> W` is a matrix with
/// `dim W` rows and `dim V` columns acting on column vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![SparseVec::new(); rows],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        Matrix {
            field,
            rows: n,
            cols: n,
            data: (0..n).map(|i| SparseVec::unit(i, field)).collect(),
        }
    }

    pub fn from_rows(field: Field, cols: usize, rows: Vec<SparseVec>) -> Matrix {
        debug_assert!(rows.iter().all(|r| r.max_index().is_none_or(|m| m < cols)));
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn from_dense(field: Field, rows: &[Vec<i64>]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| {
                let v: Vec<Scalar> = r.iter().map(|&x| field.from_i64(x)).collect();
                SparseVec::from_dense(&v)
            })
            .collect();
        Matrix::from_rows(field, cols, data)
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(field: Field, rows: usize, columns: &[SparseVec]) -> Matrix {
        let mut buckets: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); rows];
        for (j, col) in columns.iter().enumerate() {
            for (i, c) in col.iter() {
                buckets[*i].push((j, c.clone()));
            }
        }
        Matrix {
            field,
            rows,
            cols: columns.len(),
            data: buckets.into_iter().map(SparseVec::from_sorted_unchecked).collect(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    pub fn row_vecs(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.nnz()).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i].get(j).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self
                .data
                .iter()
                .enumerate()
                .all(|(i, r)| r.nnz() == 1 && r.entries()[0].0 == i && r.entries()[0].1.is_one())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_columns(self.field, self.cols, &self.data)
    }

    /// Columns as sparse vectors (images of basis vectors).
    pub fn columns(&self) -> Vec<SparseVec> {
        self.transpose().data
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let entries: Vec<(usize, Scalar)> = self
            .data
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.dot(v).filter(|c| !c.is_zero()).map(|c| (i, c)))
            .collect();
        SparseVec::from_sorted_unchecked(entries)
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, Error> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .map(|r| {
                let mut acc = SparseVec::new();
                for (k, c) in r.iter() {
                    acc = acc.add_scaled(c, &other.data[*k]);
                }
                acc
            })
            .collect();
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, Error> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, Error> {
        self.combine(other, true)
    }

    fn combine(&self, other: &Matrix, negate: bool) -> Result<Matrix, Error> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let c = if negate { -self.field.one() } else { self.field.one() };
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.add_scaled(&c, b))
            .collect();
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Submatrix on the given rows (in the given order).
    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix {
            field: self.field,
            rows: rows.len(),
            cols: self.cols,
            data: rows.iter().map(|&i| self.data[i].clone()).collect(),
        }
    }

    pub fn to_dense_strings(&self) -> Vec<Vec<String>> {
        self.data
            .iter()
            .map(|r| r.to_dense(self.cols, self.field).iter().map(|c| c.to_string()).collect())
            .collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        if self.rows <= 12 && self.cols <= 12 {
            for r in self.to_dense_strings() {
                writeln!(f, "  [{}]", r.join(", "))?;
            }
        }
        Ok(())
    }
}
