//! Dense square integer matrices.
//!
//! One representation serves every integer matrix in the crate: adjacency
//! and distance matrices, eccentricity matrices, quotient matrices and their
//! tridiagonal reductions. Entries are `i64`; the exact-arithmetic routines
//! in [`crate::linalg`] widen internally when elimination outgrows that.

use std::fmt;
use std::ops::Index;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("rows have unequal lengths: row 0 has {expected}, row {row} has {got}")]
    Ragged {
        row: usize,
        expected: usize,
        got: usize,
    },
    #[error("matrix must be square: {rows} rows of length {cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric: entry ({i},{j}) = {a} but ({j},{i}) = {b}")]
    Asymmetric { i: usize, j: usize, a: i64, b: i64 },
}

/// Dense square `i64` matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    order: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(order: usize) -> Self {
        IntMatrix {
            order,
            data: vec![0; order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = IntMatrix::zeros(order);
        for i in 0..order {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self, MatrixError> {
        let order = rows.len();
        let mut data = Vec::with_capacity(order * order);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != order {
                if row > 0 && r.len() != rows[0].len() {
                    return Err(MatrixError::Ragged {
                        row,
                        expected: rows[0].len(),
                        got: r.len(),
                    });
                }
                return Err(MatrixError::NotSquare {
                    rows: order,
                    cols: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(IntMatrix { order, data })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.order + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.data[i * self.order + j] = value;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> + '_ {
        self.data.chunks_exact(self.order)
    }

    pub fn is_symmetric(&self) -> bool {
        self.require_symmetric().is_ok()
    }

    /// First violating pair, if any.
    pub fn require_symmetric(&self) -> Result<(), MatrixError> {
        for i in 0..self.order {
            for j in (i + 1)..self.order {
                let (a, b) = (self.get(i, j), self.get(j, i));
                if a != b {
                    return Err(MatrixError::Asymmetric { i, j, a, b });
                }
            }
        }
        Ok(())
    }

    pub fn trace(&self) -> i64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    /// `self − t·I`.
    pub fn shifted(&self, t: i64) -> IntMatrix {
        let mut m = self.clone();
        for i in 0..self.order {
            m.set(i, i, m.get(i, i) - t);
        }
        m
    }

    /// The leading `t × t` principal submatrix.
    pub fn leading_principal(&self, t: usize) -> IntMatrix {
        assert!(t <= self.order, "submatrix order exceeds matrix order");
        let mut m = IntMatrix::zeros(t);
        for i in 0..t {
            for j in 0..t {
                m.set(i, j, self.get(i, j));
            }
        }
        m
    }

    /// Exact integer matrix-vector product.
    pub fn mul_vec(&self, x: &[i64]) -> Vec<i64> {
        assert_eq!(x.len(), self.order, "vector length mismatch");
        self.rows()
            .map(|row| row.iter().zip(x).map(|(&a, &b)| a * b).sum())
            .collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = i64> + '_ {
        self.data.iter().copied()
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = i64;

    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.order + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .data
            .iter()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for row in self.rows() {
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_rows_rejects_non_square() {
        let err = IntMatrix::from_rows(vec![vec![1, 2], vec![3, 4], vec![5, 6]]).unwrap_err();
        assert_eq!(err, MatrixError::NotSquare { rows: 3, cols: 2 });
    }

    #[test]
    fn from_rows_rejects_ragged() {
        let err = IntMatrix::from_rows(vec![vec![1, 2, 3], vec![4, 5], vec![6, 7, 8]]).unwrap_err();
        assert_eq!(
            err,
            MatrixError::Ragged {
                row: 1,
                expected: 3,
                got: 2
            }
        );
    }

    #[test]
    fn symmetry_reports_first_violation() {
        let m = IntMatrix::from_rows(vec![vec![0, 1], vec![2, 0]]).unwrap();
        assert_eq!(
            m.require_symmetric().unwrap_err(),
            MatrixError::Asymmetric {
                i: 0,
                j: 1,
                a: 1,
                b: 2
            }
        );
        assert!(IntMatrix::identity(3).is_symmetric());
    }

    #[test]
    fn shift_and_submatrix() {
        let m = IntMatrix::from_rows(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]).unwrap();
        assert_eq!(m.shifted(1).row(0), &[0, 2, 3]);
        assert_eq!(m.shifted(1).get(2, 2), 8);
        let top = m.leading_principal(2);
        assert_eq!(
            top,
            IntMatrix::from_rows(vec![vec![1, 2], vec![4, 5]]).unwrap()
        );
        assert_eq!(m.trace(), 15);
    }

    #[test]
    fn matrix_vector_product_is_exact() {
        let m = IntMatrix::from_rows(vec![vec![2, -1], vec![0, 3]]).unwrap();
        assert_eq!(m.mul_vec(&[5, 7]), vec![3, 21]);
    }
}
