//! Dense symmetric eigensolver, exact integer rank, inertia.
//!
//! The numerical route (Householder tridiagonalization + implicit-shift QL)
//! and the exact route (fraction-free Bareiss elimination) are independent;
//! [`inertia_of`] combines them and refuses to guess when they disagree
//! about the zero eigenvalues.

mod eigen;
mod exact;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::IntMatrix;

pub use eigen::eigen_sym;
pub use exact::{eigenvalue_multiplicity_exact, integer_rank};

/// Relative symmetry tolerance accepted at construction.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Multiplicity grouping factor: the grouping tolerance is this times
/// `max(1, ‖M‖₂)`.
pub const GROUPING_FACTOR: f64 = 1e-7;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinalgError {
    #[error("rows have unequal lengths: row 0 has {expected}, row {row} has {got}")]
    Ragged {
        row: usize,
        expected: usize,
        got: usize,
    },
    #[error("matrix must be square: {rows} rows of length {cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric within {tol:e}: entry ({i},{j}) = {a} but ({j},{i}) = {b}")]
    Asymmetric {
        i: usize,
        j: usize,
        a: f64,
        b: f64,
        tol: f64,
    },
    #[error("QL iteration exceeded {max_iter} sweeps at eigenvalue index {index}")]
    NoConvergence { index: usize, max_iter: usize },
    #[error(
        "inertia is ambiguous: exact rank gives {exact} zero eigenvalues but {float} computed \
         eigenvalues lie within {tol:e} of zero"
    )]
    InertiaAmbiguous {
        exact: usize,
        float: usize,
        tol: f64,
    },
}

/// Dense real symmetric matrix. Construction verifies symmetry to
/// [`SYMMETRY_TOL`] (relative to the largest entry) and then averages the
/// two triangles so downstream code sees an exactly symmetric matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct RealSymMatrix {
    order: usize,
    data: Vec<f64>,
}

impl RealSymMatrix {
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self, LinalgError> {
        let order = rows.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != order {
                if i > 0 && r.len() != rows[0].len() {
                    return Err(LinalgError::Ragged {
                        row: i,
                        expected: rows[0].len(),
                        got: r.len(),
                    });
                }
                return Err(LinalgError::NotSquare {
                    rows: order,
                    cols: r.len(),
                });
            }
        }
        let scale = rows.iter().flatten().fold(1.0f64, |m, &v| m.max(v.abs()));
        let tol = SYMMETRY_TOL * scale;
        let mut data = vec![0.0; order * order];
        for i in 0..order {
            for j in 0..order {
                let (a, b) = (rows[i][j], rows[j][i]);
                if (a - b).abs() > tol {
                    return Err(LinalgError::Asymmetric { i, j, a, b, tol });
                }
                data[i * order + j] = 0.5 * (a + b);
            }
        }
        Ok(RealSymMatrix { order, data })
    }

    /// Exact conversion; the integer matrix must be exactly symmetric.
    pub fn from_int(m: &IntMatrix) -> Result<Self, LinalgError> {
        if let Err(crate::matrix::MatrixError::Asymmetric { i, j, a, b }) = m.require_symmetric() {
            return Err(LinalgError::Asymmetric {
                i,
                j,
                a: a as f64,
                b: b as f64,
                tol: 0.0,
            });
        }
        Ok(RealSymMatrix {
            order: m.order(),
            data: m.entries().map(|v| v as f64).collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> + '_ {
        self.data.chunks_exact(self.order)
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// The leading `t × t` principal submatrix.
    pub fn leading_principal(&self, t: usize) -> RealSymMatrix {
        assert!(t <= self.order, "submatrix order exceeds matrix order");
        let mut data = Vec::with_capacity(t * t);
        for i in 0..t {
            data.extend_from_slice(&self.data[i * self.order..i * self.order + t]);
        }
        RealSymMatrix { order: t, data }
    }
}

/// Eigenvalues in ascending order with a grouping tolerance for reading off
/// multiplicities.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    grouping_tol: f64,
}

impl Spectrum {
    pub fn new(mut values: Vec<f64>, grouping_tol: f64) -> Self {
        values.sort_by(f64::total_cmp);
        Spectrum {
            values,
            grouping_tol,
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn grouping_tol(&self) -> f64 {
        self.grouping_tol
    }

    /// `(representative, multiplicity)` groups, ascending. Consecutive
    /// eigenvalues within the grouping tolerance fall into one group; the
    /// representative is the group mean.
    pub fn grouped(&self) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        let mut i = 0;
        while i < self.values.len() {
            let mut j = i + 1;
            while j < self.values.len() && self.values[j] - self.values[j - 1] <= self.grouping_tol
            {
                j += 1;
            }
            let count = j - i;
            let mean = self.values[i..j].iter().sum::<f64>() / count as f64;
            out.push((mean, count));
            i = j;
        }
        out
    }

    pub fn distinct_count(&self) -> usize {
        self.grouped().len()
    }

    /// Eigenvalues strictly inside `(lo, hi)`.
    pub fn count_in_open_interval(&self, lo: f64, hi: f64) -> usize {
        self.values.iter().filter(|&&v| v > lo && v < hi).count()
    }

    pub fn min_abs_deviation_from(&self, x: f64) -> f64 {
        self.values
            .iter()
            .map(|v| (v - x).abs())
            .fold(f64::INFINITY, f64::min)
    }

    /// Largest pairwise gap between sorted entries, i.e. the multiset
    /// distance `max |a[i] − b[i]|`. `None` when the lengths differ.
    pub fn multiset_distance(&self, other: &Spectrum) -> Option<f64> {
        (self.len() == other.len()).then(|| {
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        })
    }
}

/// Eigenvalue sign counts `(n₋, n₀, n₊)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inertia {
    pub n_minus: usize,
    pub n_zero: usize,
    pub n_plus: usize,
}

impl Inertia {
    pub fn new(n_minus: usize, n_zero: usize, n_plus: usize) -> Self {
        Inertia {
            n_minus,
            n_zero,
            n_plus,
        }
    }

    pub fn order(&self) -> usize {
        self.n_minus + self.n_zero + self.n_plus
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n_minus, self.n_zero, self.n_plus)
    }
}

/// Inertia of a symmetric integer matrix.
///
/// The zero count is exact (order minus Bareiss rank). The sign counts come
/// from the numerical spectrum, accepted only if exactly `n₀` computed
/// eigenvalues fall within the grouping tolerance of zero; otherwise the
/// tolerance regime has failed and the mismatch is reported as
/// [`LinalgError::InertiaAmbiguous`] rather than resolved by guesswork.
pub fn inertia_of(m: &IntMatrix) -> Result<Inertia, LinalgError> {
    let real = RealSymMatrix::from_int(m)?;
    let n_zero = m.order() - integer_rank(m);
    let spectrum = eigen_sym(&real)?;
    let tol = spectrum.grouping_tol();
    let float_zero = spectrum.values().iter().filter(|v| v.abs() <= tol).count();
    if float_zero != n_zero {
        return Err(LinalgError::InertiaAmbiguous {
            exact: n_zero,
            float: float_zero,
            tol,
        });
    }
    let n_minus = spectrum.values().iter().filter(|&&v| v < -tol).count();
    let n_plus = spectrum.values().iter().filter(|&&v| v > tol).count();
    Ok(Inertia::new(n_minus, n_zero, n_plus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ecc::eccentricity_matrix;
    use crate::graph::{antiregular_adjacency, build_cograph, GeneratingSequence};

    #[test]
    fn construction_checks_shape_and_symmetry() {
        assert!(matches!(
            RealSymMatrix::from_rows(vec![vec![1.0, 2.0], vec![3.0]]),
            Err(LinalgError::Ragged { .. }) | Err(LinalgError::NotSquare { .. })
        ));
        assert!(matches!(
            RealSymMatrix::from_rows(vec![vec![0.0, 1.0], vec![2.0, 0.0]]),
            Err(LinalgError::Asymmetric { .. })
        ));
        // Tiny asymmetry is averaged away.
        let m = RealSymMatrix::from_rows(vec![vec![0.0, 1.0 + 4e-13], vec![1.0, 0.0]]).unwrap();
        assert_eq!(m.get(0, 1), m.get(1, 0));
    }

    #[test]
    fn spectrum_grouping() {
        let s = Spectrum::new(vec![2.0, -2.0000000001, 0.0, -2.0], 1e-7);
        assert_eq!(s.values()[0], -2.0000000001);
        let groups = s.grouped();
        assert_eq!(groups.len(), 3);
        assert_eq!(groups[0].1, 2);
        assert_eq!(s.distinct_count(), 3);
        assert_eq!(s.count_in_open_interval(-1.0, 3.0), 2);
        assert!((s.min_abs_deviation_from(1.9) - 0.1).abs() < 1e-12);
    }

    #[test]
    fn inertia_of_known_matrices() {
        // Antiregular graph on five vertices.
        assert_eq!(
            inertia_of(&antiregular_adjacency(5)).unwrap(),
            Inertia::new(2, 1, 2)
        );
        assert_eq!(
            inertia_of(&IntMatrix::zeros(4)).unwrap(),
            Inertia::new(0, 4, 0)
        );

        // ε(C(1,2,1,2)) has three negative and three positive eigenvalues.
        let seq: GeneratingSequence = "1,2,1,2".parse().unwrap();
        let d = build_cograph(&seq).distance_matrix().unwrap();
        let e = eccentricity_matrix(&d);
        assert_eq!(inertia_of(e.matrix()).unwrap(), Inertia::new(3, 0, 3));
    }

    #[test]
    fn inertia_display_order_is_minus_zero_plus() {
        assert_eq!(Inertia::new(2, 1, 3).to_string(), "(2, 1, 3)");
        assert_eq!(Inertia::new(2, 1, 3).order(), 6);
    }
}
