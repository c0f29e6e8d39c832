//! Equitable partitions and the quotient of the eccentricity matrix.
//!
//! The canonical partition of a C-graph into its parts `V₁,…,V_{2k}` is
//! equitable for `ε(G)`, so the quotient matrix `Q_{2k}` divides the
//! spectrum. All `Q_{2k}` eigenvalues are obtained through the symmetric
//! similarity `R = D^{1/2} Q̃ D^{−1/2}` plus the explicit eigenvalue
//! `2(α_{2k} − 1)` split off the last row; no nonsymmetric eigensolver
//! exists in this crate.

use thiserror::Error;

use crate::graph::{GeneratingSequence, ScopeError};
use crate::linalg::{eigen_sym, integer_rank, Inertia, LinalgError, RealSymMatrix, Spectrum};
use crate::matrix::IntMatrix;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuotientError {
    #[error(transparent)]
    Scope(#[from] ScopeError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("partition cells must be nonempty, disjoint, and cover 0..{order}")]
    InvalidPartition { order: usize },
    #[error("block ({row_cell}, {col_cell}) has non-integer average row sum {sum}/{size}")]
    NonIntegerAverage {
        row_cell: usize,
        col_cell: usize,
        sum: i64,
        size: usize,
    },
}

/// An ordered partition of `{0,…,n−1}` into nonempty cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    cells: Vec<Vec<usize>>,
    part_of: Vec<usize>,
}

impl Partition {
    pub fn new(cells: Vec<Vec<usize>>, order: usize) -> Result<Self, QuotientError> {
        let invalid = QuotientError::InvalidPartition { order };
        let mut part_of = vec![usize::MAX; order];
        for (c, cell) in cells.iter().enumerate() {
            if cell.is_empty() {
                return Err(invalid);
            }
            for &v in cell {
                if v >= order || part_of[v] != usize::MAX {
                    return Err(invalid);
                }
                part_of[v] = c;
            }
        }
        if part_of.contains(&usize::MAX) {
            return Err(invalid);
        }
        Ok(Partition { cells, part_of })
    }

    /// Contiguous cells of the given sizes, in order.
    pub fn from_part_sizes(sizes: &[usize]) -> Self {
        let mut cells = Vec::with_capacity(sizes.len());
        let mut start = 0;
        for &s in sizes {
            cells.push((start..start + s).collect());
            start += s;
        }
        let order = start;
        Partition::new(cells, order).expect("contiguous cells partition by construction")
    }

    pub fn singletons(order: usize) -> Self {
        Partition::from_part_sizes(&vec![1; order])
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn order(&self) -> usize {
        self.part_of.len()
    }

    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v]
    }
}

/// The partition of a C-graph into its construction parts `V₁,…,V_l`.
pub fn canonical_partition(seq: &GeneratingSequence) -> Partition {
    let sizes: Vec<usize> = seq.parts().iter().map(|&a| a as usize).collect();
    Partition::from_part_sizes(&sizes)
}

/// Quotient matrix together with the exact equitability verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientResult {
    pub matrix: IntMatrix,
    /// True iff every block of the partition has constant row sums.
    pub equitable: bool,
}

/// Quotient of a square integer matrix over a partition: entry `(i,j)` is
/// the average over cell `i` of the row sums into cell `j`. Equitability
/// (constant row sums per block) is decided exactly on the integers, never
/// by tolerance. A non-integer average is only possible when the partition
/// is not equitable and is reported as an error carrying the rational.
pub fn quotient_matrix(m: &IntMatrix, p: &Partition) -> Result<QuotientResult, QuotientError> {
    if p.order() != m.order() {
        return Err(QuotientError::InvalidPartition { order: m.order() });
    }
    let cells = p.cells();
    let mut q = IntMatrix::zeros(cells.len());
    let mut equitable = true;
    for (ci, cell_i) in cells.iter().enumerate() {
        for (cj, cell_j) in cells.iter().enumerate() {
            let row_sums: Vec<i64> = cell_i
                .iter()
                .map(|&u| cell_j.iter().map(|&v| m.get(u, v)).sum())
                .collect();
            let total: i64 = row_sums.iter().sum();
            equitable &= row_sums.iter().all(|&s| s == row_sums[0]);
            let size = cell_i.len() as i64;
            if total % size != 0 {
                return Err(QuotientError::NonIntegerAverage {
                    row_cell: ci,
                    col_cell: cj,
                    sum: total,
                    size: cell_i.len(),
                });
            }
            q.set(ci, cj, total / size);
        }
    }
    Ok(QuotientResult {
        matrix: q,
        equitable,
    })
}

/// Closed-form quotient matrix `Q_{2k}` of `ε(C(α₁,…,α_{2k}))` over the
/// canonical partition, built entrywise from the parts (1-based indices):
/// diagonal entry `r` is `0` for odd `r` and `2(α_r − 1)` for even `r`;
/// off-diagonal entry `(r,c)` is `2α_c` when `max(r,c)` is odd and `0`
/// otherwise.
pub fn build_q2k(seq: &GeneratingSequence) -> Result<IntMatrix, ScopeError> {
    seq.require_main_scope()?;
    let parts = seq.parts();
    let l = parts.len();
    let mut q = IntMatrix::zeros(l);
    for r in 1..=l {
        for c in 1..=l {
            let entry = if r == c {
                if r % 2 == 0 {
                    2 * (i64::from(parts[r - 1]) - 1)
                } else {
                    0
                }
            } else if r.max(c) % 2 == 1 {
                2 * i64::from(parts[c - 1])
            } else {
                0
            };
            q.set(r - 1, c - 1, entry);
        }
    }
    Ok(q)
}

/// `Q_{2k}` with its derived forms: the trailing principal reduction `Q̃`
/// (last row and column removed), the symmetric similarity `R`, and the
/// exact diagonals of `D = diag(α₁,…,α_{2k−1})` and
/// `D̃ = diag(0, (α₂−1)/α₂, 0, (α₄−1)/α₄, …, 0)` kept as integers and
/// rational pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientBundle {
    pub q2k: IntMatrix,
    pub qtilde: IntMatrix,
    pub r: RealSymMatrix,
    pub dvec: Vec<u32>,
    /// Numerator/denominator pairs of the `D̃` diagonal.
    pub dtilde: Vec<(i64, i64)>,
}

impl QuotientBundle {
    /// The eigenvalue carried by the deleted last row: `2(α_{2k} − 1)`.
    pub fn explicit_eigenvalue(&self) -> i64 {
        let last = self.q2k.order() - 1;
        self.q2k.get(last, last)
    }
}

pub fn quotient_bundle(seq: &GeneratingSequence) -> Result<QuotientBundle, ScopeError> {
    let q2k = build_q2k(seq)?;
    let m = q2k.order() - 1;
    let qtilde = q2k.leading_principal(m);
    let dvec: Vec<u32> = seq.parts()[..m].to_vec();
    let dtilde: Vec<(i64, i64)> = (1..=m)
        .map(|r| {
            if r % 2 == 0 {
                (
                    i64::from(seq.parts()[r - 1]) - 1,
                    i64::from(seq.parts()[r - 1]),
                )
            } else {
                (0, 1)
            }
        })
        .collect();
    let r = symmetrize_r(&qtilde, &dvec);
    Ok(QuotientBundle {
        q2k,
        qtilde,
        r,
        dvec,
        dtilde,
    })
}

/// The similarity `R = D^{1/2} Q̃ D^{−1/2}` with `D = diag(dvec)`. `Q̃` is
/// not symmetric, but `R` is (its off-diagonal entries become
/// `2√(αᵢαⱼ)` where `Q̃` has `2αⱼ`), so `Spec(R) = Spec(Q̃)` with a
/// symmetric eigenproblem.
pub fn symmetrize_r(qtilde: &IntMatrix, dvec: &[u32]) -> RealSymMatrix {
    let m = qtilde.order();
    assert_eq!(m, dvec.len(), "diagonal length must match matrix order");
    let rows: Vec<Vec<f64>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| qtilde.get(i, j) as f64 * (f64::from(dvec[i]) / f64::from(dvec[j])).sqrt())
                .collect()
        })
        .collect();
    RealSymMatrix::from_rows(rows).expect("similarity scaling of the quotient is symmetric")
}

/// Block-diagonal symmetric matrix of order `2k` with the same spectrum as
/// `Q_{2k}`: `R` extended by the explicit eigenvalue `2(α_{2k} − 1)`.
pub fn r_full(seq: &GeneratingSequence) -> Result<RealSymMatrix, ScopeError> {
    let bundle = quotient_bundle(seq)?;
    let m = bundle.r.order();
    let rows: Vec<Vec<f64>> = (0..=m)
        .map(|i| {
            (0..=m)
                .map(|j| match (i == m, j == m) {
                    (false, false) => bundle.r.get(i, j),
                    (true, true) => bundle.explicit_eigenvalue() as f64,
                    _ => 0.0,
                })
                .collect()
        })
        .collect();
    Ok(RealSymMatrix::from_rows(rows).expect("block extension preserves symmetry"))
}

/// Tridiagonal integer matrix of order `2k−1`, row equivalent to `Q̃`:
/// diagonal `(0, 2α₂, 2α₃, …, 2α_{2k−1})`; superdiagonal entry at 1-based
/// position `j` is `−2(α_{j+1}−1)` for odd `j` and `−2α_{j+1}` for even
/// `j`; subdiagonal entry at `j` is `2α_j` for odd `j` and `2(α_j−1)` for
/// even `j`. Certifies that `0 ∈ Spec(Q̃)` exactly when `α₂ = 1`.
pub fn tridiagonal_t(seq: &GeneratingSequence) -> Result<IntMatrix, ScopeError> {
    seq.require_main_scope()?;
    let parts = seq.parts();
    let m = parts.len() - 1;
    let alpha = |r: usize| i64::from(parts[r - 1]);
    let mut t = IntMatrix::zeros(m);
    for r in 2..=m {
        t.set(r - 1, r - 1, 2 * alpha(r));
    }
    for j in 1..m {
        let (sup, sub) = if j % 2 == 1 {
            (-2 * (alpha(j + 1) - 1), 2 * alpha(j))
        } else {
            (-2 * alpha(j + 1), 2 * (alpha(j) - 1))
        };
        t.set(j - 1, j, sup);
        t.set(j, j - 1, sub);
    }
    Ok(t)
}

/// Tridiagonal integer matrix of order `2k−1`, row equivalent to `Q̃ + 2I`:
/// diagonal `(2, 2α₂, 2α₃, …, 2α_{2k−1})`; superdiagonal at odd `j` is
/// `−2α_{j+1}`, at even `j` is `−2(α_{j+1}−1)`; subdiagonal at odd `j` is
/// `2(α_j−1)`, at even `j` is `2α_j`. Certifies `−2 ∉ Spec(Q̃)`: its rank
/// is always `2k−1`.
pub fn tridiagonal_s(seq: &GeneratingSequence) -> Result<IntMatrix, ScopeError> {
    seq.require_main_scope()?;
    let parts = seq.parts();
    let m = parts.len() - 1;
    let alpha = |r: usize| i64::from(parts[r - 1]);
    let mut s = IntMatrix::zeros(m);
    s.set(0, 0, 2);
    for r in 2..=m {
        s.set(r - 1, r - 1, 2 * alpha(r));
    }
    for j in 1..m {
        let (sup, sub) = if j % 2 == 1 {
            (-2 * alpha(j + 1), 2 * (alpha(j) - 1))
        } else {
            (-2 * (alpha(j + 1) - 1), 2 * alpha(j))
        };
        s.set(j - 1, j, sup);
        s.set(j, j - 1, sub);
    }
    Ok(s)
}

/// Eigenvalues of `Q_{2k}`: `Spec(R) ∪ {2(α_{2k} − 1)}`.
pub fn q2k_spectrum(seq: &GeneratingSequence) -> Result<Spectrum, QuotientError> {
    let bundle = quotient_bundle(seq)?;
    let r_spec = eigen_sym(&bundle.r)?;
    let mut values = r_spec.values().to_vec();
    values.push(bundle.explicit_eigenvalue() as f64);
    Ok(Spectrum::new(values, r_spec.grouping_tol()))
}

/// Inertia of `Q_{2k}`. The zero count is exact: `2k − 1 − rank(Q̃)` (the
/// explicit eigenvalue `2(α_{2k}−1)` is positive in scope). Sign counts
/// come from `Spec(R)` under the same zero-count guard as
/// [`crate::linalg::inertia_of`].
pub fn q2k_inertia(seq: &GeneratingSequence) -> Result<Inertia, QuotientError> {
    let bundle = quotient_bundle(seq)?;
    let n_zero = bundle.qtilde.order() - integer_rank(&bundle.qtilde);
    let spectrum = eigen_sym(&bundle.r)?;
    let tol = spectrum.grouping_tol();
    let float_zero = spectrum.values().iter().filter(|v| v.abs() <= tol).count();
    if float_zero != n_zero {
        return Err(QuotientError::Linalg(LinalgError::InertiaAmbiguous {
            exact: n_zero,
            float: float_zero,
            tol,
        }));
    }
    let n_minus = spectrum.values().iter().filter(|&&v| v < -tol).count();
    let n_plus = spectrum.values().iter().filter(|&&v| v > tol).count();
    Ok(Inertia::new(n_minus, n_zero, n_plus + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ecc::ecc_closed_form;
    use crate::graph::antiregular_adjacency;

    fn seq(s: &str) -> GeneratingSequence {
        s.parse().unwrap()
    }

    fn q2k_fixture_1212() -> IntMatrix {
        IntMatrix::from_rows(vec![
            vec![0, 0, 2, 0],
            vec![0, 2, 2, 0],
            vec![2, 4, 0, 0],
            vec![0, 0, 0, 2],
        ])
        .unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![vec![0, 1], vec![2]], 3).is_ok());
        assert!(matches!(
            Partition::new(vec![vec![0], vec![0, 1]], 2),
            Err(QuotientError::InvalidPartition { order: 2 })
        ));
        assert!(Partition::new(vec![vec![0], vec![]], 1).is_err());
        assert!(Partition::new(vec![vec![0]], 2).is_err());
        assert!(Partition::new(vec![vec![0, 2]], 2).is_err());

        let p = Partition::from_part_sizes(&[1, 2, 1]);
        assert_eq!(p.cells(), &[vec![0], vec![1, 2], vec![3]]);
        assert_eq!(p.part_of(2), 1);
        assert_eq!(p.cell_count(), 3);
        assert_eq!(Partition::singletons(3).cell_count(), 3);
    }

    #[test]
    fn singleton_quotient_is_the_matrix_itself() {
        let m = IntMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap();
        let q = quotient_matrix(&m, &Partition::singletons(2)).unwrap();
        assert_eq!(q.matrix, m);
        assert!(q.equitable);
    }

    #[test]
    fn canonical_quotient_matches_closed_form() {
        let s = seq("1,2,1,2");
        let e = ecc_closed_form(&s).unwrap();
        let q = quotient_matrix(e.matrix(), &canonical_partition(&s)).unwrap();
        assert!(q.equitable);
        assert_eq!(q.matrix, q2k_fixture_1212());
        assert_eq!(build_q2k(&s).unwrap(), q2k_fixture_1212());
    }

    #[test]
    fn closed_form_q2k_fixtures() {
        let expected = IntMatrix::from_rows(vec![
            vec![0, 0, 2, 0],
            vec![0, 0, 2, 0],
            vec![2, 2, 0, 0],
            vec![0, 0, 0, 2],
        ])
        .unwrap();
        assert_eq!(build_q2k(&seq("1,1,1,2")).unwrap(), expected);
        assert!(build_q2k(&seq("1,1,1,1")).is_err());
    }

    #[test]
    fn merged_partition_is_not_equitable() {
        let s = seq("1,2,1,2");
        let e = ecc_closed_form(&s).unwrap();

        // Rows 0 and 3 see cell {1, 2} with row sums 0 and 4: the averages
        // are integers but the partition is not equitable.
        let merged = Partition::new(vec![vec![0, 3], vec![1, 2], vec![4, 5]], 6).unwrap();
        let q = quotient_matrix(e.matrix(), &merged).unwrap();
        assert!(!q.equitable);

        // Merging parts 1 and 2 gives the cell {0, 1, 2} a block sum of 4
        // over three rows, which has no integer average.
        let coarse = Partition::new(vec![vec![0, 1, 2], vec![3], vec![4, 5]], 6).unwrap();
        assert!(matches!(
            quotient_matrix(e.matrix(), &coarse),
            Err(QuotientError::NonIntegerAverage { .. })
        ));
    }

    #[test]
    fn non_integer_average_is_an_error() {
        // Row sums 0 and 1 over a two-element cell: average 1/2.
        let m = IntMatrix::from_rows(vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 0]]).unwrap();
        let p = Partition::new(vec![vec![0, 1], vec![2]], 3).unwrap();
        assert_eq!(
            quotient_matrix(&m, &p),
            Err(QuotientError::NonIntegerAverage {
                row_cell: 0,
                col_cell: 1,
                sum: 1,
                size: 2,
            })
        );
    }

    #[test]
    fn bundle_and_symmetrized_form() {
        let b = quotient_bundle(&seq("1,2,1,2")).unwrap();
        assert_eq!(b.q2k, q2k_fixture_1212());
        assert_eq!(b.qtilde, q2k_fixture_1212().leading_principal(3));
        assert_eq!(b.dvec, vec![1, 2, 1]);
        assert_eq!(b.dtilde, vec![(0, 1), (1, 2), (0, 1)]);
        assert_eq!(b.explicit_eigenvalue(), 2);

        let s2 = 8f64.sqrt();
        let expected = [[0.0, 0.0, 2.0], [0.0, 2.0, s2], [2.0, s2, 0.0]];
        for (i, row) in expected.iter().enumerate() {
            for (j, want) in row.iter().enumerate() {
                assert!((b.r.get(i, j) - want).abs() < 1e-12);
            }
        }

        let eigs = eigen_sym(&b.r).unwrap();
        let known = [-2.9623886082, 0.6222156349, 4.3401729733];
        for (got, want) in eigs.values().iter().zip(known) {
            assert!((got - want).abs() < 1e-9, "{got} vs {want}");
        }
    }

    #[test]
    fn r_matches_scaled_antiregular_identity() {
        // R = 2 D^{1/2} (A_{2k−1} + D̃) D^{1/2} entrywise.
        for s in ["1,2,1,2", "3,2,1,2", "2,3,1,4,2,5"] {
            let s = seq(s);
            let b = quotient_bundle(&s).unwrap();
            let m = b.r.order();
            let a = antiregular_adjacency(m);
            for i in 0..m {
                for j in 0..m {
                    let dt = if i == j {
                        b.dtilde[i].0 as f64 / b.dtilde[i].1 as f64
                    } else {
                        0.0
                    };
                    let scaled = 2.0
                        * (f64::from(b.dvec[i]) * f64::from(b.dvec[j])).sqrt()
                        * (a.get(i, j) as f64 + dt);
                    assert!((b.r.get(i, j) - scaled).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn all_unit_parts_give_twice_the_antiregular_matrix() {
        let b = quotient_bundle(&seq("1,1,1,1,1,2")).unwrap();
        let a = antiregular_adjacency(5);
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(b.r.get(i, j), 2.0 * a.get(i, j) as f64);
            }
        }
    }

    #[test]
    fn r_full_extends_by_the_explicit_eigenvalue() {
        let s = seq("1,2,1,2");
        let rf = r_full(&s).unwrap();
        assert_eq!(rf.order(), 4);
        assert_eq!(rf.get(3, 3), 2.0);
        assert_eq!(rf.get(0, 3), 0.0);
        let full = eigen_sym(&rf).unwrap();
        let q = q2k_spectrum(&s).unwrap();
        assert_eq!(q.multiset_distance(&full), Some(0.0));
    }

    #[test]
    fn tridiagonal_rank_contracts() {
        let s = seq("1,1,1,2");
        let t = tridiagonal_t(&s).unwrap();
        let expected =
            IntMatrix::from_rows(vec![vec![0, 0, 0], vec![2, 2, -2], vec![0, 0, 2]]).unwrap();
        assert_eq!(t, expected);
        assert_eq!(integer_rank(&t), 2);

        for raw in ["1,1,1,2", "1,2,1,2", "3,2,1,2", "2,3,1,4,2,5"] {
            let s = seq(raw);
            let b = quotient_bundle(&s).unwrap();
            let t = tridiagonal_t(&s).unwrap();
            let st = tridiagonal_s(&s).unwrap();
            assert_eq!(integer_rank(&t), integer_rank(&b.qtilde), "{raw}");
            assert_eq!(
                integer_rank(&st),
                integer_rank(&b.qtilde.shifted(-2)),
                "{raw}"
            );
            assert_eq!(integer_rank(&st), b.qtilde.order(), "{raw}");
            let k = s.k().unwrap();
            let zero_simple = integer_rank(&t) == 2 * k - 2;
            assert_eq!(zero_simple, s.parts()[1] == 1, "{raw}");
        }
    }

    #[test]
    fn q2k_spectrum_and_inertia() {
        let spec = q2k_spectrum(&seq("1,2,1,2")).unwrap();
        let known = [-2.9623886082, 0.6222156349, 2.0, 4.3401729733];
        assert_eq!(spec.len(), 4);
        for (got, want) in spec.values().iter().zip(known) {
            assert!((got - want).abs() < 1e-9);
        }

        assert_eq!(q2k_inertia(&seq("1,2,1,2")).unwrap(), Inertia::new(1, 0, 3));
        assert_eq!(q2k_inertia(&seq("1,1,1,2")).unwrap(), Inertia::new(1, 1, 2));
        assert_eq!(
            q2k_inertia(&seq("2,3,1,4,2,5")).unwrap(),
            Inertia::new(2, 0, 4)
        );
    }
}
