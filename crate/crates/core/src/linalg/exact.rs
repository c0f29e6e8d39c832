//! Exact integer rank via fraction-free (Bareiss) Gaussian elimination.
//!
//! Multiplicity claims for integer eigenvalues are integer statements;
//! floating point cannot certify them. Elimination runs over checked
//! `i128` and restarts over arbitrary-precision integers if any product
//! overflows (reachable: entries grow like minors, exponentially in the
//! pivot count).

use num_bigint::BigInt;
use num_traits::Zero;

use crate::matrix::IntMatrix;

/// Exact rank of an integer matrix. No floating point is involved.
pub fn integer_rank(m: &IntMatrix) -> usize {
    match bareiss_rank_i128(m) {
        Some(rank) => rank,
        None => bareiss_rank_bigint(m),
    }
}

/// Exact multiplicity of the integer `t` as an eigenvalue of `m`:
/// `order − rank(m − t·I)`.
pub fn eigenvalue_multiplicity_exact(m: &IntMatrix, t: i64) -> usize {
    let shifted = m.shifted(t);
    m.order() - integer_rank(&shifted)
}

/// Fraction-free elimination over `i128`; `None` on overflow.
///
/// After step `p` every entry is (up to sign) a `(p+1)×(p+1)` minor of the
/// original matrix over the pivot rows/columns, so dividing the cross
/// product by the previous pivot is exact (Sylvester's determinant
/// identity). That stays true with row swaps and skipped zero columns.
fn bareiss_rank_i128(m: &IntMatrix) -> Option<usize> {
    let n = m.order();
    let mut a: Vec<i128> = m.entries().map(i128::from).collect();
    let mut prev: i128 = 1;
    let mut row = 0;
    for col in 0..n {
        if row == n {
            break;
        }
        let Some(pivot_row) = (row..n).find(|&r| a[r * n + col] != 0) else {
            continue;
        };
        if pivot_row != row {
            for j in 0..n {
                a.swap(pivot_row * n + j, row * n + j);
            }
        }
        let pivot = a[row * n + col];
        for r in (row + 1)..n {
            for j in (col + 1)..n {
                let cross = pivot
                    .checked_mul(a[r * n + j])?
                    .checked_sub(a[r * n + col].checked_mul(a[row * n + j])?)?;
                a[r * n + j] = cross / prev;
            }
            a[r * n + col] = 0;
        }
        prev = pivot;
        row += 1;
    }
    Some(row)
}

fn bareiss_rank_bigint(m: &IntMatrix) -> usize {
    let n = m.order();
    let mut a: Vec<BigInt> = m.entries().map(BigInt::from).collect();
    let mut prev = BigInt::from(1);
    let mut row = 0;
    for col in 0..n {
        if row == n {
            break;
        }
        let Some(pivot_row) = (row..n).find(|&r| !a[r * n + col].is_zero()) else {
            continue;
        };
        if pivot_row != row {
            for j in 0..n {
                a.swap(pivot_row * n + j, row * n + j);
            }
        }
        for r in (row + 1)..n {
            for j in (col + 1)..n {
                let cross = &a[row * n + col] * &a[r * n + j] - &a[r * n + col] * &a[row * n + j];
                a[r * n + j] = cross / &prev;
            }
            a[r * n + col] = BigInt::zero();
        }
        prev = a[row * n + col].clone();
        row += 1;
    }
    row
}
