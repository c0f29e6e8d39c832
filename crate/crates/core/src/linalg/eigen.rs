//! Symmetric eigensolver: Householder reduction to tridiagonal form
//! followed by implicit-shift QL iteration (the classic EISPACK
//! tred2/tql2 pair). Eigenvalues only; nothing in this crate needs
//! eigenvectors.

use super::{LinalgError, RealSymMatrix, Spectrum, GROUPING_FACTOR};

/// QL sweeps allowed per eigenvalue before declaring failure. Symmetric
/// input converges in a handful; hitting the cap signals a defect.
const MAX_QL_SWEEPS: usize = 50;

/// All eigenvalues of a symmetric matrix, ascending, with multiplicity
/// grouping tolerance `1e−7 · max(1, ‖M‖₂)`.
pub fn eigen_sym(m: &RealSymMatrix) -> Result<Spectrum, LinalgError> {
    let n = m.order();
    if n == 0 {
        return Ok(Spectrum::new(Vec::new(), GROUPING_FACTOR));
    }
    let mut v: Vec<Vec<f64>> = m.rows().map(<[f64]>::to_vec).collect();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    householder_tridiagonalize(&mut v, &mut d, &mut e);
    ql_implicit_shift(&mut d, &mut e)?;
    let scale = d.iter().fold(1.0f64, |acc, &x| acc.max(x.abs()));
    Ok(Spectrum::new(d, GROUPING_FACTOR * scale))
}

/// Householder similarity reduction to tridiagonal form. On return `d`
/// holds the diagonal and `e[1..]` the subdiagonal; `v` is consumed as
/// workspace.
#[allow(clippy::needless_range_loop)]
fn householder_tridiagonalize(v: &mut [Vec<f64>], d: &mut [f64], e: &mut [f64]) {
    let n = v.len();
    d.copy_from_slice(&v[n - 1]);

    for i in (1..n).rev() {
        // Scale to avoid under/overflow while forming the reflector.
        let scale: f64 = d[..i].iter().map(|x| x.abs()).sum();
        let mut h = 0.0;
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[i - 1][j];
                v[i][j] = 0.0;
                v[j][i] = 0.0;
            }
        } else {
            for k in 0..i {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            let f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for ej in e[..i].iter_mut() {
                *ej = 0.0;
            }

            // Apply the reflector to the remaining leading block.
            for j in 0..i {
                let f = d[j];
                v[j][i] = f;
                let mut g = e[j] + v[j][j] * f;
                for k in (j + 1)..i {
                    g += v[k][j] * d[k];
                    e[k] += v[k][j] * f;
                }
                e[j] = g;
            }
            let mut f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                let f = d[j];
                let g = e[j];
                for k in j..i {
                    v[k][j] -= f * e[k] + g * d[k];
                }
                d[j] = v[i - 1][j];
                v[i][j] = 0.0;
            }
        }
        d[i] = h;
    }

    // The reduced diagonal sits on v's diagonal; the final entry was never
    // touched by any reflector.
    for (j, dj) in d.iter_mut().enumerate() {
        *dj = v[j][j];
    }
    e[0] = 0.0;
}

/// Implicit-shift QL iteration on a symmetric tridiagonal matrix
/// (`d` diagonal, `e[1..]` subdiagonal). Eigenvalues land in `d`.
fn ql_implicit_shift(d: &mut [f64], e: &mut [f64]) -> Result<(), LinalgError> {
    let n = d.len();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let mut f = 0.0;
    let mut tst1 = 0.0f64;
    let eps = 2.0f64.powi(-52);
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());

        // Find a negligible subdiagonal entry; e[n−1] = 0 bounds the scan.
        let mut m = l;
        while e[m].abs() > eps * tst1 {
            m += 1;
        }

        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > MAX_QL_SWEEPS {
                    return Err(LinalgError::NoConvergence {
                        index: l,
                        max_iter: MAX_QL_SWEEPS,
                    });
                }

                // Implicit shift from the leading 2×2.
                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for di in d[(l + 2)..n].iter_mut() {
                    *di -= h;
                }
                f += h;

                // QL sweep with plane rotations.
                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;

                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ecc::eccentricity_matrix;
    use crate::graph::{build_cograph, GeneratingSequence};
    use crate::linalg::RealSymMatrix;

    fn eig(rows: Vec<Vec<f64>>) -> Vec<f64> {
        eigen_sym(&RealSymMatrix::from_rows(rows).unwrap())
            .unwrap()
            .values()
            .to_vec()
    }

    fn assert_close(got: &[f64], want: &[f64], tol: f64) {
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() <= tol, "{got:?} vs {want:?}");
        }
    }

    #[test]
    fn tiny_matrices() {
        assert!(eig(vec![]).is_empty());
        assert_close(&eig(vec![vec![7.0]]), &[7.0], 0.0);
        assert_close(
            &eig(vec![vec![0.0, 1.0], vec![1.0, 0.0]]),
            &[-1.0, 1.0],
            1e-14,
        );
        assert_close(
            &eig(vec![vec![2.0, 1.0], vec![1.0, 2.0]]),
            &[1.0, 3.0],
            1e-14,
        );
    }

    #[test]
    fn repeated_eigenvalues_group() {
        let s = eigen_sym(
            &RealSymMatrix::from_rows(vec![
                vec![3.0, 0.0, 0.0],
                vec![0.0, 3.0, 0.0],
                vec![0.0, 0.0, 3.0],
            ])
            .unwrap(),
        )
        .unwrap();
        assert_eq!(s.grouped(), vec![(3.0, 3)]);
    }

    #[test]
    fn star_eccentricity_spectrum() {
        // ε of the star C(1,2) has characteristic polynomial λ³ − 6λ − 4,
        // roots −2 and 1 ± √3.
        let values = eig(vec![
            vec![0.0, 1.0, 1.0],
            vec![1.0, 0.0, 2.0],
            vec![1.0, 2.0, 0.0],
        ]);
        let sqrt3 = 3.0f64.sqrt();
        assert_close(&values, &[-2.0, 1.0 - sqrt3, 1.0 + sqrt3], 1e-12);
    }

    #[test]
    fn five_vertex_family_member() {
        let seq: GeneratingSequence = "1,1,1,2".parse().unwrap();
        let d = build_cograph(&seq).distance_matrix().unwrap();
        let eps = eccentricity_matrix(&d);
        let real = RealSymMatrix::from_int(eps.matrix()).unwrap();
        let s = eigen_sym(&real).unwrap();
        let r8 = 8.0f64.sqrt();
        assert_close(s.values(), &[-r8, -2.0, 0.0, 2.0, r8], 1e-10);
    }
}
