//! Independent oracles for the integration tests: a Floyd-Warshall
//! distance oracle and a cyclic-Jacobi eigenvalue oracle, sharing no code
//! with the library's BFS and Householder-QL implementations.

// Each test binary compiles its own copy and uses a subset of the helpers.
#![allow(dead_code)]
// Index loops mirror the textbook statements of these algorithms.
#![allow(clippy::needless_range_loop)]

use ecc_spectra::{IntMatrix, RealSymMatrix, SimpleGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// All-pairs distances by Floyd-Warshall; `None` if some pair is
/// unreachable.
pub fn floyd_warshall(g: &SimpleGraph) -> Option<IntMatrix> {
    let n = g.vertex_count();
    const INF: i64 = i64::MAX / 4;
    let mut d = vec![vec![INF; n]; n];
    for i in 0..n {
        d[i][i] = 0;
        for j in 0..n {
            if g.has_edge(i, j) {
                d[i][j] = 1;
            }
        }
    }
    for m in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][m] + d[m][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    if d.iter().any(|row| row.iter().any(|&x| x >= INF)) {
        return None;
    }
    Some(IntMatrix::from_rows(d).expect("square distance table"))
}

/// Eigenvalues by the cyclic Jacobi method, ascending. Convergence is
/// unconditional for symmetric input; 50 sweeps is far more than small
/// orders need.
pub fn jacobi_eigenvalues(m: &RealSymMatrix) -> Vec<f64> {
    let n = m.order();
    let mut a: Vec<Vec<f64>> = m.rows().map(|r| r.to_vec()).collect();
    for _ in 0..50 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off < 1e-28 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for i in 0..n {
                    let (aip, aiq) = (a[i][p], a[i][q]);
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for i in 0..n {
                    let (api, aqi) = (a[p][i], a[q][i]);
                    a[p][i] = c * api - s * aqi;
                    a[q][i] = s * api + c * aqi;
                }
            }
        }
    }
    let mut values: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    values.sort_by(f64::total_cmp);
    values
}

/// Random symmetric matrix with entries in [-1, 1].
pub fn random_symmetric(rng: &mut ChaCha8Rng, n: usize) -> RealSymMatrix {
    let mut rows = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in i..n {
            let x = rng.gen_range(-1.0..=1.0);
            rows[i][j] = x;
            rows[j][i] = x;
        }
    }
    RealSymMatrix::from_rows(rows).expect("constructed symmetric")
}

/// Random symmetric integer matrix with entries in [-bound, bound].
pub fn random_symmetric_int(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> IntMatrix {
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let x = rng.gen_range(-bound..=bound);
            rows[i][j] = x;
            rows[j][i] = x;
        }
    }
    IntMatrix::from_rows(rows).expect("constructed symmetric")
}

/// Random connected graph: a random spanning tree plus random extra edges.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::empty(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v);
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(0.3) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
