//! Eccentricity matrix, eccentric graph, irreducibility.
//!
//! The eccentricity matrix `ε(G)` keeps a distance entry only where it
//! attains the smaller of the two endpoint eccentricities and zeroes the
//! rest. The eccentric graph `G^e` is its nonzero pattern; `ε(G)` is
//! irreducible exactly when `G^e` is connected.

use std::collections::VecDeque;

use crate::graph::{eccentricities, GeneratingSequence, GraphError, ScopeError, SimpleGraph};
use crate::matrix::IntMatrix;

/// The eccentricity matrix of a connected graph: symmetric, zero diagonal,
/// every row nonzero for `n ≥ 2` (each vertex attains its eccentricity).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EccMatrix(IntMatrix);

impl EccMatrix {
    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.0
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }

    /// Structural invariants: symmetry, zero diagonal, row support.
    pub fn validate(&self) -> bool {
        let n = self.0.order();
        self.0.is_symmetric()
            && (0..n).all(|i| self.0.get(i, i) == 0)
            && (n < 2 || (0..n).all(|i| self.0.row(i).iter().any(|&v| v != 0)))
    }
}

/// Eccentricity matrix from a distance matrix: entry `(i,j)` is `d(i,j)`
/// when `d(i,j) = min(e(vᵢ), e(vⱼ))`, else `0`.
pub fn eccentricity_matrix(d: &IntMatrix) -> EccMatrix {
    let e = eccentricities(d);
    let n = d.order();
    let mut m = IntMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            if i != j && d.get(i, j) == e[i].min(e[j]) {
                m.set(i, j, d.get(i, j));
            }
        }
    }
    EccMatrix(m)
}

/// Convenience: `ε(G)` straight from a connected graph.
pub fn eccentricity_matrix_of(g: &SimpleGraph) -> Result<EccMatrix, GraphError> {
    Ok(eccentricity_matrix(&g.distance_matrix()?))
}

/// Closed-form `ε(C(α₁,…,α_{2k}))` for in-scope sequences, built from the
/// block structure instead of distances: every eccentricity is 2, so
/// `ε = 2(J − I − A)`; blockwise that is `2J` between parts whose larger
/// index is odd, `2(J − I)` on even diagonal blocks, and `0` elsewhere.
/// Kept deliberately independent of [`eccentricity_matrix`] so the two
/// routes can cross-validate.
pub fn ecc_closed_form(seq: &GeneratingSequence) -> Result<EccMatrix, ScopeError> {
    seq.require_main_scope()?;
    let ranges = seq.part_ranges();
    let n = seq.order();
    let mut m = IntMatrix::zeros(n);
    for (pi, ri) in ranges.iter().enumerate() {
        for (pj, rj) in ranges.iter().enumerate() {
            // 1-based part indices decide the parity rule.
            let (i1, j1) = (pi + 1, pj + 1);
            if i1 == j1 {
                if i1 % 2 == 0 {
                    for u in ri.clone() {
                        for v in rj.clone() {
                            if u != v {
                                m.set(u, v, 2);
                            }
                        }
                    }
                }
            } else if i1.max(j1) % 2 == 1 {
                for u in ri.clone() {
                    for v in rj.clone() {
                        m.set(u, v, 2);
                    }
                }
            }
        }
    }
    Ok(EccMatrix(m))
}

/// The eccentric graph `G^e`: same vertex set, an edge wherever the
/// eccentricity matrix is nonzero. Part labels carry over.
pub fn eccentric_graph(g: &SimpleGraph) -> Result<SimpleGraph, GraphError> {
    let e = eccentricity_matrix_of(g)?;
    let mut ge = g.edgeless_copy();
    let n = g.vertex_count();
    for u in 0..n {
        for v in (u + 1)..n {
            if e.matrix().get(u, v) != 0 {
                ge.add_edge(u, v);
            }
        }
    }
    Ok(ge)
}

/// Verdict on the irreducibility of an eccentricity matrix, with a
/// certifying vertex split when reducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibilityReport {
    pub irreducible: bool,
    pub component_count: usize,
    /// Two nonempty vertex sets with no nonzero entry between them.
    pub witness: Option<(Vec<usize>, Vec<usize>)>,
}

/// Decides irreducibility of `ε` from its nonzero pattern. Two independent
/// routes must agree: breadth-first connectivity of the pattern graph, and
/// the permutation-block definition via reflexive-transitive closure of the
/// pattern (a matrix is reducible exactly when simultaneous row/column
/// permutation exposes a zero off-diagonal block, i.e. when the closure has
/// an unreachable pair).
pub fn is_irreducible(e: &EccMatrix) -> IrreducibilityReport {
    let n = e.order();
    if n <= 1 {
        return IrreducibilityReport {
            irreducible: true,
            component_count: n.min(1),
            witness: None,
        };
    }

    // Route 1: BFS on the pattern.
    let comp = pattern_components(e.matrix());
    let component_count = comp.iter().copied().max().unwrap_or(0) + 1;
    let connected_bfs = component_count == 1;

    // Route 2: boolean closure of (I ∨ pattern).
    let connected_closure = closure_is_full(e.matrix());
    assert_eq!(
        connected_bfs, connected_closure,
        "connectivity routes disagree on the nonzero pattern"
    );

    let witness = (!connected_bfs).then(|| {
        let inside: Vec<usize> = (0..n).filter(|&v| comp[v] == comp[0]).collect();
        let outside: Vec<usize> = (0..n).filter(|&v| comp[v] != comp[0]).collect();
        (inside, outside)
    });
    IrreducibilityReport {
        irreducible: connected_bfs,
        component_count,
        witness,
    }
}

#[allow(clippy::needless_range_loop)]
fn pattern_components(m: &IntMatrix) -> Vec<usize> {
    let n = m.order();
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = next;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if m.get(u, v) != 0 && comp[v] == usize::MAX {
                    comp[v] = next;
                    queue.push_back(v);
                }
            }
        }
        next += 1;
    }
    comp
}

/// Floyd–Warshall-style boolean closure: reachability over the symmetric
/// pattern, every pair reachable iff connected.
fn closure_is_full(m: &IntMatrix) -> bool {
    let n = m.order();
    let mut reach = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            reach[i * n + j] = i == j || m.get(i, j) != 0;
        }
    }
    for via in 0..n {
        for i in 0..n {
            if reach[i * n + via] {
                for j in 0..n {
                    if reach[via * n + j] {
                        reach[i * n + j] = true;
                    }
                }
            }
        }
    }
    reach.iter().all(|&r| r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_cograph;

    fn seq(s: &str) -> GeneratingSequence {
        s.parse().unwrap()
    }

    fn ecc_of(s: &str) -> EccMatrix {
        eccentricity_matrix_of(&build_cograph(&seq(s))).unwrap()
    }

    #[test]
    fn complete_graph_keeps_everything() {
        let e = ecc_of("1,1");
        assert_eq!(
            e.matrix(),
            &IntMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap()
        );
        assert!(e.validate());
    }

    #[test]
    fn star_matrix_by_definition() {
        // C(1,2) is the star with the center first: center-leaf distances
        // equal the center's eccentricity 1; leaf-leaf distance 2 equals
        // both leaf eccentricities.
        let e = ecc_of("1,2");
        let expected =
            IntMatrix::from_rows(vec![vec![0, 1, 1], vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        assert_eq!(e.matrix(), &expected);
    }

    #[test]
    fn path_on_four_vertices_zeroes_non_attaining_entries() {
        // Generic diameter-3 input for the definitional path.
        let mut p4 = SimpleGraph::empty(4);
        p4.add_edge(0, 1);
        p4.add_edge(1, 2);
        p4.add_edge(2, 3);
        let e = eccentricity_matrix(&p4.distance_matrix().unwrap());
        let expected = IntMatrix::from_rows(vec![
            vec![0, 0, 2, 3],
            vec![0, 0, 0, 2],
            vec![2, 0, 0, 0],
            vec![3, 2, 0, 0],
        ])
        .unwrap();
        assert_eq!(e.matrix(), &expected);
        assert!(e.validate());
    }

    #[test]
    fn closed_form_matches_definition() {
        for s in ["1,1,1,2", "1,2,1,2", "3,2,1,2", "2,1,1,3", "1,1,1,1,1,2"] {
            let by_definition = ecc_of(s);
            let by_blocks = ecc_closed_form(&seq(s)).unwrap();
            assert_eq!(by_blocks, by_definition, "sequence {s}");
        }
        assert!(ecc_closed_form(&seq("1,1,1,1")).is_err(), "unit tail");
        assert!(ecc_closed_form(&seq("1,2")).is_err(), "k = 1");
    }

    #[test]
    fn irreducibility_follows_the_tail() {
        // Unit tail: eccentric graph connected, matrix irreducible.
        let r = is_irreducible(&ecc_of("1,1,1,1"));
        assert!(r.irreducible);
        assert_eq!(r.component_count, 1);
        assert_eq!(r.witness, None);

        // Tail ≥ 2: the final part separates.
        let r = is_irreducible(&ecc_of("1,1,1,2"));
        assert!(!r.irreducible);
        assert_eq!(r.component_count, 2);
        let (inside, outside) = r.witness.unwrap();
        assert_eq!(inside, vec![0, 1, 2]);
        assert_eq!(outside, vec![3, 4]);

        assert!(is_irreducible(&ecc_of("1,1")).irreducible);
    }

    #[test]
    fn eccentric_graph_components() {
        let g = build_cograph(&seq("1,1,1,2"));
        let ge = eccentric_graph(&g).unwrap();
        let comp = ge.connected_components();
        assert_eq!(comp, vec![0, 0, 0, 1, 1]);

        let h = build_cograph(&seq("1,1,1,1"));
        assert!(eccentric_graph(&h).unwrap().is_connected());

        let k2 = build_cograph(&seq("1,1"));
        assert_eq!(eccentric_graph(&k2).unwrap().edge_count(), 1);
    }
}
