//! C-graph construction and basic graph computations.
//!
//! The family is generated by a sequence of positive integers: `C(α₁)` is
//! the complement of the clique `K_{α₁}`, and each further step complements
//! the disjoint union with a fresh clique,
//! `C(α₁,…,αᵢ) = complement(C(α₁,…,α_{i−1}) ∪ K_{αᵢ})`. Vertices added at
//! step `i` form part `Vᵢ`; parts occupy contiguous, increasing index
//! ranges, which makes the block structure of every derived matrix
//! positional.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::IntMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("generating sequence must be non-empty")]
    EmptySequence,
    #[error("generating sequence entries must be positive")]
    NonPositivePart,
    #[error("cannot parse sequence entry {0:?}")]
    UnparsablePart(String),
    #[error("graph is disconnected: no path from vertex {from} to vertex {to}")]
    Disconnected { from: usize, to: usize },
}

/// A sequence predicate failed; the operation only supports part of the
/// family.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("sequence ({sequence}) out of scope: requires {requirement}")]
pub struct ScopeError {
    pub sequence: String,
    pub requirement: &'static str,
}

/// The tuple `(α₁,…,α_l)` defining a C-graph. Every entry is `≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct GeneratingSequence(Vec<u32>);

impl GeneratingSequence {
    pub fn new(parts: Vec<u32>) -> Result<Self, GraphError> {
        if parts.is_empty() {
            return Err(GraphError::EmptySequence);
        }
        if parts.contains(&0) {
            return Err(GraphError::NonPositivePart);
        }
        Ok(GeneratingSequence(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of parts, `l`.
    pub fn part_count(&self) -> usize {
        self.0.len()
    }

    /// Number of vertices, `n = Σ αᵢ`.
    pub fn order(&self) -> usize {
        self.0.iter().map(|&a| a as usize).sum()
    }

    /// `k = l/2` when the length is even.
    pub fn k(&self) -> Option<usize> {
        self.0.len().is_multiple_of(2).then_some(self.0.len() / 2)
    }

    pub fn last_part(&self) -> u32 {
        *self.0.last().expect("sequence is non-empty")
    }

    /// Main scope of the closed-form results: `l = 2k`, `k ≥ 2`, `α_{2k} ≥ 2`.
    pub fn in_main_scope(&self) -> bool {
        matches!(self.k(), Some(k) if k >= 2) && self.last_part() >= 2
    }

    pub fn require_main_scope(&self) -> Result<(), ScopeError> {
        if self.in_main_scope() {
            Ok(())
        } else {
            Err(ScopeError {
                sequence: self.to_string(),
                requirement: "even length 2k with k >= 2 and final part >= 2",
            })
        }
    }

    /// Scope of the irreducibility criterion: `l = 2k`, `k ≥ 2`, any tail.
    pub fn require_even_family(&self) -> Result<usize, ScopeError> {
        match self.k() {
            Some(k) if k >= 2 => Ok(k),
            _ => Err(ScopeError {
                sequence: self.to_string(),
                requirement: "even length 2k with k >= 2",
            }),
        }
    }

    /// `α₁ + α₃ + ⋯ + α_{l−1}` (1-based odd positions).
    pub fn sum_odd_parts(&self) -> usize {
        self.0.iter().step_by(2).map(|&a| a as usize).sum()
    }

    /// `α₂ + α₄ + ⋯ + α_l` (1-based even positions).
    pub fn sum_even_parts(&self) -> usize {
        self.0.iter().skip(1).step_by(2).map(|&a| a as usize).sum()
    }

    /// Contiguous vertex index range of each part, in part order.
    pub fn part_ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.0
            .iter()
            .map(|&a| {
                let r = start..start + a as usize;
                start = r.end;
                r
            })
            .collect()
    }
}

impl TryFrom<Vec<u32>> for GeneratingSequence {
    type Error = GraphError;

    fn try_from(parts: Vec<u32>) -> Result<Self, GraphError> {
        GeneratingSequence::new(parts)
    }
}

impl From<GeneratingSequence> for Vec<u32> {
    fn from(seq: GeneratingSequence) -> Vec<u32> {
        seq.0
    }
}

impl FromStr for GeneratingSequence {
    type Err = GraphError;

    /// Parses `"1,2,1,2"`; whitespace around entries is ignored.
    fn from_str(s: &str) -> Result<Self, GraphError> {
        let parts = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<u32>()
                    .map_err(|_| GraphError::UnparsablePart(tok.to_string()))
            })
            .collect::<Result<Vec<u32>, _>>()?;
        GeneratingSequence::new(parts)
    }
}

impl fmt::Display for GeneratingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Undirected simple graph: symmetric boolean adjacency, zero diagonal.
///
/// `part_labels` records which construction part each vertex belongs to
/// (1-based); plain constructors label everything part 1, and
/// [`SimpleGraph::disjoint_union`] offsets the right operand's labels past
/// the left's so the C-graph recursion numbers parts naturally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<bool>,
    part_labels: Vec<usize>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            n,
            adj: vec![false; n * n],
            part_labels: vec![1; n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::empty(n);
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    g.adj[u * n + v] = true;
                }
            }
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "no self-loops in a simple graph");
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.has_edge(v, u)).count()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    /// Edges as pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n)
            .flat_map(move |u| ((u + 1)..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.has_edge(u, v))
    }

    pub fn part_label(&self, v: usize) -> usize {
        self.part_labels[v]
    }

    pub fn part_labels(&self) -> &[usize] {
        &self.part_labels
    }

    fn max_part_label(&self) -> usize {
        self.part_labels.iter().copied().max().unwrap_or(0)
    }

    /// Same vertex set and part labels, no edges.
    pub fn edgeless_copy(&self) -> SimpleGraph {
        SimpleGraph {
            n: self.n,
            adj: vec![false; self.n * self.n],
            part_labels: self.part_labels.clone(),
        }
    }

    /// Adjacency flipped off-diagonal; part labels preserved.
    pub fn complement(&self) -> SimpleGraph {
        let mut g = self.clone();
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v {
                    g.adj[u * self.n + v] = !self.adj[u * self.n + v];
                }
            }
        }
        g
    }

    /// Block-diagonal adjacency; `other`'s part labels are offset past
    /// `self`'s largest label.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let n = self.n + other.n;
        let offset = self.max_part_label();
        let mut g = SimpleGraph {
            n,
            adj: vec![false; n * n],
            part_labels: Vec::with_capacity(n),
        };
        g.part_labels.extend_from_slice(&self.part_labels);
        g.part_labels
            .extend(other.part_labels.iter().map(|&p| p + offset));
        for u in 0..self.n {
            for v in 0..self.n {
                g.adj[u * n + v] = self.adj[u * self.n + v];
            }
        }
        for u in 0..other.n {
            for v in 0..other.n {
                g.adj[(self.n + u) * n + (self.n + v)] = other.adj[u * other.n + v];
            }
        }
        g
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                if self.has_edge(u, v) {
                    m.set(u, v, 1);
                }
            }
        }
        m
    }

    /// Component id per vertex, numbered in discovery order from vertex 0.
    #[allow(clippy::needless_range_loop)]
    pub fn connected_components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut queue = VecDeque::from([start]);
            comp[start] = next;
            while let Some(u) = queue.pop_front() {
                for v in 0..self.n {
                    if self.has_edge(u, v) && comp[v] == usize::MAX {
                        comp[v] = next;
                        queue.push_back(v);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().iter().all(|&c| c == 0)
    }

    /// All-pairs distances by BFS from each vertex.
    pub fn distance_matrix(&self) -> Result<IntMatrix, GraphError> {
        let mut d = IntMatrix::zeros(self.n);
        let mut dist = vec![-1i64; self.n];
        for src in 0..self.n {
            dist.fill(-1);
            dist[src] = 0;
            let mut queue = VecDeque::from([src]);
            while let Some(u) = queue.pop_front() {
                for v in 0..self.n {
                    if self.has_edge(u, v) && dist[v] < 0 {
                        dist[v] = dist[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            for (to, &dv) in dist.iter().enumerate() {
                if dv < 0 {
                    return Err(GraphError::Disconnected { from: src, to });
                }
                d.set(src, to, dv);
            }
        }
        Ok(d)
    }
}

/// Builds `C(α₁,…,α_l)` by the defining recursion. Vertices of part `i`
/// are contiguous and labeled `i`.
pub fn build_cograph(seq: &GeneratingSequence) -> SimpleGraph {
    let parts = seq.parts();
    let mut g = SimpleGraph::empty(parts[0] as usize);
    for &a in &parts[1..] {
        g = g
            .disjoint_union(&SimpleGraph::complete(a as usize))
            .complement();
    }
    g
}

/// Adjacency matrix `A_m` of the antiregular graph `C(1,1,…,1)` on `m`
/// vertices.
pub fn antiregular_adjacency(m: usize) -> IntMatrix {
    assert!(m >= 1, "antiregular graph needs at least one vertex");
    let seq = GeneratingSequence::new(vec![1; m]).expect("all-ones sequence is valid");
    build_cograph(&seq).adjacency_matrix()
}

/// Eccentricities `e(vᵢ)` as row maxima of a distance matrix.
pub fn eccentricities(d: &IntMatrix) -> Vec<i64> {
    d.rows()
        .map(|row| row.iter().copied().max().unwrap_or(0))
        .collect()
}
