//! Eccentricity matrices and spectra of C-graphs.
//!
//! A C-graph `C(α₁,…,α_l)` is the cograph built by repeatedly complementing
//! the disjoint union with a clique: `C(α₁)` is the complement of `K_{α₁}`,
//! and `C(α₁,…,αᵢ)` is the complement of `C(α₁,…,α_{i−1}) ∪ K_{αᵢ}`. For
//! even `l = 2k` with `k ≥ 2` and `α_{2k} ≥ 2` (the main scope of this
//! crate), the family has closed forms for the eccentricity matrix `ε(G)`,
//! its equitable quotient `Q_{2k}`, the inertia, the exact multiplicities of
//! the eigenvalues `0` and `−2`, and an eigenvalue-free interval
//! `(−1−√2,−2) ∪ (−2,0)`.
//!
//! Every closed form has an independent definitional code path next to it
//! (BFS distances vs block formulas, quotient row sums vs entry rules,
//! floating-point spectra vs exact integer ranks), and [`theorems`] packages
//! the comparisons as executable checkers suitable for randomized sweeps.
//!
//! # Examples
//!
//! ```
//! use ecc_spectra::{build_cograph, eigen_sym, GeneratingSequence, RealSymMatrix};
//! use ecc_spectra::ecc::eccentricity_matrix_of;
//!
//! let seq: GeneratingSequence = "1,2,1,2".parse()?;
//! let ecc = eccentricity_matrix_of(&build_cograph(&seq))?;
//! let spectrum = eigen_sym(&RealSymMatrix::from_int(ecc.matrix())?)?;
//!
//! assert_eq!(spectrum.len(), seq.order());
//! assert!(spectrum.min_abs_deviation_from(-2.0) < 1e-12);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod ecc;
pub mod graph;
pub mod linalg;
pub mod matrix;
pub mod quotient;
pub mod report;
pub mod theorems;

pub use ecc::{eccentricity_matrix, is_irreducible, EccMatrix};
pub use graph::{build_cograph, GeneratingSequence, SimpleGraph};
pub use linalg::{eigen_sym, inertia_of, integer_rank, Inertia, RealSymMatrix, Spectrum};
pub use matrix::IntMatrix;
