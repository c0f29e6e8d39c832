//! Per-graph spectral reports, reference-table reproduction, and the
//! CSV/DOT/JSON output formats.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ecc::{ecc_closed_form, eccentricity_matrix_of, is_irreducible};
use crate::graph::{build_cograph, GeneratingSequence, ScopeError, SimpleGraph};
use crate::linalg::{
    eigen_sym, eigenvalue_multiplicity_exact, inertia_of, integer_rank, Inertia, RealSymMatrix,
    Spectrum,
};
use crate::matrix::IntMatrix;
use crate::quotient::{q2k_spectrum, tridiagonal_t};
use crate::theorems::{
    check_closed_form_agreement, check_distinct_count, check_exact_multiplicities, check_inertia,
    check_interval, check_irreducibility, check_k1_closed_form, check_spectrum_assembly,
    check_structural_eigs, TheoremError, TheoremReport, INTERVAL_LO,
};

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Scope(#[from] ScopeError),
    #[error(transparent)]
    Theorem(#[from] TheoremError),
}

/// One grouped eigenvalue: representative value and multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumGroup {
    pub value: f64,
    pub multiplicity: usize,
}

/// Wall-clock comparison of the two routes to the spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    /// Closed form: block matrices, the order-2k quotient eigenproblem,
    /// and the multiplicity formulas.
    pub closed_form_ms: f64,
    /// Ground truth: BFS distances and the order-n eigenproblem.
    pub direct_ms: f64,
}

/// Everything the library can say about one C-graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralReport {
    pub sequence: String,
    pub n: usize,
    pub k: usize,
    /// Directly computed spectrum, grouped.
    pub spectrum: Vec<SpectrumGroup>,
    pub inertia: Inertia,
    /// Exact multiplicity of the eigenvalue 0, certified by integer rank.
    pub m_zero: usize,
    /// Exact multiplicity of the eigenvalue −2, certified by integer rank.
    pub m_minus_two: usize,
    pub irreducible: bool,
    /// `λ_{k−1}(Q_{2k})`, the largest eigenvalue below −2 (main scope only).
    pub lambda_minus: Option<f64>,
    /// Slack of `λ_{k−1}(Q_{2k}) < −1−√2` (main scope only).
    pub interval_margin: Option<f64>,
    pub theorems: Vec<TheoremReport>,
    pub timing: Timing,
}

impl SpectralReport {
    /// Internal consistency: multiplicities and inertia both account for
    /// every one of the `n` eigenvalues.
    pub fn validate(&self) -> bool {
        let total: usize = self.spectrum.iter().map(|g| g.multiplicity).sum();
        total == self.n && self.inertia.order() == self.n
    }

    pub fn all_theorems_pass(&self) -> bool {
        self.theorems.iter().all(|t| t.verdict)
    }
}

fn grouped(spectrum: &Spectrum) -> Vec<SpectrumGroup> {
    spectrum
        .grouped()
        .into_iter()
        .map(|(value, multiplicity)| SpectrumGroup {
            value,
            multiplicity,
        })
        .collect()
}

fn millis_since(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// Builds the full report. Main-scope sequences get every checker; `l = 2`
/// sequences get the `k = 1` closed-form path; anything else is out of
/// scope for the spectral results.
pub fn build_spectral_report(seq: &GeneratingSequence) -> Result<SpectralReport, ReportError> {
    if seq.in_main_scope() {
        main_scope_report(seq).map_err(ReportError::from)
    } else if seq.part_count() == 2 {
        k1_report(seq).map_err(ReportError::from)
    } else {
        Err(ReportError::Scope(ScopeError {
            sequence: seq.to_string(),
            requirement: "even length 2k with k >= 2 and final part >= 2, or length 2",
        }))
    }
}

fn main_scope_report(seq: &GeneratingSequence) -> Result<SpectralReport, TheoremError> {
    let k = seq.k().expect("main scope has even length");

    // Closed-form route, timed: block form of the matrices, the order-2k
    // eigenproblem, the rank certificate for the alpha_2 branch, and the
    // assembled multiset.
    let start = Instant::now();
    let blocks = ecc_closed_form(seq)?;
    let q_spec = q2k_spectrum(seq)?;
    let zero_simple = {
        let t = tridiagonal_t(seq)?;
        integer_rank(&t) == 2 * k - 2
    };
    let mut assembled = q_spec.values().to_vec();
    if zero_simple {
        assembled.remove(k - 1);
    }
    assembled.extend(std::iter::repeat_n(-2.0, seq.sum_even_parts() - k));
    assembled.extend(std::iter::repeat_n(
        0.0,
        seq.sum_odd_parts() - k + usize::from(zero_simple),
    ));
    let closed_form_ms = millis_since(start);
    drop(assembled);
    drop(blocks);

    // Direct route, timed: graph, BFS distances, order-n eigenproblem.
    let start = Instant::now();
    let graph = build_cograph(seq);
    let ecc = eccentricity_matrix_of(&graph)?;
    let direct = eigen_sym(&RealSymMatrix::from_int(ecc.matrix())?)?;
    let direct_ms = millis_since(start);

    let lambda_minus = q_spec.values()[k - 2];
    let report = SpectralReport {
        sequence: seq.to_string(),
        n: seq.order(),
        k,
        spectrum: grouped(&direct),
        inertia: inertia_of(ecc.matrix())?,
        m_zero: eigenvalue_multiplicity_exact(ecc.matrix(), 0),
        m_minus_two: eigenvalue_multiplicity_exact(ecc.matrix(), -2),
        irreducible: is_irreducible(&ecc).irreducible,
        lambda_minus: Some(lambda_minus),
        interval_margin: Some(INTERVAL_LO - lambda_minus),
        theorems: vec![
            check_irreducibility(seq)?,
            check_closed_form_agreement(seq)?,
            check_structural_eigs(seq)?,
            check_exact_multiplicities(seq)?,
            check_inertia(seq)?,
            check_interval(seq)?,
            check_spectrum_assembly(seq)?,
            check_distinct_count(seq)?,
        ],
        timing: Timing {
            closed_form_ms,
            direct_ms,
        },
    };
    Ok(report)
}

fn k1_report(seq: &GeneratingSequence) -> Result<SpectralReport, TheoremError> {
    let (a1, a2) = (seq.parts()[0], seq.parts()[1]);

    // Closed-form route: evaluate the k = 1 spectrum formula.
    let start = Instant::now();
    let (a1f, a2f) = (f64::from(a1), f64::from(a2));
    let half = (a1f - 1.0) / 2.0;
    let p = a1f + a2f - 2.0 - half;
    let s = ((a1f - a2f - half).powi(2) + a1f * a2f).sqrt();
    let mut closed = vec![-1.0; a1 as usize - 1];
    closed.extend(std::iter::repeat_n(-2.0, a2 as usize - 1));
    closed.push(p - s);
    closed.push(p + s);
    let closed_form_ms = millis_since(start);
    drop(closed);

    let start = Instant::now();
    let graph = build_cograph(seq);
    let ecc = eccentricity_matrix_of(&graph)?;
    let direct = eigen_sym(&RealSymMatrix::from_int(ecc.matrix())?)?;
    let direct_ms = millis_since(start);

    Ok(SpectralReport {
        sequence: seq.to_string(),
        n: seq.order(),
        k: 1,
        spectrum: grouped(&direct),
        inertia: inertia_of(ecc.matrix())?,
        m_zero: eigenvalue_multiplicity_exact(ecc.matrix(), 0),
        m_minus_two: eigenvalue_multiplicity_exact(ecc.matrix(), -2),
        irreducible: is_irreducible(&ecc).irreducible,
        lambda_minus: None,
        interval_margin: None,
        theorems: vec![check_k1_closed_form(a1, a2)?],
        timing: Timing {
            closed_form_ms,
            direct_ms,
        },
    })
}

/// Reference eccentricity spectra for eleven small C-graphs, printed to
/// four (occasionally five) decimals. `corrected` lists groups whose
/// printed value fails an exact identity, together with the value implied
/// by the quotient closed form; comparisons use the corrected value.
pub struct ReferenceRow {
    pub sequence: &'static str,
    pub printed: &'static [(f64, usize)],
    pub corrected: &'static [(usize, f64)],
    pub note: Option<&'static str>,
}

pub const REFERENCE_SPECTRA: &[ReferenceRow] = &[
    ReferenceRow {
        sequence: "1,1,1,2",
        printed: &[(-2.8284, 1), (-2.0, 1), (0.0, 1), (2.0, 1), (2.8284, 1)],
        corrected: &[],
        note: None,
    },
    ReferenceRow {
        sequence: "2,1,1,2",
        printed: &[(-3.4641, 1), (-2.0, 1), (0.0, 2), (2.0, 1), (3.4641, 1)],
        corrected: &[],
        note: None,
    },
    ReferenceRow {
        sequence: "1,1,2,2",
        printed: &[(-4.0, 1), (-2.0, 1), (0.0, 2), (2.0, 1), (4.0, 1)],
        corrected: &[],
        note: None,
    },
    ReferenceRow {
        sequence: "1,2,1,2",
        printed: &[(-2.9624, 1), (-2.0, 2), (0.6222, 1), (2.0, 1), (4.3402, 1)],
        corrected: &[],
        note: None,
    },
    ReferenceRow {
        sequence: "1,1,1,1,1,2",
        printed: &[
            (-3.4982, 1),
            (-2.5427, 1),
            (-2.0, 1),
            (0.0, 1),
            (0.6698, 1),
            (2.0, 1),
            (5.3711, 1),
        ],
        corrected: &[],
        note: None,
    },
    ReferenceRow {
        sequence: "1,1,3,2",
        printed: &[(-4.8990, 1), (-2.0, 1), (0.0, 3), (2.0, 1), (4.8990, 1)],
        corrected: &[],
        note: None,
    },
    ReferenceRow {
        sequence: "1,3,1,2",
        printed: &[(-3.0283, 1), (-2.0, 3), (0.8560, 1), (2.0, 1), (6.123, 1)],
        corrected: &[(4, 6.1722603953)],
        note: Some(
            "the reference value 6.123 for the largest eigenvalue fails the zero-trace \
             identity (the printed values sum to -0.0493, not 0); the quotient closed form \
             gives the largest root of x^3 - 4x^2 - 16x + 16, which is 6.1723 and is used \
             as the expected value",
        ),
    },
    ReferenceRow {
        sequence: "1,2,2,2",
        printed: &[
            (-4.35488, 1),
            (-2.0, 2),
            (0.0, 1),
            (0.6433, 1),
            (2.0, 1),
            (5.7115, 1),
        ],
        corrected: &[],
        note: None,
    },
    ReferenceRow {
        sequence: "2,1,1,3",
        printed: &[(-3.4641, 1), (-2.0, 2), (0.0, 2), (3.4641, 1), (4.0, 1)],
        corrected: &[],
        note: None,
    },
    ReferenceRow {
        sequence: "1,2,1,3",
        printed: &[(-2.9624, 1), (-2.0, 3), (0.6222, 1), (4.0, 1), (4.3402, 1)],
        corrected: &[],
        note: None,
    },
    ReferenceRow {
        sequence: "1,1,1,4",
        printed: &[(-2.8284, 1), (-2.0, 3), (0.0, 1), (2.8284, 1), (6.0, 1)],
        corrected: &[],
        note: None,
    },
];

/// Tolerance for comparing computed eigenvalues against the reference
/// table's rounded decimals.
pub const REFERENCE_TOL: f64 = 1e-3;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReferenceRowOutcome {
    pub sequence: String,
    pub expected: Vec<SpectrumGroup>,
    pub computed: Vec<SpectrumGroup>,
    pub max_abs_diff: f64,
    pub pass: bool,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReferenceTableReport {
    pub rows: Vec<ReferenceRowOutcome>,
    pub elapsed_ms: f64,
}

impl ReferenceTableReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

/// Recomputes every reference row from scratch and compares: values within
/// [`REFERENCE_TOL`], multiplicities exactly.
pub fn run_reference_table() -> Result<ReferenceTableReport, TheoremError> {
    let start = Instant::now();
    let rows = REFERENCE_SPECTRA
        .iter()
        .map(|row| {
            let seq: GeneratingSequence = row.sequence.parse().expect("fixture sequences parse");
            let ecc = eccentricity_matrix_of(&build_cograph(&seq))?;
            let spectrum = eigen_sym(&RealSymMatrix::from_int(ecc.matrix())?)?;
            let computed = grouped(&spectrum);

            let expected: Vec<SpectrumGroup> = row
                .printed
                .iter()
                .enumerate()
                .map(|(i, &(value, multiplicity))| {
                    let value = row
                        .corrected
                        .iter()
                        .find(|(idx, _)| *idx == i)
                        .map_or(value, |&(_, v)| v);
                    SpectrumGroup {
                        value,
                        multiplicity,
                    }
                })
                .collect();

            let mut max_abs_diff = 0f64;
            let mut pass = expected.len() == computed.len();
            if pass {
                for (e, c) in expected.iter().zip(&computed) {
                    let diff = (e.value - c.value).abs();
                    max_abs_diff = max_abs_diff.max(diff);
                    pass &= diff < REFERENCE_TOL && e.multiplicity == c.multiplicity;
                }
            }
            Ok(ReferenceRowOutcome {
                sequence: row.sequence.to_string(),
                expected,
                computed,
                max_abs_diff,
                pass,
                note: row.note.map(str::to_string),
            })
        })
        .collect::<Result<Vec<_>, TheoremError>>()?;
    Ok(ReferenceTableReport {
        rows,
        elapsed_ms: millis_since(start),
    })
}

/// Formats a real number with 12 significant digits, trailing zeros
/// trimmed, `.` as the decimal separator regardless of locale.
pub fn format_real(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    if (-5..12).contains(&mag) {
        let decimals = (11 - mag).max(0) as usize;
        let s = format!("{x:.decimals$}");
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        let s = format!("{x:.11e}");
        let (mantissa, exponent) = s
            .split_once('e')
            .expect("scientific format has an exponent");
        let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
        format!("{mantissa}e{exponent}")
    }
}

/// CSV dump of an integer matrix: one line per row, `\n` endings.
pub fn int_matrix_csv(m: &IntMatrix) -> String {
    m.rows()
        .map(|row| {
            let mut line = row.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
            line.push('\n');
            line
        })
        .collect()
}

/// CSV dump of a real matrix at 12 significant digits.
pub fn real_matrix_csv(m: &RealSymMatrix) -> String {
    m.rows()
        .map(|row| {
            let mut line = row
                .iter()
                .map(|&v| format_real(v))
                .collect::<Vec<_>>()
                .join(",");
            line.push('\n');
            line
        })
        .collect()
}

/// DOT rendering with vertices labeled `p<part>_<index>` (1-based index
/// within the part).
pub fn graph_dot(g: &SimpleGraph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    let max_label = g.part_labels().iter().copied().max().unwrap_or(0);
    let mut seen = vec![0usize; max_label + 1];
    for v in 0..g.vertex_count() {
        let part = g.part_label(v);
        seen[part] += 1;
        out.push_str(&format!("  v{v} [label=\"p{part}_{}\"];\n", seen[part]));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  v{u} -- v{v};\n"));
    }
    out.push_str("}\n");
    out
}

fn spectrum_text(groups: &[SpectrumGroup]) -> String {
    let body = groups
        .iter()
        .map(|g| {
            if g.multiplicity == 1 {
                format_real(g.value)
            } else {
                format!("{}^{}", format_real(g.value), g.multiplicity)
            }
        })
        .collect::<Vec<_>>()
        .join(", ");
    format!("{{{body}}}")
}

/// Human-readable rendering of a report.
pub fn render_text(report: &SpectralReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "C({}): n = {}, k = {}\n",
        report.sequence, report.n, report.k
    ));
    out.push_str(&format!("spectrum: {}\n", spectrum_text(&report.spectrum)));
    out.push_str(&format!("inertia (n-, n0, n+): {}\n", report.inertia));
    out.push_str(&format!(
        "exact multiplicities: m(0) = {}, m(-2) = {}\n",
        report.m_zero, report.m_minus_two
    ));
    out.push_str(&format!("irreducible: {}\n", report.irreducible));
    if let (Some(lambda), Some(margin)) = (report.lambda_minus, report.interval_margin) {
        out.push_str(&format!(
            "lambda_minus (largest eigenvalue below -2): {}\n",
            format_real(lambda)
        ));
        out.push_str(&format!(
            "margin below -1-sqrt(2): {}\n",
            format_real(margin)
        ));
    }
    let passed = report.theorems.iter().filter(|t| t.verdict).count();
    out.push_str(&format!(
        "theorem checks: {passed}/{} pass\n",
        report.theorems.len()
    ));
    for t in &report.theorems {
        let tag = if t.verdict { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "  [{tag}] {}: predicted {}; computed {}\n",
            t.id, t.predicted, t.computed
        ));
        if let Some(note) = &t.note {
            out.push_str(&format!("         note: {note}\n"));
        }
    }
    out.push_str(&format!(
        "timing: closed-form path {:.3} ms, direct path {:.3} ms\n",
        report.timing.closed_form_ms, report.timing.direct_ms
    ));
    out
}

/// JSON rendering (pretty-printed); parses back to an equal report.
pub fn render_json(report: &SpectralReport) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

pub const CSV_HEADER: &str =
    "sequence,n,k,irreducible,n_minus,n_zero,n_plus,m_zero,m_minus_two,lambda_minus,\
     interval_margin,spectrum\n";

/// One CSV row per report; the spectrum column is space-separated
/// `value^multiplicity` items.
pub fn render_csv_row(report: &SpectralReport) -> String {
    let spectrum = report
        .spectrum
        .iter()
        .map(|g| format!("{}^{}", format_real(g.value), g.multiplicity))
        .collect::<Vec<_>>()
        .join(" ");
    format!(
        "\"{}\",{},{},{},{},{},{},{},{},{},{},{}\n",
        report.sequence,
        report.n,
        report.k,
        report.irreducible,
        report.inertia.n_minus,
        report.inertia.n_zero,
        report.inertia.n_plus,
        report.m_zero,
        report.m_minus_two,
        report.lambda_minus.map_or(String::new(), format_real),
        report.interval_margin.map_or(String::new(), format_real),
        spectrum
    )
}

/// Text rendering of the reference-table comparison.
pub fn render_reference_table_text(table: &ReferenceTableReport) -> String {
    let mut out = String::new();
    for row in &table.rows {
        let tag = if row.pass { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "[{tag}] C({}): expected {} computed {} (max diff {:.2e})\n",
            row.sequence,
            spectrum_text(&row.expected),
            spectrum_text(&row.computed),
            row.max_abs_diff
        ));
        if let Some(note) = &row.note {
            out.push_str(&format!("       note: {note}\n"));
        }
    }
    let verdict = if table.all_pass() { "PASS" } else { "FAIL" };
    out.push_str(&format!(
        "reference table: {} rows, {verdict} in {:.1} ms\n",
        table.rows.len(),
        table.elapsed_ms
    ));
    out
}
