//! `ecc-spectra`: spectra, matrices, and theorem verification for the
//! C-graph family on the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 sequence
//! out of scope for the requested computation.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ecc_spectra::ecc::{eccentric_graph, eccentricity_matrix_of};
use ecc_spectra::graph::{build_cograph, GeneratingSequence, GraphError};
use ecc_spectra::quotient::{build_q2k, quotient_bundle, tridiagonal_s, tridiagonal_t};
use ecc_spectra::report::{
    build_spectral_report, format_real, graph_dot, int_matrix_csv, real_matrix_csv, render_csv_row,
    render_json, render_reference_table_text, render_text, run_reference_table, ReportError,
    CSV_HEADER,
};
use ecc_spectra::theorems::{
    check_antiregular_lemmas, check_k1_closed_form, run_sweep, TheoremError, TheoremReport,
};

#[derive(Parser)]
#[command(
    name = "ecc-spectra",
    about = "Eccentricity spectra of the C-graph family",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full spectral report for C(a1,...,a2k) or C(a1,a2).
    Spectrum {
        /// Generating sequence, e.g. "1,2,1,2".
        sequence: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Recompute the built-in reference table of eleven spectra.
    Table1,
    /// Run every theorem checker over randomly sampled sequences.
    Verify {
        /// Number of sampled sequences (each runs nine checks).
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        /// Largest k to sample (sequences have length 2k).
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(2..=8))]
        max_k: u64,
        /// Largest part size to sample.
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(2..=16))]
        max_alpha: u32,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Print a matrix of the graph as CSV.
    Matrix {
        sequence: String,
        #[arg(long, value_enum)]
        which: MatrixKind,
    },
    /// Print the graph or its eccentric graph as DOT.
    Dot {
        sequence: String,
        #[arg(long, value_enum, default_value_t = DotKind::Graph)]
        which: DotKind,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixKind {
    /// Adjacency matrix.
    Adj,
    /// Distance matrix.
    Dist,
    /// Eccentricity matrix.
    Ecc,
    /// Order-2k quotient matrix (main scope only).
    Q2k,
    /// Quotient matrix with the last row and column deleted.
    Qtilde,
    /// Symmetric similarity image of the reduced quotient.
    R,
    /// Tridiagonal form certifying the rank of the reduced quotient.
    T,
    /// Tridiagonal form certifying the rank of the shift by 2.
    S,
}

#[derive(Clone, Copy, ValueEnum)]
enum DotKind {
    Graph,
    Eccentric,
}

/// Failures that map onto the documented exit codes.
enum CliError {
    /// Exit 1: a verification or internal numeric failure.
    Failure(String),
    /// Exit 2: unparsable input.
    Usage(String),
    /// Exit 3: valid sequence, but out of scope for the computation.
    Scope(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Failure(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Scope(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Failure(m) | CliError::Usage(m) | CliError::Scope(m) => m,
        }
    }
}

fn parse_sequence(s: &str) -> Result<GeneratingSequence, CliError> {
    s.parse()
        .map_err(|e: GraphError| CliError::Usage(e.to_string()))
}

fn from_theorem(e: TheoremError) -> CliError {
    match e {
        TheoremError::Scope(s) => CliError::Scope(s.to_string()),
        TheoremError::Graph(g @ GraphError::Disconnected { .. }) => CliError::Scope(g.to_string()),
        other => CliError::Failure(other.to_string()),
    }
}

fn from_graph(e: GraphError) -> CliError {
    match e {
        g @ GraphError::Disconnected { .. } => CliError::Scope(g.to_string()),
        other => CliError::Usage(other.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Spectrum { sequence, format } => cmd_spectrum(&sequence, format),
        Command::Table1 => cmd_table1(),
        Command::Verify {
            trials,
            max_k,
            max_alpha,
            seed,
        } => cmd_verify(trials as usize, max_k as usize, max_alpha, seed),
        Command::Matrix { sequence, which } => cmd_matrix(&sequence, which),
        Command::Dot { sequence, which } => cmd_dot(&sequence, which),
    }
}

fn cmd_spectrum(sequence: &str, format: Format) -> Result<(), CliError> {
    let seq = parse_sequence(sequence)?;
    let report = build_spectral_report(&seq).map_err(|e| match e {
        ReportError::Scope(s) => CliError::Scope(s.to_string()),
        ReportError::Theorem(t) => from_theorem(t),
    })?;
    match format {
        Format::Text => print!("{}", render_text(&report)),
        Format::Json => println!("{}", render_json(&report)),
        Format::Csv => print!("{}{}", CSV_HEADER, render_csv_row(&report)),
    }
    if report.all_theorems_pass() {
        Ok(())
    } else {
        Err(CliError::Failure(
            "one or more theorem checks failed; see the report above".to_string(),
        ))
    }
}

fn cmd_table1() -> Result<(), CliError> {
    let table = run_reference_table().map_err(from_theorem)?;
    print!("{}", render_reference_table_text(&table));
    if table.all_pass() {
        Ok(())
    } else {
        Err(CliError::Failure(
            "reference table mismatch; see the rows above".to_string(),
        ))
    }
}

fn first_failure(reports: &[TheoremReport]) -> Option<&TheoremReport> {
    reports.iter().find(|r| !r.verdict)
}

fn cmd_verify(trials: usize, max_k: usize, max_alpha: u32, seed: u64) -> Result<(), CliError> {
    if let Ok(threads) = std::env::var("ECC_SPECTRA_THREADS") {
        let threads: usize = threads.parse().map_err(|_| {
            CliError::Usage(format!("ECC_SPECTRA_THREADS={threads} is not a number"))
        })?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::Failure(e.to_string()))?;
    }

    let sweep = run_sweep(seed, trials, max_k, max_alpha).map_err(from_theorem)?;

    let k1_reports: Vec<TheoremReport> = (1..=6u32)
        .flat_map(|a1| (1..=6u32).map(move |a2| (a1, a2)))
        .map(|(a1, a2)| check_k1_closed_form(a1, a2))
        .collect::<Result<_, _>>()
        .map_err(from_theorem)?;
    let k1_passed = k1_reports.iter().filter(|r| r.verdict).count();

    let antiregular_reports: Vec<TheoremReport> = (3..=21usize)
        .step_by(2)
        .map(check_antiregular_lemmas)
        .collect::<Result<_, _>>()
        .map_err(from_theorem)?;
    let antiregular_passed = antiregular_reports.iter().filter(|r| r.verdict).count();

    println!(
        "sweep: {trials} trials (k <= {max_k}, alpha <= {max_alpha}, seed {seed}), {} checks",
        sweep.checks_run
    );
    println!(
        "branch coverage: {} irreducible, {} reducible",
        sweep.irreducible_seen, sweep.reducible_seen
    );
    println!(
        "min margin below -1-sqrt(2): {}",
        sweep
            .min_interval_margin
            .map_or_else(|| "none".to_string(), format_real)
    );
    println!(
        "max spectrum-assembly distance: {}",
        sweep
            .max_assembly_distance
            .map_or_else(|| "none".to_string(), format_real)
    );
    println!(
        "k = 1 grid (parts up to 6): {k1_passed}/{} pass",
        k1_reports.len()
    );
    println!(
        "antiregular orders 3..=21: {antiregular_passed}/{} pass",
        antiregular_reports.len()
    );

    let all_pass = sweep.all_passed()
        && k1_passed == k1_reports.len()
        && antiregular_passed == antiregular_reports.len();
    if all_pass {
        println!("verdict: PASS");
        return Ok(());
    }

    println!("verdict: FAIL");
    let failing = sweep
        .failures
        .first()
        .or_else(|| first_failure(&k1_reports))
        .or_else(|| first_failure(&antiregular_reports))
        .expect("a failing verdict has a failing report");
    println!(
        "first failing report:\n{}",
        serde_json::to_string_pretty(failing).expect("report serializes")
    );
    Err(CliError::Failure(format!(
        "check {} failed on C({})",
        failing.id, failing.sequence
    )))
}

fn cmd_matrix(sequence: &str, which: MatrixKind) -> Result<(), CliError> {
    let seq = parse_sequence(sequence)?;
    let csv = match which {
        MatrixKind::Adj => int_matrix_csv(&build_cograph(&seq).adjacency_matrix()),
        MatrixKind::Dist => {
            let d = build_cograph(&seq).distance_matrix().map_err(from_graph)?;
            int_matrix_csv(&d)
        }
        MatrixKind::Ecc => {
            let e = eccentricity_matrix_of(&build_cograph(&seq)).map_err(from_graph)?;
            int_matrix_csv(e.matrix())
        }
        MatrixKind::Q2k => {
            let q = build_q2k(&seq).map_err(|e| CliError::Scope(e.to_string()))?;
            int_matrix_csv(&q)
        }
        MatrixKind::Qtilde => {
            let b = quotient_bundle(&seq).map_err(|e| CliError::Scope(e.to_string()))?;
            int_matrix_csv(&b.qtilde)
        }
        MatrixKind::R => {
            let b = quotient_bundle(&seq).map_err(|e| CliError::Scope(e.to_string()))?;
            real_matrix_csv(&b.r)
        }
        MatrixKind::T => {
            let t = tridiagonal_t(&seq).map_err(|e| CliError::Scope(e.to_string()))?;
            int_matrix_csv(&t)
        }
        MatrixKind::S => {
            let s = tridiagonal_s(&seq).map_err(|e| CliError::Scope(e.to_string()))?;
            int_matrix_csv(&s)
        }
    };
    print!("{csv}");
    Ok(())
}

fn cmd_dot(sequence: &str, which: DotKind) -> Result<(), CliError> {
    let seq = parse_sequence(sequence)?;
    let g = build_cograph(&seq);
    let dot = match which {
        DotKind::Graph => graph_dot(&g, "cograph"),
        DotKind::Eccentric => {
            let ge = eccentric_graph(&g).map_err(from_graph)?;
            graph_dot(&ge, "eccentric")
        }
    };
    print!("{dot}");
    Ok(())
}
