//! Command-line front end: builds transforms, writes SCHURMAT1 files, and
//! emits canonical JSON reports.
//!
//! Exit codes: 0 success, 2 verification failure, 64 usage error, 70
//! internal or resource error. All randomness flows from `--seed`; repeated
//! runs with the same arguments produce byte-identical outputs.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use schurkit::cg::{cg_angle, cg_unitary_general, HalfInt};
use schurkit::gpe::weak_schur_measure;
use schurkit::linalg::{write_csv, write_matrix, DEFAULT_DIM_CAP};
use schurkit::partitions::{enumerate_partitions, Partition};
use schurkit::protocols::{concentrate_entanglement, spectrum_distribution};
use schurkit::schur::{
    build_schur_dense, build_schur_qubit_circuit, schur_index_table, verify_duality, SchurUnitary,
};
use schurkit::symgroup::{
    fourier_transform_dense, isotypic_projector, natural_representation, yor_matrix, GroupIndex,
    DEFAULT_GROUP_CAP,
};
use schurkit::{Error, Result};

const EXIT_OK: u8 = 0;
const EXIT_VERIFY: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_INTERNAL: u8 = 70;

#[derive(Parser)]
#[command(
    name = "schurkit",
    version,
    about = "Schur transforms, Clebsch-Gordan cascades, and symmetric-group Fourier analysis",
    after_help = "The dimension cap guards dense allocations (default 2^20 basis states). \
                  Override with --cap or the SCHURKIT_CAP environment variable."
)]
struct Cli {
    /// Dimension cap override (also settable via SCHURKIT_CAP).
    #[arg(long, global = true)]
    cap: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    Dense,
    Circuit,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum MatrixFormat {
    /// Binary SCHURMAT1.
    Schurmat,
    /// One row per line, entries as re+imj.
    Csv,
}

fn write_matrix_as(
    path: &Path,
    m: &schurkit::linalg::ComplexMatrix,
    format: MatrixFormat,
) -> Result<()> {
    match format {
        MatrixFormat::Schurmat => write_matrix(path, m),
        MatrixFormat::Csv => {
            let mut file = std::fs::File::create(path).map_err(Error::Io)?;
            write_csv(&mut file, m)
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the partitions of n with at most d parts, one per line.
    Partitions {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Write the Clebsch-Gordan unitary fusing Q_λ with one qudit.
    Cg {
        /// Partition λ as comma-separated parts, e.g. 2,1.
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        d: usize,
        /// Output path.
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Schurmat)]
        format: MatrixFormat,
    },
    /// Print cos θ and sin θ of the qubit CG rotation for (J, m').
    CgAngle {
        /// Total angular momentum J as a decimal half-integer, e.g. 0.5.
        #[arg(long = "J")]
        j: String,
        /// Output z-component m' as a decimal half-integer.
        #[arg(long)]
        mprime: String,
    },
    /// Build the Schur transform and write it in SCHURMAT1 format.
    BuildSchur {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// Construction: representation-theoretic or qubit circuit cascade.
        #[arg(long, value_enum, default_value_t = Method::Dense)]
        method: Method,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Schurmat)]
        format: MatrixFormat,
    },
    /// Print the flat ↔ (λ, q, p) table as JSON lines.
    SchurIndex {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Check the duality reduction of random Q(u)·P(π); exit 2 on failure.
    VerifyDuality {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Optional JSON report path.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Write the dense nonabelian Fourier transform over S_n.
    Fourier {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Schurmat)]
        format: MatrixFormat,
    },
    /// Print a Young's-orthogonal irrep matrix as CSV.
    IrrepMatrix {
        /// Partition λ as comma-separated parts.
        #[arg(long)]
        lambda: String,
        /// Permutation in one-line notation, e.g. 2,1,3.
        #[arg(long)]
        perm: String,
    },
    /// Measure the Schur sector label of a state by phase estimation.
    Gpe {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// State file: a 1-column SCHURMAT1 matrix of d^n amplitudes.
        #[arg(long)]
        state: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Exact sector distribution of a product state ρ^⊗n, ρ = diag(probs).
    Spectrum {
        /// Eigenvalues as comma-separated reals summing to 1, e.g. 0.7,0.3.
        #[arg(long)]
        probs: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Entanglement concentration of n copies of a bipartite pure state.
    Concentrate {
        /// Schmidt coefficients (amplitudes); renormalized if the squared
        /// sum is within 1e-2 of 1.
        #[arg(long)]
        schmidt: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Run the full acceptance suite, one line per criterion.
    Selftest,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not usage errors.
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Error::InvalidArgument(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}

/// Explicit cap from the flag or SCHURKIT_CAP, if any.
fn cap_override(flag: Option<usize>) -> Result<Option<usize>> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var("SCHURKIT_CAP") {
        Ok(v) => v
            .parse::<usize>()
            .map(Some)
            .map_err(|_| Error::InvalidArgument(format!("bad SCHURKIT_CAP value {v:?}"))),
        Err(_) => Ok(None),
    }
}

fn run(cli: Cli) -> Result<u8> {
    let over = cap_override(cli.cap)?;
    let cap = over.unwrap_or(DEFAULT_DIM_CAP);
    let group_cap = over.unwrap_or(DEFAULT_GROUP_CAP);
    match cli.command {
        Command::Partitions { n, d } => {
            for p in enumerate_partitions(n, d)? {
                println!("{p}");
            }
            Ok(EXIT_OK)
        }
        Command::Cg { lambda, d, out, format } => {
            let lambda = Partition::parse(&lambda)?;
            let cg = cg_unitary_general(&lambda, d, cap)?;
            write_matrix_as(&out, &cg.matrix, format)?;
            Ok(EXIT_OK)
        }
        Command::CgAngle { j, mprime } => {
            let rot = cg_angle(HalfInt::parse(&j)?, HalfInt::parse(&mprime)?)?;
            println!("cos {}", rot.cos_theta);
            println!("sin {}", rot.sin_theta);
            Ok(EXIT_OK)
        }
        Command::BuildSchur { n, d, method, out, format } => {
            let u = build_transform(n, d, method, cap)?;
            write_matrix_as(&out, &u.matrix, format)?;
            Ok(EXIT_OK)
        }
        Command::SchurIndex { n, d } => {
            for entry in schur_index_table(n, d)? {
                let line = json!({
                    "flat": entry.flat_index,
                    "lambda": entry.lambda.to_string(),
                    "q": entry.q_index,
                    "p": entry.p_index,
                });
                println!("{line}");
            }
            Ok(EXIT_OK)
        }
        Command::VerifyDuality { n, d, trials, tol, seed, report } => {
            if tol <= 0.0 {
                return Err(Error::InvalidArgument("tol must be positive".into()));
            }
            let u = build_schur_dense(n, d, cap)?;
            let outcome = verify_duality(&u, trials, seed, tol)?;
            let value = json!({
                "maxOffBlock": outcome.max_off_block,
                "maxTensorResidual": outcome.max_tensor_residual,
                "pass": outcome.pass,
            });
            if let Some(path) = report {
                write_report(&path, &value)?;
            }
            println!("{value}");
            Ok(if outcome.pass { EXIT_OK } else { EXIT_VERIFY })
        }
        Command::Fourier { n, out, format } => {
            let f = fourier_transform_dense(n, group_cap)?;
            write_matrix_as(&out, &f, format)?;
            Ok(EXIT_OK)
        }
        Command::IrrepMatrix { lambda, perm } => {
            let lambda = Partition::parse(&lambda)?;
            let pi = schurkit::linalg::Permutation::parse(&perm)?;
            let m = yor_matrix(&lambda, &pi)?;
            let mut stdout = std::io::stdout().lock();
            write_csv(&mut stdout, &m)?;
            Ok(EXIT_OK)
        }
        Command::Gpe { n, d, state, report } => {
            let psi = schurkit::linalg::read_state(&state)?;
            let dim = schurkit::linalg::checked_pow(d, n, cap)?;
            if psi.dim() != dim {
                return Err(Error::InvalidArgument(format!(
                    "state has dimension {}, expected d^n = {dim}",
                    psi.dim()
                )));
            }
            let outcome = weak_schur_measure(n, d, &psi, cap)?;
            // Distribution plus the oracle cross-checks.
            let group = GroupIndex::new(n, DEFAULT_GROUP_CAP)?;
            let rep = natural_representation(&group, d, cap)?;
            let mut projector_gap = 0.0f64;
            for (mu, prob) in &outcome.distribution {
                let pi_mu = isotypic_projector(mu, &group, &rep)?;
                let want = psi.inner(&pi_mu.apply(&psi)).re;
                projector_gap = projector_gap.max((prob - want).abs());
            }
            let sum_dev = (outcome.distribution.iter().map(|(_, p)| p).sum::<f64>() - 1.0).abs();
            let mut dist = serde_json::Map::new();
            for (mu, prob) in &outcome.distribution {
                dist.insert(mu.to_string(), json!(prob));
            }
            let value = json!({
                "distribution": Value::Object(dist),
                "checks": {
                    "projectorMaxGap": projector_gap,
                    "sumDeviation": sum_dev,
                },
            });
            if let Some(path) = report {
                write_report(&path, &value)?;
            }
            println!("{value}");
            Ok(EXIT_OK)
        }
        Command::Spectrum { probs, n, report } => {
            let probs = parse_reals(&probs)?;
            let outcome = spectrum_distribution(&probs, n, cap)?;
            let mut dist = serde_json::Map::new();
            for (lam, p) in &outcome.lambda_distribution {
                dist.insert(lam.to_string(), json!(p));
            }
            let mut normalized = serde_json::Map::new();
            for (lam, v) in &outcome.normalized_lambdas {
                normalized.insert(lam.to_string(), json!(v));
            }
            let value = json!({
                "distribution": Value::Object(dist),
                "inputSpectrum": outcome.input_spectrum,
                "mode": outcome.mode().to_string(),
                "normalizedLambdas": Value::Object(normalized),
            });
            if let Some(path) = report {
                write_report(&path, &value)?;
            }
            println!("{value}");
            Ok(EXIT_OK)
        }
        Command::Concentrate { schmidt, n, report } => {
            let mut schmidt = parse_reals(&schmidt)?;
            let sq: f64 = schmidt.iter().map(|s| s * s).sum();
            if (sq - 1.0).abs() > 1e-2 {
                return Err(Error::InvalidArgument(format!(
                    "Schmidt coefficients have squared sum {sq}; expected 1"
                )));
            }
            let norm = sq.sqrt();
            for s in schmidt.iter_mut() {
                *s /= norm;
            }
            let outcome = concentrate_entanglement(&schmidt, n, cap)?;
            let mut sectors = serde_json::Map::new();
            for s in &outcome.sectors {
                sectors.insert(
                    s.lambda.to_string(),
                    json!({
                        "fidelity": s.fidelity,
                        "probability": s.probability,
                        "rank": s.rank,
                    }),
                );
            }
            let value = json!({
                "expectedEbits": outcome.expected_ebits,
                "sameLabelProbability": outcome.same_label_probability,
                "sectors": Value::Object(sectors),
            });
            if let Some(path) = report {
                write_report(&path, &value)?;
            }
            println!("{value}");
            Ok(EXIT_OK)
        }
        Command::Selftest => {
            let results = schurkit::selftest::run_all();
            for r in &results {
                println!("{}", r.line());
            }
            let all_pass = results.iter().all(|r| r.pass);
            Ok(if all_pass { EXIT_OK } else { EXIT_VERIFY })
        }
    }
}

fn build_transform(n: usize, d: usize, method: Method, cap: usize) -> Result<SchurUnitary> {
    match method {
        Method::Dense => build_schur_dense(n, d, cap),
        Method::Circuit => {
            if d != 2 {
                return Err(Error::InvalidArgument(
                    "the circuit construction is defined for d = 2 only".into(),
                ));
            }
            build_schur_qubit_circuit(n, cap)
        }
    }
}

fn parse_reals(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| Error::InvalidArgument(format!("bad number {t:?}")))
        })
        .collect()
}

/// Canonical JSON report: sorted keys, shortest-round-trip floats, newline
/// terminated.
fn write_report(path: &Path, value: &Value) -> Result<()> {
    let mut text = value.to_string();
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}
