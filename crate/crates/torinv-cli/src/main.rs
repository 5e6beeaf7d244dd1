//! Command-line frontend: Hilbert bases and degree bounds from weight
//! matrix files, closed-orbit certificates from point files, and the two
//! end-to-end lower-bound scenarios.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use torinv::bounds::degree_bounds;
use torinv::hilbert::{hilbert_basis, DEFAULT_NODE_BUDGET};
use torinv::matrix::{MatrixFile, MatrixZ};
use torinv::orbit::{certify_closed_orbit, parse_norms, NormMode, PointFile};
use torinv::reproduce::{reproduce_cubic, reproduce_tensor, ScenarioReport};
use torinv::reps::coordinate_embedding;

#[derive(Parser)]
#[command(
    name = "torinv",
    version,
    about = "Exact degree bounds and closed-orbit certificates for torus invariant rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal generators of the nonnegative integer kernel of a matrix.
    HilbertBasis {
        /// Matrix file: JSON {"rows": r, "cols": c, "entries": [[..]]}.
        #[arg(long)]
        matrix: PathBuf,
        /// Node budget for the completion search.
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: usize,
    },
    /// Closed-orbit certificate for a point file; exits 0 iff it passes.
    CertifyOrbit {
        /// Point file: space, lattice, and named summands with coefficients.
        #[arg(long)]
        point: PathBuf,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Squared norms per monomial class, required in numeric mode.
        #[arg(long)]
        norms: Option<PathBuf>,
    },
    /// Generator degree bound and null-cone degree bound of a weight matrix.
    DegreeBounds {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Run a lower-bound scenario end to end; exits 0 iff all stages pass.
    Reproduce {
        #[command(subcommand)]
        scenario: ScenarioCommand,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Symbolic,
    Numeric,
}

#[derive(Subcommand)]
enum ScenarioCommand {
    /// Three cubic forms in 3n variables under SL(3n).
    Cubic(ScenarioArgs),
    /// Eight order-3 tensors of side 3n under the determinant-one product.
    Tensor(ScenarioArgs),
}

#[derive(Args)]
struct ScenarioArgs {
    /// Size parameter of the scenario family.
    #[arg(long)]
    n: usize,
    /// Write the full report as JSON to this path.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Write the report as a markdown table to this path.
    #[arg(long)]
    markdown: Option<PathBuf>,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::HilbertBasis { matrix, budget } => {
            let a = read_matrix(&matrix)?;
            let basis = hilbert_basis(&a, budget).map_err(|e| e.to_string())?;
            let generators: Vec<Vec<u64>> = basis
                .generators
                .iter()
                .map(|g| {
                    g.entries()
                        .iter()
                        .map(|e| e.to_u64().ok_or("generator entry exceeds u64".to_string()))
                        .collect()
                })
                .collect::<Result<_, _>>()?;
            let max_degree = basis
                .max_degree()
                .to_u64()
                .ok_or("maximum degree exceeds u64".to_string())?;
            print_json(&json!({
                "generators": generators,
                "maxDegree": max_degree,
                "fastPath": basis.fast_path,
            }))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::CertifyOrbit { point, mode, norms } => {
            let file: PointFile =
                serde_json::from_str(&read_text(&point)?).map_err(|e| e.to_string())?;
            let point = file.into_point().map_err(|e| e.to_string())?;
            let emb = coordinate_embedding(&point.space);
            let norms = norms
                .map(|path| -> Result<_, String> {
                    let raw: BTreeMap<String, String> =
                        serde_json::from_str(&read_text(&path)?).map_err(|e| e.to_string())?;
                    parse_norms(&raw).map_err(|e| e.to_string())
                })
                .transpose()?;
            let mode = match mode {
                ModeArg::Symbolic => NormMode::Symbolic,
                ModeArg::Numeric => NormMode::Numeric,
            };
            let cert = certify_closed_orbit(&point, &emb, mode, norms.as_ref())
                .map_err(|e| e.to_string())?;
            print_json(&serde_json::to_value(&cert).map_err(|e| e.to_string())?)?;
            Ok(exit_flag(cert.passed()))
        }
        Command::DegreeBounds { matrix } => {
            let a = read_matrix(&matrix)?;
            let report = degree_bounds(&a, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
            print_json(&report.to_json())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Reproduce { scenario } => {
            let (report, args) = match scenario {
                ScenarioCommand::Cubic(args) => {
                    (reproduce_cubic(args.n).map_err(|e| e.to_string())?, args)
                }
                ScenarioCommand::Tensor(args) => {
                    (reproduce_tensor(args.n).map_err(|e| e.to_string())?, args)
                }
            };
            emit_report(&report, &args)?;
            Ok(exit_flag(report.passed()))
        }
    }
}

fn emit_report(report: &ScenarioReport, args: &ScenarioArgs) -> Result<(), String> {
    for stage in &report.stages {
        let tag = if stage.passed { "pass" } else { "FAIL" };
        println!("[{tag}] {}: {}", stage.stage, stage.detail);
    }
    match &report.final_bound {
        Some(bound) => println!("asserted lower bound: {bound} ({})", report.formula),
        None => println!("no bound asserted: at least one stage failed"),
    }
    if let Some(path) = &args.json {
        fs::write(path, report.to_json_string()).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    if let Some(path) = &args.markdown {
        fs::write(path, report.to_markdown()).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(())
}

fn read_text(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_matrix(path: &Path) -> Result<MatrixZ, String> {
    let file: MatrixFile = serde_json::from_str(&read_text(path)?).map_err(|e| e.to_string())?;
    file.to_integer().map_err(|e| e.to_string())
}

fn print_json(value: &Value) -> Result<(), String> {
    let pretty = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    println!("{pretty}");
    Ok(())
}

fn exit_flag(passed: bool) -> ExitCode {
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
