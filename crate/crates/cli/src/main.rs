use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use boson_hopf::{catalog, Family};
use boson_hopf_cli::config::Config;
use boson_hopf_cli::eval::{evaluate, EvalRequest, MatrixDump};
use boson_hopf_cli::output::Document;
use boson_hopf_cli::runner::{run, RunOptions};
use boson_hopf_cli::{CliError, EXIT_FAILURE, EXIT_USAGE};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "bhopf", version, about = "Verify boson Hopf algebra identities on truncated Fock spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every suite of a scenario config and write a JSON report.
    Run {
        #[arg(long)]
        config: PathBuf,
        /// Report path; overrides `output` in the config. Defaults to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Dimension for scenarios without `dim`.
        #[arg(long)]
        dim: Option<usize>,
        /// Tolerance for suites without an override.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        ybe_jobs: Option<usize>,
    },
    /// Evaluate one expression and print its windowed and full norms.
    #[command(allow_negative_numbers = true)]
    Eval {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        beta: Option<f64>,
        #[arg(long)]
        sigma: Option<f64>,
        #[arg(long)]
        tau: Option<f64>,
        #[arg(long)]
        delta: Option<f64>,
        #[arg(long)]
        nu: Option<f64>,
        #[arg(long)]
        rho: Option<f64>,
        #[arg(long)]
        q: Option<f64>,
        #[arg(long, default_value_t = boson_hopf::DEFAULT_DIM)]
        dim: usize,
        /// Per-slot raise degree of the window; inferred when omitted.
        #[arg(long)]
        degree: Option<usize>,
        /// Use the non-unitary normalization of the Fock basis.
        #[arg(long)]
        unnormalized: bool,
        /// Print the full matrix as JSON after the norms.
        #[arg(long)]
        dump_matrix: bool,
        expression: String,
    },
    /// Print the identity catalog.
    ListIdentities {
        #[arg(long)]
        json: bool,
    },
}

fn run_cmd(config: PathBuf, out: Option<PathBuf>, opts: RunOptions) -> Result<i32, CliError> {
    let cfg = Config::load(&config)?;
    if opts.dim.is_some_and(|d| !(2..=64).contains(&d)) {
        return Err(CliError::invalid("--dim must lie in 2..=64"));
    }
    if opts.tol.is_some_and(|t| !(t.is_finite() && t > 0.0)) {
        return Err(CliError::invalid("--tol must be positive"));
    }
    if opts.jobs == Some(0) || opts.ybe_jobs == Some(0) {
        return Err(CliError::invalid("job counts must be positive"));
    }
    let result = run(&cfg, &opts)?;
    for w in &result.warnings {
        eprintln!("warning: {w}");
    }
    let doc = Document::new(&result);
    match out.or(cfg.output) {
        Some(path) => doc.write(&path)?,
        None => print!("{}", doc.to_json()?),
    }
    let s = doc.summary;
    eprintln!("{} checks: {} passed, {} failed, {} skipped, {} diagnostic", s.total, s.passed, s.failed, s.skipped, s.diagnostic);
    Ok(if s.failed > 0 { EXIT_FAILURE } else { 0 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run { config, out, dim, tol, jobs, ybe_jobs } => {
            run_cmd(config, out, RunOptions { jobs, ybe_jobs, dim, tol })
        }
        Command::Eval { family, alpha, beta, sigma, tau, delta, nu, rho, q, dim, degree, unnormalized, dump_matrix, expression } => {
            let named = [("alpha", alpha), ("beta", beta), ("sigma", sigma), ("tau", tau), ("delta", delta), ("nu", nu), ("rho", rho), ("q", q)];
            let params: BTreeMap<String, f64> = named.iter().filter_map(|(k, v)| v.map(|v| (k.to_string(), v))).collect();
            let req = EvalRequest { family, params, unitary: !unnormalized, dim, degree, expression };
            evaluate(&req).and_then(|out| {
                print!("{}", out.text);
                if dump_matrix {
                    let json = serde_json::to_string(&MatrixDump::of(&out.matrix)).map_err(|e| CliError::Output(e.to_string()))?;
                    println!("{json}");
                }
                Ok(0)
            })
        }
        Command::ListIdentities { json } => {
            if json {
                let rows: Vec<_> = catalog::CATALOG.iter().map(|i| serde_json::json!({"id": i.id, "reference": i.reference})).collect();
                println!("{}", serde_json::to_string_pretty(&rows).expect("static strings"));
            } else {
                for i in catalog::CATALOG {
                    println!("{:<28} {}", i.id, i.reference);
                }
            }
            Ok(0)
        }
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
