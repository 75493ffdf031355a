use std::fs;
use std::io::{ErrorKind, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use hypasym::asymptotic::Variant;
use hypasym::cli::{
    eval_point, exit_code, parse_number, render, render_sweep_csv, run_table, sweep, EvalRequest,
    Format, Method, Preset, SweepSpec, TableSpec,
};
use hypasym::series::{DEFAULT_MAX_TERMS, DEFAULT_REL_TOL};
use hypasym::{Error, Result};

// Keeps the `--oracle-tol` default string in step with the library constant.
const _: () = assert!(DEFAULT_REL_TOL == 1e-20);

#[derive(Parser)]
#[command(
    name = "hypasym",
    version,
    about = "Large-k asymptotics of S(x; t) = 3F2(1, ak, ak+1/2; tk+1, k+1; x)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one point by the oracle, the expansion, or the uniform F_0 form.
    Eval {
        #[arg(long, value_parser = number)]
        k: f64,
        #[arg(long, value_parser = number)]
        x: f64,
        #[arg(long, value_parser = number)]
        t: f64,
        /// oracle | asym | uniform_f0
        #[arg(long, default_value = "asym")]
        method: String,
        #[arg(long, default_value_t = 0)]
        order: u32,
        /// exact_am | expanded_am | t_equals_1 (default depends on t)
        #[arg(long)]
        variant: Option<String>,
        #[arg(long, default_value = "1e-20")]
        oracle_tol: f64,
        #[arg(long, default_value_t = DEFAULT_MAX_TERMS)]
        max_terms: usize,
    },
    /// Regenerate a preset error table or evaluate custom cells.
    Table {
        /// table1 | table2 | custom
        #[arg(long)]
        preset: String,
        /// "k,x,t,M[,variant];..." for the custom preset
        #[arg(long)]
        cells: Option<String>,
        /// csv | md
        #[arg(long, default_value = "csv")]
        format: String,
        #[arg(long)]
        out: Option<String>,
        #[arg(long, default_value = "1e-20")]
        oracle_tol: f64,
        #[arg(long, default_value_t = DEFAULT_MAX_TERMS)]
        max_terms: usize,
    },
    /// Relative error of the expansion over a log-spaced k grid.
    Sweep {
        #[arg(long, value_parser = number)]
        k_min: f64,
        #[arg(long, value_parser = number)]
        k_max: f64,
        #[arg(long, default_value_t = 8)]
        steps: usize,
        #[arg(long, value_parser = number)]
        x: f64,
        #[arg(long, value_parser = number)]
        t: f64,
        #[arg(long, default_value_t = 0)]
        order: u32,
        #[arg(long)]
        variant: Option<String>,
        #[arg(long)]
        out: Option<String>,
        #[arg(long, default_value = "1e-20")]
        oracle_tol: f64,
        #[arg(long, default_value_t = DEFAULT_MAX_TERMS)]
        max_terms: usize,
    },
}

fn number(s: &str) -> std::result::Result<f64, String> {
    parse_number(s).map_err(|e| e.to_string())
}

fn variant(v: Option<String>) -> Result<Option<Variant>> {
    v.map(|s| s.parse()).transpose()
}

fn emit(text: &str, out: Option<String>) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(&path, text).map_err(|e| Error::Domain(format!("cannot write {path}: {e}")))
        }
        None => match std::io::stdout().lock().write_all(text.as_bytes()) {
            Err(e) if e.kind() != ErrorKind::BrokenPipe => {
                Err(Error::Domain(format!("cannot write to stdout: {e}")))
            }
            _ => Ok(()),
        },
    }
}

/// Returns the process exit code on success paths that still report failures.
fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Eval {
            k,
            x,
            t,
            method,
            order,
            variant: v,
            oracle_tol,
            max_terms,
        } => {
            let req = EvalRequest {
                order,
                variant: variant(v)?,
                oracle_tol,
                max_terms,
                ..EvalRequest::new(k, x, t, method.parse::<Method>()?)
            };
            emit(&eval_point(&req)?.to_string(), None)?;
            Ok(0)
        }
        Command::Table {
            preset,
            cells,
            format,
            out,
            oracle_tol,
            max_terms,
        } => {
            let spec = TableSpec::new(
                preset.parse::<Preset>()?,
                cells.as_deref(),
                format.parse::<Format>()?,
                oracle_tol,
            )?
            .with_max_terms(max_terms);
            let reports = run_table(&spec);
            emit(&render(&spec, &reports), out)?;
            let failed = reports.iter().filter(|r| !r.is_ok()).count();
            if failed > 0 {
                eprintln!("{failed} of {} cells failed", reports.len());
                return Ok(1);
            }
            Ok(0)
        }
        Command::Sweep {
            k_min,
            k_max,
            steps,
            x,
            t,
            order,
            variant: v,
            out,
            oracle_tol,
            max_terms,
        } => {
            let spec = SweepSpec {
                variant: variant(v)?,
                oracle_tol,
                max_terms,
                ..SweepSpec::new(k_min, k_max, steps, x, t, order)
            };
            let report = sweep(&spec)?;
            emit(&render_sweep_csv(&report), out)?;
            eprintln!("fitted_slope: {:.4}", report.fitted_slope);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
