use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use perturbed_hardy::duality::MassConvention;
use perturbed_hardy_cli::{exit, exit_code, run_file, Overrides};

/// Environment variable holding the worker thread count.
const THREADS_VAR: &str = "PHARDY_THREADS";

#[derive(Parser)]
#[command(name = "phardy", version, about = "Kernels, duality and asymptotics of perturbed Hardy spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Convention {
    Unitary,
    Printed,
}

#[derive(Subcommand)]
enum Command {
    /// Run the studies listed in a JSON configuration.
    Run {
        config: PathBuf,
        /// Output directory (overrides the config).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long)]
        degree: Option<usize>,
        /// Rule tying dual weights to the original ones.
        #[arg(long, value_enum)]
        convention: Option<Convention>,
        /// Threshold for every residual gate.
        #[arg(long)]
        tol_gate: Option<f64>,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    if let Ok(n) = std::env::var(THREADS_VAR) {
        match n.parse::<usize>() {
            Ok(n) if n > 0 => {
                if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
                    log::warn!("cannot configure {n} threads: {e}");
                }
            }
            _ => {
                eprintln!("error: {THREADS_VAR} must be a positive integer, got {n:?}");
                return ExitCode::from(exit::CONFIG as u8);
            }
        }
    }
    let Command::Run { config, out, grid, degree, convention, tol_gate } = Cli::parse().command;
    let overrides = Overrides {
        grid,
        degree,
        convention: convention.map(|c| match c {
            Convention::Unitary => MassConvention::Unitary,
            Convention::Printed => MassConvention::Printed,
        }),
        tol_gate,
        out,
    };
    match run_file(&config, &overrides) {
        Ok((report, dir)) => {
            for g in report.gates() {
                let cmp = match g.comparison {
                    perturbed_hardy_cli::report::Comparison::Below => "<",
                    perturbed_hardy_cli::report::Comparison::AtLeast => ">=",
                };
                println!("{} {}/{}: {:e} {cmp} {:e}", if g.pass { "PASS" } else { "FAIL" }, g.study, g.name, g.value, g.threshold);
            }
            println!("report written to {}", dir.display());
            ExitCode::from(exit_code(&report) as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
