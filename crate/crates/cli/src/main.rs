use std::path::PathBuf;
use std::process::ExitCode;

use biharm_cli::{load_config, regress, run, tally, CliError};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "biharm",
    version,
    about = "Decomposition solvers for nonlinear biharmonic ODEs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a configured problem and write components, comparison and summary files.
    Run {
        #[arg(long)]
        config: PathBuf,
        /// Omit the timestamp so identical configs give identical files.
        #[arg(long)]
        quiet_header: bool,
    },
    /// Check the tabulated coefficient tables and solver properties.
    Regress {
        /// Write the full table as CSV here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn execute(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Run {
            config,
            quiet_header,
        } => {
            let cfg = load_config(&config)?;
            let stamp = (!quiet_header).then(|| chrono::Utc::now().to_rfc3339());
            for s in run(&cfg, stamp.as_deref())? {
                let floor = s
                    .residual_floor_degree
                    .map_or("none".into(), |d| d.to_string());
                println!(
                    "{}: max_abs_error={:.3e} max_rel_error={:.3e} residual_floor_degree={floor}",
                    s.method, s.max_abs_error, s.max_rel_error
                );
            }
            Ok(())
        }
        Command::Regress { out } => {
            let report = regress(out.as_deref())?;
            if out.is_none() {
                print!("{}", report.to_csv());
            }
            eprintln!("{}", tally(&report));
            if report.passed() {
                Ok(())
            } else {
                Err(CliError::Regression(
                    report.count(biharm_core::regression::Status::Fail),
                ))
            }
        }
    }
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
