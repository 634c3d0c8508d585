//! `seedcert`: enumerate, certify and audit harmonic curvature seeds.

mod commands;
mod report;

use clap::{Args, Parser, Subcommand};
use commands::InputError;
use parabolic_seeds::builders::AlgebraSpec;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "seedcert", version, about = "Exact certification of harmonic curvature seeds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for enumeration, certification and audits.
    #[arg(long, global = true, default_value_t = 1, value_name = "N")]
    parallel: usize,
    /// Omit the timestamp so repeated runs are byte-identical.
    #[arg(long, global = true)]
    no_timestamp: bool,
}

#[derive(Subcommand)]
enum Command {
    /// List every certified seed candidate of a parabolic geometry.
    Enumerate {
        /// sl:M | qc:M,N | file:PATH
        #[arg(long)]
        algebra: AlgebraSpec,
        /// Crossed simple roots, 1-based, e.g. 1,3.
        #[arg(long, value_delimiter = ',', required = true)]
        cross: Vec<usize>,
    },
    /// Certify one seed from a fixture or an inline descriptor.
    Certify {
        /// Shipped fixture name or a fixture file path.
        #[arg(long, conflicts_with_all = ["seed", "algebra", "cross"])]
        fixture: Option<String>,
        #[arg(long)]
        algebra: Option<AlgebraSpec>,
        #[arg(long, value_delimiter = ',')]
        cross: Vec<usize>,
        /// beta=..;gamma=..;zeta=..[;terms=c@u.u.u,...] in ε-coordinates.
        #[arg(long)]
        seed: Option<String>,
    },
    /// Run the structural property suites.
    Audit {
        #[arg(long)]
        algebra: AlgebraSpec,
        /// Defaults to the first simple root.
        #[arg(long, value_delimiter = ',')]
        cross: Vec<usize>,
    },
}

fn run(cli: Cli) -> Result<report::Report, InputError> {
    let parallel = cli.common.parallel;
    match cli.command {
        Command::Enumerate { algebra, cross } => commands::enumerate(&algebra, &cross, parallel),
        Command::Certify { fixture, algebra, cross, seed } => {
            let input = commands::certify_input(fixture.as_deref(), algebra, &cross, seed.as_deref())?;
            commands::certify(&input)
        }
        Command::Audit { algebra, cross } => commands::audit(&algebra, &cross, parallel),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (json, stamp) = (cli.common.json, !cli.common.no_timestamp);
    match run(cli) {
        Ok(mut report) => {
            if stamp {
                report.timestamp = std::time::SystemTime::now()
                    .duration_since(std::time::UNIX_EPOCH)
                    .ok()
                    .map(|d| d.as_secs());
            }
            print!("{}", if json { report.to_json() + "\n" } else { report.to_text() });
            ExitCode::from(if report.passed() { 0 } else { 1 })
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
