//! Flag surface of the `qwalk` binary.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::commands::{
    cmd_tables, cmd_verify, cmd_walk1, cmd_walk2, TablesOptions, VerifyOptions, Walk1Options,
    Walk2Options,
};
use crate::config::{CoinSpec, InitialCoin, InitialCondition, OutputFormat, DEFAULT_STEPS_CAP};
use crate::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "qwalk",
    version,
    about = "Discrete-time quantum walks on a line, single or entangled pair",
    disable_help_subcommand = true
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Single-walker position distribution after N steps
    Walk1(Walk1Args),
    /// Two-walker joint distribution, marginals and summary statistics
    Walk2(Walk2Args),
    /// Distance or correlation table over a list of step counts
    Tables(TablesArgs),
    /// Run the whole invariant suite and write a validation report
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct Walk1Args {
    /// Number of walk steps
    #[arg(long)]
    steps: usize,
    /// Initial coin state at the origin: up | down
    #[arg(long, default_value = "up")]
    initial: String,
    /// Coin operator: hadamard | 8 comma-separated floats (re,im per entry)
    #[arg(long, default_value = "hadamard")]
    coin: String,
    /// Emit the classical binomial reference walk instead
    #[arg(long)]
    classical: bool,
    /// Output format: csv | json
    #[arg(long, default_value = "csv")]
    format: String,
    /// Output file; standard output when omitted
    #[arg(long)]
    out: Option<PathBuf>,
    /// Upper bound accepted for --steps
    #[arg(long, default_value_t = DEFAULT_STEPS_CAP)]
    steps_cap: usize,
}

#[derive(Debug, Args)]
struct Walk2Args {
    /// Number of walk steps
    #[arg(long)]
    steps: usize,
    /// Initial condition: separable | plus | minus | phase
    #[arg(long, default_value = "separable")]
    initial: String,
    /// Relative phase in radians, used with --initial phase
    #[arg(long)]
    phase: Option<f64>,
    /// Coin operator: hadamard | 8 comma-separated floats (re,im per entry)
    #[arg(long, default_value = "hadamard")]
    coin: String,
    /// Output format: csv | json
    #[arg(long, default_value = "csv")]
    format: String,
    /// Output file; standard output when omitted
    #[arg(long)]
    out: Option<PathBuf>,
    /// Upper bound accepted for --steps
    #[arg(long, default_value_t = DEFAULT_STEPS_CAP)]
    steps_cap: usize,
}

#[derive(Debug, Args)]
struct TablesArgs {
    /// Which table to compute: distance | correlation
    which: String,
    /// Comma-separated step counts (defaults to 10,20,30,40,60,100)
    #[arg(long, value_delimiter = ',')]
    steps: Option<Vec<usize>>,
    /// Output format: csv | json
    #[arg(long, default_value = "csv")]
    format: String,
    /// Output file; standard output when omitted
    #[arg(long)]
    out: Option<PathBuf>,
    /// Upper bound accepted for any entry of --steps
    #[arg(long, default_value_t = DEFAULT_STEPS_CAP)]
    steps_cap: usize,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Number of steps for the dense-oracle comparison
    #[arg(long, default_value_t = 12)]
    steps: usize,
    /// Text report path (JSON twin written alongside); defaults to
    /// validation_report.txt in the working directory
    #[arg(long)]
    out: Option<PathBuf>,
    /// Upper bound accepted for --steps
    #[arg(long, default_value_t = DEFAULT_STEPS_CAP)]
    steps_cap: usize,
}

/// Parses and runs a full command line; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Walk1(args) => cmd_walk1(Walk1Options {
            steps: args.steps,
            initial: InitialCoin::parse(&args.initial)?,
            coin: CoinSpec::parse(&args.coin)?,
            classical: args.classical,
            format: OutputFormat::parse(&args.format)?,
            out: args.out,
            steps_cap: args.steps_cap,
        }),
        Command::Walk2(args) => cmd_walk2(Walk2Options {
            steps: args.steps,
            initial: InitialCondition::parse(&args.initial, args.phase)?,
            coin: CoinSpec::parse(&args.coin)?,
            format: OutputFormat::parse(&args.format)?,
            out: args.out,
            steps_cap: args.steps_cap,
        }),
        Command::Tables(args) => cmd_tables(TablesOptions {
            which: args.which,
            steps: args.steps,
            format: OutputFormat::parse(&args.format)?,
            out: args.out,
            steps_cap: args.steps_cap,
        }),
        Command::Verify(args) => cmd_verify(VerifyOptions {
            max_steps: args.steps,
            out: args.out,
            steps_cap: args.steps_cap,
        }),
    }
}
