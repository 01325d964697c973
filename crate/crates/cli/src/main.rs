use std::path::PathBuf;
use std::process::ExitCode;

use alliance_core::solvers::SearchOptions;
use clap::{Args, Parser, Subcommand};

mod cmd;
mod envelope;
mod input;

use input::Format;

/// Exact offensive-alliance invariants, bounds and claim verification.
#[derive(Parser)]
#[command(name = "alliance", version)]
struct Cli {
    /// Print a JSON envelope instead of tables.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute invariants (with witnesses) of the input graphs.
    Analyze(cmd::analyze::AnalyzeArgs),
    /// Evaluate closed-form bounds against exact values.
    Bounds(cmd::bounds::BoundsArgs),
    /// Run the claim registry over a graph corpus.
    Verify(cmd::verify::VerifyArgs),
    /// Generate graphs as graph6 lines.
    Gen(cmd::generate::GenArgs),
    /// Convert between graph6 and edge lists.
    Convert(cmd::convert::ConvertArgs),
}

#[derive(Args, Debug, Clone)]
pub struct InputArgs {
    /// Input file; `-` or nothing reads stdin.
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "auto")]
    pub format: Format,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct CapArgs {
    /// Largest order for alliance and domination subset searches.
    #[arg(long, default_value_t = 16)]
    pub cap: usize,
    /// Largest order for the independence-number search.
    #[arg(long, default_value_t = 32)]
    pub alpha_cap: usize,
    /// Largest order for the SDA-free search.
    #[arg(long, default_value_t = 16)]
    pub phi_cap: usize,
}

impl CapArgs {
    pub fn options(self) -> SearchOptions {
        SearchOptions {
            alliance_cap: self.cap,
            alpha_cap: self.alpha_cap,
            phi_cap: self.phi_cap,
            ..SearchOptions::default()
        }
    }
}

/// Bad command-line parameters (exit code 2).
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

pub const EXIT_VIOLATION: u8 = 5;

fn exit_code(err: &anyhow::Error) -> u8 {
    use alliance_core::Error;
    for cause in err.chain() {
        if cause.downcast_ref::<UsageError>().is_some() {
            return 2;
        }
        if let Some(e) = cause.downcast_ref::<Error>() {
            return match e {
                Error::Parse { .. } | Error::Domain(_) => 2,
                Error::CapExceeded { .. } | Error::Unsupported(_) => 3,
                Error::Disconnected => 4,
                _ => 1,
            };
        }
    }
    1
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(a) => cmd::analyze::run(a, cli.json),
        Command::Bounds(a) => cmd::bounds::run(a, cli.json),
        Command::Verify(a) => cmd::verify::run(a, cli.json),
        Command::Gen(a) => cmd::generate::run(a, cli.json),
        Command::Convert(a) => cmd::convert::run(a, cli.json),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
