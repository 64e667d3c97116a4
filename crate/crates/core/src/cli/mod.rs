//! Command-line front end: `bound`, `scroll` and `verify`.

mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::theorem_verifier::Status;

pub use render::{
    class_report, render, verify_case, BoundRecord, ClassReport, Envelope, Records, Rendered, CSV_FORMAT_VERSION,
    JSON_FORMAT_VERSION,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "kbound", version, about = "Exact genus and K^2 bounds for surfaces, with proof certificates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for degree sweeps.
    #[arg(long, global = true, env = "KBOUND_JOBS", value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
    /// Omit the generation timestamp so repeated runs are byte-identical.
    #[arg(long, global = true)]
    pub no_timestamp: bool,
    /// Print integer floors of bounds in table and CSV output.
    #[arg(long, global = true)]
    pub floor: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Genus bounds for curves.
    #[command(subcommand)]
    Bound(BoundCmd),
    /// Surfaces on the cubic scroll T in P^5.
    #[command(subcommand)]
    Scroll(ScrollCmd),
    /// Re-check the proof and emit certificates.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct Degrees {
    #[arg(long, conflicts_with_all = ["from", "to"], required_unless_present_all = ["from", "to"])]
    pub d: Option<i64>,
    #[arg(long, requires = "to")]
    pub from: Option<i64>,
    #[arg(long, requires = "from")]
    pub to: Option<i64>,
}

impl Degrees {
    pub fn range(&self) -> Result<(i64, i64), Error> {
        let (a, b) = match (self.d, self.from, self.to) {
            (Some(d), _, _) => (d, d),
            (None, Some(a), Some(b)) => (a, b),
            _ => return Err(Error::InvalidArgument("give --d or --from and --to".into())),
        };
        if a > b {
            return Err(Error::InvalidArgument(format!("empty degree range [{a}, {b}]")));
        }
        Ok((a, b))
    }
}

#[derive(Debug, Subcommand)]
pub enum BoundCmd {
    /// Castelnuovo's bound G(r;d).
    Castelnuovo {
        #[arg(long)]
        r: i64,
        #[command(flatten)]
        degrees: Degrees,
    },
    /// Halphen's bound G(3;d,s).
    Halphen {
        #[arg(long)]
        s: i64,
        #[command(flatten)]
        degrees: Degrees,
    },
    /// G(4;d,4).
    Pi1 {
        #[command(flatten)]
        degrees: Degrees,
    },
    /// G(4;d,5), with its Hilbert function profile.
    Pi2 {
        #[command(flatten)]
        degrees: Degrees,
    },
}

#[derive(Debug, Subcommand)]
pub enum ScrollCmd {
    /// Every admissible class of degree d with K^2 and genus.
    Scan {
        #[arg(long)]
        d: i64,
    },
    /// Invariants of the class alpha H_T + beta W.
    Class {
        #[arg(long, allow_hyphen_values = true)]
        alpha: i64,
        #[arg(long, allow_hyphen_values = true)]
        beta: i64,
    },
    /// The class (d/2)(H_T - W) attaining K^2 = -d(d-6).
    Extremal {
        #[arg(long)]
        d: i64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Case {
    All,
    R4,
    R6,
    R5,
    Appendix,
    Sharpness,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub case: Case,
    #[arg(long, default_value_t = 36)]
    pub from: i64,
    #[arg(long, default_value_t = 500)]
    pub to: i64,
}

/// Exit statuses.
pub mod exit {
    pub const OK: u8 = 0;
    pub const COUNTEREXAMPLE: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const IO: u8 = 3;
}

fn configure_jobs(jobs: Option<u16>) {
    if let Some(n) = jobs {
        // a second initialization (e.g. in tests) keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(usize::from(n)).build_global();
    }
}

fn write_output(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

/// Runs a parsed command line and returns the exit status.
pub fn run(cli: &Cli) -> u8 {
    configure_jobs(cli.jobs);
    let rendered = match render(cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return exit::USAGE;
        }
    };
    if let Err(e) = write_output(cli, &rendered.text) {
        eprintln!("error: cannot write output: {e}");
        return exit::IO;
    }
    let counterexamples = rendered.statuses.iter().filter(|s| **s == Status::Counterexample).count();
    let out_of_range = rendered.statuses.iter().filter(|s| **s == Status::OutOfAssertedRange).count();
    if out_of_range > 0 {
        eprintln!("warning: {out_of_range} certificate(s) out of asserted range; reported, not asserted");
    }
    if counterexamples > 0 {
        eprintln!("FAILED: {counterexamples} certificate(s) carry a counterexample");
        return exit::COUNTEREXAMPLE;
    }
    exit::OK
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(run(&cli))
}
