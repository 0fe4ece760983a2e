//! `screwinv` — command-line front end.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 incomplete subalgebra
//! basis, 3 failed invariance or verification.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::{CliError, Report};

#[derive(Parser)]
#[command(name = "screwinv", version, about = "Polynomial invariants of screws under SE(3)")]
struct Cli {
    /// Emit one JSON object instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical form or value of a polynomial.
    Poly(PolyArgs),
    /// Subduct a polynomial against a basis file.
    Subduct {
        #[arg(long)]
        basis: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Complete a basis file to a subalgebra basis up to a degree bound.
    Sagbi {
        file: PathBuf,
        #[arg(long, default_value_t = screwinv::sagbi::DEFAULT_DEGREE_BOUND)]
        degree_bound: u32,
        #[arg(long, default_value_t = screwinv::sagbi::DEFAULT_MAX_ITERATIONS)]
        max_iter: usize,
    },
    /// Check a polynomial for invariance under a group.
    Invariance(InvarianceArgs),
    /// Dump a catalog of invariants as a basis file.
    Catalog {
        #[arg(long)]
        screws: usize,
        #[arg(long, value_enum)]
        which: Which,
    },
    /// Twist angle and displacement of a screw pair.
    Dh {
        #[arg(long)]
        pair: PathBuf,
    },
    /// Run the reproduction suite.
    Verify {
        #[arg(long)]
        suite: String,
    },
}

#[derive(Args)]
struct PolyArgs {
    /// Print the canonical form of this polynomial.
    #[arg(
        long,
        conflicts_with = "eval",
        required_unless_present = "eval",
        allow_hyphen_values = true
    )]
    format: Option<String>,
    /// Evaluate this polynomial; needs --at.
    #[arg(long, requires = "at", allow_hyphen_values = true)]
    eval: Option<String>,
    /// Assignments `name=value`, comma or space separated.
    #[arg(long)]
    at: Option<String>,
    /// Variables, highest first (default: order of appearance).
    #[arg(long, conflicts_with = "screws")]
    vars: Option<String>,
    /// Use the coordinates of this many screws as variables.
    #[arg(long)]
    screws: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Symbolic,
    Sample,
}

#[derive(Args)]
struct InvarianceArgs {
    #[arg(long, allow_hyphen_values = true)]
    poly: String,
    /// se3, so3 or t3.
    #[arg(long)]
    group: String,
    #[arg(long, default_value_t = 1)]
    screws: usize,
    /// Read the blocks as plain vectors `x11..xm3` instead of screws.
    #[arg(long)]
    vectors: bool,
    #[arg(long, value_enum, default_value = "symbolic")]
    mode: Mode,
    #[arg(long, default_value_t = screwinv::group::DEFAULT_SAMPLES)]
    samples: usize,
    #[arg(long, default_value_t = screwinv::group::DEFAULT_SEED)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Se3,
    T3,
    So3,
    /// Translation pullback images, ready for `sagbi`.
    Pullback,
}

fn run(cli: Cli) -> Result<Report, CliError> {
    match cli.command {
        Command::Poly(a) => commands::poly(a),
        Command::Subduct { basis, poly } => commands::subduct_cmd(&basis, &poly),
        Command::Sagbi {
            file,
            degree_bound,
            max_iter,
        } => commands::sagbi(&file, degree_bound, max_iter),
        Command::Invariance(a) => commands::invariance(a),
        Command::Catalog { screws, which } => commands::catalog(screws, which),
        Command::Dh { pair } => commands::dh(&pair),
        Command::Verify { suite } => commands::verify(&suite),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(report) => {
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.text());
            }
            ExitCode::from(report.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(1)
        }
    }
}
