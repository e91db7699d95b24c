mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use z4gbent::z4code::{DEFAULT_SAMPLES, DEFAULT_SEED};
use z4gbent::Error;

use commands::{Output, Status};

#[derive(Parser, Debug)]
#[command(
    name = "z4gbent",
    version,
    about = "Z4 codes from generalized bent functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Write the output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate the bent functions on n variables (n = 2 or 4).
    Bent {
        #[arg(long)]
        n: usize,
        /// Print every function in algebraic normal form.
        #[arg(long)]
        list: bool,
    },
    /// Build the gbent function from a pair of bent functions.
    Gbent(PairArgs),
    /// Build the circulant code C_f.
    Build(PairArgs),
    /// Extend C_f (or a code read with --in) to a self-dual Type II code.
    Extend {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Gray image of C_f or of a code read with --in.
    Gray(PairArgs),
    /// Check the closed-form distributions of the extended code for m = 3 or 5.
    Verify {
        #[arg(long)]
        m: usize,
        /// Enumerate all 2^32 codewords at m = 5.
        #[arg(long)]
        exhaustive: bool,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Designs from low-weight codewords for m = 3, 5 or 7.
    Designs {
        #[arg(long)]
        m: usize,
    },
    /// Full construction report.
    Pipeline {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        sampling: Sampling,
    },
}

/// Where the bent pair or the code comes from.
#[derive(Args, Debug, Clone)]
pub struct PairArgs {
    /// First bent function, in algebraic normal form (e.g. "x1*x2+x3*x4").
    #[arg(long, requires = "b", conflicts_with_all = ["m", "input"])]
    pub a: Option<String>,
    /// Second bent function.
    #[arg(long, requires = "a")]
    pub b: Option<String>,
    /// Number of variables of a and b; defaults to the largest index used.
    #[arg(long, requires = "a")]
    pub n: Option<usize>,
    /// Use the built-in pair for code length 2^m.
    #[arg(long, conflicts_with = "input")]
    pub m: Option<usize>,
    /// Generator matrix file, one row of digits 0-3 per line.
    #[arg(long = "in", value_name = "PATH")]
    pub input: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Sampling {
    /// Random codewords drawn by the sampled checks.
    #[arg(long, default_value_t = DEFAULT_SAMPLES, value_parser = clap::value_parser!(u64).range(10_000..))]
    pub samples: u64,
    /// Seed of the ChaCha8 sampler, decimal or 0x-prefixed hex.
    #[arg(long, default_value_t = DEFAULT_SEED, value_parser = parse_seed)]
    pub seed: u64,
}

fn parse_seed(s: &str) -> Result<u64, String> {
    match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    }
    .map_err(|e| e.to_string())
}

fn run(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Bent { n, list } => commands::bent(*n, *list),
        Command::Gbent(pair) => commands::gbent(pair),
        Command::Build(pair) => commands::build(pair),
        Command::Extend { pair, sampling } => commands::extend(pair, *sampling),
        Command::Gray(pair) => commands::gray(pair),
        Command::Verify {
            m,
            exhaustive,
            sampling,
        } => commands::verify(*m, *exhaustive, *sampling),
        Command::Designs { m } => commands::designs(*m),
        Command::Pipeline { pair, sampling } => commands::pipeline(pair, *sampling),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Capacity { .. } => 3,
        Error::NonlinearImage(_) | Error::ConstructionBug(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let text = if cli.json {
        let mut s = serde_json::to_string_pretty(&output.json).expect("report serializes");
        s.push('\n');
        s
    } else {
        output.text
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(match output.status {
        Status::Ok => 0,
        Status::Failed => 1,
        Status::Capacity => 3,
    })
}
