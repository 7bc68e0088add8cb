//! `qhw`: classify, quantize and verify Lie bialgebra structures on the
//! Heisenberg-Weyl algebra.

mod commands;
mod report;

use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{Failure, Options, PoissonCheck, EXIT_PARSE};

#[derive(Parser)]
#[command(
    name = "qhw",
    version,
    about = "Lie bialgebras and quantum deformations of the Heisenberg-Weyl algebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    /// Inline JSON, a path to a JSON file, or `-` for stdin.
    #[arg(value_name = "INPUT")]
    positional: Option<String>,

    /// Same as the positional INPUT.
    #[arg(long, conflicts_with = "positional")]
    input: Option<String>,

    /// Truncation order K (total parameter degree).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    order: Option<u32>,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Quantization family: type1plus, type1minus or type2.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a cocommutator given as JSON coefficients.
    Classify(Common),
    /// Emit the verified Hopf algebra quantizing a cocommutator or family.
    Quantize(Common),
    /// Check the Hopf algebra axioms and the first-order limit.
    Verify(Common),
    /// Schouten bracket, mCYBE and induced cocommutator of an r-matrix.
    Coboundary(Common),
    /// Jacobi, Poisson-homomorphism and linear-part checks of the Poisson-Lie bracket.
    Poisson {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = PoissonCheck::All)]
        check: PoissonCheck,
    },
    /// Central element and differential realization of Type I+.
    Realize {
        #[command(flatten)]
        common: Common,
        /// Highest monomial degree the realization is checked on.
        #[arg(long, default_value_t = 6)]
        degree: u32,
    },
}

fn load(arg: Option<String>) -> Result<Option<String>, Failure> {
    let Some(arg) = arg else { return Ok(None) };
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(Some(arg));
    }
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot read stdin: {e}")))?;
        return Ok(Some(s));
    }
    std::fs::read_to_string(&arg)
        .map(Some)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot read input `{arg}`: {e}")))
}

fn options(c: Common) -> Result<Options, Failure> {
    Ok(Options {
        input: load(c.positional.or(c.input))?,
        order: c.order,
        json: c.format == Format::Json,
        family: c.family,
    })
}

fn run(cli: Cli) -> Result<commands::Output, Failure> {
    match cli.command {
        Command::Classify(c) => commands::run_classify(&options(c)?),
        Command::Quantize(c) => commands::run_quantize(&options(c)?),
        Command::Verify(c) => commands::run_verify(&options(c)?),
        Command::Coboundary(c) => commands::run_coboundary(&options(c)?),
        Command::Poisson { common, check } => commands::run_poisson(&options(common)?, check),
        Command::Realize { common, degree } => commands::run_realize(&options(common)?, degree),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
