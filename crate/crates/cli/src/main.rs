//! `adc`: descend rational zeros of quadratic polynomials to integral ones.
//!
//! Exit codes: 0 success or clean check, 1 input error, 2 oracle failure or
//! check failures, 3 not representable, 4 internal invariant violation.

mod commands;

use std::process::ExitCode;

use adc_core::{Domain, GaussianIntegers, Integers, PrimeFieldPolynomials};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "adc",
    version,
    about = "Exact descent from rational to integral zeros of quadratic polynomials"
)]
pub struct Cli {
    /// Coefficient ring: Z, Zi or Fpt:<p>
    #[arg(long, global = true, default_value = "Z", value_parser = parse_domain)]
    pub domain: Domain,

    /// Number of variables; inferred from the form when omitted
    #[arg(long, global = true)]
    pub dim: Option<usize>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

fn parse_domain(s: &str) -> Result<Domain, String> {
    s.parse()
}

#[derive(Args, Debug, Clone)]
pub struct DescentArgs {
    /// Polynomial, e.g. "x^2+y^2-5"
    #[arg(long, allow_hyphen_values = true)]
    pub form: String,

    /// Rational point "a1,...,ad/b"
    #[arg(long, allow_hyphen_values = true)]
    pub point: String,

    /// Oracle search window around the rounded point
    #[arg(long, default_value_t = adc_core::DEFAULT_WINDOW)]
    pub window: u32,

    /// Print one record per descent step
    #[arg(long)]
    pub trace: bool,
}

#[derive(Args, Debug, Clone)]
pub struct CheckArgs {
    /// Form to check; defaults depend on the check and the domain
    #[arg(long, allow_hyphen_values = true)]
    pub form: Option<String>,

    /// Denominator height bound (norm over Z and Z[i], degree over F_p[t])
    #[arg(long)]
    pub height: Option<u32>,

    /// Numerator box size (coordinate bound, degree over F_p[t])
    #[arg(long = "box")]
    pub box_size: Option<u32>,

    #[arg(long, default_value_t = adc_core::DEFAULT_WINDOW)]
    pub window: u32,

    /// Random samples for norm-axioms
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Euclidean,
    Adc,
    NormAxioms,
    N2,
}

#[derive(Subcommand, Debug)]
pub enum CheckCommand {
    /// Run the oracle on every non-integral point in a box
    Euclidean(CheckArgs),
    /// Represent q(x) by descent and by brute force for every x in a box
    Adc(CheckArgs),
    /// Check norm axioms on seeded random elements
    NormAxioms(CheckArgs),
    /// Check that non-units have norm above 1, directly and through a form
    N2(CheckArgs),
}

impl CheckCommand {
    pub fn split(&self) -> (CheckKind, &CheckArgs) {
        match self {
            CheckCommand::Euclidean(a) => (CheckKind::Euclidean, a),
            CheckCommand::Adc(a) => (CheckKind::Adc, a),
            CheckCommand::NormAxioms(a) => (CheckKind::NormAxioms, a),
            CheckCommand::N2(a) => (CheckKind::N2, a),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Descend a rational zero of f to an integral zero
    Descend(DescentArgs),
    /// Find integral y with q(y) = q(x) for a form q
    Represent(DescentArgs),
    /// Bounded verification harnesses
    #[command(subcommand)]
    Check(CheckCommand),
    /// Write n as a sum of three squares, starting from a rational solution
    ThreeSquares {
        n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = adc_core::DEFAULT_WINDOW)]
        window: u32,
        #[arg(long)]
        trace: bool,
    },
    /// Parse a polynomial and print it in normal form
    Parse {
        #[arg(long)]
        form: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let outcome = match cli.domain {
        Domain::RationalIntegers => commands::run(&Integers, &cli),
        Domain::GaussianIntegers => commands::run(&GaussianIntegers, &cli),
        Domain::PrimeFieldPolynomials(p) => match PrimeFieldPolynomials::new(p) {
            Ok(d) => commands::run(&d, &cli),
            Err(e) => Err(commands::Failure::input(e.to_string())),
        },
    };
    match outcome {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(f) => {
            print!("{}", f.stdout);
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
