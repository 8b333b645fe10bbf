//! The `dk` batch front end: input schema, command dispatch and reports.
//!
//! Exit codes: 0 success, 1 false verdict, 2 parse error, 3 precondition
//! violation.

pub mod commands;
pub mod input;
pub mod report;

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use dk_core::DkError;
use thiserror::Error;

use commands::Bounds;
pub use input::{InputDoc, VERSION};
pub use report::{Envelope, Report};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error on {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] DkError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Io { .. } | CliError::Core(DkError::Parse(_)) => 2,
            CliError::Core(_) => 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "dk", version, about = "Exact computations with simplicial and DG commutative algebras")]
pub struct Cli {
    /// Truncation degree T (levels / chain degrees 0..=T).
    #[arg(short = 'T', long, global = true, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_degree: u64,
    /// Weight bound W.
    #[arg(short = 'W', long, global = true, default_value_t = 4)]
    pub max_weight: u32,
    /// Input document; `-` or absent reads stdin.
    #[arg(long = "in", global = true)]
    pub input: Option<PathBuf>,
    /// Output file; absent writes stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bigraded homology of an algebra, or homology of a complex.
    Homology {
        /// Report degrees 0..=DEGREE only.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Homotopy of a simplicial vector space, or of Q(A) per weight.
    Homotopy,
    /// Normalized chains of a simplicial vector space.
    Normalize,
    /// The simplicial vector space built from a chain complex.
    Gamma,
    /// All (p, q)-shuffles with p + q <= T and their signs.
    EzTable,
    /// Attach the document's cells to its algebra.
    Attach,
    /// Exactness of the Koszul resolution on m variables per weight.
    Koszul {
        #[arg(short = 'm', long)]
        generators: usize,
    },
    /// Tor of the ground field over a polynomial ring on m variables.
    Tor {
        #[arg(short = 'm', long)]
        generators: usize,
    },
    /// Dimensions and generators of the simplicial algebra Q(A).
    QFunctor,
    /// Certify that the unit A -> N Q(A) is a quasi-isomorphism.
    BetaCheck,
    /// The algebra map Q(A) -> Q(A') adjoint to a map A -> A'.
    Theta,
    /// Connectivity of powers of the augmentation ideal.
    Connectivity {
        #[arg(short, long, default_value_t = 2)]
        power: u32,
    },
    /// Compare the kernel of a face map with a candidate ideal.
    KernelIdealCheck {
        #[arg(long)]
        sphere: usize,
        #[arg(long)]
        level: usize,
        #[arg(long)]
        face: usize,
    },
    /// Test a point, or list the rational classical locus.
    ClassicalPoint,
    /// Tangent complex at a classical point.
    Tangent,
    /// Weak equivalence test for the map dual to an algebra map.
    WeqCheck,
    /// Surjectivity of the linearized map at a point.
    FibrationCheck,
    /// Generators of the differential forms at an origin.
    Forms,
}

fn read_input(path: &Option<PathBuf>) -> Result<InputDoc, CliError> {
    let mut text = String::new();
    match path.as_deref() {
        None => std::io::stdin().read_to_string(&mut text).map(|_| ()),
        Some(p) if p.as_os_str() == "-" => std::io::stdin().read_to_string(&mut text).map(|_| ()),
        Some(p) => std::fs::read_to_string(p).map(|t| text = t),
    }
    .map_err(|source| CliError::Io { path: display(path), source })?;
    InputDoc::parse(&text)
}

fn display(path: &Option<PathBuf>) -> String {
    path.as_ref().map_or_else(|| "<stdin>".into(), |p| p.display().to_string())
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let b = Bounds { max_degree: cli.max_degree as usize, max_weight: cli.max_weight };
    let doc = || read_input(&cli.input);
    use commands as c;
    match &cli.command {
        Command::Homology { degree } => c::homology(&doc()?, &b, *degree),
        Command::Homotopy => c::homotopy(&doc()?, &b),
        Command::Normalize => c::normalize(&doc()?, &b),
        Command::Gamma => c::gamma_cmd(&doc()?, &b),
        Command::EzTable => Ok(c::ez_table(&b)),
        Command::Attach => c::attach(&doc()?),
        Command::Koszul { generators } => Ok(c::koszul(*generators, &b)),
        Command::Tor { generators } => Ok(c::tor(*generators)),
        Command::QFunctor => c::q_functor_cmd(&doc()?, &b),
        Command::BetaCheck => c::beta_check(&doc()?, &b),
        Command::Theta => c::theta(&doc()?, &b),
        Command::Connectivity { power } => c::connectivity(&doc()?, &b, *power),
        Command::KernelIdealCheck { sphere, level, face } => c::kernel_ideal(*sphere, *level, *face, &b),
        Command::ClassicalPoint => c::classical_point(&doc()?),
        Command::Tangent => c::tangent(&doc()?),
        Command::WeqCheck => c::weq_check(&doc()?, &b),
        Command::FibrationCheck => c::fibration_check(&doc()?),
        Command::Forms => c::forms(&doc()?, &b),
    }
}

pub fn emit(cli: &Cli, report: Report) -> Result<Option<bool>, CliError> {
    let verdict = report.verdict();
    let text = match cli.format {
        Format::Table => report.table(),
        Format::Json => {
            let env = Envelope {
                version: VERSION.into(),
                max_degree: cli.max_degree as usize,
                max_weight: cli.max_weight,
                report,
            };
            let mut s = serde_json::to_string_pretty(&env).expect("reports serialize");
            s.push('\n');
            s
        }
    };
    match &cli.out {
        None => std::io::stdout().write_all(text.as_bytes()),
        Some(p) => std::fs::write(p, text),
    }
    .map_err(|source| CliError::Io { path: display(&cli.out), source })?;
    Ok(verdict)
}

pub fn init_threads() {
    if let Some(n) = std::env::var("DK_THREADS").ok().and_then(|s| s.parse::<usize>().ok()).filter(|n| *n > 0) {
        // fails only if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

