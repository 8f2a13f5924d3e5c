//! The `composite` command-line tool.
//!
//! Every invocation is a single subcommand with all state in flags. Reports
//! go to standard output (or `--out`) as JSON by default. Exit status: 0 on
//! success, 1 when `oracle-check` finds a disagreement, 2 on malformed
//! input, 3 on an unsupported pair or degree, 4 on a domain error, 74 when
//! the output file cannot be written.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use composite_core::fields::AnyPair;
use composite_core::squarefree::{DEFAULT_DEG_BOUND, DEFAULT_M_BOUND};
use composite_core::text::parse_pair;
use composite_core::{Error, ErrorClass, Result};
use serde_json::json;

mod commands;
pub mod output;

use output::{Format, Report};

pub const EXIT_ORACLE_MISMATCH: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_DOMAIN: i32 = 4;
pub const EXIT_IO: i32 = 74;

#[derive(Debug, Parser)]
#[command(
    name = "composite",
    version,
    about = "Exact algebra in polynomial composites K + X L[X]"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seed for randomized polynomial factorization. Results do not depend on it.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct PairArg {
    /// Field pair `L/K`, e.g. `gf(4)/gf(2)`, `gf(2)(t)/gf(2)`, `gf(3)(t)/gf(3)(t^3)`.
    #[arg(long)]
    pair: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Unit, atom and square-free status of an element.
    Classify {
        #[command(flatten)]
        pair: PairArg,
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Canonical factorization into atoms.
    Factor {
        #[command(flatten)]
        pair: PairArg,
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Whether an element is an atom.
    Irreducible {
        #[command(flatten)]
        pair: PairArg,
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Square-free decision with evidence.
    Squarefree {
        #[command(flatten)]
        pair: PairArg,
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Bounded search for a radicality counterexample.
    Radical {
        #[command(flatten)]
        pair: PairArg,
        #[arg(allow_hyphen_values = true)]
        element: String,
        #[arg(long, default_value_t = DEFAULT_DEG_BOUND)]
        max_deg: usize,
        #[arg(long, default_value_t = DEFAULT_M_BOUND)]
        m_bound: u32,
    },
    /// Whether the first element divides the second.
    Divides {
        #[command(flatten)]
        pair: PairArg,
        #[arg(allow_hyphen_values = true)]
        divisor: String,
        #[arg(allow_hyphen_values = true)]
        dividend: String,
    },
    /// Field-theoretic properties of the pair and of its composite.
    PairReport {
        #[command(flatten)]
        pair: PairArg,
    },
    /// Search square-free elements for ones that are not radical.
    ScanSr {
        #[command(flatten)]
        pair: PairArg,
        #[arg(long, default_value_t = DEFAULT_DEG_BOUND)]
        max_deg: usize,
        #[arg(long, default_value_t = DEFAULT_M_BOUND)]
        m_bound: u32,
    },
    /// Factorization invariants of every element up to a degree.
    Survey {
        #[command(flatten)]
        pair: PairArg,
        #[arg(long, default_value_t = 3)]
        max_deg: usize,
        /// Permit fields larger than 16 elements or degrees above 5.
        #[arg(long)]
        allow_large: bool,
    },
    /// Whether square-free elements of T are those square-free in L[X].
    SqfAgreement {
        #[command(flatten)]
        pair: PairArg,
    },
    /// Compare every decision procedure with brute force up to a degree.
    OracleCheck {
        #[command(flatten)]
        pair: PairArg,
        #[arg(long, default_value_t = 3)]
        max_deg: usize,
    },
    /// gcd of p-th powers over the subfield, for `gf(p)(t)/gf(p)(t^p)`.
    AlmostBezout {
        #[command(flatten)]
        pair: PairArg,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Witness polynomial for the integer-valued composite of a finite pair `B/A`.
    IntValuedCover {
        #[command(flatten)]
        pair: PairArg,
    },
}

macro_rules! with_pair {
    ($pair:expr, $p:ident => $body:expr) => {
        match &$pair {
            AnyPair::Tower($p) => $body,
            AnyPair::FunctionField($p) => $body,
            AnyPair::Inseparable($p) => $body,
        }
    };
}

fn execute(cli: &Cli) -> Result<Report> {
    let seed = cli.seed;
    match &cli.command {
        Command::Classify { pair, element } => {
            with_pair!(parse_pair(&pair.pair)?, p => commands::classify(p, element, seed))
        }
        Command::Factor { pair, element } => {
            with_pair!(parse_pair(&pair.pair)?, p => commands::factor(p, element, seed))
        }
        Command::Irreducible { pair, element } => {
            with_pair!(parse_pair(&pair.pair)?, p => commands::irreducible(p, element))
        }
        Command::Squarefree { pair, element } => {
            with_pair!(parse_pair(&pair.pair)?, p => commands::squarefree(p, element))
        }
        Command::Radical {
            pair,
            element,
            max_deg,
            m_bound,
        } => {
            with_pair!(parse_pair(&pair.pair)?, p => commands::radical(p, element, *max_deg, *m_bound))
        }
        Command::Divides {
            pair,
            divisor,
            dividend,
        } => with_pair!(parse_pair(&pair.pair)?, p => commands::divides(p, divisor, dividend)),
        Command::PairReport { pair } => {
            Ok(with_pair!(parse_pair(&pair.pair)?, p => commands::report(p)))
        }
        Command::ScanSr {
            pair,
            max_deg,
            m_bound,
        } => with_pair!(parse_pair(&pair.pair)?, p => commands::scan_sr(p, *max_deg, *m_bound)),
        Command::Survey {
            pair,
            max_deg,
            allow_large,
        } => with_pair!(parse_pair(&pair.pair)?, p => commands::survey(p, *max_deg, *allow_large)),
        Command::SqfAgreement { pair } => {
            with_pair!(parse_pair(&pair.pair)?, p => commands::agreement(p))
        }
        Command::OracleCheck { pair, max_deg } => {
            with_pair!(parse_pair(&pair.pair)?, p => commands::oracle(p, *max_deg))
        }
        Command::AlmostBezout { pair, f, g } => {
            commands::almost_bezout(&parse_pair(&pair.pair)?, f, g)
        }
        Command::IntValuedCover { pair } => commands::cover(&parse_pair(&pair.pair)?),
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err.class() {
        ErrorClass::Parse => EXIT_PARSE,
        ErrorClass::Unsupported => EXIT_UNSUPPORTED,
        ErrorClass::Domain => EXIT_DOMAIN,
    }
}

fn error_report(err: &Error) -> Report {
    Report::new(json!({
        "error_kind": err.kind(),
        "message": err.to_string(),
        "location": err.location(),
    }))
}

/// Runs one invocation; `args` includes the program name. Returns the exit
/// status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                EXIT_PARSE
            } else {
                let _ = write!(stdout, "{}", e.render());
                0
            };
            return code;
        }
    };
    let (report, status) = match execute(&cli) {
        Ok(report) => {
            let status = report.status;
            (report, status)
        }
        Err(err) => (error_report(&err), exit_code(&err)),
    };
    let text = report.render(cli.format);
    let written = match &cli.out {
        Some(path) => std::fs::write(path, text.as_bytes()),
        None => stdout.write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "cannot write output: {e}");
        return EXIT_IO;
    }
    status
}
