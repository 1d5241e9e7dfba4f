//! `egdiff`: Erdős–Gallai difference lists from the command line.
//!
//! Exit codes: 0 success, 2 unparseable input, 3 precondition not met
//! (non-graphical, incomparable, …), 4 size cap exceeded.

mod batch;
mod output;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use egdiff_core::realize::{DEFAULT_LIMIT, MAX_LIMIT};
use egdiff_core::{DegreeSequence, Error, ParseSequenceError};

use crate::output::Report;

#[derive(Parser, Debug)]
#[command(
    name = "egdiff",
    version,
    about = "Erdős–Gallai difference lists of degree sequences",
    after_help = "Sequences are integers separated by commas and/or spaces, e.g. 6,5,3,3,3,1,1,1,1 \
                  or \"2 2 1 1\"; an empty string is the empty sequence.\n\n\
                  Exit codes: 0 ok, 2 parse error, 3 precondition failed, 4 size cap exceeded."
)]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    /// Suppress diagnostics on stderr.
    #[arg(long, short, global = true)]
    quiet: bool,

    /// Vertex cap for enumeration-based commands (rao, enumerate, forcible).
    /// Hard ceiling: 12.
    #[arg(
        long,
        global = true,
        env = "EGDIFF_LIMIT",
        default_value_t = DEFAULT_LIMIT,
        value_parser = parse_limit,
    )]
    limit: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// m(d), the principal differences Δ(d), Δ*(d) and graphicality.
    Delta {
        #[arg(allow_hyphen_values = true)]
        seq: Seq,
    },
    /// Split / threshold / weakly threshold flags and splittance.
    Classify {
        #[arg(allow_hyphen_values = true)]
        seq: Seq,
    },
    /// The corrected Ferrers diagram F(d) or the difference matrix M(d).
    Matrix {
        #[arg(allow_hyphen_values = true)]
        seq: Seq,
        #[arg(long, value_enum, default_value_t = Which::M)]
        which: Which,
    },
    /// σ(d,0), …, σ(d,n): prefix row sums of M(d).
    Sigma {
        #[arg(allow_hyphen_values = true)]
        seq: Seq,
    },
    /// The complementary sequence d̄.
    Complement {
        #[arg(allow_hyphen_values = true)]
        seq: Seq,
    },
    /// Principal differences of d guaranteed to reappear in d̄.
    Shared {
        #[arg(allow_hyphen_values = true)]
        seq: Seq,
    },
    /// Whether D majorizes E.
    Dominance {
        #[arg(allow_hyphen_values = true)]
        d: Seq,
        #[arg(allow_hyphen_values = true)]
        e: Seq,
    },
    /// Whether E ⪯ D in Rao's induced-subgraph order (brute force).
    Rao {
        #[arg(allow_hyphen_values = true)]
        e: Seq,
        #[arg(allow_hyphen_values = true)]
        d: Seq,
    },
    /// A chain of unit transformations from D down to E.
    Chain {
        #[arg(allow_hyphen_values = true)]
        d: Seq,
        #[arg(allow_hyphen_values = true)]
        e: Seq,
    },
    /// One realization, by Havel–Hakimi, as an edge list.
    Realize {
        #[arg(allow_hyphen_values = true)]
        seq: Seq,
    },
    /// Every labeled realization (vertex i has degree d_i).
    Enumerate {
        #[arg(allow_hyphen_values = true)]
        seq: Seq,
    },
    /// Vertex pairs adjacent in every or in no labeled realization.
    Forcible {
        #[arg(allow_hyphen_values = true)]
        seq: Seq,
    },
    /// Run one analysis over a file of sequences, one per line.
    ///
    /// Writes exactly one line per input line, in order. JSON lines carry
    /// `line`, `input`, `ok` and either `result` or `code` and `error`; CSV
    /// rows (no header) are `line,input,status,result`.
    Batch {
        /// Input file, or `-` for stdin.
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = batch::Analysis::Delta)]
        analysis: batch::Analysis,
        #[arg(long, value_enum, default_value_t = batch::Format::Jsonl)]
        format: batch::Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    #[value(name = "F", alias = "f")]
    F,
    #[value(name = "M", alias = "m")]
    M,
}

/// A sequence argument, parsed lazily so that parse failures get exit code 2
/// with our own message rather than clap's.
#[derive(Clone, Debug)]
struct Seq(String);

impl std::str::FromStr for Seq {
    type Err = std::convert::Infallible;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(Seq(s.to_string()))
    }
}

impl Seq {
    fn parse(&self) -> Result<DegreeSequence, Failure> {
        self.0.parse().map_err(Failure::from)
    }
}

fn parse_limit(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|_| format!("not a number: {s:?}"))?;
    if n > MAX_LIMIT {
        Err(format!("{n} exceeds the hard ceiling {MAX_LIMIT}"))
    } else {
        Ok(n)
    }
}

#[derive(Debug)]
pub enum Failure {
    Parse(String),
    Precondition(String),
    Cap(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Precondition(_) => 3,
            Failure::Cap(_) => 4,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Parse(m) => write!(f, "parse error: {m}"),
            Failure::Precondition(m) => write!(f, "{m}"),
            Failure::Cap(m) => write!(f, "{m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidDegree { .. } => Failure::Parse(e.to_string()),
            Error::LimitExceeded { .. } => Failure::Cap(e.to_string()),
            other => Failure::Precondition(other.to_string()),
        }
    }
}

impl From<ParseSequenceError> for Failure {
    fn from(e: ParseSequenceError) -> Self {
        Failure::Parse(e.to_string())
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let limit = cli.limit;
    Ok(match &cli.command {
        Command::Delta { seq } => output::delta(&seq.parse()?),
        Command::Classify { seq } => output::classify(&seq.parse()?)?,
        Command::Matrix { seq, which } => output::matrix(&seq.parse()?, *which == Which::F)?,
        Command::Sigma { seq } => output::sigma(&seq.parse()?)?,
        Command::Complement { seq } => output::complement(&seq.parse()?)?,
        Command::Shared { seq } => output::shared(&seq.parse()?)?,
        Command::Dominance { d, e } => output::dominance(&d.parse()?, &e.parse()?)?,
        Command::Rao { e, d } => output::rao(&e.parse()?, &d.parse()?, limit)?,
        Command::Chain { d, e } => output::chain(&d.parse()?, &e.parse()?)?,
        Command::Realize { seq } => output::realize(&seq.parse()?)?,
        Command::Enumerate { seq } => output::enumerate(&seq.parse()?, limit)?,
        Command::Forcible { seq } => output::forcible(&seq.parse()?, limit)?,
        Command::Batch { file, analysis, format } => {
            batch::run(file, *analysis, *format, limit)?;
            return Ok(Report::empty());
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            report.print(cli.json);
            ExitCode::SUCCESS
        }
        Err(failure) => {
            if !cli.quiet {
                eprintln!("egdiff: {failure}");
            }
            ExitCode::from(failure.code())
        }
    }
}
