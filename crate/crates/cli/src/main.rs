//! `gsym`: expand, verify, enumerate and tabulate generalized symmetric functions.

mod commands;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gsym_core::combinatorics::Model;
use gsym_core::Partition;

#[derive(Parser, Debug)]
#[command(name = "gsym", version, about = "Generalized complete and elementary symmetric functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug, Clone)]
struct Output {
    /// Output format; each command accepts a subset.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    /// Write the payload here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Suppress elapsed-time lines on standard error.
    #[arg(long, global = true)]
    deterministic: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Svg,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    /// monomial symmetric function (needs --lambda)
    #[value(name = "m")]
    M,
    #[value(name = "e")]
    LowerE,
    #[value(name = "h")]
    LowerH,
    #[value(name = "p")]
    LowerP,
    #[value(name = "E")]
    UpperE,
    #[value(name = "H")]
    UpperH,
    #[value(name = "P")]
    UpperP,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum TableArg {
    Plain,
    Q,
    Pq,
}

/// `a..b`, `a..=b` (both inclusive) or a single value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Span {
    lo: u32,
    hi: u32,
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| format!("`{s}` is not a number or a..b range"));
        let span = match s.split_once("..") {
            Some((lo, hi)) => Span { lo: num(lo)?, hi: num(hi.trim_start_matches('='))? },
            None => {
                let v = num(s)?;
                Span { lo: v, hi: v }
            }
        };
        if span.lo > span.hi {
            return Err(format!("empty range `{s}`"));
        }
        Ok(span)
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

fn parse_model(s: &str) -> Result<Model, String> {
    s.parse().map_err(|e: gsym_core::Error| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: gsym_core::Error| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a symmetric function in n variables.
    Expand {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        k: Option<u32>,
        /// Required for E, H and P.
        #[arg(long)]
        s: Option<u32>,
        #[arg(long)]
        n: usize,
        /// Partition for m, or for a product of the chosen family (`3,1,1` or `1^2 3`).
        #[arg(long, value_parser = parse_partition)]
        lambda: Option<Partition>,
    },
    /// Check registry identities over a grid, one JSON line per point.
    Verify {
        /// Identity id, or `all`.
        #[arg(long, default_value = "all")]
        id: String,
        #[arg(long, default_value = "1..4")]
        n: Span,
        #[arg(long, default_value = "0..6")]
        k: Span,
        #[arg(long, default_value = "1..4")]
        s: Span,
        /// Check partition identities at this partition only.
        #[arg(long, value_parser = parse_partition)]
        lambda: Option<Partition>,
        /// Evaluate grid points on one thread.
        #[arg(long)]
        serial: bool,
    },
    /// Enumerate the lattice paths of a model.
    Paths {
        #[command(flatten)]
        args: ModelArgs,
        /// Draw each path on its grid (text format only).
        #[arg(long)]
        art: bool,
    },
    /// Enumerate the red/green tilings of a model.
    Tilings {
        #[command(flatten)]
        args: ModelArgs,
    },
    /// Bi^s-nomial values, or whole rows when --k is omitted.
    Bisnomial {
        #[arg(long)]
        n: Span,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        s: u32,
        #[arg(long, value_enum, default_value_t = TableArg::Plain)]
        table: TableArg,
    },
    /// Both determinant forms for a partition and whether they agree.
    Schur {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        n: usize,
    },
    /// List registry identities.
    List,
}

#[derive(Args, Debug, Clone)]
struct ModelArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: u32,
    #[arg(long)]
    s: u32,
    #[arg(long, value_parser = parse_model, default_value = "E")]
    model: Model,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
