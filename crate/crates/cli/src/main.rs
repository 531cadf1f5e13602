//! `tabinv`: inversion generating functions for Young tableaux from the
//! command line.

mod commands;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tabinv_core::enumerate::{Limit, DEFAULT_CAP};
use tabinv_core::Shape;

use input::{parse_content, parse_shape, ContentArg};
use report::Format;

#[derive(Debug, Parser)]
#[command(name = "tabinv", version, about = "Inversion statistics of inverted Young tableaux")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Largest N enumerated exhaustively.
    #[arg(long, env = "TABINV_CAP", default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Ignore the enumeration cap.
    #[arg(long)]
    force: bool,
}

impl Common {
    fn limit(&self) -> Limit {
        if self.force {
            Limit::Unbounded
        } else {
            Limit::Cap(self.cap)
        }
    }
}

#[derive(Debug, Args)]
struct ShapeContent {
    /// Shape, e.g. 4,4,3,2 or 2^3.
    #[arg(long, value_parser = parse_shape)]
    shape: Shape,
    /// Content, e.g. 1^2,2^2,3, or "standard".
    #[arg(long, value_parser = parse_content, default_value = "standard")]
    content: ContentArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Sum,
    Closed,
    Dyck,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generating function of the fillings that standardize to a tableau.
    #[command(group = clap::ArgGroup::new("source").required(true))]
    Chi {
        /// Tableau file, one row per line.
        #[arg(long, group = "source")]
        input: Option<PathBuf>,
        /// Inline tableau, rows separated by '/'.
        #[arg(long, group = "source")]
        tableau: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Generating function of all fillings of a shape and content.
    Xi {
        #[command(flatten)]
        sc: ShapeContent,
        #[arg(long, value_enum, default_value_t = Method::Sum)]
        method: Method,
        #[command(flatten)]
        common: Common,
    },
    /// Brute-force inversion histogram.
    Hist {
        #[command(flatten)]
        sc: ShapeContent,
        #[command(flatten)]
        common: Common,
    },
    /// Catalan triangle, or return tables for a shape.
    Tables {
        #[arg(long, value_parser = parse_shape)]
        shape: Option<Shape>,
        /// Rows of the Catalan triangle.
        #[arg(long, default_value_t = 6)]
        rows: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Dyck paths of a shape, or a single path or tableau.
    #[command(group = clap::ArgGroup::new("what").required(true))]
    Dyck {
        #[arg(long, value_parser = parse_shape, group = "what")]
        shape: Option<Shape>,
        /// Step sequence, e.g. 1,1,2,2,1,2,1.
        #[arg(long, group = "what")]
        path: Option<String>,
        /// Standard tableau, rows separated by '/'.
        #[arg(long, group = "what")]
        tableau: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Compute xi by every applicable method and compare.
    Verify {
        #[command(flatten)]
        sc: ShapeContent,
        /// Also compare against the brute-force histogram.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Depth sequences and their tableaux for a shape 2^m 1^(n-m).
    Depths {
        #[arg(long, value_parser = parse_shape)]
        shape: Shape,
        #[command(flatten)]
        common: Common,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, outcome) = commands::dispatch(cli.command);
    let outcome = outcome.and_then(|(report, status)| Ok((report.render(common.format)?, status)));
    match outcome {
        Ok((body, status)) => {
            if let Some(path) = &common.out {
                if let Err(e) = std::fs::write(path, &body) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{body}");
            }
            ExitCode::from(status)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
