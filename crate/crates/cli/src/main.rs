mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hecke_norms::Error;

use output::Format;

#[derive(Parser)]
#[command(name = "hnorm", version, about = "Exact Hecke algebra norms, Deodhar cells, parking and Kirkman polynomials")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug)]
pub struct GroupArgs {
    /// Coxeter type such as A3, B2, D4 or I2:7.
    #[arg(long = "type")]
    pub ty: String,
}

#[derive(Args, Clone, Debug)]
pub struct FieldArgs {
    /// Matrix size of GL_n.
    #[arg(long)]
    pub n: usize,
    /// Field size.
    #[arg(long)]
    pub q: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Alpha {
    /// The unit `T_e`.
    One,
    /// `T_{w_J}^2` for the longest element of `W_J`.
    Twist,
}

#[derive(Subcommand)]
enum Command {
    /// Box counts, parking values and Kirkman values for S_4, c = s1 s2 s3, p = 3.
    #[command(name = "figure-a3p3")]
    FigureA3p3,
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Rational parabolic parking polynomial.
    Park {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        p: u32,
        /// Generators of J, 1-based, comma separated.
        #[arg(long = "J", default_value = "")]
        j: String,
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        sign: String,
    },
    /// Kirkman polynomials of S_n.
    Kirk {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u32,
        /// A single degree; all degrees when omitted.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Distinguished subwords and the cell polynomial of an element.
    Deodhar {
        #[command(flatten)]
        group: GroupArgs,
        /// Element as a 1-based word, `e` or `w0`.
        #[arg(long, default_value = "e")]
        v: String,
        /// 1-based word.
        #[arg(long, num_args = 1.., required = true)]
        word: Vec<String>,
        /// Keep only the subwords with the most skips.
        #[arg(long)]
        minimal: bool,
    },
    /// HOMFLYPT polynomial of a braid closure.
    Homfly {
        #[arg(long)]
        strands: usize,
        /// Signed 1-based letters such as "1 -2 1".
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        braid: String,
    },
    /// Relative norm N_J^S(alpha).
    Norm {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long = "J", default_value = "")]
        j: String,
        #[arg(long, value_enum, default_value_t = Alpha::One)]
        alpha: Alpha,
    },
    /// Noncrossing partitions, parking functions and associahedron faces.
    Nc {
        #[command(subcommand)]
        action: NcAction,
    },
}

#[derive(Args, Clone, Debug)]
pub struct NcArgs {
    #[arg(long)]
    pub n: usize,
    /// Coxeter word, 1-based; the standard word when omitted.
    #[arg(long, num_args = 1..)]
    pub c: Vec<String>,
}

#[derive(Subcommand)]
pub enum NcAction {
    Enumerate {
        #[command(flatten)]
        args: NcArgs,
    },
    Parking {
        #[command(flatten)]
        args: NcArgs,
    },
    Faces {
        #[command(flatten)]
        args: NcArgs,
        /// Face dimension; the f-vector when omitted.
        #[arg(long)]
        k: Option<usize>,
    },
    Verify {
        #[command(flatten)]
        args: NcArgs,
    },
}

#[derive(Subcommand)]
pub enum Suite {
    /// Pushforward counts against relative norms.
    Main {
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Steinberg counts against Deodhar cell sums.
    Cell {
        #[command(flatten)]
        field: FieldArgs,
        /// A single 1-based word; all words up to --max-len when omitted.
        #[arg(long, num_args = 1..)]
        word: Vec<String>,
        #[arg(long, default_value_t = 2)]
        max_len: usize,
    },
    /// Bitrace values against traces of relative norms.
    Trace {
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Parking polynomials against Deodhar cell sums for every Coxeter word.
    Parking {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        p: u32,
    },
    /// Elementary symmetric Jucys-Murphy elements against descent sums.
    Jm {
        #[arg(long)]
        n: usize,
    },
    /// Schur expansions of parabolic traces.
    Lascoux {
        #[arg(long)]
        n: u32,
    },
    /// Kirkman polynomials against cell sums and Markov trace slices.
    Kirkman {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u32,
    },
    /// Noncrossing partition counts and the ascent-set proposition.
    Noncrossing {
        #[arg(long)]
        n: usize,
    },
    /// Route agreement, calibration, twist identity and invariance on braids.
    Homfly {
        /// Strand count for a single braid.
        #[arg(long)]
        strands: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        braid: Option<String>,
        /// Number of random positive braids when no braid is given.
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn run(command: Command) -> hecke_norms::Result<output::Report> {
    match command {
        Command::FigureA3p3 => commands::figure_a3p3(),
        Command::Verify { suite } => commands::verify(suite),
        Command::Park { group, p, j, sign } => commands::park(&group, p, &j, &sign),
        Command::Kirk { n, p, k } => commands::kirk(n, p, k),
        Command::Deodhar { group, v, word, minimal } => commands::deodhar(&group, &v, &word, minimal),
        Command::Homfly { strands, braid } => commands::homfly(strands, &braid),
        Command::Norm { group, j, alpha } => commands::norm(&group, &j, alpha),
        Command::Nc { action } => commands::nc(action),
    }
}

fn is_input_error(e: &Error) -> bool {
    matches!(
        e,
        Error::InvalidInput(_) | Error::Unsupported(_) | Error::TooLarge(_) | Error::DomainError(_) | Error::NotCentralInput
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = run(cli.command);
    let elapsed = start.elapsed().as_secs_f64();
    match outcome {
        Ok(report) => {
            let mut text = report.render(cli.format);
            if !text.ends_with('\n') {
                text.push('\n');
            }
            // a closed pipe is not an error
            let _ = std::io::stdout().write_all(text.as_bytes());
            for w in &report.witnesses {
                eprintln!("witness: {w}");
            }
            eprintln!("wall time: {elapsed:.3}s");
            if report.pass == Some(false) {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if is_input_error(&e) { 2 } else { 1 })
        }
    }
}
