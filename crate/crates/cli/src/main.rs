//! `edgoppa`: build AG Goppa codes on Edwards curves from the command line.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "edgoppa", version, about = "AG Goppa codes on Edwards curves")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "EDGOPPA_FORMAT", default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Finite field parameters.
    #[command(subcommand)]
    Field(FieldCommand),
    /// Edwards curve points and group law.
    #[command(subcommand)]
    Curve(CurveCommand),
    /// Birational maps to and from the Weierstrass model.
    #[command(subcommand)]
    Map(MapCommand),
    /// Riemann-Roch basis of L(D).
    Rrbasis {
        #[command(flatten)]
        curve: CurveArgs,
        /// Divisor, e.g. "(2,15)+4O".
        #[arg(long)]
        divisor: String,
    },
    /// Goppa code construction and use.
    #[command(subcommand)]
    Code(CodeCommand),
}

#[derive(Debug, Subcommand)]
enum FieldCommand {
    /// Describe GF(p^t).
    Info(FieldArgs),
}

#[derive(Debug, Subcommand)]
enum CurveCommand {
    /// List the affine points in canonical order.
    Points(CurveArgs),
    /// Add two points with the Edwards addition law.
    Add {
        #[command(flatten)]
        curve: CurveArgs,
        /// First summand, e.g. "(2,15)" or "O".
        lhs: String,
        /// Second summand.
        rhs: String,
    },
}

#[derive(Debug, Subcommand)]
enum MapCommand {
    /// Edwards point to Weierstrass point.
    Alpha {
        #[command(flatten)]
        curve: CurveArgs,
        point: String,
    },
    /// Weierstrass point to Edwards point.
    Beta {
        #[command(flatten)]
        curve: CurveArgs,
        point: String,
    },
}

#[derive(Debug, Subcommand)]
enum CodeCommand {
    /// Build a code and print G, the permutation and H.
    Build(BuildArgs),
    /// Encode a message with a stored code.
    Encode {
        #[command(flatten)]
        code: CodeFile,
        /// Comma-separated message of length k.
        #[arg(long)]
        message: String,
    },
    /// Syndrome of a received word with a stored code.
    Syndrome {
        #[command(flatten)]
        code: CodeFile,
        /// Comma-separated word of length n, in the original point order.
        #[arg(long)]
        word: String,
    },
    /// Exact minimum distance by exhaustive search.
    Distance {
        #[command(flatten)]
        code: CodeFile,
        /// Maximum number of messages to enumerate.
        #[arg(long, default_value_t = edwards_goppa::goppa::DEFAULT_DISTANCE_BUDGET)]
        budget: u128,
    },
}

#[derive(Debug, Clone, Args)]
struct FieldArgs {
    /// Characteristic.
    #[arg(long)]
    p: u32,
    /// Extension degree.
    #[arg(long, default_value_t = 1)]
    t: u32,
    /// Monic modulus, comma-separated coefficients from the constant term up.
    /// Defaults to the smallest irreducible polynomial.
    #[arg(long)]
    modulus: Option<String>,
}

#[derive(Debug, Clone, Args)]
struct CurveArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Edwards parameter d.
    #[arg(long, allow_hyphen_values = true)]
    d: String,
}

#[derive(Debug, Clone, Args)]
#[command(group = clap::ArgGroup::new("policy").required(true).args(["points", "count"]))]
struct BuildArgs {
    #[command(flatten)]
    curve: CurveArgs,
    /// Divisor, e.g. "(2,15)+4O".
    #[arg(long)]
    divisor: String,
    /// Explicit evaluation points, e.g. "(5,8),(5,9)".
    #[arg(long)]
    points: Option<String>,
    /// Number of evaluation points to choose automatically.
    #[arg(long)]
    count: Option<usize>,
    /// Choose the --count points at random with this seed instead of taking
    /// the first valid ones.
    #[arg(long, requires = "count")]
    seed: Option<u64>,
    /// Also compute the exact minimum distance.
    #[arg(long)]
    distance: bool,
}

#[derive(Debug, Clone, Args)]
struct CodeFile {
    /// Code artifact JSON written by `code build --format json` ("-" for stdin).
    #[arg(long)]
    code: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command) {
        Ok(report) => {
            let out = match cli.format {
                Format::Text => report.text,
                Format::Json => report.json,
            };
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            if !out.ends_with('\n') {
                let _ = stdout.write_all(b"\n");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error[{}]: {}", e.name(), e);
            ExitCode::from(1)
        }
    }
}
