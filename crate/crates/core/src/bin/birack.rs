use std::path::PathBuf;
use std::process::ExitCode;

use birack::cli::{self, Report, TwistMode};
use birack::io::TableFile;
use birack::search::{Kind, Method, SearchSpec};
use birack::Result;
use clap::{Parser, Subcommand, ValueEnum};

/// Finite solutions of the braid equation: verification, twisting,
/// enveloping groups, link colorings and exhaustive search.
#[derive(Parser)]
#[command(name = "birack", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TwistKindArg {
    First,
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Structured,
    Brute,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a solution (braid, non-degeneracy, bijectivity, involutivity, biquandle)
    Verify { file: PathBuf },
    /// Print the (*, ·, ◁) tables and the derived rack
    Derive { file: PathBuf },
    /// Print σ⁻¹ from the closed formula, verified by composition
    Invert { file: PathBuf },
    /// Twist by an automorphism (first) or a linear automorphism (left, right)
    Twist {
        file: PathBuf,
        #[arg(long)]
        map: PathBuf,
        #[arg(long, value_enum)]
        kind: TwistKindArg,
    },
    /// Write a birack as a twisted biquandle
    Untwist { file: PathBuf },
    /// Check a skew brace and print its solution and derived rack
    Brace { file: PathBuf },
    /// Print the enveloping group presentation
    Envelope {
        file: PathBuf,
        #[arg(long)]
        abelianization: bool,
    },
    /// Count colorings of a braid closure
    Color {
        file: PathBuf,
        #[arg(long)]
        strands: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        list: bool,
    },
    /// Enumerate structures of one kind (counted up to isomorphism unless --raw)
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = cli::kind_names())]
        kind: String,
        #[arg(long, conflicts_with = "raw")]
        up_to_iso: bool,
        /// Count labelled structures instead of isomorphism classes
        #[arg(long)]
        raw: bool,
        #[arg(long, value_enum, default_value = "structured")]
        method: MethodArg,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        list: bool,
    },
    /// Check the structural theorems on every solution with n points
    Sweep {
        #[arg(long)]
        n: usize,
    },
}

fn run(command: Command) -> Result<Report> {
    match command {
        Command::Verify { file } => cli::verify(&TableFile::load(file)?),
        Command::Derive { file } => cli::derive(&TableFile::load(file)?),
        Command::Invert { file } => cli::invert(&TableFile::load(file)?),
        Command::Twist { file, map, kind } => {
            let mode = match kind {
                TwistKindArg::First => TwistMode::First,
                TwistKindArg::Left => TwistMode::Left,
                TwistKindArg::Right => TwistMode::Right,
            };
            cli::twist(&TableFile::load(file)?, &TableFile::load(map)?.as_permutation()?, mode)
        }
        Command::Untwist { file } => cli::untwist(&TableFile::load(file)?),
        Command::Brace { file } => cli::brace(&TableFile::load(file)?),
        Command::Envelope { file, abelianization } => cli::envelope(&TableFile::load(file)?, abelianization),
        Command::Color { file, strands, word, list } => cli::color(&TableFile::load(file)?, strands, &word, list),
        Command::Enumerate { n, kind, up_to_iso: _, raw, method, limit, list } => {
            let spec = SearchSpec { n, kind: kind.parse::<Kind>()?, up_to_iso: !raw, limit };
            let method = match method {
                MethodArg::Structured => Method::Structured,
                MethodArg::Brute => Method::BruteForce,
            };
            cli::enumerate(&spec, method, list)
        }
        Command::Sweep { n } => cli::sweep(n),
    }
}

fn main() -> ExitCode {
    let args = Cli::parse();
    let report = run(args.command).unwrap_or_else(|e| Report::error(&e));
    if report.exit_code() == 2 {
        eprint!("{}", report.body);
        println!("RESULT: {}", report.result);
    } else {
        print!("{}", report.render());
    }
    ExitCode::from(report.exit_code() as u8)
}
