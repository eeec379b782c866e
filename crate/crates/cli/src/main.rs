//! `alcove`: max-plus matrices and alcoved polytopes from the command line.

mod commands;
mod failure;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "alcove",
    version,
    about = "Max-plus matrices and alcoved polytopes"
)]
struct Cli {
    /// Seed for span sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Suppress informational messages on stderr.
    #[arg(long, short, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report the structural properties of a square matrix.
    Analyze { matrix: PathBuf },

    /// Compute the Kleene star A ⊕ A² ⊕ ⋯.
    Star {
        matrix: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },

    /// Normalize a square matrix; factors go to a sidecar document.
    Normalize {
        matrix: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Where to write the factors [default: OUTPUT with `.factors.json`].
        #[arg(long)]
        factors: Option<PathBuf>,
    },

    /// Replace a zero-diagonal matrix by the tight presentation of its polytope.
    Tighten {
        matrix: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },

    /// Convert a matrix or H-representation document to an H- or V-representation.
    Polytope {
        input: PathBuf,
        #[arg(long, value_enum)]
        to: Representation,
        /// Tighten the presentation first when it is not a Kleene star.
        #[arg(long)]
        tighten: bool,
        /// Stand-in value for infinite bounds (entry −t) when reading an H-representation.
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },

    /// Section radius of a normal matrix, and polytope radius when it is idempotent.
    Radius { matrix: PathBuf },

    /// Decide whether a point lies in the tropical column span.
    Member {
        matrix: PathBuf,
        /// Comma-separated coordinates, with or without the trailing 0.
        #[arg(allow_hyphen_values = true)]
        point: String,
    },

    /// Tropical distance between two points.
    Dist {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },

    /// Draw the polytope of a 3×3 matrix as SVG.
    Plot {
        matrix: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Overlay sampled points of the tropical span.
        #[arg(long)]
        span: bool,
        /// Number of span samples.
        #[arg(long, default_value_t = 400)]
        samples: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Representation {
    Hrep,
    Vrep,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = commands::Context {
        seed: cli.seed,
        quiet: cli.quiet,
    };
    let result = match cli.command {
        Command::Analyze { matrix } => commands::analyze(&matrix),
        Command::Star { matrix, output } => commands::star(&ctx, &matrix, output.as_deref()),
        Command::Normalize {
            matrix,
            output,
            factors,
        } => commands::normalize(&ctx, &matrix, output.as_deref(), factors.as_deref()),
        Command::Tighten { matrix, output } => commands::tighten(&ctx, &matrix, output.as_deref()),
        Command::Polytope {
            input,
            to,
            tighten,
            t,
            output,
        } => commands::polytope(
            &ctx,
            &input,
            to == Representation::Vrep,
            tighten,
            t.as_deref(),
            output.as_deref(),
        ),
        Command::Radius { matrix } => commands::radius(&matrix),
        Command::Member { matrix, point } => commands::member(&matrix, &point),
        Command::Dist { p, q } => commands::dist(&p, &q),
        Command::Plot {
            matrix,
            output,
            span,
            samples,
        } => commands::plot(&ctx, &matrix, output.as_deref(), span.then_some(samples)),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.code)
        }
    }
}
