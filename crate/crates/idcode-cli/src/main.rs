//! `idcode` — command-line front door for identifying-code tooling.
//!
//! Usage errors exit 2 (clap's default); domain errors exit 1 and print a
//! machine-readable `{"error": {...}}` envelope on stderr. All reports are
//! JSON with a schema version and a timestamp; reruns with identical
//! inputs and seed are byte-identical apart from the timestamp.

mod commands;
mod report;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "idcode",
    version,
    about = "Identifying codes: verify, solve, construct, experiment"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a candidate code against a graph.
    Verify(commands::VerifyArgs),
    /// Compute a minimum (or heuristic) identifying code.
    Solve(commands::SolveArgs),
    /// Print the classical bound table for a graph.
    Bounds(commands::BoundsArgs),
    /// Run one of the randomized constructors.
    Construct(commands::ConstructArgs),
    /// Generate an extremal family instance with its optimal code.
    Extremal(commands::ExtremalArgs),
    /// Sample random regular graphs and report cycle statistics.
    Rrg(commands::RrgArgs),
    /// Multi-trial experiment harness with reference columns.
    Experiment(commands::ExperimentArgs),
    /// Enumerate all small connected graphs up to isomorphism.
    Corpus(commands::CorpusArgs),
}

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify(args) => commands::verify(args),
        Command::Solve(args) => commands::solve(args),
        Command::Bounds(args) => commands::bounds(args),
        Command::Construct(args) => commands::construct(args),
        Command::Extremal(args) => commands::extremal(args),
        Command::Rrg(args) => commands::rrg(args),
        Command::Experiment(args) => commands::experiment(args),
        Command::Corpus(args) => commands::corpus(args),
    };
    if let Err(err) = outcome {
        let kind = err
            .downcast_ref::<idcode::Error>()
            .map(idcode::Error::kind)
            .unwrap_or("error");
        eprintln!(
            "{}",
            serde_json::json!({ "error": { "kind": kind, "message": err.to_string() } })
        );
        std::process::exit(1);
    }
}
