//! Command-line front end. Every subcommand prints a single JSON verdict
//! with a claim, a status, a witness, and a timing block; the exit code is
//! 0 for verified or inconclusive results, 1 for refuted claims, and 2 for
//! unusable input.

pub mod commands;
pub mod input;
pub mod verdict;

use clap::{ArgAction, Parser, Subcommand};
use std::path::PathBuf;
use verdict::{Status, Verdict};

#[derive(Parser)]
#[command(name = "confsec", version, about = "Braid, section, and obstruction verifiers")]
struct Cli {
    /// Print the verdict as JSON (the default output).
    #[arg(long, global = true, action = ArgAction::SetTrue)]
    json: bool,
    /// Suppress stdout; only the exit code reports the outcome.
    #[arg(long, global = true, action = ArgAction::SetTrue)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a braid word is the identity.
    WordProblem {
        /// Strand count; optional when the word carries an `n=..;` header.
        #[arg(long)]
        n: Option<usize>,
        /// Letters, either `"1 -2 1"` with --n or the full `"n=3; 1 -2 1"`.
        #[arg(long)]
        word: String,
    },
    /// Check a named lantern-relation instance.
    VerifyLantern {
        #[arg(long)]
        preset: String,
    },
    /// Geometric intersection number of two curves (give --curve twice).
    Intersect {
        #[arg(long = "curve")]
        curves: Vec<String>,
    },
    /// Test whether the twists about two curves commute exactly when the
    /// curves are disjoint (give --curve twice).
    TwistCommute {
        #[arg(long = "curve")]
        curves: Vec<String>,
    },
    /// Classify the product of two twists by the trace of its matrix image.
    TraceClassify {
        /// Intersection number of the filling pair.
        #[arg(long)]
        intersection: Option<u64>,
        /// Alternatively, two curves whose intersection number is computed.
        #[arg(long = "curve")]
        curves: Vec<String>,
    },
    /// Check the section axioms for a weighted cabling spec.
    SectionVerify {
        /// Section spec as JSON.
        #[arg(long)]
        spec: String,
        /// Random pure pairs for the homomorphism check.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Evaluate the diagonal-class obstruction for a candidate pullback.
    CohomologyObstruction {
        /// Candidate as JSON, by preset name or explicit matrix.
        #[arg(long)]
        spec: String,
    },
    /// Second cohomology of the ordered n-point configuration space of
    /// the sphere, as invariant factors.
    SphereH2 {
        #[arg(long)]
        n: usize,
    },
    /// Add a point to a planar or spherical configuration.
    GeoAdd {
        /// Configuration as JSON.
        #[arg(long)]
        config: String,
        /// Add near the k-th point (1-based); omit to add near infinity.
        #[arg(long)]
        k: Option<usize>,
        /// Unit direction, comma-separated (`"0,1"` or `"0,0,1"`).
        #[arg(long)]
        direction: String,
        /// Write a before/after figure to this path.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Run the whole built-in verification suite.
    RunAll {
        /// Kept for interface stability; the full suite always runs.
        #[arg(long = "paper-suite", action = ArgAction::SetTrue)]
        paper_suite: bool,
    },
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::WordProblem { .. } => "word-problem",
        Command::VerifyLantern { .. } => "verify-lantern",
        Command::Intersect { .. } => "intersect",
        Command::TwistCommute { .. } => "twist-commute",
        Command::TraceClassify { .. } => "trace-classify",
        Command::SectionVerify { .. } => "section-verify",
        Command::CohomologyObstruction { .. } => "cohomology-obstruction",
        Command::SphereH2 { .. } => "sphere-h2",
        Command::GeoAdd { .. } => "geo-add",
        Command::RunAll { .. } => "run-all",
    }
}

fn dispatch(command: &Command) -> Result<Verdict, input::InputError> {
    match command {
        Command::WordProblem { n, word } => commands::word_problem(*n, word),
        Command::VerifyLantern { preset } => commands::verify_lantern(preset),
        Command::Intersect { curves } => commands::intersect(curves),
        Command::TwistCommute { curves } => commands::twist_commute(curves),
        Command::TraceClassify { intersection, curves } => {
            commands::trace_classify(*intersection, curves)
        }
        Command::SectionVerify { spec, samples, seed } => {
            commands::section_verify(spec, *samples, *seed)
        }
        Command::CohomologyObstruction { spec } => commands::cohomology_obstruction(spec),
        Command::SphereH2 { n } => commands::sphere_h2(*n),
        Command::GeoAdd { config, k, direction, svg } => {
            commands::geo_add(config, *k, direction, svg.as_deref())
        }
        Command::RunAll { paper_suite } => commands::run_all(*paper_suite),
    }
}

fn emit(verdict: &Verdict, quiet: bool) {
    if quiet {
        return;
    }
    match serde_json::to_string_pretty(verdict) {
        Ok(text) => println!("{text}"),
        Err(e) => eprintln!("cannot serialize verdict: {e}"),
    }
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let started = std::time::Instant::now();
    match dispatch(&cli.command) {
        Ok(verdict) => {
            emit(&verdict, cli.quiet);
            verdict.exit_code()
        }
        Err(message) => {
            let verdict = Verdict::new(
                command_name(&cli.command).to_string(),
                Status::Error,
                serde_json::json!({ "message": message }),
                started,
            );
            emit(&verdict, cli.quiet);
            eprintln!("error: {message}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn the_argument_surface_parses() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn subcommand_names_are_kebab_case() {
        use clap::CommandFactory;
        let names: Vec<String> = Cli::command()
            .get_subcommands()
            .map(|c| c.get_name().to_string())
            .collect();
        for expected in [
            "word-problem",
            "verify-lantern",
            "intersect",
            "twist-commute",
            "trace-classify",
            "section-verify",
            "cohomology-obstruction",
            "sphere-h2",
            "geo-add",
            "run-all",
        ] {
            assert!(names.iter().any(|n| n == expected), "missing {expected}");
        }
    }
}
