//! Command-line interface: exact rational interpolation over Q or GF(p).

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use ratinterp::cli;

#[derive(Parser)]
#[command(
    name = "ratinterp",
    version,
    about = "Exact rational interpolation with degree bounds, over Q or GF(p)",
    long_about = "Solves Cauchy and osculatory rational interpolation problems exactly, \
                  by three independent algebraic methods that cross-validate each other. \
                  Every command reads one JSON document and writes one JSON document."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an interpolation problem from a JSON document.
    Solve {
        /// Input file; defaults to stdin.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Strategy: auto, subresultant, sylvester, or determinantal.
        #[arg(long, default_value = "auto")]
        method: String,
        /// Override the document's data convention: taylor or derivative.
        #[arg(long)]
        convention: Option<String>,
        /// Print the structured matrices behind the solve to stderr.
        #[arg(long)]
        debug_matrices: bool,
    },
    /// Print the full subresultant table of a polynomial pair.
    Subres {
        /// Input file; defaults to stdin.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Table engine: prs (remainder sequence) or det (determinants).
        #[arg(long, default_value = "prs")]
        engine: String,
    },
    /// Verify a candidate numerator/denominator pair against a problem.
    Verify {
        /// Input file; defaults to stdin.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Override the document's data convention: taylor or derivative.
        #[arg(long)]
        convention: Option<String>,
    },
    /// Run every applicable strategy and check the identities between them.
    Crosscheck {
        /// Problem document to check; defaults to stdin unless --seed is given.
        #[arg(long, conflicts_with = "seed")]
        input: Option<PathBuf>,
        /// Generate random instances from this seed instead of reading input.
        #[arg(long)]
        seed: Option<u64>,
        /// How many instances to generate.
        #[arg(long, default_value_t = 25)]
        count: usize,
        /// Largest num_degree + den_degree for generated instances.
        #[arg(long, default_value_t = 6)]
        max_ell: usize,
        /// Largest node multiplicity for generated instances.
        #[arg(long, default_value_t = 3)]
        max_mult: usize,
        /// Field for generated instances: q, or a prime modulus.
        #[arg(long, default_value = "q")]
        field: String,
        /// Corrupt one strategy's output (negative-control testing).
        #[arg(long, hide = true)]
        tamper: Option<String>,
    },
}

fn read_input(path: Option<&PathBuf>) -> std::io::Result<String> {
    match path {
        Some(p) => std::fs::read_to_string(p),
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

fn run(command: Command) -> (serde_json::Value, i32) {
    let with_input = |path: Option<&PathBuf>,
                      f: &dyn Fn(&str) -> (serde_json::Value, i32)| {
        match read_input(path) {
            Ok(text) => f(&text),
            Err(e) => (
                cli::error_document(&format!("cannot read input: {e}")),
                cli::EXIT_ERROR,
            ),
        }
    };
    match command {
        Command::Solve {
            input,
            method,
            convention,
            debug_matrices,
        } => with_input(input.as_ref(), &|text| {
            cli::cmd_solve(text, &method, convention.as_deref(), debug_matrices)
        }),
        Command::Subres { input, engine } => {
            with_input(input.as_ref(), &|text| cli::cmd_subres(text, &engine))
        }
        Command::Verify { input, convention } => with_input(input.as_ref(), &|text| {
            cli::cmd_verify(text, convention.as_deref())
        }),
        Command::Crosscheck {
            input,
            seed,
            count,
            max_ell,
            max_mult,
            field,
            tamper,
        } => match seed {
            Some(seed) => cli::cmd_crosscheck_seeded(
                seed,
                count,
                max_ell,
                max_mult,
                &field,
                tamper.as_deref(),
            ),
            None => with_input(input.as_ref(), &|text| {
                cli::cmd_crosscheck_input(text, tamper.as_deref())
            }),
        },
    }
}

fn main() {
    let cli = Cli::parse();
    let (document, code) = run(cli.command);
    print!("{}", cli::render_document(&document));
    std::process::exit(code);
}
