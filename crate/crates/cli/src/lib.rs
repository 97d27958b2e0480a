//! Command-line front end for `framesteps`.
//!
//! [`run`] parses an argument list, dispatches to the core library and
//! returns the exit code with everything that would be printed, so the binary
//! and the tests share one code path.

mod commands;
pub mod render;

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};

pub use commands::Failure;

/// Exit code plus captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable overriding the default numeric tolerance.
pub const TOL_ENV: &str = "FRAMESTEPS_TOL";

#[derive(Debug, Parser)]
#[command(name = "framesteps", version, about = "Frames, eigensteps, GT patterns and Young tableaux")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a tableau, GT pattern or matrix and list any violated rules.
    Validate { file: String },
    /// Convert between tableaux and GT patterns.
    Convert {
        #[arg(long, value_enum)]
        to: Target,
        /// Number of labels; defaults to the largest entry.
        #[arg(long)]
        n: Option<usize>,
        file: String,
    },
    /// Apply a complement map.
    Complement {
        #[arg(long, value_enum)]
        map: MapKind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        /// Column bound for Boxcomp; defaults to the tableau width.
        #[arg(long)]
        c: Option<usize>,
        file: String,
    },
    /// Inner (default) or outer eigensteps of a synthesis matrix.
    Eigensteps {
        #[arg(long)]
        outer: bool,
        /// Scale to an integer GT pattern.
        #[arg(long)]
        clear: bool,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, default_value_t = framesteps::DEFAULT_MAX_DEN)]
        max_den: u64,
        matrix: String,
    },
    /// Frame bounds, rank, tightness and norms.
    Report {
        #[arg(long)]
        tol: Option<f64>,
        matrix: String,
    },
    /// A Naimark complement of a tight frame, or the generalized complement.
    NaimarkFrame {
        #[arg(long)]
        generalized: bool,
        #[arg(long)]
        tol: Option<f64>,
        matrix: String,
    },
    /// List the SSYT of a shape and weight.
    Enumerate {
        #[arg(long, value_delimiter = ',', required = true)]
        shape: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        weight: Vec<usize>,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Check both commutative diagrams on their whole domains.
    VerifyDiagrams {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Draw a tableau or GT pattern.
    Render {
        #[arg(long, value_enum, default_value_t = RenderFormat::Ascii)]
        format: RenderFormat,
        file: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Ssyt,
    Gt,
    Skew,
    Parallelogram,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapKind {
    Gamma,
    Boxcomp,
    Naimark,
    Generalized,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RenderFormat {
    Ascii,
    Latex,
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    match commands::dispatch(cli.command) {
        Ok(stdout) => Outcome { code: EXIT_OK, stdout, stderr: String::new() },
        Err(failure) => Outcome {
            code: failure.code(),
            stdout: failure.stdout,
            stderr: format!("error: {}\n", failure.message),
        },
    }
}
