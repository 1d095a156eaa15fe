//! Command-line verification harness: named suites of identity checks and
//! direct function evaluation.

pub mod config;
pub mod eval;
pub mod report;
pub mod suites;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use config::Settings;
use eval::EvalArgs;
use report::Format;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("domain: {0}")]
    Domain(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Domain(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "bilinear",
    version,
    about = "Verify Dunkl/Bessel biorthogonal expansion identities"
)]
pub struct Cli {
    /// Dunkl parameter α (> −1)
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    /// Jacobi parameter β (> −1)
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    /// Base q in (0, 1)
    #[arg(long, global = true)]
    pub q: Option<f64>,
    /// Truncation order N
    #[arg(long, global = true)]
    pub terms: Option<usize>,
    /// Tolerance replacing every positive check tolerance
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Output format
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Output file (stdout if absent)
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// key=value config file; flags take precedence
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Print the suite registry and exit
    #[arg(long)]
    pub list_suites: bool,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a verification suite
    Verify {
        /// Suite name (see --list-suites)
        suite: String,
        /// Keep checks whose id starts with this prefix
        #[arg(long)]
        filter: Option<String>,
        /// Record wall-clock runtime in the report
        #[arg(long)]
        timings: bool,
        /// Number of eigenvalue pairs in the spectrum suite
        #[arg(long)]
        k_max: Option<usize>,
    },
    /// Evaluate one function value
    Eval {
        /// bessel, dunkl-kernel, gengeg, qbessel3, lommel, zeros, eigenvalue
        function: String,
        #[command(flatten)]
        args: EvalArgs,
    },
}

impl Cli {
    fn settings(&self) -> Result<Settings, CliError> {
        let k_max = match &self.command {
            Some(Command::Verify { k_max, .. }) => *k_max,
            _ => None,
        };
        let flags = Settings {
            alpha: self.alpha,
            beta: self.beta,
            q: self.q,
            terms: self.terms,
            tol: self.tol,
            k_max,
            format: self.format,
            out: self.out.clone(),
        };
        let file = match &self.config {
            Some(p) => Settings::load(p)?,
            None => Settings::default(),
        };
        let s = flags.or(file);
        validate(&s)?;
        Ok(s)
    }
}

fn validate(s: &Settings) -> Result<(), CliError> {
    let bad = |m: String| Err(CliError::Usage(m));
    if let Some(a) = s.alpha {
        if !(a > -1.0 && a.is_finite()) {
            return bad(format!("--alpha {a} must exceed -1"));
        }
    }
    if let Some(b) = s.beta {
        if !(b > -1.0 && b.is_finite()) {
            return bad(format!("--beta {b} must exceed -1"));
        }
    }
    if let Some(q) = s.q {
        if !(q > 0.0 && q < 1.0) {
            return bad(format!("--q {q} must lie in (0, 1)"));
        }
    }
    if s.terms == Some(0) {
        return bad("--terms must be positive".into());
    }
    if let Some(t) = s.tol {
        if !(t > 0.0 && t.is_finite()) {
            return bad(format!("--tol {t} must be positive"));
        }
    }
    if s.k_max == Some(0) {
        return bad("--k-max must be positive".into());
    }
    Ok(())
}

/// Runs the parsed command and returns the process exit code.
pub fn run(cli: Cli) -> Result<i32, CliError> {
    if cli.list_suites {
        for s in suites::SUITES {
            println!("{s}");
        }
        return Ok(0);
    }
    let settings = cli.settings()?;
    match &cli.command {
        Some(Command::Verify {
            suite,
            filter,
            timings,
            ..
        }) => {
            let report = suites::run_suite(suite, &settings, filter.as_deref(), *timings)?;
            report::emit(&report, settings.format(), settings.out.as_deref())?;
            Ok(if report.pass { 0 } else { 1 })
        }
        Some(Command::Eval { function, args }) => {
            let v = eval::evaluate(function, &settings, args)?;
            let line = eval::format_value(v) + "\n";
            match &settings.out {
                Some(p) => std::fs::write(p, line)
                    .map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?,
                None => print!("{line}"),
            }
            Ok(0)
        }
        None => Err(CliError::Usage(
            "expected a subcommand: verify or eval (see --help)".into(),
        )),
    }
}
