//! Settings merged from flags, a key=value config file and defaults.

use std::path::{Path, PathBuf};

use crate::report::{Format, ParamsUsed};
use crate::CliError;

/// Values from one source; `None` defers to the next source.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Settings {
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub q: Option<f64>,
    pub terms: Option<usize>,
    pub tol: Option<f64>,
    pub k_max: Option<usize>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
}

impl Settings {
    /// Fields of `self` win over `other`.
    pub fn or(self, other: Settings) -> Settings {
        Settings {
            alpha: self.alpha.or(other.alpha),
            beta: self.beta.or(other.beta),
            q: self.q.or(other.q),
            terms: self.terms.or(other.terms),
            tol: self.tol.or(other.tol),
            k_max: self.k_max.or(other.k_max),
            format: self.format.or(other.format),
            out: self.out.or(other.out),
        }
    }

    pub fn format(&self) -> Format {
        self.format.unwrap_or(Format::Text)
    }

    pub fn params_used(&self) -> ParamsUsed {
        ParamsUsed {
            alpha: self.alpha,
            beta: self.beta,
            q: self.q,
            terms: self.terms,
            tol: self.tol,
        }
    }

    /// Parses `key = value` lines; `#` starts a comment.
    pub fn parse_config(text: &str) -> Result<Settings, CliError> {
        let mut s = Settings::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Usage(format!("config line {}: expected key=value", i + 1))
            })?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |what: &str| {
                CliError::Usage(format!("config line {}: bad {what} '{value}'", i + 1))
            };
            match key {
                "alpha" => s.alpha = Some(value.parse().map_err(|_| bad("alpha"))?),
                "beta" => s.beta = Some(value.parse().map_err(|_| bad("beta"))?),
                "q" => s.q = Some(value.parse().map_err(|_| bad("q"))?),
                "terms" => s.terms = Some(value.parse().map_err(|_| bad("terms"))?),
                "tol" => s.tol = Some(value.parse().map_err(|_| bad("tol"))?),
                "k_max" | "k-max" => s.k_max = Some(value.parse().map_err(|_| bad("k_max"))?),
                "format" => s.format = Some(value.parse()?),
                "out" => s.out = Some(PathBuf::from(value)),
                other => {
                    return Err(CliError::Usage(format!(
                        "config line {}: unknown key '{other}'",
                        i + 1
                    )))
                }
            }
        }
        Ok(s)
    }

    pub fn load(path: &Path) -> Result<Settings, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Self::parse_config(&text)
    }
}
