//! Direct evaluation of single special-function values.

use bilinear_core::orthopoly::GenGegenbauerFamily;
use bilinear_core::qspec::QContext;
use bilinear_core::specfun::{bessel_j, bessel_zeros, dunkl_kernel, modified_lommel};
use bilinear_core::spectrum::{Sign, SpectralProblem};
use bilinear_core::{Cx, Params};

use crate::config::Settings;
use crate::CliError;

pub const FUNCTIONS: [&str; 7] = [
    "bessel",
    "dunkl-kernel",
    "gengeg",
    "qbessel3",
    "lommel",
    "zeros",
    "eigenvalue",
];

/// Arguments specific to `eval`.
#[derive(Debug, Clone, Default, clap::Args)]
pub struct EvalArgs {
    /// Argument x
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<f64>,
    /// Order ν
    #[arg(long, allow_hyphen_values = true)]
    pub nu: Option<f64>,
    /// Zero or eigenvalue index (1-based)
    #[arg(long)]
    pub k: Option<usize>,
    /// Degree or Lommel index
    #[arg(long)]
    pub n: Option<i64>,
    /// Lommel parameter a
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<f64>,
    /// Lommel argument w
    #[arg(long, allow_hyphen_values = true)]
    pub w: Option<f64>,
    /// Polynomial argument t
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<f64>,
    /// Eigenvalue branch
    #[arg(long, value_parser = ["+", "-"], default_value = "+")]
    pub sign: String,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Value {
    Real(f64),
    Complex(Cx),
}

fn need<T>(v: Option<T>, name: &str, func: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("{func} needs --{name}")))
}

fn dom(e: bilinear_core::Error) -> CliError {
    CliError::Domain(e.to_string())
}

pub fn evaluate(func: &str, s: &Settings, a: &EvalArgs) -> Result<Value, CliError> {
    match func {
        "bessel" => {
            let (nu, x) = (need(a.nu, "nu", func)?, need(a.x, "x", func)?);
            bessel_j(nu, x).map(Value::Real).map_err(dom)
        }
        "dunkl-kernel" => {
            let (al, x) = (need(s.alpha, "alpha", func)?, need(a.x, "x", func)?);
            dunkl_kernel(al, x).map(Value::Complex).map_err(dom)
        }
        "gengeg" => {
            let p = Params::new(need(s.alpha, "alpha", func)?, need(s.beta, "beta", func)?)
                .map_err(dom)?;
            let n = need(a.n, "n", func)?;
            let n = usize::try_from(n)
                .map_err(|_| CliError::Usage(format!("--n {n} must be nonnegative")))?;
            let t = need(a.t, "t", func)?;
            if !(-1.0..=1.0).contains(&t) {
                return Err(CliError::Domain(format!("t = {t} outside [-1, 1]")));
            }
            Ok(Value::Real(GenGegenbauerFamily::new(p).eval(n, t)))
        }
        "qbessel3" => {
            let ctx = QContext::new(need(s.q, "q", func)?).map_err(dom)?;
            ctx.qbessel3(need(a.nu, "nu", func)?, need(a.x, "x", func)?)
                .map(Value::Real)
                .map_err(dom)
        }
        "lommel" => {
            let (n, al, w) = (
                need(a.n, "n", func)?,
                need(a.a, "a", func)?,
                need(a.w, "w", func)?,
            );
            modified_lommel(n, al, w).map(Value::Real).map_err(dom)
        }
        "zeros" => {
            let (nu, k) = (need(a.nu, "nu", func)?, need(a.k, "k", func)?);
            if k == 0 {
                return Err(CliError::Usage("--k is 1-based".into()));
            }
            bessel_zeros(nu, k)
                .and_then(|z| z.get(k))
                .map(Value::Real)
                .map_err(dom)
        }
        "eigenvalue" => {
            let p = Params::new(need(s.alpha, "alpha", func)?, need(s.beta, "beta", func)?)
                .map_err(dom)?;
            let k = need(a.k, "k", func)?;
            let sign = if a.sign == "-" {
                Sign::Minus
            } else {
                Sign::Plus
            };
            SpectralProblem::new(p, 10, k)
                .and_then(|sp| sp.eigenvalue(k, sign))
                .map(Value::Complex)
                .map_err(dom)
        }
        other => Err(CliError::Usage(format!(
            "unknown function '{other}' (known: {})",
            FUNCTIONS.join(", ")
        ))),
    }
}

/// 15 significant digits, shortest form.
pub fn format_sig(x: f64) -> String {
    let rounded: f64 = format!("{x:.14e}").parse().unwrap_or(x);
    format!("{rounded:?}")
}

pub fn format_value(v: Value) -> String {
    match v {
        Value::Real(x) => format_sig(x),
        Value::Complex(z) => format!("{} {}", format_sig(z.re), format_sig(z.im)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(format_sig(std::f64::consts::PI * 2.0), "6.28318530717959");
        assert_eq!(format_sig(1.0), "1.0");
        assert_eq!(format_sig(-0.125), "-0.125");
    }

    #[test]
    fn lommel_first_step() {
        let a = EvalArgs {
            n: Some(1),
            a: Some(2.5),
            w: Some(0.2),
            ..EvalArgs::default()
        };
        let v = evaluate("lommel", &Settings::default(), &a).unwrap();
        assert_eq!(format_value(v), "1.0");
    }

    #[test]
    fn missing_argument_is_usage_error() {
        let r = evaluate("bessel", &Settings::default(), &EvalArgs::default());
        assert!(matches!(r, Err(CliError::Usage(_))));
    }
}
