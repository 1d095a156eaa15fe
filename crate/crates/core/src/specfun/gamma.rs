use crate::error::{Error, Result};

fn is_pole(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// Γ(x) by a Lanczos approximation with reflection for x < 0.5.
pub fn gamma(x: f64) -> Result<f64> {
    if is_pole(x) {
        return Err(Error::Pole(x));
    }
    Ok(gamma_unchecked(x))
}

/// 1/Γ(x), which vanishes at the poles.
pub fn rgamma(x: f64) -> f64 {
    if is_pole(x) {
        0.0
    } else {
        1.0 / gamma_unchecked(x)
    }
}

/// ln|Γ(x)| for x > 0.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::Domain(format!("ln_gamma needs x > 0, got {x}")));
    }
    Ok(statrs::function::gamma::ln_gamma(x))
}

/// Pochhammer symbol (a)_n = a(a+1)…(a+n−1), by direct product.
pub fn pochhammer(a: f64, n: usize) -> f64 {
    (0..n).fold(1.0, |p, k| p * (a + k as f64))
}

/// Γ(x) for arguments known to be valid; NaN at poles.
pub(crate) fn gamma_unchecked(x: f64) -> f64 {
    if is_pole(x) {
        f64::NAN
    } else if x == x.floor() && x <= 171.0 {
        (2..x as u32).fold(1.0, |p, k| p * k as f64)
    } else {
        statrs::function::gamma::gamma(x)
    }
}

/// Γ(a + n)/Γ(b + n) evaluated stably for large n.
pub(crate) fn gamma_ratio(a: f64, b: f64) -> f64 {
    if a > 0.0 && b > 0.0 && (a > 150.0 || b > 150.0) {
        (statrs::function::gamma::ln_gamma(a) - statrs::function::gamma::ln_gamma(b)).exp()
    } else {
        gamma_unchecked(a) / gamma_unchecked(b)
    }
}
