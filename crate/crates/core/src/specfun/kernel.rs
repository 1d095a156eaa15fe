//! The normalized Bessel variant 𝓘_α and the rank-one Dunkl kernel E_α.

use super::bessel::ratio_unchecked;
use super::gamma::gamma_unchecked;
use super::{SERIES_CAP, SERIES_TOL};
use crate::error::{Error, Result};
use crate::Cx;

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha.is_finite() && alpha > -1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("alpha = {alpha} must exceed -1")))
    }
}

/// 𝓘_α(z) = Γ(α+1) Σ_{n≥0} (z/2)^{2n} / (n! Γ(n+α+1)).
///
/// Purely imaginary arguments z = ix are routed through
/// 2^α Γ(α+1) J_α(x)/x^α, which avoids the cancellation of the series
/// for large |x|. Other arguments use the series.
pub fn script_i(alpha: f64, z: Cx) -> Result<Cx> {
    check_alpha(alpha)?;
    if z.re == 0.0 {
        return Ok(Cx::new(script_i_imag_unchecked(alpha, z.im), 0.0));
    }
    let w = z * z * 0.25;
    let mut term = Cx::new(1.0, 0.0);
    let mut sum = term;
    for n in 1..SERIES_CAP {
        let nf = n as f64;
        term = term * w / (nf * (nf + alpha));
        sum += term;
        if term.norm() <= SERIES_TOL * sum.norm() {
            return Ok(sum);
        }
    }
    Err(Error::Convergence {
        context: "script_i series",
        iterations: SERIES_CAP,
        last: term.norm(),
        previous: sum.norm(),
    })
}

/// 𝓘_α(ix) for real x, a real and even function of x.
pub fn script_i_imag(alpha: f64, x: f64) -> Result<f64> {
    check_alpha(alpha)?;
    Ok(script_i_imag_unchecked(alpha, x))
}

pub(crate) fn script_i_imag_unchecked(alpha: f64, x: f64) -> f64 {
    2f64.powf(alpha) * gamma_unchecked(alpha + 1.0) * ratio_unchecked(alpha, x)
}

/// E_α(ix) = 𝓘_α(ix) + (ix/(2(α+1))) 𝓘_{α+1}(ix).
pub fn dunkl_kernel(alpha: f64, x: f64) -> Result<Cx> {
    check_alpha(alpha)?;
    Ok(dunkl_kernel_unchecked(alpha, x))
}

pub(crate) fn dunkl_kernel_unchecked(alpha: f64, x: f64) -> Cx {
    let re = script_i_imag_unchecked(alpha, x);
    let im = x / (2.0 * (alpha + 1.0)) * script_i_imag_unchecked(alpha + 1.0, x);
    Cx::new(re, im)
}

/// E_α(w) for a general complex argument, by the series of both 𝓘 terms.
pub fn dunkl_kernel_at(alpha: f64, w: Cx) -> Result<Cx> {
    let a = script_i(alpha, w)?;
    let b = script_i(alpha + 1.0, w)?;
    Ok(a + w / (2.0 * (alpha + 1.0)) * b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::bessel_j;

    #[test]
    fn value_at_origin() {
        assert_eq!(script_i(0.4, Cx::new(0.0, 0.0)).unwrap(), Cx::new(1.0, 0.0));
        assert_eq!(dunkl_kernel(0.4, 0.0).unwrap(), Cx::new(1.0, 0.0));
    }

    #[test]
    fn half_order_is_cosine() {
        let v = script_i(-0.5, Cx::new(0.0, 1.3)).unwrap();
        assert!((v.re - 1.3f64.cos()).abs() < 1e-15);
    }

    #[test]
    fn imaginary_route_matches_bessel() {
        let (a, x) = (0.7, 2.1);
        let expect = 2f64.powf(a) * gamma_unchecked(a + 1.0) * bessel_j(a, x).unwrap() / x.powf(a);
        assert!((script_i(a, Cx::new(0.0, x)).unwrap().re - expect).abs() < 1e-12);
    }

    #[test]
    fn series_and_bessel_routes_agree() {
        // A tiny real part forces the series branch.
        for &x in &[0.4, 2.5, 6.0] {
            let s = script_i(0.3, Cx::new(1e-300, x)).unwrap();
            assert!(
                (s.re - script_i_imag(0.3, x).unwrap()).abs() < 1e-12,
                "x={x}"
            );
        }
    }

    #[test]
    fn exponential_at_minus_half() {
        let e = dunkl_kernel(-0.5, 0.9).unwrap();
        assert!((e.re - 0.9f64.cos()).abs() < 1e-15 && (e.im - 0.9f64.sin()).abs() < 1e-15);
        let g = dunkl_kernel_at(-0.5, Cx::new(0.4, 0.0)).unwrap();
        assert!((g.re - 0.4f64.exp()).abs() < 1e-15);
    }
}
