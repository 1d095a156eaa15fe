//! Jacobi-polynomial forms of two Bessel-product integrals,
//!
//! I₋(α,β,n)(t) = t^{−α} ∫_0^∞ x^{−β} J_{α+β+2n+1}(x) J_α(xt) dx,
//! I₊(α,β,n)(t) = t^{−α} ∫_0^∞ x^{β}  J_{α+β+2n+1}(x) J_α(xt) dx,
//!
//! each available both by oscillatory quadrature and in closed form.

use super::oscillatory::integrate_bessel_product;
use crate::error::{Error, Result};
use crate::orthopoly::JacobiFamily;
use crate::specfun::gamma;
use crate::Params;

fn check(t: f64) -> Result<()> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("t = {t} must be positive")))
    }
}

/// I₋ by quadrature.
pub fn i_minus_quadrature(params: Params, n: usize, t: f64) -> Result<f64> {
    check(t)?;
    let (a, b) = (params.alpha(), params.beta());
    let order = a + b + 2.0 * n as f64 + 1.0;
    Ok(t.powf(-a) * integrate_bessel_product(b, order, a, t)?)
}

/// I₊ by quadrature; needs β < 1.
pub fn i_plus_quadrature(params: Params, n: usize, t: f64) -> Result<f64> {
    check(t)?;
    params.require_beta_below_one()?;
    let (a, b) = (params.alpha(), params.beta());
    let order = a + b + 2.0 * n as f64 + 1.0;
    Ok(t.powf(-a) * integrate_bessel_product(-b, order, a, t)?)
}

/// 2^{−β} n!/Γ(β+n+1) (1−t²)^β P_n^{(α,β)}(1−2t²) on (0, 1), zero beyond.
pub fn i_minus_closed(params: Params, n: usize, t: f64) -> Result<f64> {
    check(t)?;
    if t >= 1.0 {
        return Ok(0.0);
    }
    let (a, b) = (params.alpha(), params.beta());
    let p = JacobiFamily::new(a, b)?.eval(n, 1.0 - 2.0 * t * t);
    Ok(
        2f64.powf(-b) * gamma(n as f64 + 1.0)? / gamma(b + n as f64 + 1.0)?
            * (1.0 - t * t).powf(b)
            * p,
    )
}

/// 2^β Γ(α+β+n+1)/Γ(α+n+1) P_n^{(α,β)}(1−2t²) for t ∈ (0, 1) and β < 1.
pub fn i_plus_closed(params: Params, n: usize, t: f64) -> Result<f64> {
    check(t)?;
    params.require_beta_below_one()?;
    if t >= 1.0 {
        return Err(Error::Domain(format!(
            "the closed form of I+ holds only on (0, 1), got t = {t}"
        )));
    }
    let (a, b) = (params.alpha(), params.beta());
    let nf = n as f64;
    let p = JacobiFamily::new(a, b)?.eval(n, 1.0 - 2.0 * t * t);
    Ok(2f64.powf(b) * gamma(a + b + nf + 1.0)? / gamma(a + nf + 1.0)? * p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minus_branch_matches_closed_form() {
        let p = Params::new(0.3, 0.2).unwrap();
        let q = i_minus_quadrature(p, 1, 0.5).unwrap();
        let c = i_minus_closed(p, 1, 0.5).unwrap();
        assert!((q - c).abs() < 1e-8 * c.abs(), "{q} vs {c}");
    }

    #[test]
    fn minus_branch_vanishes_beyond_one() {
        let p = Params::new(0.3, 0.2).unwrap();
        assert!(i_minus_quadrature(p, 1, 1.5).unwrap().abs() < 1e-8);
    }

    #[test]
    fn plus_branch_matches_closed_form() {
        let p = Params::new(0.5, -0.1).unwrap();
        let q = i_plus_quadrature(p, 2, 0.7).unwrap();
        let c = i_plus_closed(p, 2, 0.7).unwrap();
        assert!((q - c).abs() < 1e-8 * c.abs(), "{q} vs {c}");
    }
}
