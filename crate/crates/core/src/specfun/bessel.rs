//! Bessel functions of the first kind for real order ν > −1.
//!
//! Three regimes: the power series for small arguments, Miller's backward
//! recurrence in the transition range, and the Hankel asymptotic expansion
//! once x ≥ 25 and x ≥ ν².

use super::gamma::{gamma_unchecked, ln_gamma};
use super::{SERIES_CAP, SERIES_TOL};
use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Default bound on |x| for the checked entry points.
pub const DEFAULT_X_MAX: f64 = 500.0;

const ASYMPTOTIC_MIN_X: f64 = 25.0;

fn check_order(nu: f64) -> Result<()> {
    if nu.is_finite() && nu > -1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("Bessel order {nu} must exceed -1")))
    }
}

fn is_integer(nu: f64) -> bool {
    nu == nu.floor()
}

/// J_ν(x) with |x| ≤ [`DEFAULT_X_MAX`].
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    bessel_j_bounded(nu, x, DEFAULT_X_MAX)
}

/// J_ν(x) with a caller-chosen argument bound.
///
/// Negative x is accepted for integer ν (parity); otherwise use
/// [`bessel_j_ratio`], which is even in x.
pub fn bessel_j_bounded(nu: f64, x: f64, x_max: f64) -> Result<f64> {
    check_order(nu)?;
    if !x.is_finite() || x.abs() > x_max {
        return Err(Error::Domain(format!(
            "|x| = {} exceeds the bound {x_max}",
            x.abs()
        )));
    }
    if x == 0.0 {
        return if nu == 0.0 {
            Ok(1.0)
        } else if nu > 0.0 {
            Ok(0.0)
        } else {
            Err(Error::Domain(format!("J_{nu}(0) is infinite")))
        };
    }
    if x > 0.0 {
        return Ok(j_nonneg(nu, x));
    }
    if is_integer(nu) {
        let sign = if (nu as i64) % 2 == 0 { 1.0 } else { -1.0 };
        Ok(sign * j_nonneg(nu, -x))
    } else {
        Err(Error::Domain(format!(
            "J_{nu}(x) is not real for x = {x} < 0; use the ratio J_nu(x)/x^nu"
        )))
    }
}

/// J_ν(x)/x^ν, an even entire function of x equal to 1/(2^ν Γ(ν+1)) at 0.
pub fn bessel_j_ratio(nu: f64, x: f64) -> Result<f64> {
    check_order(nu)?;
    if !x.is_finite() {
        return Err(Error::Domain(format!("non-finite argument {x}")));
    }
    Ok(ratio_unchecked(nu, x))
}

pub(crate) fn ratio_unchecked(nu: f64, x: f64) -> f64 {
    let ax = x.abs();
    if use_series(nu, ax) {
        ratio_series(nu, ax)
    } else {
        j_nonneg(nu, ax) / ax.powf(nu)
    }
}

fn use_series(nu: f64, ax: f64) -> bool {
    ax <= 4.0 || ax * ax <= nu + 1.0
}

fn use_asymptotic(nu: f64, ax: f64) -> bool {
    ax >= ASYMPTOTIC_MIN_X && ax >= nu * nu
}

/// J_ν(x) for x > 0 without argument checks.
pub(crate) fn j_nonneg(nu: f64, x: f64) -> f64 {
    if x == 0.0 {
        return if nu == 0.0 { 1.0 } else { 0.0 };
    }
    if use_series(nu, x) {
        power_prefactor(nu, x) * series_sum(nu, x)
    } else if use_asymptotic(nu, x) {
        hankel_asymptotic(nu, x)
    } else {
        miller_sequence(nu, 1, x)[0]
    }
}

/// (x/2)^ν / Γ(ν+1), via logarithms when it would overflow.
fn power_prefactor(nu: f64, x: f64) -> f64 {
    if nu < 100.0 {
        (0.5 * x).powf(nu) / gamma_unchecked(nu + 1.0)
    } else {
        (nu * (0.5 * x).ln() - ln_gamma(nu + 1.0).unwrap_or(f64::INFINITY)).exp()
    }
}

/// Σ_k (−x²/4)^k / (k! (ν+1)_k)
fn series_sum(nu: f64, x: f64) -> f64 {
    let y = -0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..SERIES_CAP {
        let kf = k as f64;
        term *= y / (kf * (nu + kf));
        sum += term;
        if term.abs() <= SERIES_TOL * sum.abs() {
            return sum;
        }
    }
    debug_assert!(
        false,
        "Bessel power series hit the term cap at nu={nu}, x={x}"
    );
    sum
}

fn ratio_series(nu: f64, ax: f64) -> f64 {
    let pref = if nu < 100.0 {
        1.0 / (2f64.powf(nu) * gamma_unchecked(nu + 1.0))
    } else {
        (-(nu * 2f64.ln()) - ln_gamma(nu + 1.0).unwrap_or(f64::INFINITY)).exp()
    };
    pref * series_sum(nu, ax)
}

/// Coefficients a_k(ν) = Π_{j=1..k}(4ν² − (2j−1)²) / (k! 8^k), k = 0..count.
pub fn hankel_coefficients(nu: f64, count: usize) -> Vec<f64> {
    let m = 4.0 * nu * nu;
    let mut out = Vec::with_capacity(count);
    let mut a = 1.0;
    for k in 0..count {
        if k > 0 {
            let odd = (2 * k - 1) as f64;
            a *= (m - odd * odd) / (8.0 * k as f64);
        }
        out.push(a);
    }
    out
}

fn hankel_asymptotic(nu: f64, x: f64) -> f64 {
    let m = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0;
    let mut prev = f64::INFINITY;
    for k in 1..60 {
        let odd = (2 * k - 1) as f64;
        term *= (m - odd * odd) / (8.0 * k as f64 * x);
        let mag = term.abs();
        if mag > prev {
            break;
        }
        // (i)^k pattern: k ≡ 1 → +Q, 2 → −P, 3 → −Q, 0 → +P
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if mag < 1e-17 {
            break;
        }
        prev = mag;
    }
    let chi = x - (0.5 * nu + 0.25) * PI;
    (2.0 / (PI * x)).sqrt() * (p * chi.cos() - q * chi.sin())
}

/// Miller backward recurrence: J_{ν+i}(x), i = 0..count, for x > 0.
fn miller_sequence(nu: f64, count: usize, x: f64) -> Vec<f64> {
    if nu < 0.0 {
        // Step down from μ = ν + 1 ∈ (0, 1).
        let mu = nu + 1.0;
        let up = miller_sequence(mu, count + 1, x);
        let mut out = Vec::with_capacity(count);
        out.push(2.0 * mu / x * up[0] - up[1]);
        out.extend_from_slice(&up[..count.saturating_sub(1)]);
        return out;
    }
    let n0 = nu.floor() as usize;
    let mu = nu - n0 as f64;
    let top = n0 + count;
    let start = (top as f64).max(x) + 30.0 + (40.0 * x.max(1.0)).sqrt();
    let mut m = start.ceil() as usize;
    if m % 2 == 1 {
        m += 1;
    }

    let mut f = vec![0.0f64; m + 2];
    f[m] = 1e-280;
    for k in (1..=m).rev() {
        let next = 2.0 * (mu + k as f64) / x * f[k] - f[k + 1];
        f[k - 1] = next;
        if next.abs() > 1e250 {
            for v in f[k - 1..].iter_mut() {
                *v *= 1e-250;
            }
        }
    }

    // (x/2)^μ = Γ(μ+1) J_μ + Σ_{k≥1} (μ+2k) Γ(μ+k)/k! J_{μ+2k}
    let mut g = gamma_unchecked(mu + 1.0);
    let mut norm = g * f[0];
    let mut k = 1;
    while 2 * k <= m {
        if k > 1 {
            g *= (mu + k as f64 - 1.0) / k as f64;
        }
        norm += (mu + 2.0 * k as f64) * g * f[2 * k];
        k += 1;
    }
    let scale = (0.5 * x).powf(mu) / norm;
    f[n0..top].iter().map(|v| v * scale).collect()
}

/// J_{ν+i}(x) for i = 0..count and x ≥ 0.
pub fn bessel_j_orders(nu: f64, count: usize, x: f64) -> Result<Vec<f64>> {
    check_order(nu)?;
    if !(x.is_finite() && x >= 0.0) {
        return Err(Error::Domain(format!(
            "argument {x} must be finite and nonnegative"
        )));
    }
    if count == 0 {
        return Ok(Vec::new());
    }
    if x == 0.0 {
        return (0..count).map(|i| bessel_j(nu + i as f64, 0.0)).collect();
    }
    if x <= 4.0 {
        return Ok((0..count)
            .map(|i| power_prefactor(nu + i as f64, x) * series_sum(nu + i as f64, x))
            .collect());
    }
    Ok(miller_sequence(nu, count, x))
}

/// J_{ν+i}(x)/x^{ν+i} for i = 0..count; even in x.
pub fn bessel_ratio_orders(nu: f64, count: usize, x: f64) -> Result<Vec<f64>> {
    check_order(nu)?;
    if !x.is_finite() {
        return Err(Error::Domain(format!("non-finite argument {x}")));
    }
    let ax = x.abs();
    if ax <= 4.0 {
        return Ok((0..count)
            .map(|i| ratio_series(nu + i as f64, ax))
            .collect());
    }
    let j = miller_sequence(nu, count, ax);
    let lx = ax.ln();
    Ok(j.iter()
        .enumerate()
        .map(|(i, v)| v * (-(nu + i as f64) * lx).exp())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn half_order(x: f64) -> f64 {
        (2.0 / (PI * x)).sqrt() * x.sin()
    }

    #[test]
    fn order_zero_at_origin() {
        assert_eq!(bessel_j(0.0, 0.0).unwrap(), 1.0);
    }

    #[test]
    fn half_order_closed_form_across_regimes() {
        assert_relative_eq!(
            bessel_j(0.5, PI / 2.0).unwrap(),
            2.0 / PI,
            max_relative = 1e-14
        );
        for &x in &[0.3, 3.9, 4.1, 9.5, 17.0, 24.9, 25.1, 40.0, 120.0] {
            let got = bessel_j(0.5, x).unwrap();
            assert!(
                (got - half_order(x)).abs() <= 1e-13 * half_order(x).abs().max(1e-3),
                "x={x}"
            );
        }
    }

    #[test]
    fn negative_order_branch() {
        // J_{-1/2}(x) = √(2/(πx)) cos x
        for &x in &[0.7, 6.0, 13.0, 33.0] {
            let expect = (2.0 / (PI * x)).sqrt() * x.cos();
            assert!((bessel_j(-0.5, x).unwrap() - expect).abs() < 1e-13, "x={x}");
        }
    }

    #[test]
    fn first_zero_of_order_zero() {
        assert!(bessel_j(0.0, 2.404_825_557_695_773).unwrap().abs() < 1e-12);
    }

    #[test]
    fn regimes_agree_at_switches() {
        for &nu in &[0.0, 0.3, 1.7, 4.2] {
            let a = power_prefactor(nu, 4.0) * series_sum(nu, 4.0);
            let b = miller_sequence(nu, 1, 4.0)[0];
            assert!((a - b).abs() < 1e-14, "series/miller nu={nu}");
            let c = miller_sequence(nu, 1, 25.0)[0];
            let d = hankel_asymptotic(nu, 25.0);
            assert!((c - d).abs() < 1e-13, "miller/hankel nu={nu}: {c} {d}");
        }
    }

    #[test]
    fn sequence_matches_pointwise() {
        let seq = bessel_j_orders(0.3, 12, 7.5).unwrap();
        for (i, v) in seq.iter().enumerate() {
            let p = bessel_j(0.3 + i as f64, 7.5).unwrap();
            assert!((v - p).abs() < 1e-14, "i={i}");
        }
    }

    #[test]
    fn ratio_is_even_and_finite_at_origin() {
        let r0 = bessel_j_ratio(0.7, 0.0).unwrap();
        assert_relative_eq!(
            r0,
            1.0 / (2f64.powf(0.7) * gamma_unchecked(1.7)),
            max_relative = 1e-15
        );
        assert_eq!(
            bessel_j_ratio(0.7, -6.0).unwrap(),
            bessel_j_ratio(0.7, 6.0).unwrap()
        );
    }

    #[test]
    fn domain_errors() {
        assert!(bessel_j(-1.0, 1.0).is_err());
        assert!(bessel_j(0.5, -1.0).is_err());
        assert!(bessel_j(0.5, 600.0).is_err());
        assert_relative_eq!(bessel_j(1.0, -2.0).unwrap(), -bessel_j(1.0, 2.0).unwrap());
    }
}
