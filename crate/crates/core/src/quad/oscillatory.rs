//! Semi-infinite integrals ∫_0^∞ x^{−λ} J_μ(x) J_ν(tx) dx.
//!
//! The half-line is cut at consecutive zeros of the faster factor (and at
//! cell midpoints when t = 1). The first cell carries the x^{μ+ν−λ}
//! behaviour at the origin and uses a Gauss–Jacobi rule; the others use
//! Gauss–Legendre. Once both arguments reach the Hankel regime, every
//! partial sum is completed by the analytic asymptotic tail. The resulting
//! sequence is accelerated with Wynn's epsilon algorithm.

use super::rules::{gauss_jacobi, gauss_legendre};
use crate::error::{Error, Result};
use crate::specfun::{bessel_j_ratio, bessel_zeros, gamma, hankel_coefficients, j_nonneg, rgamma};
use crate::Cx;
use std::f64::consts::PI;

/// Tuning knobs of [`integrate_bessel_product_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatoryOptions {
    /// Hard cap on the number of cells.
    pub max_cells: usize,
    /// Successive accelerated estimates must agree to this relative level.
    pub rel_tol: f64,
    /// Looser level accepted when the cell cap is reached.
    pub fallback_tol: f64,
    /// Gauss–Legendre order per cell.
    pub cell_order: usize,
}

impl Default for OscillatoryOptions {
    fn default() -> Self {
        Self {
            max_cells: 400,
            rel_tol: 1e-12,
            fallback_tol: 1e-6,
            cell_order: 20,
        }
    }
}

/// An accelerated integral value with bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatoryValue {
    pub value: f64,
    /// Difference between the last two accelerated estimates.
    pub change: f64,
    pub cells: usize,
}

/// ∫_0^∞ x^{−λ} J_μ(x) J_ν(tx) dx with default options.
pub fn integrate_bessel_product(lam: f64, mu: f64, nu: f64, t: f64) -> Result<f64> {
    integrate_bessel_product_with(lam, mu, nu, t, &OscillatoryOptions::default()).map(|v| v.value)
}

pub fn integrate_bessel_product_with(
    lam: f64,
    mu: f64,
    nu: f64,
    t: f64,
    opts: &OscillatoryOptions,
) -> Result<OscillatoryValue> {
    if !(mu > -1.0 && nu > -1.0) {
        return Err(Error::Domain(format!("orders ({mu}, {nu}) must exceed -1")));
    }
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!("scale t = {t} must be positive")));
    }
    if !(lam > -1.0 && lam < mu + nu + 1.0) {
        return Err(Error::Domain(format!(
            "lambda = {lam} outside the convergence window (-1, {})",
            mu + nu + 1.0
        )));
    }
    if t == 1.0 && lam <= 0.0 {
        return Err(Error::Domain(format!(
            "at t = 1 the integral needs lambda > 0, got {lam}"
        )));
    }
    let integrand = |x: f64| x.powf(-lam) * j_nonneg(mu, x) * j_nonneg(nu, t * x);

    // Cell boundaries: zeros of the faster factor.
    let (zero_order, zero_scale) = if t <= 1.0 { (mu, 1.0) } else { (nu, 1.0 / t) };
    let mut zeros = bessel_zeros(zero_order, 64)?;
    let mut boundary = |k: usize| -> Result<f64> {
        if k > zeros.len() {
            zeros = bessel_zeros(zero_order, (2 * k).min(opts.max_cells + 8))?;
        }
        Ok(zeros.get(k)? * zero_scale)
    };

    // First cell [0, b]: weight x^p with p = μ + ν − λ > −1, smooth remainder
    // t^ν R_μ(x) R_ν(tx) where R_ν(x) = J_ν(x)/x^ν.
    let b1 = boundary(1)?;
    let p = mu + nu - lam;
    let first_rule = gauss_jacobi(40, 0.0, p)?;
    let tn = t.powf(nu);
    let mut first = 0.0;
    for (y, w) in first_rule.nodes().iter().zip(first_rule.weights()) {
        let x = 0.5 * b1 * (1.0 + y);
        first += w * tn * bessel_j_ratio(mu, x)? * bessel_j_ratio(nu, t * x)?;
    }
    first *= (0.5 * b1).powf(p + 1.0);

    let cell_rule = gauss_legendre(opts.cell_order)?;
    let gl = |a: f64, b: f64| -> f64 {
        let (h, c) = (0.5 * (b - a), 0.5 * (b + a));
        h * cell_rule.apply(|y| integrand(c + h * y))
    };

    let tail = AsymptoticTail::new(lam, mu, nu, t);
    let mut partial = first;
    let mut left = b1;
    let mut seq: Vec<f64> = vec![partial];
    let mut tail_active = false;
    let mut estimates: Vec<f64> = Vec::new();
    let mut scale = partial.abs();
    let mut stable = 0usize;

    for k in 2..=opts.max_cells {
        let right = boundary(k)?;
        if t == 1.0 {
            let mid = 0.5 * (left + right);
            partial += gl(left, mid);
            partial += gl(mid, right);
        } else {
            partial += gl(left, right);
        }
        left = right;
        if !partial.is_finite() {
            return Err(Error::NonFinite {
                context: "integrate_bessel_product",
                node: right,
                value: partial,
            });
        }
        scale = scale.max(partial.abs());

        let in_regime = tail.valid_at(right);
        if in_regime && !tail_active {
            tail_active = true;
            seq.clear();
            estimates.clear();
            stable = 0;
        }
        let entry = if tail_active {
            partial + tail.eval(right)
        } else {
            partial
        };
        seq.push(entry);
        let window = &seq[seq.len().saturating_sub(40)..];
        let est = wynn_epsilon(window);
        estimates.push(est);
        if estimates.len() >= 2 {
            let n = estimates.len();
            let change = (estimates[n - 1] - estimates[n - 2]).abs();
            let level = opts.rel_tol * scale.max(estimates[n - 1].abs());
            if change <= level {
                stable += 1;
            } else {
                stable = 0;
            }
            if stable >= 3 && seq.len() >= 6 {
                return Ok(OscillatoryValue {
                    value: estimates[n - 1],
                    change,
                    cells: k,
                });
            }
        }
    }
    let n = estimates.len();
    let (last, previous) = (estimates[n - 1], estimates[n.saturating_sub(2)]);
    let change = (last - previous).abs();
    if change <= opts.fallback_tol * scale.max(last.abs()) {
        Ok(OscillatoryValue {
            value: last,
            change,
            cells: opts.max_cells,
        })
    } else {
        Err(Error::Convergence {
            context: "oscillatory Bessel-product integral",
            iterations: opts.max_cells,
            last,
            previous,
        })
    }
}

/// Closed form of ∫_0^∞ x^{−λ} J_μ(x) J_ν(tx) dx (discontinuous
/// Weber–Schafheitlin integral), used as an independent check.
///
/// For t ≠ 1 the Gauss series is summed directly, so it is only practical
/// for t away from 1.
pub fn weber_schafheitlin(lam: f64, mu: f64, nu: f64, t: f64) -> Result<f64> {
    if !(t > 0.0) || !(lam > -1.0 && lam < mu + nu + 1.0) {
        return Err(Error::Domain(format!(
            "closed form needs t > 0 and -1 < lambda < mu + nu + 1, got t = {t}, lambda = {lam}"
        )));
    }
    if t == 1.0 {
        if !(lam > 0.0) {
            return Err(Error::Domain(format!(
                "at t = 1 lambda must be positive, got {lam}"
            )));
        }
        return Ok(gamma(lam)?
            * gamma(0.5 * (mu + nu - lam + 1.0))?
            * rgamma(0.5 * (nu - mu + lam + 1.0))
            * rgamma(0.5 * (mu + nu + lam + 1.0))
            * rgamma(0.5 * (mu - nu + lam + 1.0))
            / 2f64.powf(lam));
    }
    if t > 1.0 {
        // x = s/t swaps the roles of the two factors.
        return Ok(t.powf(lam - 1.0) * weber_schafheitlin(lam, nu, mu, 1.0 / t)?);
    }
    let a = 0.5 * (mu + nu - lam + 1.0);
    let b = 0.5 * (nu - mu - lam + 1.0);
    let c = nu + 1.0;
    let z = t * t;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 0usize;
    loop {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        sum += term;
        k += 1;
        if term.abs() <= 1e-17 * sum.abs() || term == 0.0 {
            break;
        }
        if k > 200_000 {
            return Err(Error::SeriesDivergent("Weber-Schafheitlin Gauss series"));
        }
    }
    Ok(
        t.powf(nu) * gamma(a)? * rgamma(0.5 * (mu - nu + lam + 1.0)) * rgamma(c) * sum
            / 2f64.powf(lam),
    )
}

/// Wynn's epsilon algorithm; returns the deepest even-column entry.
///
/// A vanishing difference means the sequence has already converged, and
/// the entry at hand is returned.
pub fn wynn_epsilon(s: &[f64]) -> f64 {
    let n = s.len();
    if n == 0 {
        return f64::NAN;
    }
    if n < 3 {
        return s[n - 1];
    }
    // e_prev = column k−1, e_cur = column k
    let mut e_prev = vec![0.0; n + 1];
    let mut e_cur: Vec<f64> = s.to_vec();
    let mut best = s[n - 1];
    let mut col = 0usize;
    while e_cur.len() > 1 {
        let m = e_cur.len();
        let mut next = Vec::with_capacity(m - 1);
        for i in 0..m - 1 {
            let d = e_cur[i + 1] - e_cur[i];
            if d == 0.0 {
                return if col.is_multiple_of(2) {
                    e_cur[i + 1]
                } else {
                    best
                };
            }
            next.push(e_prev[i + 1] + 1.0 / d);
        }
        col += 1;
        if col.is_multiple_of(2) {
            let v = next[next.len() - 1];
            if v.is_finite() {
                best = v;
            }
        }
        e_prev = e_cur;
        e_cur = next;
    }
    best
}

/// Hankel-expansion tail ∫_X^∞ x^{−λ} J_μ(x) J_ν(tx) dx.
struct AsymptoticTail {
    lam: f64,
    mu: f64,
    nu: f64,
    t: f64,
    sum_coeffs: Vec<Cx>,
    diff_coeffs: Vec<Cx>,
}

const TAIL_TERMS: usize = 14;

impl AsymptoticTail {
    fn new(lam: f64, mu: f64, nu: f64, t: f64) -> Self {
        let am = hankel_coefficients(mu, TAIL_TERMS);
        let an = hankel_coefficients(nu, TAIL_TERMS);
        let i = Cx::new(0.0, 1.0);
        let mut sum_coeffs = Vec::with_capacity(TAIL_TERMS);
        let mut diff_coeffs = Vec::with_capacity(TAIL_TERMS);
        for k in 0..TAIL_TERMS {
            let mut c = Cx::new(0.0, 0.0);
            let mut d = Cx::new(0.0, 0.0);
            for j in 0..=k {
                let w = am[j] * an[k - j] * t.powi(-((k - j) as i32));
                c += i.powu(k as u32) * w;
                d += i.powu(j as u32) * (-i).powu((k - j) as u32) * w;
            }
            sum_coeffs.push(c);
            diff_coeffs.push(d);
        }
        Self {
            lam,
            mu,
            nu,
            t,
            sum_coeffs,
            diff_coeffs,
        }
    }

    fn valid_at(&self, x: f64) -> bool {
        let ok = |order: f64, arg: f64| arg >= 25.0 && arg >= order * order;
        ok(self.mu, x) && ok(self.nu, self.t * x)
    }

    fn eval(&self, x: f64) -> f64 {
        let (lam, mu, nu, t) = (self.lam, self.mu, self.nu, self.t);
        let phase_sum = Cx::from_polar(1.0, -(mu + nu + 1.0) * PI / 2.0);
        let phase_diff = Cx::from_polar(1.0, -(mu - nu) * PI / 2.0);
        let mut total = Cx::new(0.0, 0.0);
        for k in 0..TAIL_TERMS {
            let p = lam + 1.0 + k as f64;
            let cs = self.sum_coeffs[k] * power_tail(p, 1.0 + t, x);
            let cd = self.diff_coeffs[k] * power_tail(p, 1.0 - t, x);
            let term = phase_sum * cs + phase_diff * cd;
            total += term;
            if k > 2 && term.norm() < 1e-18 * total.norm() {
                break;
            }
        }
        total.re / (PI * t.sqrt())
    }
}

/// G(p, ω, X) = ∫_X^∞ x^{−p} e^{iωx} dx for p > 0.
///
/// For ω ≠ 0 the path is turned to X + i·[0, ∞) (ω > 0; conjugate for
/// ω < 0), giving (i e^{iωX}/ω) ∫_0^∞ (X + iv/ω)^{−p} e^{−v} dv, which is
/// integrated on geometrically graded panels.
fn power_tail(p: f64, omega: f64, x: f64) -> Cx {
    if omega == 0.0 {
        return Cx::new(x.powf(1.0 - p) / (p - 1.0), 0.0);
    }
    let w = omega.abs();
    let rule = gauss_legendre(16).expect("16-point Legendre rule");
    let mut acc = Cx::new(0.0, 0.0);
    let mut a = 0.0;
    let mut h = (0.25 * w * x).min(0.5);
    while a < 60.0 {
        let b = a + h;
        let (hh, c) = (0.5 * (b - a), 0.5 * (b + a));
        for (y, wt) in rule.nodes().iter().zip(rule.weights()) {
            let v = c + hh * y;
            let z = Cx::new(x, v / w);
            acc += z.powf(-p) * ((-v).exp() * wt * hh);
        }
        a = b;
        h = (2.0 * h).min(4.0);
    }
    let g = Cx::new(0.0, 1.0) * Cx::from_polar(1.0, w * x) / w * acc;
    if omega > 0.0 {
        g
    } else {
        g.conj()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wynn_sums_alternating_series() {
        // Σ (−1)^k/(k+1) = ln 2
        let mut s = 0.0;
        let partial: Vec<f64> = (0..15)
            .map(|k| {
                s += if k % 2 == 0 { 1.0 } else { -1.0 } / (k as f64 + 1.0);
                s
            })
            .collect();
        assert!((wynn_epsilon(&partial) - 2f64.ln()).abs() < 1e-10);
    }

    #[test]
    fn wynn_handles_constant_sequences() {
        assert_eq!(wynn_epsilon(&[3.0, 3.0, 3.0, 3.0]), 3.0);
    }

    #[test]
    fn power_tail_matches_direct_integral() {
        // ∫_X^∞ x^{−2} e^{iωx} dx checked against a long Legendre sum truncated
        // with the leading asymptotic correction.
        let (p, omega, x0): (f64, f64, f64) = (2.0, 1.3, 30.0);
        let g = power_tail(p, omega, x0);
        let rule = gauss_legendre(30).unwrap();
        let mut acc = Cx::new(0.0, 0.0);
        let xmax = 30.0 + 2.0 * PI / omega * 2000.0;
        let panels = 4000;
        let h = (xmax - x0) / panels as f64;
        for k in 0..panels {
            let (a, b) = (x0 + k as f64 * h, x0 + (k + 1) as f64 * h);
            let (hh, c) = (0.5 * (b - a), 0.5 * (b + a));
            for (y, w) in rule.nodes().iter().zip(rule.weights()) {
                let x = c + hh * y;
                acc += Cx::from_polar(x.powf(-p), omega * x) * (w * hh);
            }
        }
        // ∫_{xmax}^∞ ≈ i e^{iω xmax} xmax^{−p}/ω
        acc += Cx::new(0.0, 1.0) * Cx::from_polar(xmax.powf(-p), omega * xmax) / omega;
        assert!((acc - g).norm() < 1e-10, "{acc} vs {g}");
    }

    #[test]
    fn squared_bessel_over_x() {
        let a = 1.7;
        let v = integrate_bessel_product(1.0, a, a, 1.0).unwrap();
        assert!((v - 1.0 / (2.0 * a)).abs() < 1e-10, "{v}");
    }

    #[test]
    fn integer_gap_vanishes() {
        let v = integrate_bessel_product(1.0, 1.2, 3.2, 1.0).unwrap();
        assert!(v.abs() < 1e-8, "{v}");
    }

    #[test]
    fn matches_closed_form_across_regimes() {
        let cases = [
            (0.5, 0.0, 0.0, 0.4),
            (0.0, 1.0, 0.0, 0.7),
            (-0.4, 2.5, 1.3, 0.3),
            (1.2, 0.8, 1.1, 2.6),
            (0.3, 3.0, 0.5, 1.7),
            (0.7, 2.2, 0.2, 1.0),
            (2.0, 5.5, 4.0, 1.0),
            (-0.6, 9.0, 7.5, 0.6),
        ];
        for &(lam, mu, nu, t) in &cases {
            let got = integrate_bessel_product(lam, mu, nu, t).unwrap();
            let want = weber_schafheitlin(lam, mu, nu, t).unwrap();
            assert!(
                (got - want).abs() < 1e-10 * want.abs().max(1.0),
                "({lam},{mu},{nu},{t}): {got} vs {want}"
            );
        }
    }

    #[test]
    fn window_violations_are_errors() {
        assert!(integrate_bessel_product(-1.5, 0.3, 0.3, 0.5).is_err());
        assert!(integrate_bessel_product(-0.5, 0.3, 0.3, 1.0).is_err());
    }
}
