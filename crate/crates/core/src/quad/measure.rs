//! The measures dμ_α and dμ_{β,α} on [−1, 1] and integration against them.

use super::rules::gauss_jacobi;
use crate::error::{Error, Result};
use crate::specfun::gamma;
use crate::Cx;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeasureKind {
    /// |t|^{2α+1} / (2^{α+1} Γ(α+1)) dt
    MuAlpha,
    /// (1−t²)^β dμ_α(t)
    MuBetaAlpha,
}

/// A weighted measure on [−1, 1]. The density is symmetric in t.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Measure {
    kind: MeasureKind,
    alpha: f64,
    beta: f64,
    scale: f64,
}

impl Measure {
    pub fn mu_alpha(alpha: f64) -> Result<Self> {
        if !(alpha > -1.0) {
            return Err(Error::Domain(format!("alpha = {alpha} must exceed -1")));
        }
        Ok(Self {
            kind: MeasureKind::MuAlpha,
            alpha,
            beta: 0.0,
            scale: 1.0,
        })
    }

    /// dμ_{β,α}. Only α, β > −1 is needed for the measure to be finite.
    pub fn mu_beta_alpha(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > -1.0 && beta > -1.0) {
            return Err(Error::Domain(format!(
                "({alpha}, {beta}) must both exceed -1"
            )));
        }
        Ok(Self {
            kind: MeasureKind::MuBetaAlpha,
            alpha,
            beta,
            scale: 1.0,
        })
    }

    /// Lebesgue measure dt on [−1, 1], written as √(2π) dμ_{−1/2}.
    pub fn lebesgue() -> Self {
        Self {
            kind: MeasureKind::MuAlpha,
            alpha: -0.5,
            beta: 0.0,
            scale: (2.0 * PI).sqrt(),
        }
    }

    /// (1−t²)^γ (Lebesgue measure) on [−1, 1].
    pub fn lebesgue_jacobi(gamma_exp: f64) -> Result<Self> {
        let mut m = Self::mu_beta_alpha(-0.5, gamma_exp)?;
        m.scale = (2.0 * PI).sqrt();
        Ok(m)
    }

    /// The same measure multiplied by (1−t²)^extra.
    pub fn with_extra_beta(&self, extra: f64) -> Result<Self> {
        let mut m = Self::mu_beta_alpha(self.alpha, self.beta + extra)?;
        m.scale = self.scale;
        Ok(m)
    }

    pub fn kind(&self) -> MeasureKind {
        self.kind
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    fn normalizer(&self) -> f64 {
        self.scale / (2f64.powf(self.alpha + 1.0) * gamma(self.alpha + 1.0).unwrap_or(f64::NAN))
    }

    /// Density with respect to dt.
    pub fn density(&self, t: f64) -> f64 {
        if t.abs() > 1.0 {
            return 0.0;
        }
        self.normalizer() * t.abs().powf(2.0 * self.alpha + 1.0) * (1.0 - t * t).powf(self.beta)
    }

    /// Total mass Γ(α+1)Γ(β+1)/Γ(α+β+2) times the normalizer.
    pub fn total_mass(&self) -> f64 {
        let (a, b) = (self.alpha, self.beta);
        let beta_fn = gamma(a + 1.0).unwrap_or(f64::NAN) * gamma(b + 1.0).unwrap_or(f64::NAN)
            / gamma(a + b + 2.0).unwrap_or(f64::NAN);
        self.normalizer() * beta_fn
    }
}

/// Default rule order for interval integrals.
pub const DEFAULT_ORDER: usize = 120;

/// ∫_{−1}^{1} f dμ.
///
/// The odd part of f integrates to zero against the symmetric density, so
/// only the even part is sampled. With u = t² it becomes
/// ∫_0^1 f_e(√u) u^α (1−u)^β du / (2^{α+1}Γ(α+1)), integrated by Gauss–Jacobi.
pub fn integrate_interval<F: Fn(f64) -> f64>(f: F, measure: &Measure, order: usize) -> Result<f64> {
    if order < 8 {
        return Err(Error::Domain(format!(
            "rule order {order} is below the minimum of 8"
        )));
    }
    let (a, b) = (measure.alpha, measure.beta);
    let rule = gauss_jacobi(order, b, a)?;
    let mut sum = 0.0;
    for (y, w) in rule.nodes().iter().zip(rule.weights()) {
        let t = (0.5 * (1.0 + y)).sqrt();
        let (fp, fm) = (f(t), f(-t));
        if !fp.is_finite() || !fm.is_finite() {
            return Err(Error::NonFinite {
                context: "integrate_interval",
                node: t,
                value: if fp.is_finite() { fm } else { fp },
            });
        }
        sum += w * 0.5 * (fp + fm);
    }
    Ok(sum * 2f64.powf(-a - b - 1.0) * measure.normalizer())
}

/// Complex-valued variant of [`integrate_interval`].
pub fn integrate_interval_cx<F: Fn(f64) -> Cx>(
    f: F,
    measure: &Measure,
    order: usize,
) -> Result<Cx> {
    if order < 8 {
        return Err(Error::Domain(format!(
            "rule order {order} is below the minimum of 8"
        )));
    }
    let (a, b) = (measure.alpha, measure.beta);
    let rule = gauss_jacobi(order, b, a)?;
    let mut sum = Cx::new(0.0, 0.0);
    for (y, w) in rule.nodes().iter().zip(rule.weights()) {
        let t = (0.5 * (1.0 + y)).sqrt();
        let v = f(t) + f(-t);
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(Error::NonFinite {
                context: "integrate_interval_cx",
                node: t,
                value: f64::NAN,
            });
        }
        sum += v * (0.5 * w);
    }
    Ok(sum * (2f64.powf(-a - b - 1.0) * measure.normalizer()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_has_total_mass() {
        let a = 0.4;
        let m = Measure::mu_alpha(a).unwrap();
        let expect = 1.0 / (2f64.powf(a + 1.0) * gamma(a + 2.0).unwrap());
        let got = integrate_interval(|_| 1.0, &m, 20).unwrap();
        assert!((got - expect).abs() < 1e-14 * expect, "{got} {expect}");
        assert!((m.total_mass() - expect).abs() < 1e-14 * expect);
    }

    #[test]
    fn odd_functions_vanish() {
        let m = Measure::mu_beta_alpha(0.3, 0.2).unwrap();
        assert_eq!(integrate_interval(|t| t.powi(3), &m, 20).unwrap(), 0.0);
    }

    #[test]
    fn lebesgue_mass() {
        let m = Measure::lebesgue();
        assert!((integrate_interval(|_| 1.0, &m, 10).unwrap() - 2.0).abs() < 1e-14);
        assert!((integrate_interval(|t| t * t, &m, 10).unwrap() - 2.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_low_order_and_nan() {
        let m = Measure::mu_alpha(0.0).unwrap();
        assert!(integrate_interval(|_| 1.0, &m, 4).is_err());
        assert!(matches!(
            integrate_interval(|_| f64::NAN, &m, 10),
            Err(Error::NonFinite { .. })
        ));
    }
}
