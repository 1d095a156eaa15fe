//! The q-Dunkl transform F_{α,q}, the q-Hankel transform H_{α,q}, the
//! q-Weber–Schafheitlin integral and the q-plane-wave expansion.

use super::basic::{phi21, JacksonDomain, QContext};
use super::poly::QJacobiFamily;
use crate::error::{Error, Result};
use crate::{Cx, Params};

/// Coefficient convention for the q-plane-wave partial sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QPlaneWaveRoute {
    /// i^n (1 − q^{2α+2β+2n+2}) 𝓙_{α+β,n}(x) C_n(t), as displayed.
    Displayed,
    /// The displayed terms times q^{−[n/2]β}, the factor implied by the transform of 𝓙_{α+β,n}.
    Transform,
}

impl QContext {
    /// (q^{2α+2}; q²)_∞/(q²; q²)_∞, the normalizing constant of dμ_{q,α}.
    pub(crate) fn measure_constant(&self, alpha: f64) -> f64 {
        self.inf2(2.0 * alpha + 2.0) / self.inf_int(1)
    }

    /// ∫ f dμ_{q,α} over ℝ.
    pub fn q_measure_integral<F: Fn(f64) -> Cx>(&self, alpha: f64, f: F) -> Result<Cx> {
        let c = self.measure_constant(alpha) / (2.0 * (1.0 - self.q()));
        let v = self.jackson_integral_cx(
            |x| f(x) * x.abs().powf(2.0 * alpha + 1.0),
            JacksonDomain::Real,
        )?;
        Ok(v * c)
    }

    /// F_{α,q} f(y) = ∫ f(x) E_α(−iyx; q²) dμ_{q,α}(x).
    pub fn q_transform<F: Fn(f64) -> Cx>(&self, alpha: f64, f: F, y: f64) -> Result<Cx> {
        self.q_measure_integral(alpha, |x| f(x) * self.q_dunkl_kernel(alpha, -y * x))
    }

    /// H_{α,q} f(x) = ∫_0^∞ J_α(xy; q²)/(xy)^α f(y) y^{2α+1} d_q y/(1 − q).
    pub fn q_hankel<F: Fn(f64) -> f64>(&self, alpha: f64, f: F, x: f64) -> Result<f64> {
        let v = self.jackson_integral(
            |y| self.qbessel_ratio(alpha, x * y) * f(y) * y.powf(2.0 * alpha + 1.0),
            JacksonDomain::ZeroToInf,
        )?;
        Ok(v / (1.0 - self.q()))
    }

    /// Both sides of ∫_0^∞ x^{−λ} J_μ(q^m x; q²) J_ν(q^n x; q²) d_q x = closed form.
    pub fn qweber(&self, lam: f64, mu: f64, nu: f64, m: i64, n: i64) -> Result<(f64, f64)> {
        if !(lam > -1.0 && lam < mu + nu + 1.0) {
            return Err(Error::Domain(format!(
                "lambda = {lam} must lie in (-1, {})",
                mu + nu + 1.0
            )));
        }
        let q = self.q();
        let (qm, qn) = (q.powi(m as i32), q.powi(n as i32));
        let lhs = self.jackson_integral(
            |x| {
                let (a, b) = (qm * x, qn * x);
                x.powf(-lam)
                    * self.qbessel_ratio(mu, a)
                    * a.powf(mu)
                    * self.qbessel_ratio(nu, b)
                    * b.powf(nu)
            },
            JacksonDomain::ZeroToInf,
        )?;
        let rhs = self.qweber_closed(lam, mu, nu, m, n)?;
        Ok((lhs, rhs))
    }

    fn qweber_closed(&self, lam: f64, mu: f64, nu: f64, m: i64, n: i64) -> Result<f64> {
        let q = self.q();
        let (mf, nf) = (m as f64, n as f64);
        let pre = (1.0 - q)
            * q.powf(nf * (lam - 1.0) + (mf - nf) * mu)
            * self.inf2(1.0 + lam + nu - mu)
            * self.inf2(2.0 * mu + 2.0)
            / (self.inf2(1.0 - lam + nu + mu) * self.inf_int(1));
        if pre == 0.0 {
            return Ok(0.0);
        }
        let r = |v: f64| Cx::new(v, 0.0);
        let s = phi21(
            r(q.powf(1.0 - lam + mu + nu)),
            r(q.powf(1.0 - lam + mu - nu)),
            r(q.powf(2.0 * mu + 2.0)),
            q * q,
            r(q.powf(2.0 * mf - 2.0 * nf + 1.0 + lam + nu - mu)),
        )?;
        Ok(pre * s.re)
    }

    /// I_−(α,β,n)(t, q) at t = q^{m} as a Jackson sum and in closed form.
    pub fn q_i_minus(&self, alpha: f64, beta: f64, n: usize, m: i64) -> Result<(f64, f64)> {
        let lhs = self.i_pm_sum(alpha, -beta, beta, n, m)?;
        let t = self.q().powi(m as i32);
        let closed = if t > 1.0 {
            0.0
        } else {
            let nf = n as f64;
            let q = self.q();
            let fam = QJacobiFamily::new(self.clone(), Params::new(alpha, beta)?);
            q.powf(nf * beta) * self.inf2(2.0 + 2.0 * beta + 2.0 * nf) / self.inf_int(1 + n as i64)
                * fam.weight(t)
                * fam.normalized(n, t * t)
        };
        Ok((lhs, closed))
    }

    /// I_+(α,β,n)(t, q) at t = q^{m}, m ≥ 1, as a Jackson sum and in closed
    /// form with the factor (q^{2α+2n+2}; q²)_∞.
    pub fn q_i_plus(&self, alpha: f64, beta: f64, n: usize, m: i64) -> Result<(f64, f64)> {
        if !(beta < 1.0) {
            return Err(Error::Domain(format!("beta = {beta} must be below 1")));
        }
        if m < 1 {
            return Err(Error::Domain(format!("t = q^{m} must lie in (0, 1)")));
        }
        let lhs = self.i_pm_sum(alpha, beta, beta, n, m)?;
        let t = self.q().powi(m as i32);
        let nf = n as f64;
        let fam = QJacobiFamily::new(self.clone(), Params::new(alpha, beta)?);
        let closed = self.q().powf(-nf * beta) * self.inf2(2.0 * alpha + 2.0 * nf + 2.0)
            / self.inf2(2.0 + 2.0 * nf + 2.0 * alpha + 2.0 * beta)
            * fam.normalized(n, t * t);
        Ok((lhs, closed))
    }

    /// t^{−α}/(1 − q) ∫_0^∞ x^{e} J_α(xt) J_{α+β+2n+1}(q^n x) d_q x.
    fn i_pm_sum(&self, alpha: f64, e: f64, beta: f64, n: usize, m: i64) -> Result<f64> {
        let q = self.q();
        let t = q.powi(m as i32);
        let nu = alpha + beta + 2.0 * n as f64 + 1.0;
        let qn = q.powi(n as i32);
        let v = self.jackson_integral(
            |x| {
                let b = qn * x;
                x.powf(e + alpha)
                    * self.qbessel_ratio(alpha, x * t)
                    * self.qbessel_ratio(nu, b)
                    * b.powf(nu)
            },
            JacksonDomain::ZeroToInf,
        )?;
        Ok(v / (1.0 - q))
    }

    /// Partial sum over n < `terms` of the q-plane-wave expansion of E_α(ixt; q²).
    pub fn q_planewave_partial_sum(
        &self,
        params: Params,
        x: f64,
        t: f64,
        terms: usize,
        route: QPlaneWaveRoute,
    ) -> Cx {
        let s = params.sum();
        let q = self.q();
        let fam = QJacobiFamily::new(self.clone(), params);
        let pre = self.inf_int(1) / self.inf2(2.0 + 2.0 * s);
        let mut ipow = Cx::new(1.0, 0.0);
        let mut sum = Cx::new(0.0, 0.0);
        for n in 0..terms {
            let mut c = (1.0 - q.powf(2.0 * s + 2.0 * n as f64 + 2.0))
                * self.q_neumann(s, n, x)
                * fam.gegenbauer(n, t);
            if route == QPlaneWaveRoute::Transform {
                c *= q.powf(-((n / 2) as f64) * params.beta());
            }
            sum += ipow * c;
            ipow *= Cx::new(0.0, 1.0);
        }
        sum * pre
    }

    /// F_{α,q}(𝓙_{α+β,k})(t) by a Jackson sum and the closed form with q^{[k/2]β}.
    pub fn q_transform_neumann(&self, params: Params, k: usize, t: f64) -> Result<(Cx, Cx)> {
        let (a, s) = (params.alpha(), params.sum());
        let lhs = self.q_transform(a, |x| Cx::new(self.q_neumann(s, k, x), 0.0), t)?;
        let closed = if t.abs() > 1.0 {
            Cx::new(0.0, 0.0)
        } else {
            let q = self.q();
            let fam = QJacobiFamily::new(self.clone(), params);
            let qk = fam.weight(t) * fam.gegenbauer(k, t) / fam.norm(k);
            let f = q.powf(((k / 2) as f64) * params.beta())
                / (1.0 - q.powf(2.0 * k as f64 + 2.0 * s + 2.0))
                * self.inf2(2.0 * s + 2.0)
                / self.inf_int(1);
            Cx::new(0.0, -1.0).powu(k as u32) * (f * qk)
        };
        Ok((lhs, closed))
    }
}
