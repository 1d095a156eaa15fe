//! The third Jackson q-Bessel function J_ν(x; q²), the q-Dunkl kernel and q-Neumann functions.

use super::basic::{QContext, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::Cx;

const TERM_CAP: usize = 10_000;

impl QContext {
    /// J_ν(x; q²)/x^ν, even in x.
    ///
    /// On grid points x = ±q^k the sum is rearranged so that no cancellation
    /// occurs for large |x|; elsewhere the defining power series is used.
    pub fn qbessel_ratio(&self, nu: f64, x: f64) -> f64 {
        if x == 0.0 {
            return self.inf2(2.0 * nu + 2.0) / self.fin_inf();
        }
        match self.grid_index(x) {
            Some(k) => self.ratio_grid(nu, k),
            None => self.ratio_series(nu, x.abs()),
        }
    }

    /// J_ν(x; q²) for x ≥ 0.
    pub fn qbessel3(&self, nu: f64, x: f64) -> Result<f64> {
        if !(x >= 0.0) {
            return Err(Error::Domain(format!(
                "q-Bessel argument {x} must be nonnegative"
            )));
        }
        if x == 0.0 {
            return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
        }
        Ok(self.qbessel_ratio(nu, x) * x.powf(nu))
    }

    fn fin_inf(&self) -> f64 {
        self.inf_int(1)
    }

    fn ratio_series(&self, nu: f64, x: f64) -> f64 {
        let q = self.q();
        let q2 = q * q;
        let x2 = x * x;
        let mut a = q.powf(2.0 * nu + 2.0);
        let mut qn = q2;
        let mut term = 1.0;
        let mut sum = 1.0;
        for n in 1..TERM_CAP {
            term *= -q.powi(2 * n as i32) * x2 / ((1.0 - a) * (1.0 - qn));
            a *= q2;
            qn *= q2;
            sum += term;
            if term.abs() <= DEFAULT_TOL * sum.abs() && n > 2 {
                break;
            }
        }
        sum * self.inf2(2.0 * nu + 2.0) / self.fin_inf()
    }

    /// Σ_{n ≥ max(−k,0)} (−1)^n q^{n(n−1)} z^n (q^{2+2k+2n}; q²)_∞/(q²; q²)_n with z = q^{2ν+2}.
    fn ratio_grid(&self, nu: f64, k: i64) -> f64 {
        let lq = self.q().ln();
        let lz = (2.0 * nu + 2.0) * lq;
        let start = (-k).max(0);
        let mut sum = 0.0;
        for n in start..start + TERM_CAP as i64 {
            let nf = n as f64;
            let mag = (nf * (nf - 1.0) * lq + nf * lz).exp();
            let term = mag * self.inf_int(1 + k + n) / self.fin(n as usize);
            let term = if n % 2 == 0 { term } else { -term };
            sum += term;
            if n > start + 1 && (mag <= DEFAULT_TOL * sum.abs() || mag == 0.0) {
                break;
            }
        }
        sum / self.fin_inf()
    }

    /// E_α(ix; q²) = ((q²;q²)_∞/(q^{2α+2};q²)_∞)(J_α/x^α + i x J_{α+1}/x^{α+1}).
    pub fn q_dunkl_kernel(&self, alpha: f64, x: f64) -> Cx {
        let c = self.fin_inf() / self.inf2(2.0 * alpha + 2.0);
        Cx::new(
            c * self.qbessel_ratio(alpha, x),
            c * x * self.qbessel_ratio(alpha + 1.0, x),
        )
    }

    /// 𝓙_{a,n}(x; q²) = J_{a+n+1}(x q^{[n/2]}; q²)/x^{a+1}.
    pub fn q_neumann(&self, a: f64, n: usize, x: f64) -> f64 {
        let m = (n / 2) as i32;
        let nu = a + n as f64 + 1.0;
        let qm = self.q().powi(m);
        self.qbessel_ratio(nu, x * qm) * qm.powf(nu) * x.powi(n as i32)
    }
}
