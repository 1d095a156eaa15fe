//! Little q-Jacobi polynomials and the generalized little q-Gegenbauer family.

use super::basic::{phi21, QContext};
use crate::{Cx, Params};

/// p_n(x; q^{2α}, q^{2β}; q²), its normalized form p_n^{(α,β)}(x; q²) and
/// C_n^{(β+1/2,α+1/2)}(t; q²) with norms h_{n,q}^{(β,α)}.
#[derive(Debug, Clone)]
pub struct QJacobiFamily {
    ctx: QContext,
    params: Params,
}

impl QJacobiFamily {
    pub fn new(ctx: QContext, params: Params) -> Self {
        Self { ctx, params }
    }

    pub fn ctx(&self) -> &QContext {
        &self.ctx
    }

    pub fn params(&self) -> Params {
        self.params
    }

    /// p_n(x; q^{2a}, q^{2b}; q²) = ₂φ₁(q^{−2n}, q^{2n+2a+2b+2}; q^{2a+2}; q²; q²x).
    pub fn little_qjacobi_ab(&self, a: f64, b: f64, n: usize, x: f64) -> f64 {
        let q = self.ctx.q();
        let q2 = q * q;
        let nf = n as f64;
        let r = |v: f64| Cx::new(v, 0.0);
        phi21(
            r(q2.powi(-(n as i32))),
            r(q.powf(2.0 * nf + 2.0 * a + 2.0 * b + 2.0)),
            r(q.powf(2.0 * a + 2.0)),
            q2,
            r(q2 * x),
        )
        .map(|z| z.re)
        .unwrap_or(f64::NAN)
    }

    pub fn little_qjacobi(&self, n: usize, x: f64) -> f64 {
        self.little_qjacobi_ab(self.params.alpha(), self.params.beta(), n, x)
    }

    /// q^{−n(a+1)}(q^{2a+2}; q²)_n/(q²; q²)_n · p_n.
    pub fn normalized_ab(&self, a: f64, b: f64, n: usize, x: f64) -> f64 {
        let q = self.ctx.q();
        let pre =
            q.powf(-(n as f64) * (a + 1.0)) * self.ctx.fin2(2.0 * a + 2.0, n) / self.ctx.fin(n);
        pre * self.little_qjacobi_ab(a, b, n, x)
    }

    pub fn normalized(&self, n: usize, x: f64) -> f64 {
        self.normalized_ab(self.params.alpha(), self.params.beta(), n, x)
    }

    /// C_n^{(β+1/2,α+1/2)}(t; q²).
    pub fn gegenbauer(&self, n: usize, t: f64) -> f64 {
        let (a, b) = (self.params.alpha(), self.params.beta());
        let m = n / 2;
        let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
        let s2 = 2.0 * (a + b) + 2.0;
        if n.is_multiple_of(2) {
            let c = self.ctx.fin2(s2, m) / self.ctx.fin2(2.0 * a + 2.0, m);
            sign * c * self.normalized_ab(a, b, m, t * t)
        } else {
            let c = self.ctx.fin2(s2, m + 1) / self.ctx.fin2(2.0 * a + 2.0, m + 1);
            sign * c * t * self.normalized_ab(a + 1.0, b, m, t * t)
        }
    }

    /// (q²t²; q²)_∞/(q^{2β+2}t²; q²)_∞.
    pub fn weight(&self, t: f64) -> f64 {
        let q2 = self.ctx.q() * self.ctx.q();
        let t2 = t * t;
        let b = self.params.beta();
        super::basic::qpoch_real(q2 * t2, q2, None)
            / super::basic::qpoch_real(self.ctx.q().powf(2.0 * b + 2.0) * t2, q2, None)
    }

    /// h_{n,q}^{(β,α)} in closed form.
    pub fn norm(&self, n: usize) -> f64 {
        let ctx = &self.ctx;
        let (a, b) = (self.params.alpha(), self.params.beta());
        let s2 = 2.0 * (a + b) + 2.0;
        let m = n / 2;
        let mf = m as f64;
        let q = ctx.q();
        if n.is_multiple_of(2) {
            ctx.fin2(s2, m) / ctx.fin2(2.0 * a + 2.0, m) * ctx.inf_int(1 + m as i64) * ctx.inf2(s2)
                / (ctx.inf_int(1) * ctx.inf2(2.0 * b + 2.0 + 2.0 * mf))
                / (1.0 - q.powf(4.0 * mf + s2))
        } else {
            ctx.fin2(s2, m + 1) / ctx.fin2(2.0 * a + 2.0, m + 1)
                * ctx.inf_int(1 + m as i64)
                * ctx.inf2(s2)
                / (ctx.inf_int(1) * ctx.inf2(2.0 * b + 2.0 + 2.0 * mf))
                / (1.0 - q.powf(4.0 * mf + s2 + 2.0))
        }
    }

    /// h_{n,q}^{(β,α)} as a Jackson sum against the weighted measure.
    pub fn norm_jackson(&self, n: usize) -> f64 {
        self.inner_jackson(n, n)
    }

    /// ∫_{−1}^{1} C_n C_m w dμ_{q,α} as a Jackson sum over t = ±q^k, k ≥ 0.
    pub fn inner_jackson(&self, n: usize, m: usize) -> f64 {
        let ctx = &self.ctx;
        let a = self.params.alpha();
        let c = ctx.inf2(2.0 * a + 2.0) / ctx.inf_int(1);
        let q = ctx.q();
        let mut sum = 0.0;
        for k in 0..=(ctx.k_max() - ctx.k_min()) {
            let t = q.powi(k as i32);
            let w = self.weight(t) * t.powf(2.0 * a + 2.0);
            let plus = self.gegenbauer(n, t) * self.gegenbauer(m, t);
            let minus = self.gegenbauer(n, -t) * self.gegenbauer(m, -t);
            sum += 0.5 * w * (plus + minus);
        }
        c * sum
    }
}
