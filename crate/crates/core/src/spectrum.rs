//! The right inverse T of the Dunkl operator on [−1, 1], its coefficient
//! recurrences and its point spectrum ±i/j_{α+β+1,k}.
//!
//! Functions are carried as coefficient vectors in the C_n^{(β+1/2,α+1/2)}
//! basis, n = 1..N. Residuals are measured in L²(dμ_{β+1,α}) after moving
//! to the C^{(β+3/2,α+1/2)} basis, where the norms are diagonal.

use crate::error::{Error, Result};
use crate::orthopoly::{lowering_factor, GenGegenbauerFamily};
use crate::quad::{integrate_interval_cx, Measure, DEFAULT_ORDER};
use crate::specfun::{bessel_j_orders, bessel_zeros, dunkl_kernel_at, gamma, ZeroTable};
use crate::{Cx, Params};

/// Which member of a conjugate eigenvalue pair: λ = +i/j or λ = −i/j.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn both() -> [Sign; 2] {
        [Sign::Plus, Sign::Minus]
    }
}

/// Coefficients a_1..a_N of Σ a_n C_n^{(β+1/2,α+1/2)}; `a[0]` holds a_1.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffVector {
    pub a: Vec<Cx>,
}

impl CoeffVector {
    pub fn new(a: Vec<Cx>) -> Result<Self> {
        if let Some(pos) = a
            .iter()
            .position(|z| !(z.re.is_finite() && z.im.is_finite()))
        {
            return Err(Error::NonFinite {
                context: "coefficient vector",
                node: (pos + 1) as f64,
                value: f64::NAN,
            });
        }
        Ok(Self { a })
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// a_n for n ≥ 1; zero outside the window.
    pub fn get(&self, n: usize) -> Cx {
        if n == 0 || n > self.a.len() {
            Cx::new(0.0, 0.0)
        } else {
            self.a[n - 1]
        }
    }

    /// Σ a_n C_n(t).
    pub fn eval(&self, params: Params, t: f64) -> Cx {
        let fam = GenGegenbauerFamily::new(params);
        self.a
            .iter()
            .enumerate()
            .map(|(i, c)| c * fam.eval(i + 1, t))
            .sum()
    }
}

/// Output of [`SpectralProblem::apply_t`].
#[derive(Debug, Clone, PartialEq)]
pub struct Applied {
    pub coeffs: CoeffVector,
    /// Magnitude of the coefficient pushed past the window.
    pub dropped: f64,
}

/// Series and closed-form values of one eigenfunction at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenValuePair {
    pub series: Cx,
    pub closed: Cx,
    pub residual: f64,
    pub tail_estimate: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralProblem {
    params: Params,
    n: usize,
    zeros: ZeroTable,
}

impl SpectralProblem {
    pub fn new(params: Params, n: usize, k_max: usize) -> Result<Self> {
        if n < 10 {
            return Err(Error::Domain(format!(
                "basis truncation N = {n} must be at least 10"
            )));
        }
        let zeros = bessel_zeros(params.sum() + 1.0, k_max)?;
        Ok(Self { params, n, zeros })
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn truncation(&self) -> usize {
        self.n
    }

    pub fn zeros(&self) -> &ZeroTable {
        &self.zeros
    }

    fn s(&self) -> f64 {
        self.params.sum()
    }

    /// Coefficients d_0..d_N of g in the C^{(β+3/2)} basis.
    fn to_shifted(&self, g: &[Cx]) -> Vec<Cx> {
        let at = |n: usize| {
            if n == 0 || n > g.len() {
                Cx::new(0.0, 0.0)
            } else {
                g[n - 1]
            }
        };
        (0..=g.len())
            .map(|m| {
                at(m) * lowering_factor(self.params, m)
                    - at(m + 2) * lowering_factor(self.params, m + 2)
            })
            .collect()
    }

    /// T applied to g given in the shifted (β+1) basis, `d[m]` for m ≥ 0.
    /// Returns the C^{(β+1/2)} coefficients n = 1..=d.len().
    pub fn apply_t_shifted(&self, d: &[Cx]) -> Vec<Cx> {
        let f = 1.0 / (2.0 * (self.s() + 1.0));
        d.iter().map(|c| c * f).collect()
    }

    /// T g for g in the C^{(β+1/2)} basis, truncated to the window N.
    pub fn apply_t(&self, g: &CoeffVector) -> Applied {
        let d = self.to_shifted(&g.a);
        let mut out = self.apply_t_shifted(&d);
        let mut dropped = 0.0f64;
        while out.len() > self.n {
            dropped = dropped.max(out.pop().map_or(0.0, |z| z.norm()));
        }
        Applied {
            coeffs: CoeffVector { a: out },
            dropped,
        }
    }

    /// Forward recurrence for the eigen-coefficients of λ.
    pub fn recurrence_coeffs(&self, lam: Cx, a1: Cx, n: usize) -> Result<CoeffVector> {
        if lam.norm() == 0.0 {
            return Err(Error::Domain("lambda must be nonzero".into()));
        }
        Ok(CoeffVector {
            a: forward_recurrence(self.s(), lam, a1, n),
        })
    }

    /// ±i/j_{α+β+1,k} for k = 1..=k_max, ordered (+, −) per k.
    pub fn eigenvalues(&self, k_max: usize) -> Result<Vec<Cx>> {
        if k_max == 0 {
            return Err(Error::Domain("k_max must be at least 1".into()));
        }
        let mut out = Vec::with_capacity(2 * k_max);
        for k in 1..=k_max {
            let j = self.zeros.get(k)?;
            out.push(Cx::new(0.0, 1.0 / j));
            out.push(Cx::new(0.0, -1.0 / j));
        }
        Ok(out)
    }

    pub fn eigenvalue(&self, k: usize, sign: Sign) -> Result<Cx> {
        Ok(Cx::new(0.0, sign.value() / self.zeros.get(k)?))
    }

    /// Eigen-coefficients with a_1 = 1, from Bessel values at the zero:
    /// a_n = (∓i)^{n−1}((α+β+n+1)/(α+β+2))·(−J_{α+β+n+1}(j)/J_{α+β}(j)).
    pub fn eigen_coeffs(&self, k: usize, sign: Sign, n: usize) -> Result<CoeffVector> {
        let s = self.s();
        let j = self.zeros.get(k)?;
        let js = bessel_j_orders(s, n + 2, j)?;
        let unit = Cx::new(0.0, -sign.value());
        let mut pow = Cx::new(1.0, 0.0);
        let mut a = Vec::with_capacity(n);
        for m in 1..=n {
            let h = -js[m + 1] / js[0];
            a.push(pow * ((s + m as f64 + 1.0) / (s + 2.0) * h));
            pow *= unit;
        }
        Ok(CoeffVector { a })
    }

    /// Pairs (J_{α+β+n+1}(j), −h_{n−1,α+β+2}(1/j)·J_{α+β}(j)) for n = 1..=n_max.
    pub fn lommel_zero_sides(&self, k: usize, n_max: usize) -> Result<Vec<(f64, f64)>> {
        let s = self.s();
        let j = self.zeros.get(k)?;
        let js = bessel_j_orders(s, n_max + 2, j)?;
        let w = 1.0 / j;
        let (mut prev, mut cur) = (0.0, 1.0);
        let mut out = Vec::with_capacity(n_max);
        for n in 1..=n_max {
            if n > 1 {
                let m = (n - 2) as f64;
                let next = 2.0 * (m + s + 2.0) * w * cur - prev;
                prev = cur;
                cur = next;
            }
            out.push((js[n + 1], -cur * js[0]));
        }
        Ok(out)
    }

    /// |J_{α+β+n+1}(j) + h_{n−1,α+β+2}(1/j)·J_{α+β}(j)| relative to max_m |J_{α+β+m}(j)|.
    pub fn lommel_zero_residuals(&self, k: usize, n_max: usize) -> Result<Vec<f64>> {
        let j = self.zeros.get(k)?;
        let js = bessel_j_orders(self.s(), n_max + 2, j)?;
        let scale = js.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        Ok(self
            .lommel_zero_sides(k, n_max)?
            .into_iter()
            .map(|(a, b)| (a - b).abs() / scale)
            .collect())
    }

    /// Eigenfunction at t from the truncated series and from the closed form
    /// ∓i (j/2)^{α+β+1} E_α(∓itj) / (Γ(α+β+1)(α+β+2)J_{α+β}(j)).
    pub fn eigenfunction(&self, k: usize, sign: Sign, t: f64, n: usize) -> Result<EigenValuePair> {
        if !(t.abs() <= 1.0) {
            return Err(Error::Domain(format!("t = {t} must lie in [-1, 1]")));
        }
        let coeffs = self.eigen_coeffs(k, sign, n + 1)?;
        let series = CoeffVector {
            a: coeffs.a[..n].to_vec(),
        }
        .eval(self.params, t);
        let fam = GenGegenbauerFamily::new(self.params);
        let tail_estimate = coeffs.a[n].norm() * fam.eval(n + 1, t).abs().max(1.0);
        let closed = self.eigenfunction_closed(k, sign, t)?;
        Ok(EigenValuePair {
            series,
            closed,
            residual: (series - closed).norm(),
            tail_estimate,
        })
    }

    pub fn eigenfunction_closed(&self, k: usize, sign: Sign, t: f64) -> Result<Cx> {
        let s = self.s();
        let j = self.zeros.get(k)?;
        let js = bessel_j_orders(s, 1, j)?;
        let sg = sign.value();
        let e = dunkl_kernel_at(self.params.alpha(), Cx::new(0.0, -sg * t * j))?;
        let pre = (0.5 * j).powf(s + 1.0) / (gamma(s + 1.0)? * (s + 2.0) * js[0]);
        Ok(Cx::new(0.0, -sg) * e * pre)
    }

    /// ‖T g − λ g‖ / ‖g‖ in L²(dμ_{β+1,α}) for given coefficients.
    pub fn residual_of(&self, lam: Cx, g: &CoeffVector) -> f64 {
        let d = self.to_shifted(&g.a);
        let tg = self.apply_t_shifted(&d);
        let r: Vec<Cx> = (1..=tg.len()).map(|n| tg[n - 1] - lam * g.get(n)).collect();
        let e = self.to_shifted(&r);
        self.shifted_norm(&e) / self.shifted_norm(&d)
    }

    /// Residual of the k-th eigenpair with the first N coefficients.
    pub fn eigen_residual(&self, k: usize, sign: Sign, n: usize) -> Result<f64> {
        let g = self.eigen_coeffs(k, sign, n)?;
        Ok(self.residual_of(self.eigenvalue(k, sign)?, &g))
    }

    /// The same pipeline on λ′ = factor·λ with forward-recurrence coefficients.
    pub fn perturbed_residual(&self, k: usize, sign: Sign, factor: f64, n: usize) -> Result<f64> {
        let lam = self.eigenvalue(k, sign)? * factor;
        let g = self.recurrence_coeffs(lam, Cx::new(1.0, 0.0), n)?;
        Ok(self.residual_of(lam, &g))
    }

    /// Σ_{n≤N} |a_n|² n^{2β−1}.
    pub fn condition_sum(&self, g: &CoeffVector) -> f64 {
        let e = 2.0 * self.params.beta() - 1.0;
        g.a.iter()
            .enumerate()
            .map(|(i, c)| c.norm_sqr() * ((i + 1) as f64).powf(e))
            .sum()
    }

    fn shifted_norm(&self, d: &[Cx]) -> f64 {
        let fam = GenGegenbauerFamily::new(self.params).shifted();
        d.iter()
            .enumerate()
            .map(|(m, c)| c.norm_sqr() * fam.norm(m))
            .sum::<f64>()
            .sqrt()
    }

    /// ‖Σ d_m C_m^{(β+3/2)}‖ in L²(dμ_{β+1,α}).
    pub fn norm_shifted_basis(&self, d: &[Cx]) -> f64 {
        self.shifted_norm(d)
    }

    /// ‖Σ a_n C_n^{(β+1/2)}‖ in L²(dμ_{β,α}).
    pub fn norm_base(&self, g: &CoeffVector) -> f64 {
        let fam = GenGegenbauerFamily::new(self.params);
        g.a.iter()
            .enumerate()
            .map(|(i, c)| c.norm_sqr() * fam.norm(i + 1))
            .sum::<f64>()
            .sqrt()
    }

    /// T g(t) by quadrature against the kernel partial sum with `terms` modes.
    pub fn apply_t_quadrature(&self, g: &dyn Fn(f64) -> Cx, t: f64, terms: usize) -> Result<Cx> {
        let fam = GenGegenbauerFamily::new(self.params);
        let sh = fam.shifted();
        let f = 1.0 / (2.0 * (self.s() + 1.0));
        let outer: Vec<f64> = (1..=terms)
            .map(|n| fam.eval(n, t) * f / sh.norm(n - 1))
            .collect();
        let kernel = |r: f64| -> f64 {
            outer
                .iter()
                .enumerate()
                .map(|(i, c)| c * sh.eval(i, r))
                .sum()
        };
        let m = Measure::mu_beta_alpha(self.params.alpha(), self.params.beta() + 1.0)?;
        integrate_interval_cx(|r| g(r) * kernel(r), &m, DEFAULT_ORDER)
    }
}

fn forward_recurrence(s: f64, lam: Cx, a1: Cx, n: usize) -> Vec<Cx> {
    let mut a = Vec::with_capacity(n);
    if n == 0 {
        return a;
    }
    a.push(a1);
    if n > 1 {
        a.push(a1 * lam * (-2.0 * (s + 3.0)));
    }
    for m in 2..n {
        let mf = m as f64;
        let next = (a[m - 2] / (s + mf) - lam * 2.0 * a[m - 1]) * (s + mf + 2.0);
        a.push(next);
    }
    a
}

/// Coefficients b_n(λ) = a_n/a_1 scaled by i^{−(n−1)}(α+β+2)/(α+β+n+1); equal
/// to h_{n−1,α+β+2}(iλ).
pub fn normalized_coeffs(params: Params, lam: Cx, n: usize) -> Vec<Cx> {
    let s = params.sum();
    let a = forward_recurrence(s, lam, Cx::new(1.0, 0.0), n);
    let mut ipow = Cx::new(1.0, 0.0);
    a.iter()
        .enumerate()
        .map(|(i, v)| {
            let out = v / ipow * ((s + 2.0) / (s + i as f64 + 2.0));
            ipow *= Cx::new(0.0, 1.0);
            out
        })
        .collect()
}

/// h_{n+1}^{(β,α)}/h_n^{(β+1,α)} for n ≥ 0.
pub fn h_ratio(params: Params, n: usize) -> f64 {
    let fam = GenGegenbauerFamily::new(params);
    fam.norm(n + 1) / fam.shifted().norm(n)
}

/// Closed forms of [`h_ratio`].
pub fn h_ratio_closed(params: Params, n: usize) -> f64 {
    let (a, b) = (params.alpha(), params.beta());
    let s1 = (a + b + 1.0).powi(2);
    if n.is_multiple_of(2) {
        let k = (n / 2) as f64;
        s1 / ((b + k + 1.0) * (a + k + 1.0))
    } else {
        let k = (n / 2 + 1) as f64;
        s1 / (k * (a + b + k + 1.0))
    }
}

/// M with ‖T g‖_{dμ_{β,α}} ≤ M ‖g‖_{dμ_{β+1,α}}.
pub fn boundedness_constant(params: Params) -> f64 {
    let s1 = params.sum() + 1.0;
    let sup = h_ratio_closed(params, 0).max(h_ratio_closed(params, 1));
    sup.sqrt() / (2.0 * s1)
}
