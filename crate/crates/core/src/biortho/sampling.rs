//! Paley–Wiener functions for the Dunkl transform and their sampling
//! series at the signed zeros of J_{α+1}.

use super::system::{order_for, sampling_normalizer};
use crate::error::{Error, Result};
use crate::quad::{integrate_interval, integrate_interval_cx, Measure, DEFAULT_ORDER};
use crate::specfun::{
    dunkl_kernel_unchecked, gamma, script_i_imag, script_i_imag_unchecked, SignedZeros,
};
use crate::Cx;
use std::sync::Arc;

pub type Density = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// f(x) = ∫_{−1}^{1} u(t) E_α(ixt) dμ_α(t), represented by its density u.
#[derive(Clone)]
pub struct PWFunction {
    alpha: f64,
    u: Density,
    order: usize,
}

impl std::fmt::Debug for PWFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PWFunction")
            .field("alpha", &self.alpha)
            .field("order", &self.order)
            .finish()
    }
}

impl PWFunction {
    pub fn new(alpha: f64, u: Density) -> Result<Self> {
        Measure::mu_alpha(alpha)?;
        Ok(Self {
            alpha,
            u,
            order: DEFAULT_ORDER,
        })
    }

    pub fn from_fn<U: Fn(f64) -> f64 + Send + Sync + 'static>(alpha: f64, u: U) -> Result<Self> {
        Self::new(alpha, Arc::new(u))
    }

    pub fn with_order(mut self, order: usize) -> Self {
        self.order = order;
        self
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn density(&self, t: f64) -> f64 {
        (self.u)(t)
    }

    /// f(x) by quadrature of the defining integral.
    pub fn eval(&self, x: f64) -> Result<Cx> {
        let m = Measure::mu_alpha(self.alpha)?;
        let order = order_for(self.order, x);
        let a = self.alpha;
        integrate_interval_cx(
            |t| (self.u)(t) * dunkl_kernel_unchecked(a, x * t),
            &m,
            order,
        )
    }
}

/// S_n(x) = d_n x 𝓘_{α+1}(ix) 𝓘_α(is_n) / (2^{α+1}Γ(α+2)(x − s_n)).
pub fn sampling_coefficient(zeros: &SignedZeros, n: i64, x: f64) -> Result<f64> {
    let alpha = zeros.alpha();
    let d = sampling_normalizer(zeros, n)?;
    let c = 2f64.powf(alpha + 1.0) * gamma(alpha + 2.0)?;
    let i1x = script_i_imag(alpha + 1.0, x)?;
    if n == 0 {
        return Ok(d * i1x / c);
    }
    let s = zeros.s(n)?;
    if x == s {
        return Err(Error::DivisionByZero(
            "sampling coefficient at its own node",
        ));
    }
    Ok(d * x * i1x * script_i_imag(alpha, s)? / (c * (x - s)))
}

/// Samples f(s_n), |n| ≤ N, computed once and reused by every sampling sum.
#[derive(Debug, Clone)]
pub struct DunklSampler {
    zeros: Arc<SignedZeros>,
    /// Index n + N holds f(s_n).
    samples: Vec<Cx>,
    /// 2(α+1)𝓘_α(is_n), same layout.
    denominators: Vec<f64>,
}

impl DunklSampler {
    pub fn new(f: &PWFunction, n_max: usize) -> Result<Self> {
        let zeros = Arc::new(SignedZeros::new(f.alpha(), n_max)?);
        Self::with_zeros(f, zeros)
    }

    pub fn with_zeros(f: &PWFunction, zeros: Arc<SignedZeros>) -> Result<Self> {
        if (zeros.alpha() - f.alpha()).abs() > 0.0 {
            return Err(Error::Domain(
                "zero table and function use different alpha".into(),
            ));
        }
        let n_max = zeros.n_max() as i64;
        let alpha = f.alpha();
        let mut samples = Vec::with_capacity(2 * n_max as usize + 1);
        let mut denominators = Vec::with_capacity(2 * n_max as usize + 1);
        for n in -n_max..=n_max {
            let s = zeros.s(n)?;
            samples.push(f.eval(s)?);
            denominators.push(2.0 * (alpha + 1.0) * script_i_imag_unchecked(alpha, s));
        }
        Ok(Self {
            zeros,
            samples,
            denominators,
        })
    }

    pub fn n_max(&self) -> usize {
        self.zeros.n_max()
    }

    pub fn zeros(&self) -> &SignedZeros {
        &self.zeros
    }

    pub fn sample(&self, n: i64) -> Cx {
        self.samples[(n + self.n_max() as i64) as usize]
    }

    /// f(s_0)𝓘_{α+1}(ix) + Σ_{0<|n|≤N} f(s_n) x𝓘_{α+1}(ix) / (2(α+1)𝓘_α(is_n)(x − s_n)).
    pub fn sum(&self, x: f64, n: usize) -> Result<Cx> {
        if n > self.n_max() {
            return Err(Error::ZeroShortfall {
                nu: self.zeros.alpha() + 1.0,
                available: self.n_max(),
                requested: n,
            });
        }
        let n = n as i64;
        for k in -n..=n {
            let s = self.zeros.s(k)?;
            if (x - s).abs() <= 1e-14 * s.abs().max(1.0) {
                return Ok(self.sample(k));
            }
        }
        let alpha = self.zeros.alpha();
        let i1x = script_i_imag_unchecked(alpha + 1.0, x);
        let off = self.n_max() as i64;
        let mut acc = self.sample(0) * i1x;
        // ascending |n| for a reproducible summation order
        for k in 1..=n {
            for j in [k, -k] {
                let s = self.zeros.s(j)?;
                let idx = (j + off) as usize;
                acc += self.samples[idx] * (x * i1x / (self.denominators[idx] * (x - s)));
            }
        }
        Ok(acc)
    }
}

/// Sampling series of f at x with |n| ≤ N.
pub fn dunkl_sampling_sum(f: &PWFunction, x: f64, n: usize) -> Result<Cx> {
    DunklSampler::new(f, n)?.sum(x, n)
}

/// ∫_{−1}^{1} |E_α(ixr)|² dμ_α(r) in closed form:
/// (x²𝓘²_{α+1}/(2(α+1)) − (2α+1)𝓘_{α+1}𝓘_α + 2(α+1)𝓘²_α) / (2^{α+1}Γ(α+2)),
/// with 𝓘 evaluated at ix (real values).
pub fn kernel_norm_sq(alpha: f64, x: f64) -> Result<f64> {
    let i0 = script_i_imag(alpha, x)?;
    let i1 = script_i_imag(alpha + 1.0, x)?;
    let a1 = alpha + 1.0;
    Ok(
        (x * x * i1 * i1 / (2.0 * a1) - (2.0 * alpha + 1.0) * i1 * i0 + 2.0 * a1 * i0 * i0)
            / (2f64.powf(a1) * gamma(alpha + 2.0)?),
    )
}

/// The same norm by quadrature.
pub fn kernel_norm_sq_quadrature(alpha: f64, x: f64) -> Result<f64> {
    let m = Measure::mu_alpha(alpha)?;
    integrate_interval(
        |r| dunkl_kernel_unchecked(alpha, x * r).norm_sqr(),
        &m,
        order_for(DEFAULT_ORDER, x),
    )
}
