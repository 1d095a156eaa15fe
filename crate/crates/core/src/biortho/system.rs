//! The abstract engine: a kernel K(x, t) with its transform on [−1, 1], a
//! biorthonormal pair (P_n, Q_n), and the coefficients S_n(x) of the
//! bilinear expansion K(x, t) = Σ P_n(t) S_n(x).

use crate::error::{Error, Result};
use crate::orthopoly::{gegenbauer_plane_wave_weight, GenGegenbauerFamily};
use crate::quad::{integrate_interval_cx, Measure, DEFAULT_ORDER};
use crate::specfun::{dunkl_kernel, gamma, SignedZeros};
use crate::{Cx, Params};
use std::f64::consts::PI;
use std::sync::Arc;

pub type KernelFn = Arc<dyn Fn(f64, f64) -> Cx + Send + Sync>;
pub type IndexedFn = Arc<dyn Fn(i64, f64) -> Cx + Send + Sync>;

/// Rule order large enough to resolve K(x, ·) and the basis functions.
pub(crate) fn order_for(base: usize, frequency: f64) -> usize {
    let need = (0.6 * frequency.abs()).ceil() as usize + 40;
    let o = base.max(need);
    o.div_ceil(20) * 20
}

/// A kernel on Ω × Ω together with the measure it is integrated against.
#[derive(Clone)]
pub struct KernelSystem {
    name: String,
    kernel: KernelFn,
    measure: Measure,
    order: usize,
}

impl std::fmt::Debug for KernelSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("KernelSystem")
            .field("name", &self.name)
            .field("measure", &self.measure)
            .field("order", &self.order)
            .finish()
    }
}

impl KernelSystem {
    pub fn new(name: impl Into<String>, kernel: KernelFn, measure: Measure) -> Self {
        Self {
            name: name.into(),
            kernel,
            measure,
            order: DEFAULT_ORDER,
        }
    }

    /// K(x, t) = e^{ixt}/√(2π) with Lebesgue measure.
    pub fn fourier() -> Self {
        let c = 1.0 / (2.0 * PI).sqrt();
        Self::new(
            "fourier",
            Arc::new(move |x, t| Cx::from_polar(c, x * t)),
            Measure::lebesgue(),
        )
    }

    /// K(x, t) = E_α(ixt) with dμ_α.
    pub fn dunkl(alpha: f64) -> Result<Self> {
        let measure = Measure::mu_alpha(alpha)?;
        dunkl_kernel(alpha, 0.0)?;
        Ok(Self::new(
            "dunkl",
            Arc::new(move |x, t| crate::specfun::dunkl_kernel_unchecked(alpha, x * t)),
            measure,
        ))
    }

    pub fn with_order(mut self, order: usize) -> Self {
        self.order = order;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn measure(&self) -> &Measure {
        &self.measure
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn kernel(&self, x: f64, t: f64) -> Cx {
        (self.kernel)(x, t)
    }

    /// ∫_{−1}^{1} g(t) (1−t²)^γ K(x, t) dμ(t).
    pub fn inverse_on_interval<G: Fn(f64) -> Cx>(
        &self,
        g: G,
        gamma_exp: f64,
        x: f64,
        frequency: f64,
    ) -> Result<Cx> {
        let m = self.measure.with_extra_beta(gamma_exp)?;
        let order = order_for(self.order, x.abs() + frequency);
        integrate_interval_cx(|t| g(t) * self.kernel(x, t), &m, order)
    }

    /// ∫_{−1}^{1} g(x) (1−x²)^γ conj K(x, t) dμ(x).
    pub fn forward_on_interval<G: Fn(f64) -> Cx>(
        &self,
        g: G,
        gamma_exp: f64,
        t: f64,
        frequency: f64,
    ) -> Result<Cx> {
        let m = self.measure.with_extra_beta(gamma_exp)?;
        let order = order_for(self.order, t.abs() + frequency);
        integrate_interval_cx(|x| g(x) * self.kernel(x, t).conj(), &m, order)
    }

    /// ∫_{−R}^{R} h dμ, for measures of the form c|x|^{2α+1} dx.
    fn integrate_line<H: Fn(f64) -> Cx>(&self, h: H, radius: f64, order: usize) -> Result<Cx> {
        if self.measure.beta() != 0.0 {
            return Err(Error::Domain(
                "real-line integration needs a measure without a (1-t^2) factor".into(),
            ));
        }
        let scale = radius.powf(2.0 * self.measure.alpha() + 2.0);
        Ok(integrate_interval_cx(|s| h(radius * s), &self.measure, order)? * scale)
    }

    /// |∫(𝒦f) g dμ − ∫(𝒦g) f dμ| with both transforms and outer integrals
    /// truncated to [−R, R].
    pub fn multiplication_residual<F, G>(&self, f: F, g: G, radius: f64) -> Result<f64>
    where
        F: Fn(f64) -> Cx,
        G: Fn(f64) -> Cx,
    {
        let order = order_for(self.order, radius * radius);
        let transform = |h: &dyn Fn(f64) -> Cx, t: f64| {
            self.integrate_line(|x| h(x) * self.kernel(x, t).conj(), radius, order)
        };
        let lhs = self.integrate_line(
            |t| transform(&f, t).unwrap_or(Cx::new(f64::NAN, 0.0)) * g(t),
            radius,
            order,
        )?;
        let rhs = self.integrate_line(
            |t| transform(&g, t).unwrap_or(Cx::new(f64::NAN, 0.0)) * f(t),
            radius,
            order,
        )?;
        Ok((lhs - rhs).norm())
    }
}

/// Index window of a biorthonormal system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexSet {
    /// n ∈ ℤ, truncated to |n| ≤ N.
    Integers,
    /// n ≥ 0, truncated to n < N.
    Naturals,
}

impl IndexSet {
    pub fn window(&self, n: usize) -> Vec<i64> {
        let n = n as i64;
        match self {
            IndexSet::Integers => (-n..=n).collect(),
            IndexSet::Naturals => (0..n).collect(),
        }
    }
}

/// A biorthonormal pair with Q_n(t) = (1−t²)^γ q_n(t); the factor is
/// folded into the quadrature weight.
#[derive(Clone)]
pub struct BiorthSystem {
    name: String,
    p: IndexedFn,
    q_smooth: IndexedFn,
    q_weight: f64,
    index: IndexSet,
    /// Oscillation frequency of P_n, Q_n per unit of |n|.
    frequency: f64,
}

impl std::fmt::Debug for BiorthSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BiorthSystem")
            .field("name", &self.name)
            .field("q_weight", &self.q_weight)
            .field("index", &self.index)
            .finish()
    }
}

impl BiorthSystem {
    pub fn new(
        name: impl Into<String>,
        p: IndexedFn,
        q_smooth: IndexedFn,
        q_weight: f64,
        index: IndexSet,
    ) -> Self {
        Self {
            name: name.into(),
            p,
            q_smooth,
            q_weight,
            index,
            frequency: 0.0,
        }
    }

    fn with_frequency(mut self, frequency: f64) -> Self {
        self.frequency = frequency;
        self
    }

    /// e^{iπnt}/√2, n ∈ ℤ, orthonormal for dt.
    pub fn fourier_exponentials() -> Self {
        let c = std::f64::consts::FRAC_1_SQRT_2;
        let e: IndexedFn = Arc::new(move |n, t| Cx::from_polar(c, PI * n as f64 * t));
        Self::new("fourier", e.clone(), e, 0.0, IndexSet::Integers).with_frequency(PI)
    }

    /// P_n = C_n^β, Q_n = (1−t²)^{β−1/2} C_n^β / h_n, for dt.
    ///
    /// For β = 0 the Chebyshev normalization P_0 = 1, P_n = 2T_n is used.
    pub fn gegenbauer(beta: f64) -> Result<Self> {
        if !(beta > -0.5) {
            return Err(Error::Domain(format!("beta = {beta} must exceed -1/2")));
        }
        let p: IndexedFn = Arc::new(move |n, t| Cx::new(gegenbauer_p(beta, n as usize, t), 0.0));
        let norms: Vec<f64> = (0..64).map(|n| gegenbauer_h(beta, n)).collect();
        let q: IndexedFn = Arc::new(move |n, t| {
            let n = n as usize;
            let h = norms
                .get(n)
                .copied()
                .unwrap_or_else(|| gegenbauer_h(beta, n));
            Cx::new(gegenbauer_p(beta, n, t) / h, 0.0)
        });
        Ok(Self::new(
            "gegenbauer",
            p,
            q,
            beta - 0.5,
            IndexSet::Naturals,
        ))
    }

    /// e_{α,n}(t) = d_n E_α(i s_n t), n ∈ ℤ, orthonormal for dμ_α.
    pub fn dunkl_exponentials(zeros: Arc<SignedZeros>) -> Result<Self> {
        let alpha = zeros.alpha();
        let d: Vec<f64> = (0..=zeros.n_max() as i64)
            .map(|n| sampling_normalizer(&zeros, n))
            .collect::<Result<_>>()?;
        let z = Arc::clone(&zeros);
        let e: IndexedFn = Arc::new(move |n, t| {
            let s = z.s(n).unwrap_or(f64::NAN);
            d[n.unsigned_abs() as usize] * crate::specfun::dunkl_kernel_unchecked(alpha, s * t)
        });
        Ok(Self::new("dunkl-sampling", e.clone(), e, 0.0, IndexSet::Integers).with_frequency(PI))
    }

    /// 𝒫_n = C_n^{(β+1/2,α+1/2)}, 𝒬_n = (1−t²)^β C_n / h_n^{(β,α)}, for dμ_α.
    pub fn gen_gegenbauer(params: Params) -> Self {
        let fam = GenGegenbauerFamily::new(params);
        let p: IndexedFn = Arc::new(move |n, t| Cx::new(fam.eval(n as usize, t), 0.0));
        let q: IndexedFn = Arc::new(move |n, t| {
            let n = n as usize;
            Cx::new(fam.eval(n, t) / fam.norm(n), 0.0)
        });
        Self::new("gen-gegenbauer", p, q, params.beta(), IndexSet::Naturals)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn index_set(&self) -> IndexSet {
        self.index
    }

    pub fn p(&self, n: i64, t: f64) -> Cx {
        (self.p)(n, t)
    }

    pub fn q(&self, n: i64, t: f64) -> Cx {
        (1.0 - t * t).powf(self.q_weight) * (self.q_smooth)(n, t)
    }

    /// ∫_I P_n conj(Q_m) dμ.
    pub fn gram(&self, sys: &KernelSystem, n: i64, m: i64) -> Result<Cx> {
        let measure = sys.measure().with_extra_beta(self.q_weight)?;
        let freq = self.frequency * (n.abs() + m.abs()) as f64;
        let order = order_for(sys.order(), freq);
        integrate_interval_cx(
            |t| self.p(n, t) * (self.q_smooth)(m, t).conj(),
            &measure,
            order,
        )
    }
}

fn gegenbauer_p(beta: f64, n: usize, t: f64) -> f64 {
    if beta == 0.0 {
        gegenbauer_plane_wave_weight(0.0, n, t).unwrap_or(f64::NAN)
    } else {
        crate::orthopoly::classical_gegenbauer(beta, n, t)
    }
}

/// ∫ P_n² (1−t²)^{β−1/2} dt for the P_n of [`BiorthSystem::gegenbauer`].
fn gegenbauer_h(beta: f64, n: usize) -> f64 {
    if beta == 0.0 {
        return if n == 0 { PI } else { 2.0 * PI };
    }
    let nf = n as f64;
    let num = PI.sqrt()
        * gamma(beta + 0.5).unwrap_or(f64::NAN)
        * crate::specfun::gamma_ratio(2.0 * beta + nf, nf + 1.0);
    num / (gamma(beta).unwrap_or(f64::NAN) * gamma(2.0 * beta).unwrap_or(f64::NAN) * (nf + beta))
}

/// d_n of the orthonormal system e_{α,n}.
pub fn sampling_normalizer(zeros: &SignedZeros, n: i64) -> Result<f64> {
    let alpha = zeros.alpha();
    if n == 0 {
        return Ok(2f64.powf(0.5 * (alpha + 1.0)) * gamma(alpha + 2.0)?.sqrt());
    }
    let s = zeros.s(n)?;
    let i_alpha = crate::specfun::script_i_imag(alpha, s)?;
    Ok(2f64.powf(0.5 * alpha) * gamma(alpha + 1.0)?.sqrt() / i_alpha.abs())
}

/// Coefficients S_n(x) of a kernel expansion, with the index window they cover.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    pub indices: Vec<i64>,
    pub coeffs: Vec<Cx>,
    pub order: usize,
    /// Size of the outermost retained coefficients.
    pub tail_estimate: f64,
}

impl TruncatedSeries {
    pub fn new(indices: Vec<i64>, coeffs: Vec<Cx>, order: usize) -> Self {
        let tail_estimate = outer_magnitude(&indices, &coeffs);
        Self {
            indices,
            coeffs,
            order,
            tail_estimate,
        }
    }

    /// Σ P_n(t) S_n(x) over the window.
    pub fn partial_sum(&self, bio: &BiorthSystem, t: f64) -> Cx {
        self.indices
            .iter()
            .zip(&self.coeffs)
            .map(|(n, c)| bio.p(*n, t) * c)
            .sum()
    }
}

fn outer_magnitude(indices: &[i64], coeffs: &[Cx]) -> f64 {
    let top = indices.iter().map(|n| n.abs()).max().unwrap_or(0);
    indices
        .iter()
        .zip(coeffs)
        .filter(|(n, _)| n.abs() == top)
        .map(|(_, c)| c.norm())
        .fold(0.0, f64::max)
}

/// S_n(x) = ∫_I K(x, t) conj(Q_n(t)) dμ(t) for n in the window of size N.
pub fn expand_kernel(
    sys: &KernelSystem,
    bio: &BiorthSystem,
    x: f64,
    n: usize,
) -> Result<TruncatedSeries> {
    if n == 0 {
        return Err(Error::Domain("truncation order must be at least 1".into()));
    }
    let indices = bio.index_set().window(n);
    let coeffs = indices
        .iter()
        .map(|&k| {
            let freq = bio.frequency * k.abs() as f64;
            sys.inverse_on_interval(|t| (bio.q_smooth)(k, t).conj(), bio.q_weight, x, freq)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TruncatedSeries::new(indices, coeffs, n))
}
