//! Neumann functions 𝓙_{a,n}(x) = J_{a+n+1}(x)/x^{a+1}, the plane-wave
//! expansions built on them, and Fourier–Neumann coefficients.

use crate::error::{Error, Result};
use crate::orthopoly::{gegenbauer_plane_wave_weight, GenGegenbauerFamily, JacobiFamily};
use crate::quad::{gauss_jacobi, integrate_bessel_product};
use crate::specfun::{bessel_ratio_orders, dunkl_kernel, gamma};
use crate::{Cx, Params};

/// 𝓙_{a,n}(x); even or odd in x with n.
pub fn neumann_fn(a: f64, n: usize, x: f64) -> Result<f64> {
    let r = crate::specfun::bessel_j_ratio(a + n as f64 + 1.0, x)?;
    Ok(x.powi(n as i32) * r)
}

/// 𝓙_{a,n}(x) for n = 0..count.
pub fn neumann_fns(a: f64, count: usize, x: f64) -> Result<Vec<f64>> {
    let r = bessel_ratio_orders(a + 1.0, count, x)?;
    let mut p = 1.0;
    Ok(r.into_iter()
        .map(|v| {
            let out = v * p;
            p *= x;
            out
        })
        .collect())
}

/// i^n for n ≥ 0.
pub(crate) fn i_pow(n: usize) -> Cx {
    match n % 4 {
        0 => Cx::new(1.0, 0.0),
        1 => Cx::new(0.0, 1.0),
        2 => Cx::new(-1.0, 0.0),
        _ => Cx::new(0.0, -1.0),
    }
}

/// Σ_{n<N} i^n 2^{s+1}Γ(s+1)(s+n+1) 𝓙_{s,n}(x) C_n^{(β+1/2,α+1/2)}(t), s = α+β.
///
/// Converges to E_α(ixt) for |t| ≤ 1.
pub fn planewave_partial_sum(params: Params, x: f64, t: f64, terms: usize) -> Result<Cx> {
    if t.abs() > 1.0 {
        return Err(Error::Domain(format!("|t| = {} exceeds 1", t.abs())));
    }
    let s = params.sum();
    let fam = GenGegenbauerFamily::new(params);
    let pre = 2f64.powf(s + 1.0) * gamma(s + 1.0)?;
    let jn = neumann_fns(s, terms, x)?;
    let mut sum = Cx::new(0.0, 0.0);
    for (n, j) in jn.iter().enumerate() {
        let term = pre * (s + n as f64 + 1.0) * j * fam.eval(n, t);
        sum += i_pow(n) * term;
    }
    Ok(sum)
}

/// Σ_{n<N} i^n Γ(β)(β+n) (x/2)^{−β} J_{β+n}(x) C_n^β(t), the classical
/// Gegenbauer expansion of e^{ixt}; β = 0 uses the Chebyshev limit.
pub fn classical_planewave_partial_sum(beta: f64, x: f64, t: f64, terms: usize) -> Result<Cx> {
    if t.abs() > 1.0 {
        return Err(Error::Domain(format!("|t| = {} exceeds 1", t.abs())));
    }
    if !(beta > -0.5) {
        return Err(Error::Domain(format!("beta = {beta} must exceed -1/2")));
    }
    // (x/2)^{−β} J_{β+n}(x) = 2^β x^n · J_{β+n}(x)/x^{β+n}
    let r = bessel_ratio_orders(beta, terms, x)?;
    let mut p = 2f64.powf(beta);
    let mut sum = Cx::new(0.0, 0.0);
    for (n, v) in r.iter().enumerate() {
        sum += i_pow(n) * (p * v * gegenbauer_plane_wave_weight(beta, n, t)?);
        p *= x;
    }
    Ok(sum)
}

/// Σ_{n<N} 2^{β+1}(α+β+2n+1) Γ(α+β+n+1)/Γ(α+n+1) 𝓙_{α+β,2n}(x) P_n^{(α,β)}(1−2t²),
/// which converges to J_α(xt)/(xt)^α.
pub fn hankel_neumann_sum(params: Params, x: f64, t: f64, terms: usize) -> Result<f64> {
    if !(x > 0.0) || !(t > 0.0 && t < 1.0) {
        return Err(Error::Domain(format!(
            "need x > 0 and t in (0, 1), got x = {x}, t = {t}"
        )));
    }
    let (a, b) = (params.alpha(), params.beta());
    let s = a + b;
    let jac = JacobiFamily::new(a, b)?;
    let jn = neumann_fns(s, 2 * terms, x)?;
    let y = 1.0 - 2.0 * t * t;
    // Γ(s+n+1)/Γ(a+n+1) updated in n
    let mut ratio = gamma(s + 1.0)? / gamma(a + 1.0)?;
    let mut sum = 0.0;
    for n in 0..terms {
        let nf = n as f64;
        if n > 0 {
            ratio *= (s + nf) / (a + nf);
        }
        sum += 2f64.powf(b + 1.0) * (s + 2.0 * nf + 1.0) * ratio * jn[2 * n] * jac.eval(n, y);
    }
    Ok(sum)
}

/// J_α(xt)/(xt)^α written through the Dunkl kernel as
/// (E_α(ixt) + conj E_α(ixt)) / (2^{α+1}Γ(α+1)).
pub fn hankel_kernel_from_dunkl(alpha: f64, x: f64, t: f64) -> Result<f64> {
    let e = dunkl_kernel(alpha, x * t)?;
    Ok((e + e.conj()).re / (2f64.powf(alpha + 1.0) * gamma(alpha + 1.0)?))
}

/// ∫_ℝ 𝓙_{a,n} 𝓙_{a,m} dμ_a by oscillatory quadrature.
pub fn neumann_inner_product(a: f64, n: usize, m: usize) -> Result<f64> {
    if (n + m) % 2 == 1 {
        return Ok(0.0);
    }
    let v = integrate_bessel_product(1.0, a + n as f64 + 1.0, a + m as f64 + 1.0, 1.0)?;
    Ok(2.0 * v / (2f64.powf(a + 1.0) * gamma(a + 1.0)?))
}

/// δ_{nm}/(2^{a+1}Γ(a+1)(a+n+1)).
pub fn neumann_norm_sq(a: f64, n: usize) -> Result<f64> {
    Ok(1.0 / (2f64.powf(a + 1.0) * gamma(a + 1.0)? * (a + n as f64 + 1.0)))
}

/// Dunkl transform F_α(𝓙_{α+β,k})(t) = ∫_ℝ 𝓙_{α+β,k}(x) E_α(−ixt) dμ_α(x),
/// by oscillatory quadrature of the Bessel products it reduces to.
pub fn dunkl_transform_neumann(params: Params, k: usize, t: f64) -> Result<Cx> {
    let (a, b) = (params.alpha(), params.beta());
    let order = a + b + k as f64 + 1.0;
    if t == 0.0 || t.abs() == 1.0 {
        return Err(Error::Domain(format!(
            "transform is evaluated away from t = 0 and |t| = 1, got {t}"
        )));
    }
    let at = t.abs();
    if k.is_multiple_of(2) {
        let v = at.powf(-a) * integrate_bessel_product(b, order, a, at)?;
        Ok(Cx::new(v, 0.0))
    } else {
        let v = at.powf(-a) * integrate_bessel_product(b, order, a + 1.0, at)?;
        Ok(Cx::new(0.0, -v * t.signum()))
    }
}

/// (−i)^k 𝒬_k(t) χ_{[−1,1]}(t) / (2^{α+β+1}Γ(α+β+1)(α+β+k+1)).
pub fn dunkl_transform_neumann_closed(params: Params, k: usize, t: f64) -> Result<Cx> {
    if t.abs() > 1.0 {
        return Ok(Cx::new(0.0, 0.0));
    }
    let s = params.sum();
    let fam = GenGegenbauerFamily::new(params);
    let q = (1.0 - t * t).powf(params.beta()) * fam.eval(k, t) / fam.norm(k);
    let c = 2f64.powf(s + 1.0) * gamma(s + 1.0)? * (s + k as f64 + 1.0);
    Ok(i_pow(k).conj() * (q / c))
}

/// Order of the outer Gauss rule in [`fourier_neumann_coeffs`].
pub const FN_OUTER_ORDER: usize = 24;

/// Fourier–Neumann coefficients a_n(f), n < N, of f = ∫ u E_α(i·t) dμ_α(t)
/// with u(t) = (1−t²)^γ v(t) and v smooth.
///
/// a_n = 2^{s+1}Γ(s+1) ∫_ℝ f 𝓙_{s,n} dμ_s with s = α+β. Exchanging the
/// order of integration leaves, for each outer node r, a Bessel-product
/// integral over the half-line, which is done by oscillatory quadrature.
/// The factor (1−t²)^γ goes into the outer Gauss–Jacobi weight.
pub fn fourier_neumann_coeffs<V: Fn(f64) -> f64>(
    params: Params,
    v: V,
    gamma_exp: f64,
    terms: usize,
) -> Result<Vec<Cx>> {
    params.require_beta_below_one()?;
    if !(gamma_exp > -1.0) {
        return Err(Error::Domain(format!(
            "weight exponent {gamma_exp} must exceed -1"
        )));
    }
    let (a, b) = (params.alpha(), params.beta());
    let s = a + b;
    let rule = gauss_jacobi(FN_OUTER_ORDER, gamma_exp, a)?;
    // ∫_{−1}^{1} g dμ_α = c·Σ w (g(r)+g(−r))/2 with r = √((1+y)/2)
    let norm = 2f64.powf(-a - gamma_exp - 1.0) / (2f64.powf(a + 1.0) * gamma(a + 1.0)?);
    let lead = 2f64.powf(a + 1.0) * gamma(a + 1.0)?;
    let nodes: Vec<(f64, f64, f64, f64)> = rule
        .nodes()
        .iter()
        .zip(rule.weights())
        .map(|(y, w)| {
            let r = (0.5 * (1.0 + y)).sqrt();
            (r, *w, v(r), v(-r))
        })
        .collect();
    let mut out = Vec::with_capacity(terms);
    for n in 0..terms {
        let order = s + n as f64 + 1.0;
        let mut acc = 0.0;
        for &(r, w, vp, vm) in &nodes {
            let inner = if n % 2 == 0 {
                r.powf(-a) * integrate_bessel_product(-b, order, a, r)? * 0.5 * (vp + vm)
            } else {
                r.powf(-a) * integrate_bessel_product(-b, order, a + 1.0, r)? * 0.5 * (vp - vm)
            };
            acc += w * inner;
        }
        let c = lead * norm * acc;
        out.push(if n % 2 == 0 {
            Cx::new(c, 0.0)
        } else {
            Cx::new(0.0, c)
        });
    }
    Ok(out)
}

/// Σ_n a_n (s+n+1) 𝓙_{s,n}(x).
pub fn fourier_neumann_sum(params: Params, coeffs: &[Cx], x: f64) -> Result<Cx> {
    let s = params.sum();
    let jn = neumann_fns(s, coeffs.len(), x)?;
    Ok(coeffs
        .iter()
        .zip(&jn)
        .enumerate()
        .map(|(n, (c, j))| c * ((s + n as f64 + 1.0) * j))
        .sum())
}
