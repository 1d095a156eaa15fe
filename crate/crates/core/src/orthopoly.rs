//! Jacobi polynomials, generalized Gegenbauer polynomials C_n^{(β+1/2,α+1/2)},
//! their norms under dμ_{β,α}, connection coefficients, and the Dunkl
//! operator acting on polynomials in the monomial basis.

use crate::error::{Error, Result};
use crate::specfun::{gamma, pochhammer};
use crate::Params;

/// Degree up to which Jacobi polynomials use the terminating ₂F₁ sum.
pub const HYPERGEOMETRIC_MAX_DEGREE: usize = 10;

/// P_n^{(a,b)} with a, b > −1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiFamily {
    a: f64,
    b: f64,
}

impl JacobiFamily {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a > -1.0 && b > -1.0 && a.is_finite() && b.is_finite()) {
            return Err(Error::Domain(format!(
                "Jacobi parameters ({a}, {b}) must exceed -1"
            )));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// P_n^{(a,b)}(y): ₂F₁ sum for low degree, three-term recurrence above.
    pub fn eval(&self, n: usize, y: f64) -> f64 {
        if n <= HYPERGEOMETRIC_MAX_DEGREE {
            self.eval_hypergeometric(n, y)
        } else {
            self.eval_recurrence(n, y)
        }
    }

    /// (a+1)_n/n! · ₂F₁(−n, n+a+b+1; a+1; (1−y)/2)
    ///
    /// For y < 0 the reflection P_n^{(a,b)}(y) = (−1)^n P_n^{(b,a)}(−y) keeps
    /// the series argument in [0, 1/2].
    pub fn eval_hypergeometric(&self, n: usize, y: f64) -> f64 {
        if y < 0.0 {
            let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
            return sign
                * Self {
                    a: self.b,
                    b: self.a,
                }
                .eval_hypergeometric(n, -y);
        }
        let (a, b) = (self.a, self.b);
        let z = 0.5 * (1.0 - y);
        let nf = n as f64;
        let mut term = 1.0;
        let mut sum = 1.0;
        for k in 0..n {
            let kf = k as f64;
            term *= (kf - nf) * (nf + a + b + 1.0 + kf) / ((a + 1.0 + kf) * (kf + 1.0)) * z;
            sum += term;
        }
        pochhammer(a + 1.0, n) / factorial(n) * sum
    }

    /// Standard three-term recurrence from P_0 = 1 and the explicit P_1.
    pub fn eval_recurrence(&self, n: usize, y: f64) -> f64 {
        let (a, b) = (self.a, self.b);
        let p1 = (a + 1.0) + 0.5 * (a + b + 2.0) * (y - 1.0);
        if n == 0 {
            return 1.0;
        }
        let (mut prev, mut cur) = (1.0, p1);
        for k in 2..=n {
            let kf = k as f64;
            let s = 2.0 * kf + a + b;
            let c1 = 2.0 * kf * (kf + a + b) * (s - 2.0);
            let c2 = (s - 1.0) * (s * (s - 2.0) * y + a * a - b * b);
            let c3 = 2.0 * (kf + a - 1.0) * (kf + b - 1.0) * s;
            let next = (c2 * cur - c3 * prev) / c1;
            prev = cur;
            cur = next;
        }
        cur
    }
}

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |p, k| p * k as f64)
}

/// Dense polynomial in the monomial basis, lowest degree first.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<f64>) -> Self {
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Index of the highest nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| *c != 0.0)
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[f64], i: usize| v.get(i).copied().unwrap_or(0.0);
        Self::new(
            (0..n)
                .map(|i| get(&self.coeffs, i) + get(&other.coeffs, i))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1.0))
    }

    /// Largest coefficient magnitude.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }
}

/// Λ_α on a polynomial: t^m ↦ (m + (2α+1)[m odd]) t^{m−1}.
pub fn dunkl_apply_poly(alpha: f64, p: &Polynomial) -> Polynomial {
    let c = p.coeffs();
    if c.len() <= 1 {
        return Polynomial::zero();
    }
    let out = (1..c.len())
        .map(|m| {
            let odd = if m % 2 == 1 { 2.0 * alpha + 1.0 } else { 0.0 };
            (m as f64 + odd) * c[m]
        })
        .collect();
    Polynomial::new(out)
}

/// The family C_n^{(β+1/2,α+1/2)} with norms h_n^{(β,α)} under dμ_{β,α}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenGegenbauerFamily {
    params: Params,
}

impl GenGegenbauerFamily {
    pub fn new(params: Params) -> Self {
        Self { params }
    }

    pub fn params(&self) -> Params {
        self.params
    }

    /// The family with β replaced by β + 1, i.e. C_n^{(β+3/2,α+1/2)}.
    pub fn shifted(&self) -> Self {
        Self::new(self.params.shift_beta())
    }

    /// Leading factor and Jacobi family of C_n: C_{2m} = c·P_m^{(α,β)}(1−2t²),
    /// C_{2m+1} = c·t·P_m^{(α+1,β)}(1−2t²).
    fn parts(&self, n: usize) -> (f64, JacobiFamily, usize) {
        let (a, b) = (self.params.alpha(), self.params.beta());
        let m = n / 2;
        let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
        if n.is_multiple_of(2) {
            let c = sign * ratio_pochhammer(a + b + 1.0, a + 1.0, m);
            (c, JacobiFamily { a, b }, m)
        } else {
            let c = sign * ratio_pochhammer(a + b + 1.0, a + 1.0, m + 1);
            (c, JacobiFamily { a: a + 1.0, b }, m)
        }
    }

    /// C_n^{(β+1/2,α+1/2)}(t).
    pub fn eval(&self, n: usize, t: f64) -> f64 {
        let (c, fam, m) = self.parts(n);
        let p = fam.eval(m, 1.0 - 2.0 * t * t);
        if n.is_multiple_of(2) {
            c * p
        } else {
            c * t * p
        }
    }

    /// C_n in the monomial basis.
    pub fn poly(&self, n: usize) -> Polynomial {
        let (c, fam, m) = self.parts(n);
        let (a, b) = (fam.a(), fam.b());
        let mf = m as f64;
        let lead = c * pochhammer(a + 1.0, m) / factorial(m);
        let mut coeffs = vec![0.0; n + 1];
        let shift = n % 2;
        let mut term = lead;
        for k in 0..=m {
            if k > 0 {
                let kf = (k - 1) as f64;
                term *= (kf - mf) * (mf + a + b + 1.0 + kf) / ((a + 1.0 + kf) * (kf + 1.0));
            }
            coeffs[2 * k + shift] = term;
        }
        Polynomial::new(coeffs)
    }

    /// h_n^{(β,α)} = ∫ C_n² dμ_{β,α}, by products of consecutive norm ratios.
    pub fn norm(&self, n: usize) -> f64 {
        let (a, b) = (self.params.alpha(), self.params.beta());
        let m = n / 2;
        let g_b1 = gamma(b + 1.0).unwrap_or(f64::NAN);
        let g_ab1 = gamma(a + b + 1.0).unwrap_or(f64::NAN);
        let two = 2f64.powf(a + 1.0);
        if n.is_multiple_of(2) {
            let mut h = g_b1 / (two * (a + b + 1.0) * g_ab1);
            for j in 0..m {
                let j = j as f64;
                h *= (b + j + 1.0) * (a + b + j + 1.0) * (a + b + 2.0 * j + 1.0)
                    / ((a + b + 2.0 * j + 3.0) * (a + j + 1.0) * (j + 1.0));
            }
            h
        } else {
            let mut h = g_b1 * (a + b + 1.0) / (two * (a + b + 2.0) * g_ab1 * (a + 1.0));
            for j in 0..m {
                let j = j as f64;
                h *= (b + j + 1.0) * (a + b + j + 2.0) * (a + b + 2.0 * j + 2.0)
                    / ((a + b + 2.0 * j + 4.0) * (a + j + 2.0) * (j + 1.0));
            }
            h
        }
    }

    /// h_n^{(β,α)} from the Gamma closed forms; used to cross-check [`Self::norm`].
    pub fn norm_closed_form(&self, n: usize) -> Result<f64> {
        let (a, b) = (self.params.alpha(), self.params.beta());
        let m = n as f64 / 2.0;
        let m = m.floor();
        let pre = gamma(a + 1.0)? * gamma(b + m + 1.0)?
            / (2f64.powf(a + 1.0) * gamma(a + b + 1.0)?.powi(2) * gamma(m + 1.0)?);
        if n.is_multiple_of(2) {
            Ok(pre * gamma(a + b + m + 1.0)? / ((a + b + 2.0 * m + 1.0) * gamma(a + m + 1.0)?))
        } else {
            Ok(pre * gamma(a + b + m + 2.0)? / ((a + b + 2.0 * m + 2.0) * gamma(a + m + 2.0)?))
        }
    }
}

/// (x)_n / (y)_n computed factor by factor.
fn ratio_pochhammer(x: f64, y: f64, n: usize) -> f64 {
    (0..n).fold(1.0, |p, k| p * (x + k as f64) / (y + k as f64))
}

/// Coefficients of (α+β+1)(1−r²)C_{n−1}^{(β+3/2)} = A_n C_{n−1}^{(β+1/2)} − B_n C_{n+1}^{(β+1/2)}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConnectionCoeffs {
    pub a_n: f64,
    pub b_n: f64,
}

pub fn gengeg_connection(params: Params, n: usize) -> Result<ConnectionCoeffs> {
    if n == 0 {
        return Err(Error::Domain(
            "connection index n must be at least 1".into(),
        ));
    }
    let (a, b) = (params.alpha(), params.beta());
    let k = (n / 2) as f64;
    Ok(if n % 2 == 1 {
        let d = a + b + 2.0 * k + 2.0;
        ConnectionCoeffs {
            a_n: (b + k + 1.0) * (a + b + k + 1.0) / d,
            b_n: (k + 1.0) * (a + k + 1.0) / d,
        }
    } else {
        let d = a + b + 2.0 * k + 1.0;
        ConnectionCoeffs {
            a_n: (b + k) * (a + b + k + 1.0) / d,
            b_n: k * (a + k + 1.0) / d,
        }
    })
}

/// c_n in C_n^{(β+1/2)} = c_n (C_n^{(β+3/2)} − C_{n−2}^{(β+3/2)}).
pub fn lowering_factor(params: Params, n: usize) -> f64 {
    let s = params.sum() + 1.0;
    s / (s + n as f64)
}

/// Classical Gegenbauer C_n^λ(t), λ > 0, by the three-term recurrence.
pub fn classical_gegenbauer(lambda: f64, n: usize, t: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, 2.0 * lambda * t);
    if n == 0 {
        return 1.0;
    }
    for k in 2..=n {
        let kf = k as f64;
        let next = (2.0 * t * (kf + lambda - 1.0) * cur - (kf + 2.0 * lambda - 2.0) * prev) / kf;
        prev = cur;
        cur = next;
    }
    cur
}

/// Γ(λ)(λ+n)C_n^λ(t), the plane-wave weight, including its λ → 0 limit
/// (1 for n = 0 and 2T_n(t) for n ≥ 1).
pub fn gegenbauer_plane_wave_weight(lambda: f64, n: usize, t: f64) -> Result<f64> {
    if lambda == 0.0 {
        if n == 0 {
            return Ok(1.0);
        }
        let theta = t.clamp(-1.0, 1.0).acos();
        return Ok(2.0 * (n as f64 * theta).cos());
    }
    if !(lambda > -0.5) {
        return Err(Error::Domain(format!(
            "Gegenbauer index {lambda} must exceed -1/2"
        )));
    }
    Ok(gamma(lambda)? * (lambda + n as f64) * classical_gegenbauer(lambda, n, t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(a: f64, b: f64) -> GenGegenbauerFamily {
        GenGegenbauerFamily::new(Params::new(a, b).unwrap())
    }

    #[test]
    fn jacobi_at_one() {
        let j = JacobiFamily::new(0.3, -0.2).unwrap();
        for n in 0..6 {
            let expect = gamma(n as f64 + 1.3).unwrap() / (gamma(1.3).unwrap() * factorial(n));
            assert!((j.eval(n, 1.0) - expect).abs() < 1e-13 * expect);
        }
    }

    #[test]
    fn jacobi_paths_agree_on_overlap() {
        let j = JacobiFamily::new(0.7, 1.4).unwrap();
        for n in [3usize, 7, 10] {
            for &y in &[-0.9, -0.2, 0.35, 0.97] {
                let h = j.eval_hypergeometric(n, y);
                let r = j.eval_recurrence(n, y);
                assert!((h - r).abs() < 1e-11 * h.abs().max(1.0), "n={n} y={y}");
            }
        }
    }

    #[test]
    fn low_degree_members() {
        let f = fam(0.4, 0.25);
        assert_eq!(f.eval(0, 0.3), 1.0);
        let c1 = (0.4 + 0.25 + 1.0) / 1.4;
        assert!((f.eval(1, 0.6) - c1 * 0.6).abs() < 1e-15);
    }

    #[test]
    fn poly_matches_eval() {
        let f = fam(0.3, 0.6);
        for n in 0..12 {
            let p = f.poly(n);
            assert_eq!(p.degree(), Some(n));
            for &t in &[-0.8, 0.1, 0.55] {
                assert!((p.eval(t) - f.eval(n, t)).abs() < 1e-12 * f.eval(n, t).abs().max(1.0));
            }
        }
    }

    #[test]
    fn norm_products_match_gamma_forms() {
        for &(a, b) in &[(0.4, 0.25), (-0.5, 1.0), (1.3, -0.6)] {
            let f = fam(a, b);
            for n in 0..14 {
                let x = f.norm(n);
                let y = f.norm_closed_form(n).unwrap();
                assert!((x - y).abs() < 1e-13 * y, "(a,b,n)=({a},{b},{n})");
            }
        }
    }

    #[test]
    fn classical_gegenbauer_at_minus_half() {
        let f = fam(-0.5, 1.0);
        for n in 0..=6 {
            let c = classical_gegenbauer(1.5, n, 0.41);
            assert!((f.eval(n, 0.41) - c).abs() < 1e-11, "n={n}");
        }
    }

    #[test]
    fn dunkl_operator_basics() {
        let p = Polynomial::new(vec![0.0, -1.0, 0.0, 1.0]);
        let d = dunkl_apply_poly(-0.5, &p);
        assert_eq!(d.coeffs(), &[-1.0, 0.0, 3.0]);
        let e = Polynomial::new(vec![2.0, 0.0, 0.0, 0.0, 1.0]);
        assert_eq!(dunkl_apply_poly(0.8, &e).coeffs(), &[0.0, 0.0, 0.0, 4.0]);
    }

    #[test]
    fn connection_even_case() {
        let p = Params::new(0.5, 0.25).unwrap();
        let c = gengeg_connection(p, 4).unwrap();
        let k = 2.0;
        assert!((c.a_n - (0.25 + k) * (0.75 + k + 1.0) / (0.75 + 2.0 * k + 1.0)).abs() < 1e-15);
        assert!((c.b_n - k * (0.5 + k + 1.0) / (0.75 + 2.0 * k + 1.0)).abs() < 1e-15);
    }

    #[test]
    fn chebyshev_branch() {
        assert_eq!(gegenbauer_plane_wave_weight(0.0, 0, 0.3).unwrap(), 1.0);
        let t: f64 = 0.3;
        let t3 = 4.0 * t.powi(3) - 3.0 * t;
        assert!((gegenbauer_plane_wave_weight(0.0, 3, t).unwrap() - 2.0 * t3).abs() < 1e-14);
    }
}
