//! q-Pochhammer symbols, the ₂φ₁ series, Jackson integrals and the working context.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::Cx;

/// Relative cutoff for infinite products and series.
pub const DEFAULT_TOL: f64 = 1e-18;
/// Boundary-term cutoff, relative to the largest term, for Jackson sums.
pub const DECAY_TOL: f64 = 1e-15;
const SERIES_CAP: usize = 100_000;

/// (a; base)_n for finite n, or (a; base)_∞ when `n` is `None`.
pub fn qpoch(a: Cx, base: f64, n: Option<usize>, tol: f64) -> Cx {
    let mut p = Cx::new(1.0, 0.0);
    let mut f = a;
    match n {
        Some(n) => {
            for _ in 0..n {
                p *= Cx::new(1.0, 0.0) - f;
                f *= base;
            }
        }
        None => {
            while f.norm() >= tol {
                p *= Cx::new(1.0, 0.0) - f;
                f *= base;
            }
        }
    }
    p
}

/// Real-argument form of [`qpoch`].
pub fn qpoch_real(a: f64, base: f64, n: Option<usize>) -> f64 {
    let mut p = 1.0;
    let mut f = a;
    match n {
        Some(n) => {
            for _ in 0..n {
                p *= 1.0 - f;
                f *= base;
            }
        }
        None => {
            while f.abs() >= DEFAULT_TOL {
                p *= 1.0 - f;
                f *= base;
            }
        }
    }
    p
}

/// m ≥ 0 with a = base^{−m}, if any.
fn terminating_index(a: Cx, base: f64) -> Option<usize> {
    if a.im != 0.0 || a.re <= 0.0 {
        return None;
    }
    let m = -a.re.ln() / base.ln();
    let r = m.round();
    if r >= 0.0 && (m - r).abs() < 1e-9 {
        Some(r as usize)
    } else {
        None
    }
}

/// ₂φ₁(a, b; c; base; z).
pub fn phi21(a: Cx, b: Cx, c: Cx, base: f64, z: Cx) -> Result<Cx> {
    let stop = terminating_index(a, base)
        .into_iter()
        .chain(terminating_index(b, base))
        .min();
    if stop.is_none() && z.norm() >= 1.0 {
        return Err(Error::SeriesDivergent("phi21"));
    }
    let one = Cx::new(1.0, 0.0);
    let (mut fa, mut fb, mut fc, mut fq) = (a, b, c, base);
    let mut term = one;
    let mut sum = one;
    let cap = stop.unwrap_or(SERIES_CAP);
    for n in 0..cap {
        term *= (one - fa) * (one - fb) / ((one - fc) * (1.0 - fq)) * z;
        fa *= base;
        fb *= base;
        fc *= base;
        fq *= base;
        sum += term;
        if stop.is_none() && n > 2 && term.norm() <= DEFAULT_TOL * sum.norm() {
            return Ok(sum);
        }
    }
    if stop.is_none() {
        return Err(Error::Convergence {
            context: "phi21",
            iterations: cap,
            last: term.norm(),
            previous: sum.norm(),
        });
    }
    Ok(sum)
}

#[derive(Debug)]
struct Tables {
    /// (q^{2j}; q²)_∞ for j ≥ 0.
    inf: Vec<f64>,
    /// (q²; q²)_n for n ≥ 0.
    fin: Vec<f64>,
}

/// Base q with the grid {±q^k : k_min ≤ k ≤ k_max} used by every Jackson sum.
#[derive(Debug, Clone)]
pub struct QContext {
    q: f64,
    k_min: i64,
    k_max: i64,
    tol: f64,
    tables: Arc<Tables>,
}

/// Half-lines and the line for [`QContext::jackson_integral`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum JacksonDomain {
    /// (0, a) with nodes a·q^n.
    ZeroTo(f64),
    ZeroToInf,
    Real,
}

impl QContext {
    /// Grid bounds scale with log(tol)/log(q); at q = 0.5 they are −20 and 60.
    pub fn new(q: f64) -> Result<Self> {
        if !(q > 0.0 && q < 1.0) {
            return Err(Error::Domain(format!("q = {q} must lie in (0, 1)")));
        }
        let k_max = (DEFAULT_TOL.ln() / q.ln()).ceil() as i64;
        let k_min = -((k_max + 2) / 3);
        Self::with_bounds(q, k_min, k_max)
    }

    pub fn with_bounds(q: f64, k_min: i64, k_max: i64) -> Result<Self> {
        if !(q > 0.0 && q < 1.0) {
            return Err(Error::Domain(format!("q = {q} must lie in (0, 1)")));
        }
        if k_min > 0 || k_max < 0 {
            return Err(Error::Domain(format!(
                "grid bounds {k_min}..{k_max} must bracket 0"
            )));
        }
        let size = (4 * (k_max - k_min) + 200) as usize;
        let q2 = q * q;
        let inf = (0..size)
            .map(|j| {
                if j == 0 {
                    0.0
                } else {
                    qpoch_real(q2.powi(j as i32), q2, None)
                }
            })
            .collect();
        let mut fin = Vec::with_capacity(size);
        let mut p = 1.0;
        for n in 0..size {
            fin.push(p);
            p *= 1.0 - q2.powi(n as i32 + 1);
        }
        Ok(Self {
            q,
            k_min,
            k_max,
            tol: DEFAULT_TOL,
            tables: Arc::new(Tables { inf, fin }),
        })
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn k_min(&self) -> i64 {
        self.k_min
    }

    pub fn k_max(&self) -> i64 {
        self.k_max
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    /// (a; q)_n, or (a; q)_∞ for `None`.
    pub fn qpochhammer(&self, a: Cx, n: Option<usize>) -> Cx {
        qpoch(a, self.q, n, self.tol)
    }

    /// ₂φ₁ in base q.
    pub fn phi21(&self, a: Cx, b: Cx, c: Cx, z: Cx) -> Result<Cx> {
        phi21(a, b, c, self.q, z)
    }

    /// (q^{2j}; q²)_∞ for integer j (zero for j ≤ 0).
    pub(crate) fn inf_int(&self, j: i64) -> f64 {
        if j <= 0 {
            return 0.0;
        }
        match self.tables.inf.get(j as usize) {
            Some(v) => *v,
            None => qpoch_real(self.q.powi(2 * j as i32), self.q * self.q, None),
        }
    }

    /// (q²; q²)_n.
    pub(crate) fn fin(&self, n: usize) -> f64 {
        match self.tables.fin.get(n) {
            Some(v) => *v,
            None => qpoch_real(self.q * self.q, self.q * self.q, Some(n)),
        }
    }

    /// (q^{e}; q²)_∞ for a real exponent e.
    pub(crate) fn inf2(&self, e: f64) -> f64 {
        qpoch_real(self.q.powf(e), self.q * self.q, None)
    }

    /// (q^{e}; q²)_n for a real exponent e.
    pub(crate) fn fin2(&self, e: f64, n: usize) -> f64 {
        qpoch_real(self.q.powf(e), self.q * self.q, Some(n))
    }

    /// k with x = ±q^k, if x is a grid point up to rounding.
    pub fn grid_index(&self, x: f64) -> Option<i64> {
        if x == 0.0 || !x.is_finite() {
            return None;
        }
        let k = x.abs().ln() / self.q.ln();
        let r = k.round();
        ((k - r).abs() < 1e-9).then_some(r as i64)
    }

    /// Nodes q^k, k_min ≤ k ≤ k_max.
    pub fn grid(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        (self.k_min..=self.k_max).map(move |k| (k, self.q.powi(k as i32)))
    }

    /// Jackson q-integral of a real function.
    pub fn jackson_integral<F: Fn(f64) -> f64>(&self, f: F, domain: JacksonDomain) -> Result<f64> {
        let g = |x: f64| Cx::new(f(x), 0.0);
        Ok(self.jackson_integral_cx(g, domain)?.re)
    }

    /// Jackson q-integral of a complex function.
    pub fn jackson_integral_cx<F: Fn(f64) -> Cx>(&self, f: F, domain: JacksonDomain) -> Result<Cx> {
        self.jackson_dyn(&f, domain)
    }

    fn jackson_dyn(&self, f: &dyn Fn(f64) -> Cx, domain: JacksonDomain) -> Result<Cx> {
        let q = self.q;
        match domain {
            JacksonDomain::ZeroTo(a) => {
                let n_max = (self.k_max - self.k_min) as i32;
                let terms: Vec<Cx> = (0..=n_max)
                    .map(|n| {
                        let x = a * q.powi(n);
                        f(x) * (a * q.powi(n))
                    })
                    .collect();
                check_decay(&terms, false, self.k_max - self.k_min)?;
                Ok(terms.iter().sum::<Cx>() * (1.0 - q))
            }
            JacksonDomain::ZeroToInf => {
                let terms: Vec<Cx> = self.grid().map(|(_, x)| f(x) * x).collect();
                check_decay(&terms, true, self.k_min)?;
                check_decay(&terms, false, self.k_max)?;
                Ok(terms.iter().sum::<Cx>() * (1.0 - q))
            }
            JacksonDomain::Real => {
                let pos = self.jackson_dyn(f, JacksonDomain::ZeroToInf)?;
                let neg = self.jackson_dyn(&|x| f(-x), JacksonDomain::ZeroToInf)?;
                Ok(pos + neg)
            }
        }
    }
}

fn check_decay(terms: &[Cx], front: bool, exponent: i64) -> Result<()> {
    let scale = terms.iter().fold(0.0f64, |m, t| m.max(t.norm()));
    if !scale.is_finite() {
        return Err(Error::NonDecay {
            boundary_term: scale,
            exponent: exponent as i32,
        });
    }
    let edge = if front {
        terms[0]
    } else {
        terms[terms.len() - 1]
    };
    if edge.norm() > DECAY_TOL * scale {
        return Err(Error::NonDecay {
            boundary_term: edge.norm(),
            exponent: exponent as i32,
        });
    }
    Ok(())
}
