//! Gauss–Jacobi rules on [−1, 1] for the weight (1−y)^a (1+y)^b.

use crate::error::{Error, Result};
use crate::specfun::gamma;
use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex, OnceLock};

/// Nodes and positive weights of an n-point Gauss rule.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    order: usize,
}

impl QuadRule {
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Σ w_i f(y_i).
    pub fn apply<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(y, w)| w * f(*y))
            .sum()
    }
}

type RuleKey = (usize, u64, u64);

fn cache() -> &'static Mutex<HashMap<RuleKey, Arc<QuadRule>>> {
    static CACHE: OnceLock<Mutex<HashMap<RuleKey, Arc<QuadRule>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Cached n-point Gauss–Jacobi rule for (1−y)^a (1+y)^b.
pub fn gauss_jacobi(n: usize, a: f64, b: f64) -> Result<Arc<QuadRule>> {
    let key = (n, a.to_bits(), b.to_bits());
    if let Some(rule) = cache().lock().expect("rule cache poisoned").get(&key) {
        return Ok(Arc::clone(rule));
    }
    let rule = Arc::new(build_gauss_jacobi(n, a, b)?);
    cache()
        .lock()
        .expect("rule cache poisoned")
        .insert(key, Arc::clone(&rule));
    Ok(rule)
}

/// Cached n-point Gauss–Legendre rule.
pub fn gauss_legendre(n: usize) -> Result<Arc<QuadRule>> {
    gauss_jacobi(n, 0.0, 0.0)
}

/// P_n^{(a,b)}(y), P_{n−1}^{(a,b)}(y) by the three-term recurrence.
fn jacobi_pair(n: usize, a: f64, b: f64, y: f64) -> (f64, f64) {
    let mut prev = 1.0;
    let mut cur = (a + 1.0) + 0.5 * (a + b + 2.0) * (y - 1.0);
    if n == 1 {
        return (cur, prev);
    }
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
    (cur, prev)
}

fn build_gauss_jacobi(n: usize, a: f64, b: f64) -> Result<QuadRule> {
    if n == 0 {
        return Err(Error::Domain("rule order must be positive".into()));
    }
    if !(a > -1.0 && b > -1.0) {
        return Err(Error::Domain(format!(
            "Jacobi weight exponents ({a}, {b}) must exceed -1"
        )));
    }
    let nf = n as f64;
    let mut nodes: Vec<f64> = Vec::with_capacity(n);
    let mut derivs = Vec::with_capacity(n);
    for i in 1..=n {
        let theta = (i as f64 - 0.25 + 0.5 * a) * PI / (nf + 0.5 * (a + b + 1.0));
        let mut y = theta.cos();
        let mut converged = false;
        let mut polish = 2;
        for _ in 0..100 {
            let (p, pm1) = jacobi_pair(n, a, b, y);
            let s = 2.0 * nf + a + b;
            let dp = (nf * ((a - b) - s * y) * p + 2.0 * (nf + a) * (nf + b) * pm1)
                / (s * (1.0 - y * y));
            let deflate: f64 = nodes.iter().map(|z| 1.0 / (y - z)).sum();
            let step = p / (dp - p * deflate);
            y -= step;
            if step.abs() <= 1e-13 {
                if polish == 0 {
                    converged = true;
                    break;
                }
                polish -= 1;
            }
        }
        if !converged {
            return Err(Error::Convergence {
                context: "Gauss-Jacobi Newton iteration",
                iterations: 100,
                last: y,
                previous: y,
            });
        }
        let (p, pm1) = jacobi_pair(n, a, b, y);
        let s = 2.0 * nf + a + b;
        let dp =
            (nf * ((a - b) - s * y) * p + 2.0 * (nf + a) * (nf + b) * pm1) / (s * (1.0 - y * y));
        nodes.push(y);
        derivs.push(dp);
    }
    // ρ_n = Γ(n+a+1)Γ(n+b+1)/(Γ(n+a+b+1) n!) by its recurrence in n.
    let mut rho = gamma(a + 2.0)? * gamma(b + 2.0)? / gamma(a + b + 2.0)?;
    for k in 2..=n {
        let kf = k as f64;
        rho *= (kf + a) * (kf + b) / ((kf + a + b) * kf);
    }
    let scale = rho * 2f64.powf(a + b + 1.0);
    let mut pairs: Vec<(f64, f64)> = nodes
        .iter()
        .zip(&derivs)
        .map(|(y, dp)| (*y, scale / ((1.0 - y * y) * dp * dp)))
        .collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    Ok(QuadRule {
        nodes: pairs.iter().map(|p| p.0).collect(),
        weights: pairs.iter().map(|p| p.1).collect(),
        order: n,
    })
}
