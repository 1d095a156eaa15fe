//! Positive zeros j_{ν,k} of J_ν and the signed sequence used for sampling.

use super::bessel::j_nonneg;
use super::roots::brent;
use crate::error::{Error, Result};

const SCAN_STEP: f64 = 0.4;

/// Ascending positive zeros of J_ν.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroTable {
    nu: f64,
    zeros: Vec<f64>,
}

impl ZeroTable {
    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn zeros(&self) -> &[f64] {
        &self.zeros
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    /// j_{ν,k} with k counted from 1.
    pub fn get(&self, k: usize) -> Result<f64> {
        if k == 0 || k > self.zeros.len() {
            return Err(Error::ZeroShortfall {
                nu: self.nu,
                available: self.zeros.len(),
                requested: k,
            });
        }
        Ok(self.zeros[k - 1])
    }
}

/// First `k_max` positive zeros of J_ν, located by a sign scan and refined
/// by Brent's method to 1e−15 relative.
pub fn bessel_zeros(nu: f64, k_max: usize) -> Result<ZeroTable> {
    if !(nu.is_finite() && nu > -1.0) {
        return Err(Error::Domain(format!("Bessel order {nu} must exceed -1")));
    }
    if k_max == 0 {
        return Err(Error::Domain("k_max must be at least 1".into()));
    }
    let f = |x: f64| j_nonneg(nu, x);
    let mut zeros = Vec::with_capacity(k_max);
    let mut a = 1e-6;
    let mut fa = f(a);
    let mut steps = 0usize;
    let cap = 1000 + 20 * k_max;
    while zeros.len() < k_max {
        steps += 1;
        if steps > cap {
            return Err(Error::Convergence {
                context: "Bessel zero scan",
                iterations: steps,
                last: a,
                previous: zeros.last().copied().unwrap_or(0.0),
            });
        }
        let b = a + SCAN_STEP;
        let fb = f(b);
        if fa == 0.0 {
            zeros.push(a);
        } else if fa.signum() != fb.signum() && fb != 0.0 {
            let z = brent(f, a, b, 1e-15).ok_or(Error::Convergence {
                context: "Bessel zero refinement",
                iterations: 200,
                last: b,
                previous: a,
            })?;
            zeros.push(z);
        }
        a = b;
        fa = fb;
    }
    Ok(ZeroTable { nu, zeros })
}

/// The signed zeros s_n of J_{α+1}: s_0 = 0, s_n = j_{α+1,n}, s_{−n} = −s_n.
#[derive(Debug, Clone, PartialEq)]
pub struct SignedZeros {
    alpha: f64,
    table: ZeroTable,
}

impl SignedZeros {
    pub fn new(alpha: f64, n_max: usize) -> Result<Self> {
        Ok(Self {
            alpha,
            table: bessel_zeros(alpha + 1.0, n_max.max(1))?,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Largest |n| available.
    pub fn n_max(&self) -> usize {
        self.table.len()
    }

    pub fn s(&self, n: i64) -> Result<f64> {
        if n == 0 {
            return Ok(0.0);
        }
        let z = self.table.get(n.unsigned_abs() as usize)?;
        Ok(if n > 0 { z } else { -z })
    }
}
