//! Lommel polynomials R_{n,a}(z) and their modified form h_{n,a}(w) = R_{n,a}(1/w).

use crate::error::{Error, Result};
use crate::Cx;

fn check(n: i64, a: f64) -> Result<()> {
    if n < -1 {
        return Err(Error::Domain(format!(
            "Lommel index {n} must be at least -1"
        )));
    }
    if !(a > 0.0) {
        return Err(Error::Domain(format!(
            "Lommel parameter a = {a} must be positive"
        )));
    }
    Ok(())
}

/// R_{n,a}(z) by the forward recurrence R_{n+1} = (2(n+a)/z) R_n − R_{n−1}.
pub fn lommel(n: i64, a: f64, z: f64) -> Result<f64> {
    check(n, a)?;
    if z == 0.0 {
        return Err(Error::DivisionByZero("lommel"));
    }
    Ok(modified_lommel_unchecked(n, a, 1.0 / z))
}

/// h_{n,a}(w) with h_{−1} = 0, h_0 = 1, h_{n+1} = 2(n+a) w h_n − h_{n−1}.
pub fn modified_lommel(n: i64, a: f64, w: f64) -> Result<f64> {
    check(n, a)?;
    Ok(modified_lommel_unchecked(n, a, w))
}

fn modified_lommel_unchecked(n: i64, a: f64, w: f64) -> f64 {
    if n == -1 {
        return 0.0;
    }
    let (mut prev, mut cur) = (0.0, 1.0);
    for k in 0..n {
        let next = 2.0 * (k as f64 + a) * w * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// h_{n,a}(w) for complex w.
pub fn modified_lommel_cx(n: i64, a: f64, w: Cx) -> Result<Cx> {
    check(n, a)?;
    if n == -1 {
        return Ok(Cx::new(0.0, 0.0));
    }
    let (mut prev, mut cur) = (Cx::new(0.0, 0.0), Cx::new(1.0, 0.0));
    for k in 0..n {
        let next = w * cur * (2.0 * (k as f64 + a)) - prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}
