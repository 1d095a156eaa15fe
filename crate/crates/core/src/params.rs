use crate::error::{Error, Result};

/// The index pair (α, β) carried by every expansion.
///
/// Construction enforces α > −1, β > −1 and α + β > −1. Operations that
/// additionally need β < 1 check it themselves via [`Params::require_beta_below_one`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params {
    alpha: f64,
    beta: f64,
}

impl Params {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !alpha.is_finite() || !beta.is_finite() {
            return Err(Error::Domain(format!(
                "non-finite parameters ({alpha}, {beta})"
            )));
        }
        if alpha <= -1.0 {
            return Err(Error::Domain(format!("alpha = {alpha} must exceed -1")));
        }
        if beta <= -1.0 {
            return Err(Error::Domain(format!("beta = {beta} must exceed -1")));
        }
        if alpha + beta <= -1.0 {
            return Err(Error::Domain(format!(
                "alpha + beta = {} must exceed -1",
                alpha + beta
            )));
        }
        Ok(Self { alpha, beta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// α + β, the order shift of the Neumann functions.
    pub fn sum(&self) -> f64 {
        self.alpha + self.beta
    }

    /// The same α with β replaced by β + 1.
    pub fn shift_beta(&self) -> Self {
        Self {
            alpha: self.alpha,
            beta: self.beta + 1.0,
        }
    }

    pub fn require_beta_below_one(&self) -> Result<()> {
        if self.beta < 1.0 {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "beta = {} must be below 1",
                self.beta
            )))
        }
    }
}
