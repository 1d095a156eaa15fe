use thiserror::Error;

/// Failures reported by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parameter outside its domain: {0}")]
    Domain(String),

    #[error("pole of the Gamma function at {0}")]
    Pole(f64),

    #[error("division by zero in {0}")]
    DivisionByZero(&'static str),

    #[error("non-finite value {value} at node {node} in {context}")]
    NonFinite {
        context: &'static str,
        node: f64,
        value: f64,
    },

    #[error("{context} did not converge after {iterations} steps (last {last:e}, previous {previous:e})")]
    Convergence {
        context: &'static str,
        iterations: usize,
        last: f64,
        previous: f64,
    },

    #[error("Jackson sum does not decay at the grid boundary (term {boundary_term:e} at exponent {exponent})")]
    NonDecay { boundary_term: f64, exponent: i32 },

    #[error("series in {0} neither terminates nor has |z| < 1")]
    SeriesDivergent(&'static str),

    #[error("zero table for order {nu} holds {available} zeros, {requested} requested")]
    ZeroShortfall {
        nu: f64,
        available: usize,
        requested: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
