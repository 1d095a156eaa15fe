//! Numerical machinery for bilinear biorthogonal expansions: Bessel and
//! Dunkl kernels, generalized Gegenbauer families, weighted and oscillatory
//! quadrature, plane-wave, sampling and Fourier–Neumann expansions, the
//! spectrum of the right inverse of the Dunkl operator, and their q-analogues
//! built on the third Jackson q-Bessel function.

// Negated comparisons reject NaN along with out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
pub mod biortho;
pub mod error;
pub mod orthopoly;
pub mod params;
pub mod qspec;
pub mod quad;
pub mod specfun;
pub mod spectrum;

pub use error::{Error, Result};
pub use params::Params;

/// Complex scalar used for kernels and coefficients.
pub type Cx = num_complex::Complex64;
