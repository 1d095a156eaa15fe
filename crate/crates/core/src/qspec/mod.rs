//! q-analogues on the grid {±q^k}: q-Pochhammer symbols, ₂φ₁, the third
//! Jackson q-Bessel function, Jackson integrals, little q-Jacobi and
//! q-Gegenbauer families, the q-Dunkl and q-Hankel transforms and the
//! q-plane-wave expansion.

mod basic;
mod bessel;
mod poly;
mod transform;

pub use basic::{phi21, qpoch, qpoch_real, JacksonDomain, QContext, DECAY_TOL, DEFAULT_TOL};
pub use poly::QJacobiFamily;
pub use transform::QPlaneWaveRoute;
