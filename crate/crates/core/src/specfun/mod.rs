//! Scalar special functions: Gamma, Bessel J_ν, the normalized Bessel
//! variant 𝓘_α, the Dunkl kernel E_α, Bessel zeros and Lommel polynomials.

mod bessel;
mod gamma;
mod kernel;
mod lommel;
pub(crate) mod roots;
mod zeros;

pub(crate) use bessel::j_nonneg;
pub use bessel::{
    bessel_j, bessel_j_bounded, bessel_j_orders, bessel_j_ratio, bessel_ratio_orders,
    hankel_coefficients, DEFAULT_X_MAX,
};
pub(crate) use gamma::gamma_ratio;
pub use gamma::{gamma, ln_gamma, pochhammer, rgamma};
pub use kernel::{dunkl_kernel, dunkl_kernel_at, script_i, script_i_imag};
pub(crate) use kernel::{dunkl_kernel_unchecked, script_i_imag_unchecked};
pub use lommel::{lommel, modified_lommel, modified_lommel_cx};
pub use zeros::{bessel_zeros, SignedZeros, ZeroTable};

/// Relative tail tolerance shared by the power series.
pub(crate) const SERIES_TOL: f64 = 1e-18;
/// Hard cap on series terms; reaching it is an internal error.
pub(crate) const SERIES_CAP: usize = 500;
