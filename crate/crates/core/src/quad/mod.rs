//! Quadrature: Gauss–Jacobi rules, the weighted measures on [−1, 1], and
//! semi-infinite oscillatory Bessel-product integrals.

mod bessel_products;
mod measure;
mod oscillatory;
mod rules;

pub use bessel_products::{i_minus_closed, i_minus_quadrature, i_plus_closed, i_plus_quadrature};
pub use measure::{integrate_interval, integrate_interval_cx, Measure, MeasureKind, DEFAULT_ORDER};
pub use oscillatory::{
    integrate_bessel_product, integrate_bessel_product_with, weber_schafheitlin, wynn_epsilon,
    OscillatoryOptions, OscillatoryValue,
};
pub use rules::{gauss_jacobi, gauss_legendre, QuadRule};
