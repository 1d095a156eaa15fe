//! Bilinear expansions of kernels in biorthogonal systems, with the
//! concrete Fourier, Gegenbauer, Dunkl sampling and Fourier–Neumann cases.

mod neumann;
mod sampling;
mod system;

pub use neumann::{
    classical_planewave_partial_sum, dunkl_transform_neumann, dunkl_transform_neumann_closed,
    fourier_neumann_coeffs, fourier_neumann_sum, hankel_kernel_from_dunkl, hankel_neumann_sum,
    neumann_fn, neumann_fns, neumann_inner_product, neumann_norm_sq, planewave_partial_sum,
    FN_OUTER_ORDER,
};
pub use sampling::{
    dunkl_sampling_sum, kernel_norm_sq, kernel_norm_sq_quadrature, sampling_coefficient, Density,
    DunklSampler, PWFunction,
};
pub use system::{
    expand_kernel, sampling_normalizer, BiorthSystem, IndexSet, IndexedFn, KernelFn, KernelSystem,
    TruncatedSeries,
};
