//! Laplacian spectral radius and the closed-form alliance bounds.

mod bounds;
mod radius;

pub use bounds::{
    bounds_coro, bounds_cotainf, bounds_cotasup, bounds_eq5, bounds_eq6, bounds_otfen22,
    bounds_th1, bounds_thof, evaluate_bound, BoundId, BoundOutcome, BoundValue, BoundsReport,
};
pub use radius::{
    laplacian_spectral_radius, line_graph_spectral_radius_regular, spectral_radius, SpectralRadius,
    DEFAULT_MAX_ITER, DEFAULT_TOL,
};
