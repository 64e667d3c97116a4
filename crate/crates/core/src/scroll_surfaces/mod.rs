//! Surfaces on the smooth rational normal 3-fold scroll `T` of degree 3 in
//! `P^5`, described by their classes `alpha H_T + beta W` in `Pic T`.
//!
//! Two independent routes compute `K_S^2`: the trilinear intersection form
//! ([`k2_intersection`]) and the cubic `phi(a)` in the frame index `a`
//! ([`phi`]). Minimization over `a` is an exhaustive integer scan.

mod divisor;
mod frame;
mod phi;

pub use divisor::{
    admissible_classes, degree, is_admissible, k2_intersection, sectional_genus, DivisorClass, IntersectionRing,
    SCROLL_RING,
};
pub use frame::{a_range, class_from_frame, frame_from_class, split_degree, ScrollFrame};
pub use phi::{
    critical_interval, discriminant, extremal_class, min_k2_closed_form, min_k2_over_classes, minimize_k2, phi,
    phi_derivative, phi_derivative_symbolic, phi_derivative_value, phi_flagged, phi_symbolic, phi_value, scan_degree,
    CriticalPoints, ExtremalSurface, K2Minimum, ScanRecord,
};
