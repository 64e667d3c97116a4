//! Genus bounds for projective curves and the surface formulas that feed the
//! case analysis: Castelnuovo, Halphen, the profile bounds `G(4;d,5)` and
//! `G(4;d,4)`, the double point formula and the `chi` lower bound on quartics.
//!
//! Every closed form is also available as a polynomial in `d` on a fixed
//! residue class, which is what the sign certificates consume.

mod genus;
mod profile;
mod surface;

pub use genus::{
    castelnuovo_bound, castelnuovo_poly, halphen_bound, halphen_poly, pi1_bound, pi1_poly, pi2_bound, pi2_poly,
    BoundParameters, FormulaId, GenusBoundResult,
};
pub use profile::{
    castelnuovo_profile, genus_from_profile, pi1_profile, pi2_profile, propagate_profile, HilbertProfile,
};
pub use surface::{
    chi_lower_bound_s4, chi_lower_bound_s4_weak, chi_s4_poly, chi_s4_weak_poly, double_point_k2,
    weighted_defect_poly, weighted_defect_sum, WeightedDefect, CHI_S4_CONSTANT,
};
