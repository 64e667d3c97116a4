//! The proof of `K^2 >= -d(d-6)` as named claims with machine-checkable
//! certificates.
//!
//! Each claim is reduced to polynomial identities and sign certificates (which
//! cover every integer past a threshold) plus an exact per-degree scan with
//! independently computed bounds. Geometric inputs the arithmetic rests on are
//! recorded as hypotheses and are not checked.

mod appendix;
mod certificate;
mod common;
mod r4;
mod r5;
mod r6;
mod sharpness;
mod theorem;

pub use appendix::{verify_appendix, APPENDIX_FROM};
pub use certificate::{Certificate, Fact, IdentityCheck, LabeledSign, ScanSummary, Status, Witness};
pub use r4::{verify_r4, REDUCE_FROM, S2_FROM, S3_FROM, S4_FROM, X_GRID_ABOVE_6};
pub use r5::{deg4_cubic, verify_r5_exclusion, verify_r5_remark, ABS_FROM, CUBIC_FROM, PROFILE_FROM, SEEDS};
pub use r6::{psi_cubic, psi_poly, spanned_quadratic, verify_r_ge6_scroll, verify_r_ge6_spanned};
pub use sharpness::{verify_sharpness, SHARPNESS_FROM};
pub(crate) use theorem::check_range;
pub use theorem::{
    r6_certificates, sort_certificates, verify_theorem, CaseVerdict, ALL_CLAIM_IDS, SCROLL_R, SPANNED_R, THEOREM_FROM,
};
