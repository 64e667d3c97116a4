use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::appendix::verify_appendix;
use super::certificate::{Certificate, Status};
use super::r4::verify_r4;
use super::r5::{verify_r5_exclusion, verify_r5_remark};
use super::r6::{verify_r_ge6_scroll, verify_r_ge6_spanned};
use super::sharpness::verify_sharpness;

/// The theorem is stated for `d > 35`.
pub const THEOREM_FROM: i64 = 36;

/// Values of `r` checked individually in the spanned case; `r >= 9` is also
/// covered by the sign certificate in `r`.
pub const SPANNED_R: std::ops::RangeInclusive<i64> = 5..=9;
/// Values of `r` checked individually in the scroll case; `r >= 7` is also
/// covered by the cubic in `r`.
pub const SCROLL_R: std::ops::RangeInclusive<i64> = 6..=9;

/// Every claim id the verifier can emit.
pub const ALL_CLAIM_IDS: [&str; 14] = [
    "APPENDIX.min",
    "R4.reduce",
    "R4.s2",
    "R4.s3",
    "R4.s4.x<=6",
    "R4.s4.x>6",
    "R5.abs",
    "R5.deg4.cubic",
    "R5.profile.seed-4-10-19",
    "R5.profile.seed-4-9-16",
    "R5.remark.psi",
    "R6.scroll.psi",
    "R6.spanned.quadratic",
    "SHARPNESS",
];

/// Aggregate verdict over `[d_from, d_to]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseVerdict {
    pub d_from: i64,
    pub d_to: i64,
    pub asserted_from: i64,
    /// No certificate carries a counterexample, so every in-range claim is verified.
    pub overall: bool,
    pub certificates: Vec<Certificate>,
}

impl CaseVerdict {
    pub fn from_certificates(d_from: i64, d_to: i64, mut certificates: Vec<Certificate>) -> Self {
        sort_certificates(&mut certificates);
        let overall = certificates.iter().all(|c| c.status != Status::Counterexample);
        CaseVerdict {
            d_from,
            d_to,
            asserted_from: THEOREM_FROM,
            overall,
            certificates,
        }
    }

    pub fn any_out_of_range(&self) -> bool {
        self.certificates.iter().any(|c| c.status == Status::OutOfAssertedRange)
    }
}

/// Orders by claim id, then by serialized parameters.
pub fn sort_certificates(certs: &mut [Certificate]) {
    certs.sort_by_cached_key(|c| (c.claim_id.clone(), c.params.to_string()));
}

pub(crate) fn check_range(d_from: i64, d_to: i64) -> Result<()> {
    if d_from > d_to {
        return Err(Error::InvalidArgument(format!("empty degree range [{d_from}, {d_to}]")));
    }
    if d_from < 1 {
        return Err(Error::InvalidArgument(format!("degrees start at 1, got {d_from}")));
    }
    Ok(())
}

pub fn r6_certificates() -> Result<Vec<Certificate>> {
    let mut out = Vec::new();
    for r in SPANNED_R {
        out.push(verify_r_ge6_spanned(r)?);
    }
    for r in SCROLL_R {
        out.push(verify_r_ge6_scroll(r)?);
    }
    Ok(out)
}

/// Every case certificate plus sharpness over `[d_from, d_to]`.
pub fn verify_theorem(d_from: i64, d_to: i64) -> Result<CaseVerdict> {
    check_range(d_from, d_to)?;
    let mut certs = verify_r4(d_from, d_to)?;
    certs.extend(r6_certificates()?);
    certs.push(verify_r5_remark()?);
    certs.extend(verify_r5_exclusion(d_from, d_to)?);
    certs.push(verify_appendix(d_from, d_to)?);
    certs.push(verify_sharpness(d_from, d_to)?);
    Ok(CaseVerdict::from_certificates(d_from, d_to, certs))
}
