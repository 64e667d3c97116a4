use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::poly::{eval_big, Poly};
use super::rat::Rat;
use crate::error::{Error, Result};

/// Longest finite scan a certificate will run before giving up.
pub const MAX_SCAN: i64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AssertedSign {
    Positive,
    Nonnegative,
    Negative,
    Nonpositive,
}

impl AssertedSign {
    pub fn admits(self, value: &BigInt) -> bool {
        match self {
            AssertedSign::Positive => value.is_positive(),
            AssertedSign::Nonnegative => !value.is_negative(),
            AssertedSign::Negative => value.is_negative(),
            AssertedSign::Nonpositive => !value.is_positive(),
        }
    }

    pub fn admits_rat(self, value: &Rat) -> bool {
        match self {
            AssertedSign::Positive => value.is_positive(),
            AssertedSign::Nonnegative => !value.is_negative(),
            AssertedSign::Negative => value.is_negative(),
            AssertedSign::Nonpositive => !value.is_positive(),
        }
    }

    fn wants_positive_tail(self) -> bool {
        matches!(self, AssertedSign::Positive | AssertedSign::Nonnegative)
    }

    fn symbol(self) -> &'static str {
        match self {
            AssertedSign::Positive => "> 0",
            AssertedSign::Nonnegative => ">= 0",
            AssertedSign::Negative => "< 0",
            AssertedSign::Nonpositive => "<= 0",
        }
    }
}

/// Proof (or refutation) that `polynomial(x)` has the asserted sign for every
/// integer `x >= from`.
///
/// Every real root lies strictly below the Cauchy bound
/// `1 + max |c_i / c_deg|`, so beyond `tail_bound` the sign is that of the
/// leading coefficient. The integers in `scanned_range` are checked exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignCertificate {
    pub polynomial: Poly,
    pub from: i64,
    pub asserted_sign: AssertedSign,
    pub tail_bound: i64,
    pub scanned_range: (i64, i64),
    /// Least integer in the scanned range violating the asserted sign.
    pub counterexample: Option<i64>,
    /// Whether the leading coefficient's sign agrees with the asserted sign.
    pub tail_ok: bool,
}

impl SignCertificate {
    /// The claim holds for every integer `>= from`.
    pub fn holds(&self) -> bool {
        self.counterexample.is_none() && self.tail_ok
    }
}

impl fmt::Display for SignCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} for x >= {} (scanned {}..={}, tail beyond {})",
            self.polynomial,
            self.asserted_sign.symbol(),
            self.from,
            self.scanned_range.0,
            self.scanned_range.1,
            self.tail_bound
        )?;
        if let Some(x) = self.counterexample {
            write!(f, ": FAILS at x = {x}")?;
        }
        Ok(())
    }
}

/// Cauchy root bound rounded up to an integer. Constant polynomials have no
/// roots, so any value works; we return `i64::MIN`.
fn cauchy_tail_bound(p: &Poly) -> Result<i64> {
    let coeffs = p.coeffs();
    let lead = p.leading().expect("nonzero").abs();
    if coeffs.len() == 1 {
        return Ok(i64::MIN);
    }
    let max_ratio = coeffs[..coeffs.len() - 1]
        .iter()
        .map(|c| &c.abs() / &lead)
        .max()
        .unwrap_or_else(Rat::zero);
    let bound = (Rat::one() + max_ratio).ceil();
    bound
        .to_i64()
        .ok_or_else(|| Error::ScanTooLong(format!("root bound {bound} exceeds i64")))
}

/// Certify that `p(x)` has sign `asserted` for all integers `x >= from`.
///
/// Returns a certificate whose `counterexample` is the least failing integer
/// when the claim is false. Errors on the zero polynomial and when the finite
/// part of the range exceeds [`MAX_SCAN`].
pub fn sign_certificate(p: &Poly, from: i64, asserted: AssertedSign) -> Result<SignCertificate> {
    if p.is_zero() {
        return Err(Error::InvalidArgument(
            "sign certificate requested for the zero polynomial".into(),
        ));
    }
    let tail_bound = cauchy_tail_bound(p)?;
    let end = tail_bound.max(from);
    if end - from > MAX_SCAN {
        return Err(Error::ScanTooLong(format!(
            "{} integers between {from} and {end}",
            end - from
        )));
    }
    let tail_ok = p.leading().expect("nonzero").is_positive() == asserted.wants_positive_tail();
    let (ints, _) = p.integer_multiple();
    let counterexample = (from..=end).find(|&x| !asserted.admits(&eval_big(&ints, &BigInt::from(x))));
    Ok(SignCertificate {
        polynomial: p.clone(),
        from,
        asserted_sign: asserted,
        tail_bound: tail_bound.max(from),
        scanned_range: (from, end),
        counterexample,
        tail_ok,
    })
}
