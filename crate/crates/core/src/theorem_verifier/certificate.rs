use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Result;
use crate::exact_arith::{sign_certificate, AssertedSign, Poly, SignCertificate};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    Counterexample,
    OutOfAssertedRange,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Counterexample => "counterexample",
            Status::OutOfAssertedRange => "out-of-asserted-range",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<i64>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledSign {
    pub label: String,
    #[serde(flatten)]
    pub certificate: SignCertificate,
}

/// `lhs == rhs` as polynomials, i.e. for every value of the variable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub label: String,
    pub variable: String,
    pub lhs: Poly,
    pub rhs: Poly,
    pub holds: bool,
}

/// A scalar fact checked once, e.g. a table entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fact {
    pub label: String,
    pub holds: bool,
}

/// Exact per-degree scan of a claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub from: i64,
    pub to: i64,
    pub asserted_from: i64,
    pub points_checked: u64,
    /// Failures at degrees below `asserted_from`; reported, never fatal.
    pub failures_below_asserted: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure_below_asserted: Option<i64>,
}

/// Verdict for one named claim.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub claim_id: String,
    pub params: Value,
    pub status: Status,
    pub witness: Option<Witness>,
    pub sign_certificates: Vec<LabeledSign>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub identities: Vec<IdentityCheck>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub facts: Vec<Fact>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub scans: Vec<ScanSummary>,
    /// Geometric inputs taken as given; the certificate covers arithmetic only.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub hypotheses: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub paper_anchor: String,
}

impl Certificate {
    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }

    /// Every embedded check passed (ignores range bookkeeping).
    pub fn checks_pass(&self) -> bool {
        self.status != Status::Counterexample
    }

    /// Whether at least one check is symbolic, i.e. covers infinitely many
    /// values rather than a finite sample.
    pub fn has_unbounded_check(&self) -> bool {
        !self.sign_certificates.is_empty() || !self.identities.is_empty()
    }
}

pub(crate) struct CertificateBuilder {
    cert: Certificate,
    below_asserted_range: bool,
}

impl CertificateBuilder {
    pub fn new(claim_id: &str, anchor: &str, params: Value) -> Self {
        CertificateBuilder {
            cert: Certificate {
                claim_id: claim_id.to_string(),
                params,
                status: Status::Verified,
                witness: None,
                sign_certificates: Vec::new(),
                identities: Vec::new(),
                facts: Vec::new(),
                scans: Vec::new(),
                hypotheses: Vec::new(),
                notes: Vec::new(),
                paper_anchor: anchor.to_string(),
            },
            below_asserted_range: false,
        }
    }

    fn fail(&mut self, d: Option<i64>, detail: String) {
        if self.cert.witness.is_none() {
            self.cert.witness = Some(Witness { d, detail });
        }
        self.cert.status = Status::Counterexample;
    }

    /// Records that the requested range starts below the claim's threshold.
    pub fn asserted_from(&mut self, threshold: i64, d_from: i64) -> &mut Self {
        if d_from < threshold {
            self.below_asserted_range = true;
            self.cert
                .notes
                .push(format!("claim asserted for d >= {threshold}; requested range starts at {d_from}"));
        }
        self
    }

    pub fn sign(&mut self, label: impl Into<String>, p: &Poly, from: i64, sign: AssertedSign) -> Result<&mut Self> {
        let label = label.into();
        let certificate = sign_certificate(p, from, sign)?;
        if !certificate.holds() {
            self.fail(certificate.counterexample, format!("{label}: {certificate}"));
        }
        self.cert.sign_certificates.push(LabeledSign { label, certificate });
        Ok(self)
    }

    pub fn identity(&mut self, label: impl Into<String>, variable: &str, lhs: Poly, rhs: Poly) -> &mut Self {
        let label = label.into();
        let holds = lhs == rhs;
        if !holds {
            self.fail(None, format!("{label}: {lhs} != {rhs}"));
        }
        self.cert.identities.push(IdentityCheck {
            label,
            variable: variable.to_string(),
            lhs,
            rhs,
            holds,
        });
        self
    }

    pub fn fact(&mut self, label: impl Into<String>, holds: bool) -> &mut Self {
        let label = label.into();
        if !holds {
            self.fail(None, label.clone());
        }
        self.cert.facts.push(Fact { label, holds });
        self
    }

    /// Runs `check` on every degree in `[from, to]` in parallel. A failure at
    /// `d >= asserted_from` is a counterexample; failures below are tallied.
    pub fn scan<F>(&mut self, from: i64, to: i64, asserted_from: i64, check: F) -> &mut Self
    where
        F: Fn(i64) -> std::result::Result<(), String> + Sync,
    {
        let mut failures: Vec<(i64, String)> = (from..=to)
            .into_par_iter()
            .filter_map(|d| check(d).err().map(|e| (d, e)))
            .collect();
        failures.sort_by_key(|f| f.0);
        let below: Vec<_> = failures.iter().filter(|f| f.0 < asserted_from).collect();
        let summary = ScanSummary {
            from,
            to,
            asserted_from,
            points_checked: u64::try_from((to - from + 1).max(0)).unwrap_or(0),
            failures_below_asserted: below.len() as u64,
            first_failure_below_asserted: below.first().map(|f| f.0),
        };
        if let Some((d, msg)) = failures.iter().find(|f| f.0 >= asserted_from) {
            self.fail(Some(*d), format!("d = {d}: {msg}"));
        }
        self.cert.scans.push(summary);
        self
    }

    pub fn hypothesis(&mut self, text: &str) -> &mut Self {
        self.cert.hypotheses.push(text.to_string());
        self
    }

    pub fn note(&mut self, text: impl Into<String>) -> &mut Self {
        self.cert.notes.push(text.into());
        self
    }

    pub fn finish(mut self) -> Certificate {
        if self.cert.status == Status::Verified && self.below_asserted_range {
            self.cert.status = Status::OutOfAssertedRange;
        }
        self.cert
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn failing_sign_sets_witness() {
        let mut b = CertificateBuilder::new("T", "test", json!({}));
        b.sign("x - 5 > 0", &Poly::from_ints(&[-5, 1]), 0, AssertedSign::Positive).unwrap();
        let c = b.finish();
        assert_eq!(c.status, Status::Counterexample);
        assert_eq!(c.witness.unwrap().d, Some(0));
    }

    #[test]
    fn below_threshold_failures_are_not_fatal() {
        let mut b = CertificateBuilder::new("T", "test", json!({}));
        b.asserted_from(10, 5);
        b.scan(5, 20, 10, |d| if d < 8 { Err("small".into()) } else { Ok(()) });
        let c = b.finish();
        assert_eq!(c.status, Status::OutOfAssertedRange);
        assert_eq!(c.scans[0].failures_below_asserted, 3);
        assert_eq!(c.scans[0].first_failure_below_asserted, Some(5));
    }

    #[test]
    fn scan_failure_in_range_is_counterexample() {
        let mut b = CertificateBuilder::new("T", "test", json!({}));
        b.scan(1, 100, 1, |d| if d % 37 == 0 { Err("bad".into()) } else { Ok(()) });
        let c = b.finish();
        assert_eq!(c.status, Status::Counterexample);
        assert_eq!(c.witness.unwrap().d, Some(37));
    }

    #[test]
    fn identity_mismatch_fails() {
        let mut b = CertificateBuilder::new("T", "test", json!({}));
        b.identity("x = x", "x", Poly::x(), Poly::x());
        assert!(b.finish().is_verified());
        let mut b = CertificateBuilder::new("T", "test", json!({}));
        b.identity("x = x + 1", "x", Poly::x(), Poly::x_plus(1));
        assert_eq!(b.finish().status, Status::Counterexample);
    }
}
