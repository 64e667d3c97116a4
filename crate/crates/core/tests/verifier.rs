use kbound::scroll_surfaces::min_k2_over_classes;
use kbound::theorem_verifier::{
    verify_appendix, verify_r4, verify_sharpness, verify_theorem, Certificate, Status, ALL_CLAIM_IDS,
};
use proptest::prelude::*;

fn invariants_hold(c: &Certificate) -> bool {
    match c.status {
        Status::Verified | Status::OutOfAssertedRange => {
            c.witness.is_none()
                && c.sign_certificates.iter().all(|s| s.certificate.holds())
                && c.identities.iter().all(|i| i.holds)
                && c.facts.iter().all(|f| f.holds)
        }
        Status::Counterexample => c.witness.is_some(),
    }
}

#[test]
fn certificate_invariants_over_full_run() {
    let v = verify_theorem(36, 300).unwrap();
    assert!(v.overall);
    assert!(v.certificates.iter().all(invariants_hold));
}

#[test]
fn every_listed_claim_has_one_generator() {
    let v = verify_theorem(36, 50).unwrap();
    for id in ALL_CLAIM_IDS {
        assert!(v.certificates.iter().any(|c| c.claim_id == id), "{id} missing");
    }
    assert!(v.certificates.iter().all(|c| ALL_CLAIM_IDS.contains(&c.claim_id.as_str())));
}

#[test]
fn certificates_are_sorted_and_deterministic() {
    let a = serde_json::to_string(&verify_theorem(36, 100).unwrap()).unwrap();
    let b = serde_json::to_string(&verify_theorem(36, 100).unwrap()).unwrap();
    assert_eq!(a, b);
    let v = verify_theorem(36, 100).unwrap();
    let keys: Vec<_> = v.certificates.iter().map(|c| (c.claim_id.clone(), c.params.to_string())).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn certificate_json_round_trip() {
    for c in verify_r4(36, 60).unwrap() {
        let json = serde_json::to_string(&c).unwrap();
        let back: Certificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
    }
}

#[test]
fn range_below_threshold_is_reported() {
    let v = verify_theorem(20, 40).unwrap();
    assert!(v.overall);
    for id in ["R4.reduce", "R4.s4.x<=6", "R4.s4.x>6", "R5.profile.seed-4-9-16"] {
        let c = v.certificates.iter().find(|c| c.claim_id == id).unwrap();
        assert_eq!(c.status, Status::OutOfAssertedRange, "{id}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // soundness: a verified range never hides a brute-force counterexample
    #[test]
    fn appendix_soundness(from in 18i64..400, len in 0i64..40) {
        let c = verify_appendix(from, from + len).unwrap();
        prop_assert_eq!(c.status, Status::Verified);
        for d in from..=from + len {
            let (min, _) = min_k2_over_classes(d).unwrap();
            prop_assert!(min >= -i128::from(d) * i128::from(d - 6));
        }
    }

    #[test]
    fn sharpness_soundness(from in 18i64..400, len in 0i64..40) {
        let c = verify_sharpness(from, from + len).unwrap();
        prop_assert_eq!(c.status, Status::Verified);
        for d in (from..=from + len).filter(|d| d % 2 == 0) {
            let (min, classes) = min_k2_over_classes(d).unwrap();
            prop_assert_eq!(min, -i128::from(d) * i128::from(d - 6));
            prop_assert_eq!(classes.len(), 1);
        }
    }
}
