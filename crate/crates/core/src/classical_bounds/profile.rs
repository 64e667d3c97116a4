use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_arith::{euclid_split, Rat};

/// Lower bound `i -> h(i)` for the Hilbert function of a set of `d` points,
/// stored as the values for `1 <= i < stabilization_index`; from there on the
/// value is `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertProfile {
    pub ambient_label: String,
    pub d: i64,
    values: Vec<i64>,
    stabilization_index: usize,
}

impl HilbertProfile {
    /// Builds a profile from its values at `i = 1, 2, ...`. Values equal to
    /// `d` at the end are dropped; everything past the list is `d`.
    pub fn new(ambient_label: impl Into<String>, d: i64, mut values: Vec<i64>) -> Result<Self> {
        while values.last() == Some(&d) {
            values.pop();
        }
        let profile = HilbertProfile {
            ambient_label: ambient_label.into(),
            d,
            stabilization_index: values.len() + 1,
            values,
        };
        profile.validate()?;
        Ok(profile)
    }

    /// Checks the representation invariants; needed for profiles that arrive
    /// through deserialization.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidArgument(format!("{}: {msg}", self.ambient_label)));
        if self.d < 1 {
            return bad(format!("degree must be positive, got {}", self.d));
        }
        if self.stabilization_index != self.values.len() + 1 {
            return bad(format!(
                "stabilization index {} does not match {} explicit values",
                self.stabilization_index,
                self.values.len()
            ));
        }
        if let Some(v) = self.values.iter().find(|&&v| v < 0 || v > self.d) {
            return bad(format!("value {v} outside [0, {}]", self.d));
        }
        if self.values.windows(2).any(|w| w[0] > w[1]) {
            return bad("values are not nondecreasing".into());
        }
        Ok(())
    }

    pub fn value_at(&self, i: usize) -> i64 {
        assert!(i >= 1, "profiles are indexed from 1");
        self.values.get(i - 1).copied().unwrap_or(self.d)
    }

    /// Explicit values before stabilization.
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// First index from which the value is `d`.
    pub fn stabilization_index(&self) -> usize {
        self.stabilization_index
    }

    /// `sum_{i >= 1} (d - value_at(i))` as an integer.
    pub fn defect_sum(&self) -> i64 {
        self.values.iter().map(|v| self.d - v).sum()
    }

    /// Pointwise `self >= other` at every index.
    pub fn dominates(&self, other: &HilbertProfile) -> bool {
        let n = self.stabilization_index.max(other.stabilization_index);
        (1..=n).all(|i| self.value_at(i) >= other.value_at(i))
    }
}

/// Upper bound for the genus of a curve whose general hyperplane section has
/// Hilbert function bounded below by `profile`.
pub fn genus_from_profile(profile: &HilbertProfile) -> Result<Rat> {
    profile.validate()?;
    Ok(Rat::from(profile.defect_sum()))
}

/// `min{d, 1 + i(r-1)}`: points in uniform position spanning `P^{r-1}`.
pub fn castelnuovo_profile(r: i64, d: i64) -> Result<HilbertProfile> {
    if r < 2 || d < r {
        return Err(Error::OutOfDomain(format!(
            "Castelnuovo profile needs r >= 2 and d >= r, got r={r}, d={d}"
        )));
    }
    let values = (1..)
        .map(|i| (1 + i * (r - 1)).min(d))
        .take_while(|&v| v < d)
        .collect();
    HilbertProfile::new(format!("Castelnuovo-minimal r={r}"), d, values)
}

/// The profile `h` whose defect sum is `G(4;d,5)`: `5i - 1` for `i <= n`,
/// `d - w` at `n + 1`, where `d - 1 = 5n + v` and `w = floor(v/2)`.
pub fn pi2_profile(d: i64) -> Result<HilbertProfile> {
    if d < 6 {
        return Err(Error::OutOfDomain(format!("pi2 profile needs d >= 6, got {d}")));
    }
    let split = euclid_split(d - 1, 5)?;
    let (n, v) = (split.quotient, split.remainder);
    let w = v / 2;
    let mut values: Vec<i64> = (1..=n).map(|i| 5 * i - 1).collect();
    values.push(d - w);
    HilbertProfile::new("h for G(4;d,5)", d, values)
}

/// The profile `k` whose defect sum is `G(4;d,4)`: `4i` for `i <= p`, then
/// `d - 1` at `p + 1` when `q = 3`, where `d - 1 = 4p + q`.
pub fn pi1_profile(d: i64) -> Result<HilbertProfile> {
    if d < 5 {
        return Err(Error::OutOfDomain(format!("pi1 profile needs d >= 5, got {d}")));
    }
    let split = euclid_split(d - 1, 4)?;
    let (p, q) = (split.quotient, split.remainder);
    let mut values: Vec<i64> = (1..=p).map(|i| 4 * i).collect();
    if q == 3 {
        values.push(d - 1);
    }
    HilbertProfile::new("k for G(4;d,4)", d, values)
}

/// Smallest nondecreasing profile with the given values at `i = 1, 2, 3`
/// satisfying `h(i) >= min{d, h(i-3) + h(3) - 1}` for `i >= 4`.
pub fn propagate_profile(seed: [i64; 3], d: i64) -> Result<HilbertProfile> {
    if seed[0] < 1 || seed.windows(2).any(|w| w[0] > w[1]) || seed[2] > d {
        return Err(Error::InvalidArgument(format!(
            "seed {seed:?} must be positive, nondecreasing and at most d={d}"
        )));
    }
    if seed[2] < d && seed[2] < 2 {
        return Err(Error::InvalidArgument(format!(
            "seed {seed:?} never reaches d={d}"
        )));
    }
    let step = seed[2] - 1;
    let mut values = seed.to_vec();
    while *values.last().expect("seeded") < d {
        let i = values.len();
        let next = (values[i - 3] + step).min(d).max(values[i - 1]);
        values.push(next);
    }
    HilbertProfile::new(
        format!("propagated from ({}, {}, {})", seed[0], seed[1], seed[2]),
        d,
        values,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn castelnuovo_profiles() {
        let p = castelnuovo_profile(5, 18).unwrap();
        assert_eq!(p.values(), &[5, 9, 13, 17]);
        assert_eq!(p.value_at(5), 18);
        assert_eq!(p.value_at(50), 18);
        assert_eq!(castelnuovo_profile(3, 6).unwrap().values(), &[3, 5]);
        assert_eq!(castelnuovo_profile(5, 21).unwrap().values(), &[5, 9, 13, 17]);
        assert_eq!(castelnuovo_profile(5, 21).unwrap().value_at(5), 21);
    }

    #[test]
    fn defect_sums() {
        assert_eq!(genus_from_profile(&pi2_profile(31).unwrap()).unwrap(), Rat::from(87));
        assert_eq!(genus_from_profile(&castelnuovo_profile(5, 18).unwrap()).unwrap(), Rat::from(28));
        let flat = HilbertProfile::new("constant", 12, vec![12, 12]).unwrap();
        assert_eq!(genus_from_profile(&flat).unwrap(), Rat::zero());
        assert_eq!(flat.stabilization_index(), 1);
    }

    #[test]
    fn pi2_and_pi1_shapes() {
        assert_eq!(pi2_profile(31).unwrap().values(), &[4, 9, 14, 19, 24, 29]);
        // d = 35: v = 4, w = 2
        assert_eq!(pi2_profile(35).unwrap().values(), &[4, 9, 14, 19, 24, 29, 33]);
        assert_eq!(pi1_profile(36).unwrap().values(), &[4, 8, 12, 16, 20, 24, 28, 32, 35]);
        assert_eq!(pi1_profile(5).unwrap().values(), &[4]);
        assert!(pi1_profile(4).is_err());
        assert!(pi2_profile(5).is_err());
    }

    #[test]
    fn propagation_examples() {
        let p = propagate_profile([4, 9, 16], 31).unwrap();
        assert_eq!(p.value_at(4), 19);
        assert_eq!(p.values(), &[4, 9, 16, 19, 24]);
        let p = propagate_profile([4, 10, 19], 40).unwrap();
        assert_eq!(p.value_at(6), 37);
        let p = propagate_profile([25, 25, 25], 25).unwrap();
        assert_eq!(p.defect_sum(), 0);
    }

    #[test]
    fn propagated_dominates_pi2_at_31() {
        let p = propagate_profile([4, 9, 16], 31).unwrap();
        assert!(p.dominates(&pi2_profile(31).unwrap()));
        assert!(p.defect_sum() <= 87);
    }

    #[test]
    fn invalid_inputs() {
        assert!(propagate_profile([4, 3, 16], 31).is_err());
        assert!(propagate_profile([0, 9, 16], 31).is_err());
        assert!(propagate_profile([4, 9, 40], 31).is_err());
        assert!(propagate_profile([1, 1, 1], 5).is_err());
        assert!(HilbertProfile::new("x", 10, vec![3, 2]).is_err());
        assert!(HilbertProfile::new("x", 10, vec![3, 11]).is_err());
        let json = r#"{"ambient_label":"bad","d":10,"values":[3,5],"stabilization_index":7}"#;
        let p: HilbertProfile = serde_json::from_str(json).unwrap();
        assert!(matches!(genus_from_profile(&p), Err(Error::InvalidArgument(_))));
    }
}
