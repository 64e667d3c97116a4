use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `dividend = quotient * modulus + remainder` with `0 <= remainder < modulus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EuclidSplit {
    pub dividend: i64,
    pub modulus: i64,
    pub quotient: i64,
    pub remainder: i64,
}

/// Division with the least nonnegative remainder.
pub fn euclid_split(dividend: i64, modulus: i64) -> Result<EuclidSplit> {
    if modulus < 1 {
        return Err(Error::InvalidArgument(format!(
            "modulus must be positive, got {modulus}"
        )));
    }
    Ok(EuclidSplit {
        dividend,
        modulus,
        quotient: dividend.div_euclid(modulus),
        remainder: dividend.rem_euclid(modulus),
    })
}

/// Binomial coefficient, zero when `k > n`.
pub fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn splits() {
        let s = euclid_split(17, 4).unwrap();
        assert_eq!((s.quotient, s.remainder), (4, 1));
        let s = euclid_split(35, 5).unwrap();
        assert_eq!((s.quotient, s.remainder), (7, 0));
        let s = euclid_split(17, 3).unwrap();
        assert_eq!((s.quotient, s.remainder), (5, 2));
        let s = euclid_split(-7, 3).unwrap();
        assert_eq!((s.quotient, s.remainder), (-3, 2));
    }

    #[test]
    fn bad_modulus() {
        assert!(matches!(euclid_split(5, 0), Err(Error::InvalidArgument(_))));
        assert!(matches!(euclid_split(5, -2), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(9, 3), BigInt::from(84));
        assert_eq!(binom(2, 3), BigInt::from(0));
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(0, 0), BigInt::from(1));
        assert_eq!(binom(60, 30), "118264581564861424".parse::<BigInt>().unwrap());
    }

    proptest! {
        #[test]
        fn reconstruction(dividend in -1_000_000_000i64..1_000_000_000, modulus in 1i64..10_000) {
            let s = euclid_split(dividend, modulus).unwrap();
            prop_assert_eq!(s.quotient * s.modulus + s.remainder, dividend);
            prop_assert!(0 <= s.remainder && s.remainder < modulus);
        }

        #[test]
        fn pascal(n in 1u64..200, k in 1u64..200) {
            prop_assert_eq!(binom(n, k), binom(n - 1, k - 1) + binom(n - 1, k));
        }
    }
}
