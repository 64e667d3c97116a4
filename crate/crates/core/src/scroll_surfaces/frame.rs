use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_arith::euclid_split;

use super::divisor::{degree, DivisorClass};

/// A degree `d` surface class on the scroll, indexed by the integer `a` in
/// `S ~ (m + 1 + a) H_T + (eps + 1 - 3(a + 1)) W` with `d - 1 = 3m + eps`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScrollFrame {
    pub d: i64,
    pub m: i64,
    pub epsilon: i64,
    pub a: i64,
}

/// `(m, eps)` with `d - 1 = 3m + eps`, `0 <= eps <= 2`.
pub fn split_degree(d: i64) -> (i64, i64) {
    let s = euclid_split(d - 1, 3).expect("modulus 3");
    (s.quotient, s.remainder)
}

/// Admissible range `-m <= a <= floor((m + eps - 1) / 2)` for degree `d`.
pub fn a_range(d: i64) -> (i64, i64) {
    let (m, eps) = split_degree(d);
    (-m, (m + eps - 1).div_euclid(2))
}

impl ScrollFrame {
    pub fn new(d: i64, a: i64) -> Result<Self> {
        if d < 4 {
            return Err(Error::Range(format!("surfaces on T have degree >= 4, got {d}")));
        }
        let (lo, hi) = a_range(d);
        if a < lo || a > hi {
            return Err(Error::Range(format!("a = {a} outside [{lo}, {hi}] for d = {d}")));
        }
        let (m, epsilon) = split_degree(d);
        Ok(ScrollFrame { d, m, epsilon, a })
    }

    pub fn class(&self) -> DivisorClass {
        DivisorClass::new(self.m + 1 + self.a, self.epsilon + 1 - 3 * (self.a + 1))
    }

    /// Inverse of [`ScrollFrame::class`]; `expect_d` must equal the degree of `c`.
    pub fn from_class(c: DivisorClass, expect_d: i64) -> Result<Self> {
        let d = degree(c);
        if d != expect_d {
            return Err(Error::Range(format!("class {c} has degree {d}, expected {expect_d}")));
        }
        if d < 4 {
            return Err(Error::Range(format!("class {c} has degree {d} < 4")));
        }
        let (m, _) = split_degree(d);
        ScrollFrame::new(d, c.alpha - m - 1)
    }
}

pub fn class_from_frame(f: &ScrollFrame) -> DivisorClass {
    f.class()
}

pub fn frame_from_class(c: DivisorClass, expect_d: i64) -> Result<ScrollFrame> {
    ScrollFrame::from_class(c, expect_d)
}
