use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_arith::{binom, euclid_split, Poly, Rat};

use super::profile::pi1_profile;

/// `K^2` from the double point formula for a smooth surface in `P^4`:
/// `d(d-5) - 10(g-1) + 12 chi - 2K^2 = 0`.
///
/// Inputs violating `chi >= 1 - g` (injectivity of `H^1(O_S) -> H^1(O_H)`)
/// are rejected as inconsistent.
pub fn double_point_k2(d: i64, g: i64, chi: i64) -> Result<i64> {
    let (d, g, chi) = (i128::from(d), i128::from(g), i128::from(chi));
    if chi < 1 - g {
        return Err(Error::Inconsistent(format!(
            "chi = {chi} < 1 - g = {}; (d={d}, g={g}, chi={chi}) is not a smooth surface in P^4",
            1 - g
        )));
    }
    // d(d-5), 10(g-1) and 12 chi are all even, so this never fires for
    // integer input; kept because a fractional K^2 must never be returned.
    let twice = d * (d - 5) - 10 * (g - 1) + 12 * chi;
    if twice % 2 != 0 {
        return Err(Error::Inconsistent(format!(
            "d(d-5) - 10(g-1) + 12chi = {twice} is odd"
        )));
    }
    i64::try_from(twice / 2).map_err(|_| Error::Range(format!("K^2 = {} overflows", twice / 2)))
}

/// Constant term shared by both forms of the `chi` lower bound. It is an
/// external input to the argument, not derived here.
pub const CHI_S4_CONSTANT: (i64, i64) = (-333, 16);

fn chi_s4_base() -> Poly {
    Poly::new(vec![
        Rat::frac(CHI_S4_CONSTANT.0, CHI_S4_CONSTANT.1),
        Rat::frac(-5, 3),
        Rat::frac(-1, 16),
        Rat::frac(1, 96),
    ])
}

/// `d^3/96 - d^2/16 - 5d/3 - 333/16 - (d-3) d (9-x)/8` as a polynomial in `d`.
pub fn chi_s4_poly(x: &Rat) -> Poly {
    let d = Poly::x();
    let correction = (&Poly::x_plus(-3) * &d).scale(&((Rat::from(9) - x) / Rat::from(8)));
    &chi_s4_base() - &correction
}

/// `d^3/96 - 7d^2/16 - 13d/24 - 333/16`, the `x = 6` value of [`chi_s4_poly`].
pub fn chi_s4_weak_poly() -> Poly {
    Poly::new(vec![
        Rat::frac(CHI_S4_CONSTANT.0, CHI_S4_CONSTANT.1),
        Rat::frac(-13, 24),
        Rat::frac(-7, 16),
        Rat::frac(1, 96),
    ])
}

/// Lower bound for `chi(O_S)` of a surface on a quartic hypersurface in
/// `P^4`, whose sectional genus is `d^2/8 + d(x-9)/8 + 1` with `0 <= x <= 9`.
pub fn chi_lower_bound_s4(d: i64, x: &Rat) -> Result<Rat> {
    if x.is_negative() || *x > Rat::from(9) {
        return Err(Error::InvalidArgument(format!("x = {x} outside [0, 9]")));
    }
    if d < 4 {
        return Err(Error::OutOfDomain(format!("chi bound needs d >= 4, got {d}")));
    }
    Ok(chi_s4_poly(x).eval_int(d))
}

/// The `x`-free weakening of [`chi_lower_bound_s4`], strictly smaller for
/// every `x > 6` and `d > 3`.
pub fn chi_lower_bound_s4_weak(d: i64) -> Result<Rat> {
    if d < 4 {
        return Err(Error::OutOfDomain(format!("chi bound needs d >= 4, got {d}")));
    }
    Ok(chi_s4_weak_poly().eval_int(d))
}

/// Both sides of `sum_{i=1}^{d-4} (i-1)(d-k(i)) = C(p,2) d - 8 C(p+1,3) + t p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedDefect {
    pub d: i64,
    pub p: i64,
    pub q: i64,
    pub t: i64,
    pub direct: BigInt,
    pub closed_form: BigInt,
}

impl WeightedDefect {
    pub fn agrees(&self) -> bool {
        self.direct == self.closed_form
    }
}

pub fn weighted_defect_sum(d: i64) -> Result<WeightedDefect> {
    let k = pi1_profile(d)?;
    let split = euclid_split(d - 1, 4)?;
    let (p, q) = (split.quotient, split.remainder);
    let t = i64::from(q == 3);
    // terms with k(i) = d vanish, so the sum stops at the stabilization index
    let last = (d - 4).min(k.stabilization_index() as i64);
    let direct: i128 = (1..=last)
        .map(|i| i128::from(i - 1) * i128::from(d - k.value_at(i as usize)))
        .sum();
    let (pu, du) = (p as u64, BigInt::from(d));
    let closed_form = binom(pu, 2) * &du - binom(pu + 1, 3) * 8 + BigInt::from(t * p);
    Ok(WeightedDefect {
        d,
        p,
        q,
        t,
        direct: BigInt::from(direct),
        closed_form,
    })
}

/// `C(p,2) d - 8 C(p+1,3) + t p` as a polynomial in `d` on the class
/// `d - 1 = 4p + q`.
pub fn weighted_defect_poly(q: i64) -> Poly {
    let t = i64::from(q == 3);
    let p = Poly::x_plus(-1 - q).scale(&Rat::frac(1, 4));
    let c_p_2 = (&p * &(&p - &Poly::constant(1))).scale(&Rat::frac(1, 2));
    let c_p1_3 = (&(&(&p + &Poly::constant(1)) * &p) * &(&p - &Poly::constant(1))).scale(&Rat::frac(1, 6));
    &(&(&c_p_2 * &Poly::x()) - &c_p1_3.scale(&Rat::from(8))) + &p.scale(&Rat::from(t))
}
