use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_arith::{euclid_split, Poly, Rat};

/// Which closed form produced a [`GenusBoundResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormulaId {
    /// `G(r;d)`, Castelnuovo's bound in `P^r`.
    Castelnuovo,
    /// `G(3;d,s)`, Halphen's bound for space curves off surfaces of degree `< s`.
    Halphen,
    /// `G(4;d,5) = pi_2(d,4)`.
    Pi2,
    /// `G(4;d,4) = pi_1(d,4)`.
    Pi1,
}

/// Degree, ambient dimension and division data behind a bound.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundParameters {
    pub d: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusBoundResult {
    pub formula_id: FormulaId,
    pub bound: Rat,
    pub parameters: BoundParameters,
    /// The closed form evaluated to an integer.
    pub integral: bool,
    /// Degrees above which the bound is asserted as a genus bound, if the
    /// formula carries such a threshold.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub asserted_for_d_above: Option<i64>,
    pub in_asserted_range: bool,
}

impl GenusBoundResult {
    pub fn floor(&self) -> BigInt {
        self.bound.floor()
    }

    /// The bound as an integer; fails when the closed form was fractional.
    pub fn as_integer(&self) -> Result<i64> {
        self.bound.to_i64()
    }
}

fn quadratic_in_d(c2: Rat, c1: Rat, c0: Rat) -> Poly {
    Poly::new(vec![c0, c1, c2])
}

/// `G(r;d)` as a polynomial in `d` on the residue class `d - 1 = m(r-1) + eps`.
pub fn castelnuovo_poly(r: i64, eps: i64) -> Poly {
    let den = 2 * (r - 1);
    quadratic_in_d(
        Rat::frac(1, den),
        Rat::frac(-(r + 1), den),
        Rat::frac((r - eps) * (1 + eps), den),
    )
}

/// `G(3;d,s)` as a polynomial in `d` on the residue class `d - 1 = ms + eps`.
pub fn halphen_poly(s: i64, eps: i64) -> Poly {
    quadratic_in_d(
        Rat::frac(1, 2 * s),
        Rat::frac(s - 4, 2),
        Rat::one() - Rat::frac((s - 1 - eps) * (eps + 1) * (s - 1), 2 * s),
    )
}

/// `G(4;d,5)` on the residue class `d - 1 = 5n + v`.
pub fn pi2_poly(v: i64) -> Poly {
    let w = v / 2;
    quadratic_in_d(
        Rat::frac(1, 10),
        Rat::frac(-3, 10),
        Rat::frac(1, 5) + Rat::frac(v, 10) - Rat::frac(v * v, 10) + Rat::from(w),
    )
}

/// `G(4;d,4)` on the residue class `d - 1 = 4p + q`.
pub fn pi1_poly(q: i64) -> Poly {
    let t = i64::from(q == 3);
    quadratic_in_d(
        Rat::frac(1, 8),
        Rat::frac(-1, 2),
        Rat::frac(3, 8) + Rat::frac(q, 4) - Rat::frac(q * q, 8) + Rat::from(t),
    )
}

fn finish(
    formula_id: FormulaId,
    bound: Rat,
    parameters: BoundParameters,
    asserted_for_d_above: Option<i64>,
) -> GenusBoundResult {
    let in_asserted_range = asserted_for_d_above.map_or(true, |t| parameters.d > t);
    GenusBoundResult {
        formula_id,
        integral: bound.is_integer(),
        bound,
        parameters,
        asserted_for_d_above,
        in_asserted_range,
    }
}

/// Castelnuovo's bound `G(r;d)` for nondegenerate integral curves of degree
/// `d` in `P^r`.
pub fn castelnuovo_bound(r: i64, d: i64) -> Result<GenusBoundResult> {
    if r < 3 {
        return Err(Error::OutOfDomain(format!("Castelnuovo bound needs r >= 3, got {r}")));
    }
    if d < r {
        return Err(Error::OutOfDomain(format!(
            "no nondegenerate curve of degree {d} in P^{r}"
        )));
    }
    let split = euclid_split(d - 1, r - 1)?;
    let bound = castelnuovo_poly(r, split.remainder).eval_int(d);
    if !bound.is_integer() {
        return Err(Error::NonIntegral(format!("G({r};{d}) = {bound}")));
    }
    let params = BoundParameters {
        d,
        r: Some(r),
        m: Some(split.quotient),
        epsilon: Some(split.remainder),
        ..Default::default()
    };
    Ok(finish(FormulaId::Castelnuovo, bound, params, None))
}

/// Halphen's bound `G(3;d,s)`, defined for `d > s^2 - s`.
///
/// The value is returned exactly; `integral` flags a fractional closed form
/// (never observed, but not silently rounded either).
pub fn halphen_bound(d: i64, s: i64) -> Result<GenusBoundResult> {
    if s < 2 {
        return Err(Error::OutOfDomain(format!("Halphen bound needs s >= 2, got {s}")));
    }
    if d <= s * s - s {
        return Err(Error::OutOfDomain(format!(
            "Halphen bound G(3;d,{s}) is only asserted for d > {}, got {d}",
            s * s - s
        )));
    }
    let split = euclid_split(d - 1, s)?;
    let bound = halphen_poly(s, split.remainder).eval_int(d);
    let params = BoundParameters {
        d,
        s: Some(s),
        m: Some(split.quotient),
        epsilon: Some(split.remainder),
        ..Default::default()
    };
    Ok(finish(FormulaId::Halphen, bound, params, Some(s * s - s)))
}

/// `G(4;d,5)`; asserted as a genus bound for `d > 143`.
pub fn pi2_bound(d: i64) -> Result<GenusBoundResult> {
    if d < 6 {
        return Err(Error::OutOfDomain(format!("G(4;d,5) needs d >= 6, got {d}")));
    }
    let split = euclid_split(d - 1, 5)?;
    let v = split.remainder;
    let bound = pi2_poly(v).eval_int(d);
    if !bound.is_integer() {
        return Err(Error::NonIntegral(format!("G(4;{d},5) = {bound}")));
    }
    let params = BoundParameters {
        d,
        n: Some(split.quotient),
        v: Some(v),
        w: Some(v / 2),
        ..Default::default()
    };
    Ok(finish(FormulaId::Pi2, bound, params, Some(143)))
}

/// `G(4;d,4)`.
pub fn pi1_bound(d: i64) -> Result<GenusBoundResult> {
    if d < 5 {
        return Err(Error::OutOfDomain(format!("G(4;d,4) needs d >= 5, got {d}")));
    }
    let split = euclid_split(d - 1, 4)?;
    let q = split.remainder;
    let bound = pi1_poly(q).eval_int(d);
    if !bound.is_integer() {
        return Err(Error::NonIntegral(format!("G(4;{d},4) = {bound}")));
    }
    let params = BoundParameters {
        d,
        p: Some(split.quotient),
        q: Some(q),
        t: Some(i64::from(q == 3)),
        ..Default::default()
    };
    Ok(finish(FormulaId::Pi1, bound, params, None))
}
