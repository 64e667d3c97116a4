use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The class `alpha * H_T + beta * W` on the smooth rational normal 3-fold
/// scroll `T` of degree 3 in `P^5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DivisorClass {
    pub alpha: i64,
    pub beta: i64,
}

impl DivisorClass {
    /// Hyperplane class.
    pub const H: DivisorClass = DivisorClass { alpha: 1, beta: 0 };
    /// Plane of the ruling.
    pub const W: DivisorClass = DivisorClass { alpha: 0, beta: 1 };
    /// Canonical class `K_T = -3H + W`.
    pub const K_T: DivisorClass = DivisorClass { alpha: -3, beta: 1 };

    pub const fn new(alpha: i64, beta: i64) -> Self {
        DivisorClass { alpha, beta }
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}H_T {} {}W", self.alpha, if self.beta < 0 { '-' } else { '+' }, self.beta.abs())
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass::new(self.alpha + rhs.alpha, self.beta + rhs.beta)
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass::new(self.alpha - rhs.alpha, self.beta - rhs.beta)
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass::new(-self.alpha, -self.beta)
    }
}

impl Mul<DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass::new(self * rhs.alpha, self * rhs.beta)
    }
}

/// Triple intersection numbers on `T`.
///
/// `H^3 = deg T = 3`. A ruling plane meets a general hyperplane in a line and
/// two general hyperplanes in a point, so `H^2 W = 1`. Two distinct ruling
/// planes are disjoint, giving `H W^2 = W^3 = 0`. The agreement between
/// [`k2_intersection`] and the cubic `phi` guards these constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionRing {
    pub hhh: i64,
    pub hhw: i64,
    pub hww: i64,
    pub www: i64,
}

pub const SCROLL_RING: IntersectionRing = IntersectionRing {
    hhh: 3,
    hhw: 1,
    hww: 0,
    www: 0,
};

impl IntersectionRing {
    /// The symmetric trilinear form `a . b . c`.
    pub fn triple(&self, a: DivisorClass, b: DivisorClass, c: DivisorClass) -> i128 {
        let (a0, a1) = (i128::from(a.alpha), i128::from(a.beta));
        let (b0, b1) = (i128::from(b.alpha), i128::from(b.beta));
        let (c0, c1) = (i128::from(c.alpha), i128::from(c.beta));
        let hhh = a0 * b0 * c0;
        let hhw = a0 * b0 * c1 + a0 * b1 * c0 + a1 * b0 * c0;
        let hww = a0 * b1 * c1 + a1 * b0 * c1 + a1 * b1 * c0;
        let www = a1 * b1 * c1;
        hhh * i128::from(self.hhh) + hhw * i128::from(self.hhw) + hww * i128::from(self.hww) + www * i128::from(self.www)
    }

    /// Degree of `T` itself.
    pub fn degree_of_scroll(&self) -> i64 {
        self.hhh
    }
}

/// `alpha > 0`, `alpha + beta >= 0` and `3 alpha + beta >= 4`: the classes
/// whose linear system contains an irreducible, smooth, nondegenerate surface.
pub fn is_admissible(c: DivisorClass) -> bool {
    c.alpha > 0 && c.alpha + c.beta >= 0 && 3 * c.alpha + c.beta >= 4
}

/// `deg S = S . H^2 = 3 alpha + beta`.
pub fn degree(c: DivisorClass) -> i64 {
    3 * c.alpha + c.beta
}

fn require_admissible(c: DivisorClass) -> Result<()> {
    if is_admissible(c) {
        Ok(())
    } else {
        Err(Error::OutOfDomain(format!("class {c} is not admissible")))
    }
}

/// `K_S^2 = (K_T + S)^2 . S` by adjunction.
pub fn k2_intersection(c: DivisorClass) -> Result<i128> {
    require_admissible(c)?;
    let ks = DivisorClass::K_T + c;
    Ok(SCROLL_RING.triple(ks, ks, c))
}

/// Sectional genus from `2g - 2 = (K_T + S + H) . S . H`.
pub fn sectional_genus(c: DivisorClass) -> Result<i128> {
    require_admissible(c)?;
    let twice = SCROLL_RING.triple(DivisorClass::K_T + c + DivisorClass::H, c, DivisorClass::H);
    if twice % 2 != 0 {
        return Err(Error::Inconsistent(format!(
            "(K_T + S + H).S.H = {twice} is odd for {c}"
        )));
    }
    Ok(twice / 2 + 1)
}

/// All admissible classes of degree `d`: `beta = d - 3 alpha` with
/// `1 <= alpha <= d / 2`.
pub fn admissible_classes(d: i64) -> impl Iterator<Item = DivisorClass> {
    (1..=d / 2)
        .map(move |alpha| DivisorClass::new(alpha, d - 3 * alpha))
        .filter(|&c| is_admissible(c))
}
