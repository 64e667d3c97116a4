use crate::exact_arith::{Poly, Rat};

/// Polynomial from `(num, den)` coefficients, constant term first.
pub(crate) fn poly(coeffs: &[(i64, i64)]) -> Poly {
    Poly::new(coeffs.iter().map(|&(n, d)| Rat::frac(n, d)).collect())
}

pub(crate) fn int(n: i64) -> Poly {
    Poly::constant(n)
}

pub(crate) fn var() -> Poly {
    Poly::x()
}

/// `d(d - 6)`.
pub(crate) fn bound_poly() -> Poly {
    poly(&[(0, 1), (-6, 1), (1, 1)])
}

pub(crate) fn scaled(p: &Poly, n: i64, d: i64) -> Poly {
    p.scale(&Rat::frac(n, d))
}

pub(crate) fn rat_of(n: i64) -> Rat {
    Rat::from(n)
}
