use num_integer::Roots;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_arith::{Poly, Rat};

use super::divisor::{is_admissible, k2_intersection, sectional_genus, DivisorClass};
use super::frame::{a_range, split_degree, ScrollFrame};

/// `phi(a)` with the degree data `(m, eps)` given directly.
pub fn phi_value(m: i64, eps: i64, a: i64) -> i128 {
    let (m, e, a) = (i128::from(m), i128::from(eps), i128::from(a));
    -6 * a * a * a + a * a * (-9 * m + 5 + 3 * e) + a * (2 * m * (3 * e - 4) - 6 * e + 10)
        + 3 * m * m * m
        + m * m * (3 * e - 13)
        + m * (10 - 6 * e)
        + 8
}

/// `phi'(a) = -18 a^2 + 2a(-9m + 5 + 3 eps) + 2m(3 eps - 4) - 6 eps + 10`.
pub fn phi_derivative_value(m: i64, eps: i64, a: i64) -> i128 {
    let (m, e, a) = (i128::from(m), i128::from(eps), i128::from(a));
    -18 * a * a + 2 * a * (-9 * m + 5 + 3 * e) + 2 * m * (3 * e - 4) - 6 * e + 10
}

/// `phi` with `m` and `a` themselves polynomials in one auxiliary variable.
/// Used to turn statements like `phi(-m) = 8` into polynomial identities.
pub fn phi_symbolic(m: &Poly, eps: i64, a: &Poly) -> Poly {
    let c = |k: i64| Poly::constant(k);
    let e = eps;
    let a2 = a * a;
    let a3 = &a2 * a;
    let m2 = m * m;
    let m3 = &m2 * m;
    let quad = &m.scale(&Rat::from(-9)) + &c(5 + 3 * e);
    let lin = &m.scale(&Rat::from(2 * (3 * e - 4))) + &c(-6 * e + 10);
    let konst = &(&(&m3.scale(&Rat::from(3)) + &m2.scale(&Rat::from(3 * e - 13))) + &m.scale(&Rat::from(10 - 6 * e))) + &c(8);
    &(&(&a3.scale(&Rat::from(-6)) + &(&a2 * &quad)) + &(a * &lin)) + &konst
}

/// Symbolic counterpart of [`phi_derivative_value`].
pub fn phi_derivative_symbolic(m: &Poly, eps: i64, a: &Poly) -> Poly {
    let e = eps;
    let quad = &m.scale(&Rat::from(-9)) + &Poly::constant(5 + 3 * e);
    let konst = &m.scale(&Rat::from(2 * (3 * e - 4))) + &Poly::constant(-6 * e + 10);
    &(&(a * a).scale(&Rat::from(-18)) + &(a * &quad).scale(&Rat::from(2))) + &konst
}

/// `K_S^2` of the degree `d` surface class indexed by `a`. Errors when `a` is
/// outside the admissible range; see [`phi_flagged`] for range-edge scans.
pub fn phi(d: i64, a: i64) -> Result<i128> {
    let f = ScrollFrame::new(d, a)?;
    Ok(phi_value(f.m, f.epsilon, a))
}

/// `phi(d, a)` for any `a`, with a flag telling whether `a` is admissible.
pub fn phi_flagged(d: i64, a: i64) -> (i128, bool) {
    let (m, eps) = split_degree(d);
    let (lo, hi) = a_range(d);
    (phi_value(m, eps, a), d >= 4 && (lo..=hi).contains(&a))
}

pub fn phi_derivative(d: i64, a: i64) -> i128 {
    let (m, eps) = split_degree(d);
    phi_derivative_value(m, eps, a)
}

/// Discriminant of `phi'` read off its coefficients.
pub fn discriminant(d: i64) -> i128 {
    let (m, e) = split_degree(d);
    let (m, e) = (i128::from(m), i128::from(e));
    let qa = -18i128;
    let qb = 2 * (-9 * m + 5 + 3 * e);
    let qc = 2 * m * (3 * e - 4) - 6 * e + 10;
    qb * qb - 4 * qa * qc
}

/// The two real roots `a1 < a2` of `phi'`, each isolated in a closed rational
/// interval of width at most `1/36`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalPoints {
    pub d: i64,
    pub discriminant: i128,
    /// `None` when the discriminant is not positive.
    pub roots: Option<[(Rat, Rat); 2]>,
}

impl CriticalPoints {
    /// Whether the integer `a` lies in the open interval `(a1, a2)` where
    /// `phi` increases.
    pub fn contains(&self, a: i64) -> bool {
        self.discriminant > 0 && phi_derivative(self.d, a) > 0
    }
}

pub fn critical_interval(d: i64) -> CriticalPoints {
    let (m, e) = split_degree(d);
    let disc = discriminant(d);
    if disc <= 0 {
        return CriticalPoints { d, discriminant: disc, roots: None };
    }
    // roots of -18a^2 + Ba + C are (B -+ sqrt(disc)) / 36
    let b = 2 * (-9 * i128::from(m) + 5 + 3 * i128::from(e));
    let lo = disc.sqrt();
    let hi = if lo * lo == disc { lo } else { lo + 1 };
    let r = |n: i128| Rat::new(n, 36).expect("nonzero");
    CriticalPoints {
        d,
        discriminant: disc,
        roots: Some([(r(b - hi), r(b - lo)), (r(b + lo), r(b + hi))]),
    }
}

/// Exact minimum of `K^2` over all admissible classes of degree `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct K2Minimum {
    pub d: i64,
    pub m: i64,
    pub epsilon: i64,
    /// `floor((m + eps - 1) / 2)`, the right end of the admissible range.
    pub a_star: i64,
    pub a_min: i64,
    pub k2_min: i128,
    pub unique: bool,
    /// `-d(d-6)` for even `d`, `-d^2/4 + d/2 + 35/4` for odd `d`.
    pub closed_form: Rat,
    /// `d >= 18`, where the minimum is asserted to sit at `a_star`.
    pub in_theorem_range: bool,
}

/// Value of `phi(a_star)` predicted by parity of `d`.
pub fn min_k2_closed_form(d: i64) -> Rat {
    if d % 2 == 0 {
        Rat::from(-d * (d - 6))
    } else {
        Rat::frac(-d * d, 4) + Rat::frac(d, 2) + Rat::frac(35, 4)
    }
}

/// Exhaustive scan of `phi` over `-m <= a <= a_star`.
pub fn minimize_k2(d: i64) -> Result<K2Minimum> {
    if d < 4 {
        return Err(Error::Range(format!("surfaces on T have degree >= 4, got {d}")));
    }
    let (m, eps) = split_degree(d);
    let (lo, hi) = a_range(d);
    let mut best = (i128::MAX, lo, 0usize);
    for a in lo..=hi {
        let v = phi_value(m, eps, a);
        if v < best.0 {
            best = (v, a, 1);
        } else if v == best.0 {
            best.2 += 1;
        }
    }
    Ok(K2Minimum {
        d,
        m,
        epsilon: eps,
        a_star: hi,
        a_min: best.1,
        k2_min: best.0,
        unique: best.2 == 1,
        closed_form: min_k2_closed_form(d),
        in_theorem_range: d >= 18,
    })
}

/// Minimum of `K^2` over all admissible classes of degree `d`, computed
/// through the intersection ring, together with every class attaining it.
pub fn min_k2_over_classes(d: i64) -> Option<(i128, Vec<DivisorClass>)> {
    let mut best: Option<(i128, Vec<DivisorClass>)> = None;
    for c in super::divisor::admissible_classes(d) {
        let k2 = k2_intersection(c).expect("admissible");
        match &mut best {
            Some((v, cs)) if k2 == *v => cs.push(c),
            Some((v, _)) if k2 > *v => {}
            _ => best = Some((k2, vec![c])),
        }
    }
    best
}

/// The class `(d/2)(H_T - W)` and its invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalSurface {
    pub d: i64,
    pub class: DivisorClass,
    pub a: i64,
    pub k2: i128,
    pub genus: i128,
}

pub fn extremal_class(d: i64) -> Result<ExtremalSurface> {
    if d % 2 != 0 {
        return Err(Error::InvalidArgument(format!("extremal class needs even d, got {d}")));
    }
    if d < 4 {
        return Err(Error::InvalidArgument(format!("extremal class needs d >= 4, got {d}")));
    }
    let class = (d / 2) * (DivisorClass::H - DivisorClass::W);
    let frame = ScrollFrame::from_class(class, d)?;
    Ok(ExtremalSurface {
        d,
        class,
        a: frame.a,
        k2: k2_intersection(class)?,
        genus: sectional_genus(class)?,
    })
}

/// One row of `scroll scan` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub d: i64,
    pub a: i64,
    pub alpha: i64,
    pub beta: i64,
    pub degree: i64,
    pub k2: i128,
    pub genus: i128,
    pub admissible: bool,
    pub extremal: bool,
}

/// Every admissible class of degree `d`, in increasing `a`.
pub fn scan_degree(d: i64) -> Result<Vec<ScanRecord>> {
    if d < 4 {
        return Err(Error::Range(format!("surfaces on T have degree >= 4, got {d}")));
    }
    let (lo, hi) = a_range(d);
    (lo..=hi)
        .map(|a| {
            let f = ScrollFrame::new(d, a)?;
            let c = f.class();
            Ok(ScanRecord {
                d,
                a,
                alpha: c.alpha,
                beta: c.beta,
                degree: d,
                k2: phi_value(f.m, f.epsilon, a),
                genus: sectional_genus(c)?,
                admissible: is_admissible(c),
                extremal: d % 2 == 0 && c == (d / 2) * (DivisorClass::H - DivisorClass::W),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_examples_at_18() {
        assert_eq!(phi(18, -5).unwrap(), 8);
        assert_eq!(phi(18, -3).unwrap(), 0);
        assert_eq!(phi(18, 3).unwrap(), -216);
        assert_eq!(k2_intersection(DivisorClass::new(9, -9)).unwrap(), -216);
        assert!(phi(18, 4).is_err());
        let (v, ok) = phi_flagged(18, 4);
        assert!(!ok);
        assert_eq!(v, phi_value(5, 2, 4));
    }

    #[test]
    fn phi_matches_intersection_small_degrees() {
        assert_eq!(phi(4, 0).unwrap(), k2_intersection(DivisorClass::new(2, -2)).unwrap());
        assert_eq!(phi(4, -1).unwrap(), k2_intersection(DivisorClass::new(1, 1)).unwrap());
    }

    #[test]
    fn derivative_examples() {
        // m = 5, eps = 2
        assert_eq!(phi_derivative(18, -3), 18 * 5 + 6 * 2 - 42);
        assert_eq!(phi_derivative(18, -3), 60);
        assert_eq!(phi_derivative(18, 1), 2 - 26 * 5 + 6 * 5 * 2);
        assert_eq!(phi_derivative(18, 1), -68);
    }

    #[test]
    fn discriminant_at_18() {
        let disc = discriminant(18);
        assert!(disc > 0);
        // corrected closed form 324m^2 - 936m + 216m eps + 820 - 312 eps + 36 eps^2
        assert_eq!(disc, 324 * 25 - 936 * 5 + 216 * 10 + 820 - 624 + 144);
    }

    #[test]
    fn discriminant_closed_form() {
        for d in 4..3000 {
            let (m, e) = split_degree(d);
            let (m, e) = (i128::from(m), i128::from(e));
            assert_eq!(discriminant(d), 324 * m * m - 936 * m + 216 * m * e + 820 - 312 * e + 36 * e * e);
        }
    }

    #[test]
    fn critical_interval_isolates_roots() {
        for d in 12..500 {
            let cp = critical_interval(d);
            let [(l1, h1), (l2, h2)] = cp.roots.clone().expect("positive discriminant");
            assert!(&h1 - &l1 <= Rat::frac(1, 36));
            assert!(h1 < l2);
            let (m, e) = split_degree(d);
            let dphi = phi_derivative_symbolic(&Poly::constant(m), e, &Poly::x());
            // sign change across each bracket (or exact root at an endpoint)
            for (l, h) in [(&l1, &h1), (&l2, &h2)] {
                let (vl, vh) = (dphi.eval(l), dphi.eval(h));
                assert!(vl.is_zero() || vh.is_zero() || vl.is_negative() != vh.is_negative(), "d={d}");
            }
            let (lo, hi) = a_range(d);
            for a in lo..=hi {
                let inside = Rat::from(a) > h1 && Rat::from(a) < l2;
                let outside = Rat::from(a) < l1 || Rat::from(a) > h2;
                if inside {
                    assert!(cp.contains(a));
                }
                if outside {
                    assert!(!cp.contains(a));
                }
            }
        }
    }

    #[test]
    fn symbolic_phi_matches_values() {
        let x = Poly::x();
        for eps in 0..3 {
            for m in 1..40 {
                for a in -m..=m {
                    let p = phi_symbolic(&Poly::constant(m), eps, &x);
                    assert_eq!(p.eval_int(a), Rat::from(phi_value(m, eps, a)));
                    let dp = phi_derivative_symbolic(&Poly::constant(m), eps, &x);
                    assert_eq!(dp, p.derivative());
                }
            }
        }
    }

    #[test]
    fn minimize_examples() {
        let r = minimize_k2(18).unwrap();
        assert_eq!((r.a_min, r.k2_min, r.unique), (3, -216, true));
        assert_eq!(r.closed_form, Rat::from(-216));
        let r = minimize_k2(19).unwrap();
        assert_eq!((r.m, r.epsilon), (6, 0));
        assert_eq!(r.k2_min, -72);
        assert_eq!(r.closed_form, Rat::from(-72));
        assert!(-72 > -19 * 13);
        let r = minimize_k2(20).unwrap();
        assert_eq!(r.k2_min, -280);
        assert_eq!(r.a_min, r.a_star);
    }

    #[test]
    fn left_end_values_at_18() {
        // phi(-m) = 8, phi(-m+1) = -9m + 17 - 3 eps, phi(-m+2) = 0
        assert_eq!(phi(18, -5).unwrap(), 8);
        assert_eq!(phi(18, -4).unwrap(), -45 + 17 - 6);
        assert_eq!(phi(18, -3).unwrap(), 0);
        let min = minimize_k2(18).unwrap();
        assert!(min.a_min > -3);
    }

    #[test]
    fn extremal_examples() {
        let e = extremal_class(18).unwrap();
        assert_eq!((e.class, e.k2, e.genus), (DivisorClass::new(9, -9), -216, 28));
        assert_eq!(e.a, 3);
        let e = extremal_class(8).unwrap();
        assert_eq!((e.class, e.k2, e.genus), (DivisorClass::new(4, -4), -16, 3));
        let e = extremal_class(36).unwrap();
        assert_eq!((e.class, e.k2, e.genus), (DivisorClass::new(18, -18), -1080, 136));
        assert!(matches!(extremal_class(19), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn scan_at_18() {
        let rows = scan_degree(18).unwrap();
        assert_eq!(rows.len(), 9);
        assert_eq!(rows.first().unwrap().a, -5);
        assert_eq!(rows.iter().filter(|r| r.extremal).count(), 1);
        assert!(rows.iter().all(|r| r.admissible));
        let last = rows.last().unwrap();
        assert_eq!((last.alpha, last.beta, last.k2, last.genus), (9, -9, -216, 28));
    }

    #[test]
    fn brute_force_over_classes_agrees() {
        for d in 4..200 {
            let (v, cs) = min_k2_over_classes(d).unwrap();
            let r = minimize_k2(d).unwrap();
            assert_eq!(v, r.k2_min, "d={d}");
            assert_eq!(cs.len() == 1, r.unique, "d={d}");
        }
    }
}
