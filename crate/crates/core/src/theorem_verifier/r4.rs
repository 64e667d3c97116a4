//! Surfaces in `P^4`.

use serde_json::json;

use crate::classical_bounds::{chi_lower_bound_s4, chi_lower_bound_s4_weak, chi_s4_poly, chi_s4_weak_poly, halphen_bound, halphen_poly};
use crate::error::Result;
use crate::exact_arith::{AssertedSign, Poly, Rat};

use super::certificate::{Certificate, CertificateBuilder};
use super::common::{bound_poly, int, poly, rat_of, scaled, var};

pub const REDUCE_FROM: i64 = 36;
pub const S2_FROM: i64 = 13;
pub const S3_FROM: i64 = 8;
pub const S4_FROM: i64 = 36;

/// Sample of `x` in `(6, 9]`, both endpoints of the dyadic grid plus a few
/// rationals with odd denominators.
pub const X_GRID_ABOVE_6: [(i64, i64); 14] = [
    (25, 4),
    (13, 2),
    (61, 9),
    (27, 4),
    (7, 1),
    (80, 11),
    (29, 4),
    (15, 2),
    (31, 4),
    (8, 1),
    (33, 4),
    (17, 2),
    (35, 4),
    (9, 1),
];

const X_GRID_UP_TO_6: [(i64, i64); 7] = [(0, 1), (1, 1), (3, 2), (3, 1), (9, 2), (11, 2), (6, 1)];

const CHI_GE_1_MINUS_G: &str = "chi(O_S) >= 1 - g";

/// `d(d-5) - k(g-1) + 2d(d-6)` with `g` replaced by `g_poly`.
fn double_point_margin(g_poly: &Poly, k: i64, constant: i64) -> Poly {
    let d = var();
    (&d * &(&d - &int(5))) - scaled(&(g_poly - &int(1)), k, 1) + bound_poly().scale(&rat_of(2)) + int(constant)
}

fn strictly_less(lhs: Rat, rhs: Rat, what: &str) -> std::result::Result<(), String> {
    if lhs < rhs {
        Ok(())
    } else {
        Err(format!("{what}: {lhs} is not < {rhs}"))
    }
}

fn reduce(d_from: i64, d_to: i64) -> Result<Certificate> {
    let mut b = CertificateBuilder::new(
        "R4.reduce",
        "P^4, S off quartics: 22(g-1) < 3d^2 - 17d with Halphen's bound for s = 5",
        json!({ "r": 4, "s": 5 }),
    );
    b.asserted_from(REDUCE_FROM, d_from);
    let g_upper = poly(&[(1, 1), (1, 2), (1, 10)]);
    let target = &poly(&[(0, 1), (-17, 1), (3, 1)]) - &scaled(&(&g_upper - &int(1)), 22, 1);
    b.identity("3d^2 - 17d - 22(g - 1) at g = d^2/10 + d/2 + 1", "d", target.clone(), poly(&[(0, 1), (-28, 1), (4, 5)]));
    b.identity(
        "d(d-5) - 22(g-1) + 2d(d-6) equals the reduced target",
        "d",
        double_point_margin(&g_upper, 22, 0),
        target.clone(),
    );
    for eps in 0..=4 {
        let gap = &g_upper - &halphen_poly(5, eps);
        let holds = gap.degree().unwrap_or(0) == 0 && !gap.coeff(0).is_negative();
        b.fact(format!("G(3;d,5) <= d^2/10 + d/2 + 1 on eps = {eps} (gap {gap})"), holds);
    }
    b.sign("(4/5)d^2 - 28d > 0", &target, REDUCE_FROM, AssertedSign::Positive)?;
    b.scan(d_from, d_to, REDUCE_FROM, |d| {
        if d <= 20 {
            return Ok(());
        }
        let g = halphen_bound(d, 5).map_err(|e| e.to_string())?.bound;
        strictly_less(Rat::from(22) * (g - Rat::one()), Rat::from(3 * d * d - 17 * d), "22(g-1) < 3d^2-17d")
    });
    b.hypothesis("S is not contained in a hypersurface of degree < 5, so its hyperplane section obeys Halphen's bound with s = 5 (d > 20)");
    b.hypothesis(CHI_GE_1_MINUS_G);
    Ok(b.finish())
}

fn low_degree(s: i64, from: i64, d_from: i64, d_to: i64) -> Result<Certificate> {
    let (claim, g_upper, expect) = match s {
        2 => ("R4.s2", poly(&[(1, 1), (-1, 1), (1, 4)]), poly(&[(12, 1), (-7, 1), (1, 2)])),
        _ => ("R4.s3", poly(&[(1, 1), (-1, 2), (1, 6)]), poly(&[(12, 1), (-12, 1), (4, 3)])),
    };
    let mut b = CertificateBuilder::new(
        claim,
        &format!("P^4, S on a hypersurface of degree {s}: 10(g-1) < 3d^2 - 17d + 12 with Halphen's bound"),
        json!({ "r": 4, "s": s }),
    );
    b.asserted_from(from, d_from);
    let target = &poly(&[(12, 1), (-17, 1), (3, 1)]) - &scaled(&(&g_upper - &int(1)), 10, 1);
    b.identity(format!("3d^2 - 17d + 12 - 10(g - 1) at g = {g_upper}"), "d", target.clone(), expect);
    b.identity(
        "d(d-5) - 10(g-1) + 12 + 2d(d-6) equals the reduced target",
        "d",
        double_point_margin(&g_upper, 10, 12),
        target.clone(),
    );
    for eps in 0..s {
        let gap = &g_upper - &halphen_poly(s, eps);
        let holds = gap.degree().unwrap_or(0) == 0 && !gap.coeff(0).is_negative();
        b.fact(format!("G(3;d,{s}) <= {g_upper} on eps = {eps} (gap {gap})"), holds);
    }
    b.sign(format!("{target} > 0"), &target, from, AssertedSign::Positive)?;
    b.scan(d_from, d_to, from, |d| {
        if d <= s * s - s {
            return Ok(());
        }
        let g = halphen_bound(d, s).map_err(|e| e.to_string())?.bound;
        strictly_less(
            Rat::from(10) * (g - Rat::one()),
            Rat::from(3 * d * d - 17 * d + 12),
            "10(g-1) < 3d^2-17d+12",
        )
    });
    b.hypothesis("S is of general type for d > 12, hence chi(O_S) >= 1");
    b.hypothesis(&format!("S lies on an irreducible hypersurface of degree {s}, so its hyperplane section obeys Halphen's bound"));
    Ok(b.finish())
}

/// `g = d^2/8 + d(x-9)/8 + 1` as a polynomial in `d`.
fn genus_at_x(x: &Rat) -> Poly {
    Poly::new(vec![Rat::one(), (x - &Rat::from(9)) / Rat::from(8), Rat::frac(1, 8)])
}

fn s4_low_x(d_from: i64, d_to: i64) -> Result<Certificate> {
    let mut b = CertificateBuilder::new(
        "R4.s4.x<=6",
        "P^4, S on a quartic with 0 <= x <= 6: reduce with g <= d^2/8 - 3d/8 + 1",
        json!({ "r": 4, "s": 4, "x_max": "6" }),
    );
    b.asserted_from(S4_FROM, d_from);
    let g6 = genus_at_x(&Rat::from(6));
    b.identity("g at x = 6", "d", g6.clone(), poly(&[(1, 1), (-3, 8), (1, 8)]));
    for &(n, den) in &X_GRID_UP_TO_6[..X_GRID_UP_TO_6.len() - 1] {
        let x = Rat::frac(n, den);
        let gap = &g6 - &genus_at_x(&x);
        b.sign(format!("g(6) - g(x) >= 0 at x = {x}"), &gap, 1, AssertedSign::Nonnegative)?;
    }
    let target = &poly(&[(0, 1), (-17, 1), (3, 1)]) - &scaled(&(&g6 - &int(1)), 22, 1);
    b.identity("3d^2 - 17d - 22(g - 1) at x = 6", "d", target.clone(), poly(&[(0, 1), (-35, 4), (1, 4)]));
    b.sign("d^2/4 - 35d/4 > 0", &target, S4_FROM, AssertedSign::Positive)?;
    b.scan(d_from, d_to, S4_FROM, |d| {
        for &(n, den) in &X_GRID_UP_TO_6 {
            let g = genus_at_x(&Rat::frac(n, den)).eval_int(d);
            strictly_less(Rat::from(22) * (g - Rat::one()), Rat::from(3 * d * d - 17 * d), "22(g-1) < 3d^2-17d")?;
        }
        Ok(())
    });
    b.hypothesis("d^2/8 - 9d/8 + 1 <= g <= d^2/8 + 1, so g = d^2/8 + d(x-9)/8 + 1 for some rational 0 <= x <= 9");
    b.hypothesis(CHI_GE_1_MINUS_G);
    Ok(b.finish())
}

fn s4_high_x(d_from: i64, d_to: i64) -> Result<Certificate> {
    let mut b = CertificateBuilder::new(
        "R4.s4.x>6",
        "P^4, S on a quartic with 6 < x <= 9: 10(g-1) <= d^3/8 - 9d^2/4 - 47d/2 - 999/4 from the chi bound",
        json!({ "r": 4, "s": 4, "x_min_exclusive": "6", "x_max": "9" }),
    );
    b.asserted_from(S4_FROM, d_from);
    let weak = chi_s4_weak_poly();
    b.identity("chi bound at x = 6 equals the x-free bound", "d", chi_s4_poly(&Rat::from(6)), weak.clone());
    for &(n, den) in &X_GRID_ABOVE_6 {
        let x = Rat::frac(n, den);
        let gap = &chi_s4_poly(&x) - &weak;
        b.sign(format!("chi bound at x = {x} exceeds the x-free bound"), &gap, 4, AssertedSign::Positive)?;
    }
    let rhs = &poly(&[(0, 1), (-17, 1), (3, 1)]) + &weak.scale(&rat_of(12));
    b.identity(
        "3d^2 - 17d + 12 chi_weak",
        "d",
        rhs.clone(),
        poly(&[(-999, 4), (-47, 2), (-9, 4), (1, 8)]),
    );
    // 10(g - 1) <= 10 d^2 / 8 from g <= d^2/8 + 1
    let final_gap = &rhs - &poly(&[(0, 1), (0, 1), (10, 8)]);
    b.identity(
        "slack after g <= d^2/8 + 1",
        "d",
        final_gap.clone(),
        poly(&[(-999, 4), (-47, 2), (-7, 2), (1, 8)]),
    );
    b.sign("d^3/8 - 7d^2/2 - 47d/2 - 999/4 >= 0", &final_gap, S4_FROM, AssertedSign::Nonnegative)?;
    b.scan(d_from, d_to, S4_FROM, |d| {
        if d < 4 {
            return Ok(());
        }
        let weak = chi_lower_bound_s4_weak(d).map_err(|e| e.to_string())?;
        let g_max = Rat::frac(d * d, 8) + Rat::one();
        let lhs = Rat::from(10) * (g_max - Rat::one());
        let rhs = Rat::from(3 * d * d - 17 * d) + Rat::from(12) * weak.clone();
        if lhs > rhs {
            return Err(format!("10(g-1) = {lhs} > {rhs}"));
        }
        for &(n, den) in &X_GRID_ABOVE_6 {
            let chi = chi_lower_bound_s4(d, &Rat::frac(n, den)).map_err(|e| e.to_string())?;
            if chi <= weak {
                return Err(format!("chi bound at x = {n}/{den} is {chi} <= {weak}"));
            }
        }
        Ok(())
    });
    b.hypothesis("chi(O_S) >= d^3/96 - d^2/16 - 5d/3 - 333/16 - (d-3)d(9-x)/8; the constant -333/16 is an external input");
    b.hypothesis("g <= d^2/8 + 1 (Halphen's bound for s = 4)");
    b.note("the final inequality uses the x-free chi bound; the grid signs show it is strictly weaker for x in (6, 9]");
    Ok(b.finish())
}

/// Five certificates: the reduction off quartics, `s = 2`, `s = 3` and both
/// branches of `s = 4`.
pub fn verify_r4(d_from: i64, d_to: i64) -> Result<Vec<Certificate>> {
    Ok(vec![
        reduce(d_from, d_to)?,
        low_degree(2, S2_FROM, d_from, d_to)?,
        low_degree(3, S3_FROM, d_from, d_to)?,
        s4_low_x(d_from, d_to)?,
        s4_high_x(d_from, d_to)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theorem_verifier::Status;

    #[test]
    fn all_verified_above_35() {
        for c in verify_r4(36, 400).unwrap() {
            assert_eq!(c.status, Status::Verified, "{}: {:?}", c.claim_id, c.witness);
            assert!(c.sign_certificates.iter().all(|s| s.certificate.holds()));
        }
    }

    #[test]
    fn s2_and_s3_hold_from_their_own_thresholds() {
        let v = verify_r4(13, 100).unwrap();
        assert_eq!(v[1].status, Status::Verified);
        assert_eq!(v[2].status, Status::Verified);
        assert_eq!(v[0].status, Status::OutOfAssertedRange);
    }

    #[test]
    fn reduce_is_tight_at_35() {
        // (4/5)d^2 - 28d vanishes at d = 35
        let c = &verify_r4(36, 40).unwrap()[0];
        let s = &c.sign_certificates[0].certificate;
        assert!(s.polynomial.eval_int(35).is_zero());
        let below = &verify_r4(21, 40).unwrap()[0];
        assert_eq!(below.status, Status::OutOfAssertedRange);
        assert!(below.scans[0].failures_below_asserted > 0);
    }

    #[test]
    fn high_x_slack_is_negative_at_35() {
        let p = poly(&[(-999, 4), (-47, 2), (-7, 2), (1, 8)]);
        assert!(p.eval_int(35).is_negative());
        assert!(!p.eval_int(36).is_negative());
    }
}
