//! Surfaces in `P^5`.

use serde_json::json;

use crate::classical_bounds::{
    castelnuovo_bound, castelnuovo_poly, genus_from_profile, pi1_bound, pi1_poly, pi1_profile, pi2_bound, pi2_poly,
    pi2_profile, propagate_profile, weighted_defect_poly, weighted_defect_sum,
};
use crate::error::Result;
use crate::exact_arith::{AssertedSign, Poly, Rat};

use super::certificate::{Certificate, CertificateBuilder};
use super::common::{bound_poly, int, poly, rat_of};

pub const ABS_FROM: i64 = 19;
pub const PROFILE_FROM: i64 = 31;
pub const CUBIC_FROM: i64 = 25;
/// Upper end of the remark's exact scan.
pub const REMARK_SCAN_TO: i64 = 10_000;

pub const SEEDS: [[i64; 3]; 2] = [[4, 9, 16], [4, 10, 19]];

/// `-d^3 + 24d^2 + (-9q^2 + 18q - 125 + 72t)d - 2q^3 + 42q^2 - 70q + 174 - 360t + 24tq`.
pub fn deg4_cubic(q: i64) -> Poly {
    let t = i64::from(q == 3);
    Poly::from_ints(&[
        -2 * q * q * q + 42 * q * q - 70 * q + 174 - 360 * t + 24 * t * q,
        -9 * q * q + 18 * q - 125 + 72 * t,
        24,
        -1,
    ])
}

/// `d^2/8 - 3d/4 + 1`, the lower bound on `g` for the exceptional scrolls.
fn g1_poly() -> Poly {
    poly(&[(1, 1), (-3, 4), (1, 8)])
}

pub fn verify_r5_remark() -> Result<Certificate> {
    let mut b = CertificateBuilder::new(
        "R5.remark.psi",
        "r = 5: psi(5,d) = eps^2 - 4eps + 3",
        json!({ "r": 5 }),
    );
    let expected = [3, 0, -1, 0];
    for eps in 0..=3 {
        let psi = &(&int(1) - &castelnuovo_poly(5, eps)).scale(&rat_of(8)) + &bound_poly();
        let value = eps * eps - 4 * eps + 3;
        b.identity(format!("psi(5,d) at eps = {eps}"), "d", psi, int(value));
        b.fact(format!("eps = {eps} gives {value}"), value == expected[eps as usize]);
    }
    b.scan(6, REMARK_SCAN_TO, 6, |d| {
        let eps = (d - 1).rem_euclid(4);
        let g = castelnuovo_bound(5, d).map_err(|e| e.to_string())?.bound;
        let psi = Rat::from(8) * (Rat::one() - g) + Rat::from(d * (d - 6));
        if psi == Rat::from(eps * eps - 4 * eps + 3) {
            Ok(())
        } else {
            Err(format!("psi = {psi} at eps = {eps}"))
        }
    });
    b.note("psi(5,d) <= 0 exactly for eps in {1, 2, 3}; these degrees need the scroll analysis");
    Ok(b.finish())
}

fn abs(d_from: i64, d_to: i64) -> Result<Certificate> {
    let mut b = CertificateBuilder::new(
        "R5.abs",
        "r = 5: G(4;d,5) - G(5;d) < 0",
        json!({ "r": 5 }),
    );
    b.asserted_from(ABS_FROM, d_from);
    // d - 1 = 20k + c fixes both residues, v = c mod 5 and eps = c mod 4
    for c in 0..20 {
        let d_of_k = Poly::from_ints(&[c + 1, 20]);
        let diff = (&pi2_poly(c % 5) - &castelnuovo_poly(5, c % 4)).compose(&d_of_k);
        let k0 = (ABS_FROM - c - 1 + 19).div_euclid(20);
        b.sign(
            format!("G(4;d,5) - G(5;d) < 0 on d = 20k + {}", c + 1),
            &diff,
            k0,
            AssertedSign::Negative,
        )?;
    }
    let scan_from = d_from.min(ABS_FROM).max(6);
    b.scan(scan_from, d_to, ABS_FROM, |d| {
        let p2 = pi2_bound(d).map_err(|e| e.to_string())?.bound;
        let g5 = castelnuovo_bound(5, d).map_err(|e| e.to_string())?.bound;
        if p2 < g5 {
            Ok(())
        } else {
            Err(format!("G(4;d,5) = {p2} >= G(5;d) = {g5}"))
        }
    });
    let p18 = pi2_bound(18)?.bound;
    let g18 = castelnuovo_bound(5, 18)?.bound;
    b.note(format!("d = 18 is the boundary: G(4;18,5) = {p18}, G(5;18) = {g18}"));
    b.hypothesis("g = G(5;d) and S lies on no threefold of degree < 5");
    b.hypothesis("the hyperplane section lies on no surface of degree < 5 in P^4 (d > 24), so g <= G(4;d,5) for d > 143");
    Ok(b.finish())
}

fn profile_seed(seed: [i64; 3], d_from: i64, d_to: i64) -> Result<Certificate> {
    let id = format!("R5.profile.seed-{}-{}-{}", seed[0], seed[1], seed[2]);
    let mut b = CertificateBuilder::new(
        &id,
        "r = 5: propagated Hilbert function dominates the profile of G(4;d,5)",
        json!({ "r": 5, "seed": seed }),
    );
    b.asserted_from(PROFILE_FROM, d_from);
    b.scan(d_from, d_to, PROFILE_FROM, |d| {
        let h = propagate_profile(seed, d).map_err(|e| e.to_string())?;
        let base = pi2_profile(d).map_err(|e| e.to_string())?;
        if !h.dominates(&base) {
            return Err(format!("propagated {:?} does not dominate {:?}", h.values(), base.values()));
        }
        let g = genus_from_profile(&h).map_err(|e| e.to_string())?;
        let p2 = pi2_bound(d).map_err(|e| e.to_string())?.bound;
        let g5 = castelnuovo_bound(5, d).map_err(|e| e.to_string())?.bound;
        if g > p2 {
            return Err(format!("profile genus {g} > G(4;d,5) = {p2}"));
        }
        if g >= g5 {
            return Err(format!("profile genus {g} >= G(5;d) = {g5}"));
        }
        Ok(())
    });
    b.hypothesis("h_Gamma(i) >= min{d, h_Gamma(i-3) + h_Gamma(3) - 1} for i >= 4");
    b.hypothesis("g <= sum_i (d - h_Gamma(i))");
    b.note("finite-range scan; the tail is covered by R5.abs once g <= G(4;d,5) is established");
    Ok(b.finish())
}

fn deg4_threefold(d_from: i64, d_to: i64) -> Result<Certificate> {
    let mut b = CertificateBuilder::new(
        "R5.deg4.cubic",
        "r = 5, S on a threefold of degree 4: the cubic inequality fails for d > 24",
        json!({ "r": 5 }),
    );
    b.asserted_from(CUBIC_FROM, d_from);
    let lhs = &Poly::x_plus(-3) * &g1_poly();
    for q in 0..=3 {
        let cubic = deg4_cubic(q);
        let rhs = &(&Poly::x_plus(-4) * &pi1_poly(q)) - &weighted_defect_poly(q);
        b.identity(
            format!("96[(d-4)G(4;d,4) - W(d) - (d-3)g1(d)] at q = {q}"),
            "d",
            (&rhs - &lhs).scale(&rat_of(96)),
            cubic.clone(),
        );
        b.sign(format!("cubic < 0 at q = {q}"), &cubic, CUBIC_FROM, AssertedSign::Negative)?;
    }
    for eps in 1..=3 {
        let gap = &castelnuovo_poly(5, eps) - &g1_poly();
        let c = gap.coeff(0);
        let holds = gap.degree().unwrap_or(0) == 0 && !c.is_negative();
        b.fact(format!("G(5;d) - g1(d) = {c} >= 0 at eps = {eps}"), holds);
    }
    b.scan(d_from.max(5), d_to, CUBIC_FROM, |d| {
        let w = weighted_defect_sum(d).map_err(|e| e.to_string())?;
        if !w.agrees() {
            return Err(format!("weighted defect {} != closed form {}", w.direct, w.closed_form));
        }
        let p1 = pi1_bound(d).map_err(|e| e.to_string())?.bound;
        let via_profile = genus_from_profile(&pi1_profile(d).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        if p1 != via_profile {
            return Err(format!("G(4;d,4) = {p1} but the profile gives {via_profile}"));
        }
        let lhs = Rat::from(d - 3) * g1_poly().eval_int(d);
        let rhs = Rat::from(d - 4) * p1 - Rat::from(w.direct);
        if lhs > rhs {
            Ok(())
        } else {
            Err(format!("(d-3)g1 = {lhs} <= {rhs}"))
        }
    });
    b.hypothesis("S is a scroll with g = G(5;d), d not 1 mod 4, so chi(O_S) = 1 - g and g >= d^2/8 - 3d/4 + 1");
    b.hypothesis("h_Gamma(i) >= k(i), the profile of G(4;d,4), on a threefold of degree 4");
    b.hypothesis("chi(O_S) >= 1 + sum_{i<=d-4} (i-1)(d-k(i)) - (d-4)(G(4;d,4) - g)");
    Ok(b.finish())
}

/// `R5.abs`, one certificate per profile seed, and `R5.deg4.cubic`.
pub fn verify_r5_exclusion(d_from: i64, d_to: i64) -> Result<Vec<Certificate>> {
    let mut out = vec![abs(d_from, d_to)?];
    for seed in SEEDS {
        out.push(profile_seed(seed, d_from, d_to)?);
    }
    out.push(deg4_threefold(d_from, d_to)?);
    Ok(out)
}
