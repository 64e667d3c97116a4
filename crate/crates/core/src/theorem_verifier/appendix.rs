//! Minimization of `K^2` over surfaces of degree `d` on the cubic scroll `T`.

use serde_json::json;

use crate::error::Result;
use crate::exact_arith::{AssertedSign, Poly, Rat};
use crate::scroll_surfaces::{
    critical_interval, min_k2_over_classes, minimize_k2, phi_derivative_symbolic, phi_derivative_value, phi_symbolic,
    phi_value, split_degree,
};

use super::certificate::{Certificate, CertificateBuilder};
use super::common::{bound_poly, poly};

pub const APPENDIX_FROM: i64 = 18;

fn m_ints(coeffs: &[i64]) -> Poly {
    Poly::from_ints(coeffs)
}

/// `d = 3m + eps + 1` as a polynomial in `m`.
fn degree_in_m(eps: i64) -> Poly {
    m_ints(&[eps + 1, 3])
}

fn symbolic_part(b: &mut CertificateBuilder) -> Result<()> {
    let m = Poly::x();
    let a_const = |k: i64| Poly::constant(k);
    for e in 0..=2 {
        let at = |a: &Poly| phi_symbolic(&m, e, a);
        let dat = |a: &Poly| phi_derivative_symbolic(&m, e, a);
        b.identity(format!("phi(-m) = 8 at eps = {e}"), "m", at(&-&m), a_const(8));
        b.identity(format!("phi(-m+1) = -9m + 17 - 3eps at eps = {e}"), "m", at(&m_ints(&[1, -1])), m_ints(&[17 - 3 * e, -9]));
        b.identity(format!("phi(-m+2) = 0 at eps = {e}"), "m", at(&m_ints(&[2, -1])), Poly::zero());
        let phi0 = &m_ints(&[-2, 1]) * &m_ints(&[-4, -7 + 3 * e, 3]);
        b.identity(format!("phi(0) = (m-2)(3m^2 - 7m + 3m eps - 4) at eps = {e}"), "m", at(&a_const(0)), phi0.clone());
        let phi1 = &m_ints(&[-1, 1]) * &m_ints(&[3 * e - 17, -10 + 3 * e, 3]);
        b.identity(format!("phi(1) = (m-1)(3m^2 - 10m + 3m eps + 3eps - 17) at eps = {e}"), "m", at(&a_const(1)), phi1.clone());
        let d1 = m_ints(&[2, -26 + 6 * e]);
        b.identity(format!("phi'(1) = 2 - 26m + 6m eps at eps = {e}"), "m", dat(&a_const(1)), d1.clone());
        let dleft = m_ints(&[6 * e - 42, 18]);
        b.identity(format!("phi'(-m+2) = 18m + 6eps - 42 at eps = {e}"), "m", dat(&m_ints(&[2, -1])), dleft.clone());
        let dm1 = m_ints(&[-12 * e - 18, 10 + 6 * e]);
        b.identity(format!("phi'(-1) = 10m + 6m eps - 12eps - 18 at eps = {e}"), "m", dat(&a_const(-1)), dm1.clone());

        // phi'(a) = -18a^2 + B a + C
        let big_b = m_ints(&[2 * (5 + 3 * e), -18]);
        let big_c = m_ints(&[-6 * e + 10, 2 * (3 * e - 4)]);
        let disc = &(&big_b * &big_b) + &big_c.scale(&Rat::from(72));
        let disc_expected = m_ints(&[36 * e * e - 312 * e + 820, 216 * e - 936, 324]);
        b.identity(format!("discriminant of phi' at eps = {e}"), "m", disc.clone(), disc_expected);

        b.sign(format!("discriminant > 0 at eps = {e}"), &disc, 3, AssertedSign::Positive)?;
        b.sign(format!("phi'(-m+2) > 0 at eps = {e}"), &dleft, 3, AssertedSign::Positive)?;
        b.sign(format!("phi'(-1) > 0 at eps = {e}"), &dm1, 2, AssertedSign::Positive)?;
        b.sign(format!("phi(0) >= 0 at eps = {e}"), &phi0, 3, AssertedSign::Nonnegative)?;
        b.sign(format!("phi(1) >= 0 at eps = {e}"), &phi1, 5, AssertedSign::Nonnegative)?;
        b.sign(format!("phi'(1) < 0 at eps = {e}"), &d1, 1, AssertedSign::Negative)?;
        // vertex B/36 of phi' lies left of 1, so phi' decreases on [1, oo)
        let vertex_gap = &big_b - &Poly::constant(36);
        b.sign(format!("vertex of phi' < 1 at eps = {e}"), &vertex_gap, 1, AssertedSign::Negative)?;
        let d_of_m = degree_in_m(e);
        let dd6 = bound_poly().compose(&d_of_m);
        b.sign(
            format!("phi(-m+1) + d(d-6) > 0 at eps = {e}"),
            &(&m_ints(&[17 - 3 * e, -9]) + &dd6),
            5,
            AssertedSign::Positive,
        )?;
        b.sign(format!("d(d-6) > 0 at eps = {e}"), &dd6, 2, AssertedSign::Positive)?;
    }

    // phi(a*) with m = 2p + j, a* = floor((m + eps - 1)/2)
    for e in 0..=2 {
        for j in 0..=1 {
            let m = m_ints(&[j, 2]);
            let offset = (j + e - 1).div_euclid(2);
            let a_star = m_ints(&[offset, 1]);
            let d = m_ints(&[3 * j + e + 1, 6]);
            let even = (3 * j + e + 1) % 2 == 0;
            let closed = if even {
                -&bound_poly().compose(&d)
            } else {
                poly(&[(35, 4), (1, 2), (-1, 4)]).compose(&d)
            };
            b.identity(
                format!(
                    "phi(a*) = {} at eps = {e}, m = 2p + {j}",
                    if even { "-d(d-6)" } else { "-d^2/4 + d/2 + 35/4" }
                ),
                "p",
                phi_symbolic(&m, e, &a_star),
                closed,
            );
        }
    }
    let gap = &poly(&[(35, 4), (1, 2), (-1, 4)]) + &bound_poly();
    b.identity("odd gap", "d", gap.clone(), poly(&[(35, 4), (-11, 2), (3, 4)]));
    b.sign("-d^2/4 + d/2 + 35/4 + d(d-6) > 0", &gap, 6, AssertedSign::Positive)?;
    Ok(())
}

fn check_degree(d: i64) -> std::result::Result<(), String> {
    let (m, e) = split_degree(d);
    let mk = minimize_k2(d).map_err(|e| e.to_string())?;
    let bound = -i128::from(d) * i128::from(d - 6);
    if mk.k2_min < bound {
        return Err(format!("min K^2 = {} < -d(d-6) = {bound}", mk.k2_min));
    }
    if mk.a_min != mk.a_star || !mk.unique {
        return Err(format!("minimum at a = {} (a* = {}, unique = {})", mk.a_min, mk.a_star, mk.unique));
    }
    if Rat::from(mk.k2_min) != mk.closed_form {
        return Err(format!("min K^2 = {} but closed form gives {}", mk.k2_min, mk.closed_form));
    }
    if (mk.k2_min == bound) != (d % 2 == 0) {
        return Err(format!("equality {} at d of parity {}", mk.k2_min == bound, d % 2));
    }
    let (m128, e128) = (i128::from(m), i128::from(e));
    let table = [
        (-m, 8),
        (-m + 1, -9 * m128 + 17 - 3 * e128),
        (-m + 2, 0),
        (0, (m128 - 2) * (3 * m128 * m128 - 7 * m128 + 3 * m128 * e128 - 4)),
        (1, (m128 - 1) * (3 * m128 * m128 - 10 * m128 + 3 * m128 * e128 + 3 * e128 - 17)),
    ];
    for (a, expect) in table {
        if phi_value(m, e, a) != expect {
            return Err(format!("phi({a}) = {} != {expect}", phi_value(m, e, a)));
        }
    }
    if phi_derivative_value(m, e, 1) != 2 - 26 * m128 + 6 * m128 * e128 {
        return Err("phi'(1) table entry".into());
    }
    let crit = critical_interval(d);
    if crit.roots.is_none() {
        return Err(format!("discriminant {} not positive", crit.discriminant));
    }
    if let Some(a) = (-m + 2..=-1).find(|&a| !crit.contains(a)) {
        return Err(format!("phi' <= 0 at a = {a} inside [-m+2, -1]"));
    }
    if let Some(a) = (1..=mk.a_star).find(|&a| phi_derivative_value(m, e, a) >= 0) {
        return Err(format!("phi' >= 0 at a = {a} inside [1, a*]"));
    }
    match min_k2_over_classes(d) {
        Some((v, _)) if v == mk.k2_min => Ok(()),
        other => Err(format!("intersection ring minimum {:?} != {}", other.map(|o| o.0), mk.k2_min)),
    }
}

/// Certificate for `phi(a) >= -d(d-6)` on the admissible range, with
/// equality only for even `d` at `a*`.
pub fn verify_appendix(d_from: i64, d_to: i64) -> Result<Certificate> {
    let mut b = CertificateBuilder::new(
        "APPENDIX.min",
        "surfaces on the cubic scroll: phi(a) >= -d(d-6), equality iff d even and a = (m+eps-1)/2",
        json!({}),
    );
    b.asserted_from(APPENDIX_FROM, d_from);
    symbolic_part(&mut b)?;
    b.scan(d_from.max(4), d_to, APPENDIX_FROM, check_degree);
    b.hypothesis("S is a smooth surface of degree d on the smooth cubic scroll T in P^5, so its class is admissible");
    Ok(b.finish())
}
