//! The extremal surfaces `(d/2)(H_T - W)`.

use serde_json::json;

use crate::error::Result;
use crate::exact_arith::{Poly, Rat};
use crate::scroll_surfaces::{a_range, extremal_class, min_k2_over_classes, phi, DivisorClass, SCROLL_RING};

use super::certificate::{Certificate, CertificateBuilder};
use super::common::{bound_poly, poly};

pub const SHARPNESS_FROM: i64 = 18;

type ClassPoly = (Poly, Poly);

/// The trilinear form of `T` on classes whose coefficients are polynomials.
fn triple_poly(a: &ClassPoly, b: &ClassPoly, c: &ClassPoly) -> Poly {
    let k = |n: i64| Rat::from(n);
    let hhh = &(&a.0 * &b.0) * &c.0;
    let hhw = &(&(&(&a.0 * &b.0) * &c.1) + &(&(&a.0 * &b.1) * &c.0)) + &(&(&a.1 * &b.0) * &c.0);
    let hww = &(&(&(&a.0 * &b.1) * &c.1) + &(&(&a.1 * &b.0) * &c.1)) + &(&(&a.1 * &b.1) * &c.0);
    let www = &(&a.1 * &b.1) * &c.1;
    &(&(&hhh.scale(&k(SCROLL_RING.hhh)) + &hhw.scale(&k(SCROLL_RING.hhw))) + &hww.scale(&k(SCROLL_RING.hww)))
        + &www.scale(&k(SCROLL_RING.www))
}

fn constant_class(c: DivisorClass) -> ClassPoly {
    (Poly::constant(c.alpha), Poly::constant(c.beta))
}

fn add(a: &ClassPoly, b: &ClassPoly) -> ClassPoly {
    (&a.0 + &b.0, &a.1 + &b.1)
}

fn symbolic_part(b: &mut CertificateBuilder) {
    // d = 2k, S = k H_T - k W
    let k = Poly::x();
    let s: ClassPoly = (k.clone(), Poly::from_ints(&[0, -1]));
    let d = Poly::from_ints(&[0, 2]);
    let ks = add(&constant_class(DivisorClass::K_T), &s);
    let h = constant_class(DivisorClass::H);
    b.identity("S.H.H = d for S = k(H_T - W)", "k", triple_poly(&s, &h, &h), d.clone());
    let k2 = triple_poly(&ks, &ks, &s);
    b.identity("(K_T + S)^2.S = -d(d-6) at d = 2k", "k", k2, -&bound_poly().compose(&d));
    let twice_g_minus_2 = triple_poly(&add(&ks, &h), &s, &h);
    let g = poly(&[(1, 1), (-3, 4), (1, 8)]);
    b.identity(
        "(K_T + S + H).S.H = 2g - 2 with g = d^2/8 - 3d/4 + 1",
        "k",
        twice_g_minus_2,
        (&g.compose(&d) - &Poly::constant(1)).scale(&Rat::from(2)),
    );
    b.identity(
        "scroll relation K^2 = 8(1 - g) at g = d^2/8 - 3d/4 + 1",
        "d",
        (&Poly::constant(1) - &g).scale(&Rat::from(8)),
        -&bound_poly(),
    );
}

fn check_degree(d: i64) -> std::result::Result<(), String> {
    let bound = -i128::from(d) * i128::from(d - 6);
    let (min, attained) = min_k2_over_classes(d).ok_or_else(|| format!("no admissible class of degree {d}"))?;
    if d % 2 != 0 {
        return if min > bound {
            Ok(())
        } else {
            Err(format!("odd degree attains {min} <= {bound}"))
        };
    }
    let ex = extremal_class(d).map_err(|e| e.to_string())?;
    if ex.class != DivisorClass::new(d / 2, -d / 2) {
        return Err(format!("extremal class {}", ex.class));
    }
    if ex.k2 != bound {
        return Err(format!("extremal K^2 = {} != {bound}", ex.k2));
    }
    if 8 * ex.genus != i128::from(d) * i128::from(d) - 6 * i128::from(d) + 8 {
        return Err(format!("extremal genus {} != d^2/8 - 3d/4 + 1", ex.genus));
    }
    if ex.a != a_range(d).1 {
        return Err(format!("extremal frame index {} is not a*", ex.a));
    }
    let via_phi = phi(d, ex.a).map_err(|e| e.to_string())?;
    if via_phi != ex.k2 {
        return Err(format!("phi gives {via_phi}, the intersection ring {}", ex.k2));
    }
    if min != bound || attained != vec![ex.class] {
        return Err(format!("minimum {min} attained by {attained:?}"));
    }
    Ok(())
}

/// Certificate that `K^2 = -d(d-6)` is attained exactly by `(d/2)(H_T - W)`
/// for even `d`, and not at all for odd `d`.
pub fn verify_sharpness(d_from: i64, d_to: i64) -> Result<Certificate> {
    let mut b = CertificateBuilder::new(
        "SHARPNESS",
        "the bound is sharp: (d/2)(H_T - W) is the unique minimizer for even d",
        json!({}),
    );
    b.asserted_from(SHARPNESS_FROM, d_from);
    symbolic_part(&mut b);
    b.scan(d_from.max(4), d_to, SHARPNESS_FROM, check_degree);
    b.hypothesis("a general member of |(d/2)(H_T - W)| is a smooth irreducible surface");
    Ok(b.finish())
}
