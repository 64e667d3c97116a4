//! Exact arithmetic substrate: rationals, polynomials, Euclidean splits and
//! sign certificates for polynomial inequalities over unbounded integer ranges.

mod euclid;
mod poly;
mod rat;
mod sign;

pub use euclid::{binom, euclid_split, EuclidSplit};
pub use poly::Poly;
pub use rat::Rat;
pub use sign::{sign_certificate, AssertedSign, SignCertificate, MAX_SCAN};
