//! Exact-arithmetic verification of the lower bound `K^2_S >= -d(d-6)` for
//! smooth surfaces polarized by a very ample line bundle of degree `d`.
//!
//! The crate is split along the structure of the argument:
//!
//! * [`exact_arith`]: rationals, polynomials, Euclidean splits and
//!   tail-bounded sign certificates.
//! * [`classical_bounds`]: Castelnuovo and Halphen genus bounds, Hilbert
//!   profiles and their defect sums, the double point formula.
//! * [`scroll_surfaces`]: divisor classes on the smooth cubic 3-fold scroll
//!   in `P^5`, the cubic `phi(a)` and its minimization.
//! * [`theorem_verifier`]: every step of the case analysis as a named,
//!   machine-checked [`theorem_verifier::Certificate`].
//! * [`cli`]: the `kbound` command line front end.

pub mod classical_bounds;
pub mod cli;
pub mod error;
pub mod exact_arith;
pub mod scroll_surfaces;
pub mod theorem_verifier;

pub use error::{Error, Result};
