//! Exact symbolic computation in the quantum torus.
//!
//! The quantum torus is the algebra on invertible generators `x`, `y`
//! subject to `x*y = q^2*y*x`, with coefficients in the field of rational
//! functions in `q` over the integers. This crate provides:
//!
//! - [`qfield`]: the coefficient field, exact rational functions in `q`
//!   kept in a unique canonical form;
//! - [`torus`]: elements of the quantum torus in normal form on the
//!   monomial basis `x^a y^b`, with the automorphism `tau` and the
//!   antiautomorphism `ddagger`;
//! - [`series`]: truncated formal power series in `t` (and in `s`, `t`)
//!   with scalar or torus coefficients, including composition and
//!   rational-function expansion;
//! - [`alternating`]: closed forms for the four alternating families
//!   `w_{-k}`, `w_{k+1}`, `g_k`, `gtilde_k` and the machine verification
//!   of every identity they satisfy;
//! - [`repcheck`]: a numeric cross-check realizing the torus by clock and
//!   shift matrices at a root of unity;
//! - [`report`]: the pass/fail report structure shared by all verifiers.


pub mod qfield;





pub use qfield::{IntPoly, QFieldError, RatFunc};
pub mod torus;
pub mod series;
pub mod report;
pub mod repcheck;
pub mod alternating;
