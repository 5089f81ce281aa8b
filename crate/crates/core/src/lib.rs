//! Exact ladder-operator algebra for the linear harmonic oscillator.
//!
//! * [`weyl`]: normal-ordered polynomials in `a`, `a†` with exact coefficients
//!   in `ℚ[1/√2]`, graded brackets, the standard generators and the Casimir.
//! * [`relations`]: the bracket relations of the spectrum-generating
//!   superalgebra as data, checked symbolically.
//! * [`superalgebra`]: exact spans, bracket closure, structure constants and
//!   the graded Jacobi identity.
//! * [`fock`]: truncated Fock-space matrices, exact ladder amplitudes, parity
//!   sectors, orbits and numeric residuals.
//! * [`report`] and [`cli`]: machine-readable reports and the `sga` commands.

pub mod cli;
mod error;
pub mod exec;
pub mod field;
pub mod fock;
pub mod relations;
pub mod report;
pub mod superalgebra;
pub mod weyl;

pub use error::Error;
pub use exec::Exec;
pub use field::{Coeff, Rat};
pub use weyl::{graded_bracket, BracketKind, Generator, GradedElement, Monomial, Parity, WeylPoly};
