//! Truncated Fock-space realization of the ladder algebra.
//!
//! Exact amplitudes ([`ladder_amplitude`]) drive the orbit analysis and the
//! norm conditions; floating matrices ([`to_matrix`]) drive the numeric
//! relation residuals, checked only on the trusted window where truncation
//! cannot reach.

mod amplitude;
mod operator;
mod orbit;
pub mod residuals;
mod state;

pub use amplitude::{
    ladder_amplitude, monomial_amplitude, norm_condition, norm_squared, AmplitudeTerm,
    ExactAmplitude, NormCondition,
};
pub use operator::{
    parity_matrix, sector_projectors, spectrum, to_matrix, trusted_window, FockOperator,
};
pub use orbit::{orbit, orbit_with, OrbitReport};
pub use residuals::{relation_residuals, relation_residuals_with, NumericResidual};
pub use state::FockState;
