use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("polynomial is not parity-homogeneous: {0}")]
    MixedParity(String),

    #[error("unknown generator name `{0}`")]
    UnknownGenerator(String),

    #[error("duplicate basis name `{0}`")]
    DuplicateName(String),

    #[error("element `{0}` is linearly dependent on the preceding elements")]
    LinearlyDependent(String),

    #[error("closure exceeded max_dim = {max_dim} (reached {reached} elements)")]
    NotClosed { max_dim: usize, reached: usize },

    #[error("bracket [{0}, {1}] leaves the span of the basis")]
    BracketOutsideSpan(String, String),

    #[error("Fock dimension must be at least 1")]
    ZeroDimension,

    #[error("trusted window is empty (N = {dim}, operand degree {degree})")]
    EmptyWindow { dim: usize, degree: u32 },

    #[error("seed {seed} lies outside the trusted window [0, {window})")]
    SeedOutsideWindow { seed: usize, window: usize },

    #[error("hbar_omega must be positive and finite, got {0}")]
    NonPositiveScale(f64),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
