//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors produced by construction validation and operation preconditions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Lattice construction rejected (site count, spacing, or mass out of range).
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    /// A sequence argument does not match the lattice size it is used with.
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    /// Two arguments belong to different lattices.
    #[error("lattice mismatch: {0}")]
    LatticeMismatch(String),

    /// A region argument violates an operation's precondition
    /// (empty, full, or containing out-of-range sites).
    #[error("invalid region: {0}")]
    InvalidRegion(String),

    /// An operation requiring disjoint supports was called with overlapping ones.
    #[error("overlapping supports: {0}")]
    OverlappingSupports(String),

    /// An empty input list where at least one element is required.
    #[error("empty input: {0}")]
    EmptyInput(String),

    /// Numerical degeneracy: a family that must be independent is not,
    /// or a symplectic form that must be regular is singular.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// A covariance matrix violates the uncertainty bound beyond tolerance.
    #[error("uncertainty violation: symplectic eigenvalue {nu} below 1/2 beyond tolerance")]
    UncertaintyViolation { nu: f64 },

    /// A zero vector or zero state where a nonzero one is required.
    #[error("zero input: {0}")]
    ZeroInput(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
