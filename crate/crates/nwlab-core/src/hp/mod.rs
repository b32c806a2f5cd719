//! High-precision kernel for rank decisions beyond double precision.
//!
//! The standard-scheme and time-smeared column families studied by
//! [`crate::localization`] have singular-value tails reaching ratios near
//! 1e-18 and 1e-42 of the top singular value — regimes where an f64 SVD
//! sees only noise. This module supplies a 448-bit fixed-point arithmetic
//! ([`Fx`], [`CxF`]), exact-reduction trigonometry for the circulant
//! kernels involved, and a column-pivoted Gram–Schmidt rank decision
//! ([`pivoted_rank`]) whose default tolerance (1e-60) sits tens of orders
//! of magnitude away from both the genuine spectral gaps and the
//! arithmetic noise floor (~1e-120).

pub mod fixed;
pub mod linalg;

pub(crate) mod columns;

pub use fixed::{Fx, PREC};
pub use linalg::{pivoted_rank, CxF};
