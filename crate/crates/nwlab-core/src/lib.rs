//! Lattice laboratory for comparing localization schemes of the free
//! Klein-Gordon field.
//!
//! The crate builds the full quantization chain over a periodic 1-D lattice:
//!
//! * [`lattice`] — the classical phase space: Cauchy data, the symplectic
//!   form, spectral functions of the one-particle Hamiltonian, and the free
//!   evolution.
//! * [`oneparticle`] — the complex structure J, the one-particle inner
//!   product, and the map K from real Cauchy data into the complex
//!   one-particle space, together with its Newton-Wigner counterpart.
//! * [`localization`] — region subspaces for both localization schemes,
//!   rank/cyclicity diagnostics (including an exact high-precision path for
//!   ranks far below f64 resolution), anti-locality defects, and vacuum
//!   correlation decay.
//! * [`weyl`] — finite products of Weyl generators, vacuum expectation
//!   values, product-state defects, commutator phases, number-operator
//!   expectations, and cyclicity of product states.
//! * [`gaussian`] — quadrature families, Gaussian covariance matrices,
//!   Williamson normal form, entanglement entropy, and logarithmic
//!   negativity.
//! * [`hp`] — the fixed-point high-precision kernel backing the exact rank
//!   computations.

pub mod error;
mod fmatrix;
pub mod gaussian;
pub mod hp;
pub mod lattice;
pub mod localization;
pub mod oneparticle;
pub mod weyl;

pub use error::{Error, Result};
