//! Clifford spectra of Hermitian matrix tuples.
//!
//! The crate builds spectral localizers L_λ = Σ (X_j − λ_j) ⊗ γ_j, recovers
//! their determinants as exact or floating multivariate polynomials, samples
//! the Clifford spectrum on grids, and evaluates the half-signature, Pfaffian
//! and graded indices.

pub mod clifford;
pub mod config;
pub mod error;
pub mod gallery;
pub mod invariants;
pub mod linalg;
pub mod localizer;
pub mod matrix;
pub mod polynomial;
pub mod sampler;
pub mod scalar;
pub mod tuple;
pub mod variance;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use scalar::{GaussianRational, Scalar, C64};
pub use tuple::{AnyTuple, HermitianTuple};
