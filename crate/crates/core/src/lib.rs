//! Approximate Bayesian computation driven by quasi-Monte Carlo point sets.
//!
//! The crate provides, bottom up:
//!
//! - [`lds`]: Monte Carlo, Sobol, randomly-shifted and Owen-scrambled point
//!   sets in the unit hypercube, plus counter-based uniform streams for
//!   simulator noise.
//! - [`transform`]: quantile and affine maps carrying unit points onto prior
//!   and proposal distributions.
//! - [`models`]: the benchmark simulators (Gaussian superposition toy model,
//!   Lotka-Volterra via Gillespie, tuberculosis genotype chain, bimodal
//!   Gaussian with earth-mover distance).
//! - [`weighting`]: unbiased estimators of the acceptance probability
//!   (fixed-M binomial and sequential negative-binomial).
//! - [`proposals`]: Gaussian, Gaussian-mixture (weighted EM) and
//!   particle-mixture proposals fitted from weighted samples.
//! - [`engine`]: the static importance sampler and the sequential adaptive
//!   sampler with ESS/median/hybrid epsilon schedules.
//! - [`diagnostics`]: single-run variance estimators, repetition summaries,
//!   and exact star discrepancy for small point sets.

pub mod diagnostics;
pub mod engine;
mod error;
pub mod lds;
pub mod models;
pub mod proposals;
pub mod quadrature;
pub mod transform;
pub mod weighting;

pub use error::Error;
