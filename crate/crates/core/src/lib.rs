//! Numerical harmonic analysis at desk scale.
//!
//! The crate covers four settings and keeps each identity between them
//! executable:
//!
//! * [`circle`]: Fourier series on the unit circle, Abel means through both
//!   the coefficient series and the Poisson integral, extension to the disk.
//! * [`line`]: Fourier transforms on the real line, half-plane Poisson and
//!   Cauchy integrals, with truncated quadrature that always carries a tail
//!   certificate.
//! * [`groups`]: exact Fourier analysis on finite abelian groups, including
//!   annihilators, push-forwards and translation-invariant subspaces.
//! * [`almost_periodic`]: trigonometric polynomials with real frequencies,
//!   their Bohr mean and inner product.
//!
//! Heavy inner loops (quadrature sums, coefficient windows, character
//! sweeps) go through [`exec`], which runs on rayon when the `parallel`
//! feature is enabled and sequentially otherwise. Both paths reduce in the
//! same fixed order, so results are bit-identical either way.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod almost_periodic;
pub mod circle;
pub mod cli;
pub mod error;
pub mod exec;
pub mod groups;
pub mod line;
pub mod numerics;

pub use error::{Error, Result};
pub use numerics::{C64, Tolerances};
