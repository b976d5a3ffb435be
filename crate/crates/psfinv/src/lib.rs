//! Learned PSF invertibility assessment for image deconvolution.
//!
//! The core idea: train a small two-layer ReLU network to map a point
//! spread function to the unit impulse. The residual norm the training
//! attains is a score of how invertible that PSF is — low residual means
//! deconvolution with that PSF is easy. The score is differentiable in
//! the PSF, so it doubles as a regularizer when optimizing diffractive
//! lens heightmaps end to end.
//!
//! Module map:
//! - [`psf`] — PSF generators (impulse, Gaussian, motion blur, diffuser) and noise.
//! - [`conv`] — convolution operators, dense matrices, condition-number oracles.
//! - [`metric`] — the two-layer network, Adam training, the invertibility score.
//! - [`deconv`] — Wiener, total-variation and Richardson–Lucy solvers.
//! - [`optics`] — Zernike bases, Fresnel PSF rendering, RGB sensor model.
//! - [`e2e`] — bi-level heightmap optimization with the metric as regularizer.
//! - [`bench`] — sweeps, timing comparisons, suite reports, correlation studies.
//! - [`scene`] — synthetic test scenes and image ingestion.

pub mod bench;
pub mod conv;
pub mod deconv;
pub mod e2e;
pub mod error;
pub mod fft;
pub mod grid;
pub mod io;
pub mod metric;
pub mod optics;
pub mod psf;
pub mod report;
pub mod scene;

pub use error::{Error, Result};
pub use grid::Grid;
pub use psf::{NoiseSpec, Psf};
