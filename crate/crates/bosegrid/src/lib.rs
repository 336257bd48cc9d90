//! Finite field-amplitude representations of lattice bosonic fields.
//!
//! A boson occupation cutoff `N_b` defines a low-energy subspace of the
//! infinite local Hilbert space. That subspace can be carried by a finite
//! space of dimension `N_phi > N_b` built from Nyquist-Shannon samples of the
//! boson-number wavefunctions on a symmetric half-integer grid. The crate
//! provides:
//!
//! - stable Hermite-Gauss evaluation, tail weights and tail bounds ([`hgfunc`]),
//! - half-integer sampling grids, sinc reconstruction, aliasing and the
//!   sampling-error bounds ([`sampling`]),
//! - the discrete field operators, the discrete harmonic oscillator and its
//!   full error taxonomy ([`finiterep`]),
//! - squeezed-vacuum and small phi^4 model studies in the truncated
//!   number basis ([`models`]),
//! - band-limited wavefunctions that sample accurately yet escape the
//!   low-energy subspace ([`counterexample`]),
//! - simulated local measurements: field histograms, quantum state
//!   tomography and phase-estimation boson readout ([`measure`]),
//! - the measurement-driven discretization adjustment guideline ([`advisor`]).
//!
//! Everything is dimensionless (`hbar = 1`); the boson mass is the only scale.

pub mod advisor;
pub mod counterexample;
pub mod finiterep;
pub mod hgfunc;
pub mod linalg;
pub mod measure;
pub mod models;
pub mod quad;
pub mod sampling;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("quadrature did not converge: achieved {achieved:e}, requested {requested:e}")]
    QuadratureNonConvergence { achieved: f64, requested: f64 },
    #[error("series did not converge: {0}")]
    SeriesNonConvergence(String),
    #[error("eigensolver failed: {0}")]
    EigenFailure(String),
    #[error("ground state not converged at n_cut ceiling {ceiling}: delta {achieved:e}")]
    CutoffNonConvergence { ceiling: usize, achieved: f64 },
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
