//! Unambiguous comparison of quantum states.
//!
//! Given `C` systems, each prepared in one of `N` (possibly mixed) states with
//! known priors, decide without error whether all systems carry the same
//! state, allowing an inconclusive answer. The crate builds the induced
//! two-hypothesis discrimination problem, reduces it to its non-trivial
//! subspace, solves the two-out-of-two case in closed form together with the
//! best separable strategy, handles the equal-overlap two-out-of-three case,
//! decides feasibility for arbitrary mixed ensembles and checks every
//! measurement with an independent Monte Carlo oracle.
//!
//! Modules, bottom-up:
//!
//! - [`hermlin`]: Hermitian operators, spectra, supports, subspace algebra.
//! - [`ensemble`]: ensembles, POVMs, problem construction, feasibility.
//! - [`reduction`]: first and second reduction, two-out-of-N kernel equations.
//! - [`solver2oo2`]: optimal two-out-of-two comparison.
//! - [`baselines`]: optimal separable two-out-of-two strategy and gain map.
//! - [`solver2oo3`]: equal-overlap two-out-of-three comparison.
//! - [`montecarlo`]: seeded sampling of comparison experiments.
//! - [`cli`]: command-line front end and file formats.

pub mod baselines;
pub mod cli;
pub mod ensemble;
pub mod error;
pub mod hermlin;
pub mod montecarlo;
pub mod reduction;
pub mod rng;
pub mod solver2oo2;
pub mod solver2oo3;

pub use error::{Error, Result};
pub use hermlin::{ComplexMatrix, ComplexVector, HermitianOperator, Subspace};
