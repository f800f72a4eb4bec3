//! A pseudo-spectral laboratory for solitary waves of the fractional
//! generalized Korteweg-de Vries equation
//!
//! ```text
//!     u_t - d/dx1 (D^alpha u) + (1/m) d/dx1 (u^m) = 0,   0 < alpha <= 2,
//! ```
//!
//! on periodic boxes in one and two dimensions, where `D^alpha` is the Riesz
//! derivative with Fourier symbol |xi|^alpha. The crate computes ground-state
//! profiles Q solving c Q + D^alpha Q = Q^m / m, checks the integral
//! identities and decay laws they satisfy, resolves the linearized operator
//! L = D^alpha + c - Q^{m-1} (negative direction, kernel, coercivity),
//! integrates the time-dependent equation with an integrating-factor RK4
//! scheme, and drives orbital stability / instability experiments with
//! modulation and virial diagnostics.
//!
//! See the `examples/` directory for one runnable program per capability and
//! the `fkdv` binary for the scenario front end.

pub mod commutator;
pub mod decay;
pub mod eigen;
pub mod error;
pub mod evolution;
pub mod experiments;
pub mod fft;
pub mod field;
pub mod functionals;
pub mod grid;
pub mod ground_state;
pub mod io;
pub mod linearized;
pub mod minimize;
pub mod modulation;
pub mod params;
pub mod runner;
pub mod scenario;
pub mod sum;
pub mod virial;

pub use error::{Error, Result};
pub use field::Field;
pub use grid::{make_grid, Grid};
pub use params::{criticality, Criticality, CriticalityReport, ModelParams};
