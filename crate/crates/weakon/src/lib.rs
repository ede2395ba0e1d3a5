//! Contraction analysis for nonlinear dynamical systems through eigenvalue
//! sums of symmetric (generalized) Jacobians.
//!
//! The central object is the sum `S_k(H)` of the `k` largest eigenvalues of a
//! symmetric matrix `H`. A system `dx/dt = f(x,t)` whose Jacobian symmetric
//! part satisfies `S_k < 0` everywhere on a forward-invariant box contracts
//! `k`-dimensional volumes exponentially; the `k = 2` case ("weak
//! contraction") forces every bounded trajectory of an autonomous system to
//! converge to an equilibrium.
//!
//! The crate provides:
//!
//! - [`dsl`] — a small text language for vector fields with exact forward-mode
//!   Jacobians via dual numbers;
//! - [`spectra`] — symmetric eigensolver, eigenvalue sums and an independent
//!   trace-maximization oracle over orthonormal frames;
//! - [`metrics`] — metric transformations `Θ(x,t)`, the generalized Jacobian
//!   `F = ΘJΘ⁻¹ + Θ̇Θ⁻¹`, and bounded storage-function augmentation;
//! - [`combine`] — parallel, skew-symmetric feedback and hierarchical
//!   interconnections together with their sufficient conditions;
//! - [`certify`] — sampling-based certificates `sup S_k(F_s) ≤ -α`, a
//!   transverse check, the `ε`-scaling search for hierarchies, and integer
//!   attractor-dimension bounds;
//! - [`flow`] — trajectory and variational integration: volume-decay rates,
//!   Lyapunov spectra and equilibrium censuses that validate the certificates
//!   empirically;
//! - [`config`] — JSON run configurations shared with the `weakon` CLI.

pub mod builtin;
pub mod certify;
pub mod combine;
pub mod config;
pub mod dsl;
pub mod error;
pub mod flow;
pub mod metrics;
pub mod rng;
pub mod spectra;
pub mod system;

mod linalg;

pub use error::{Error, Result};
