//! Relativistic bound states in ring-shaped potentials.
//!
//! This crate computes bound-state energies and spinor wavefunctions of the
//! Dirac equation when an attractive scalar potential equals the vector
//! potential. In that regime the upper spinor component satisfies a
//! Schrödinger-like equation whose coupling is the energy-dependent factor
//! `η = (ε + Mc²)/c²`, and the problem separates in spherical coordinates:
//!
//! ```text
//! φ(r, θ, φ) = u(r)/r · Θ(θ) · e^{imφ}/√(2π)
//! ```
//!
//! The radial and polar factors talk to each other only through a single
//! separation constant `ρ`, which plays the role of `l(l+1)` with a
//! generally non-integer effective angular momentum `l`.
//!
//! Supported potential shapes:
//!
//! * **radial:** Coulomb-like (`-V₀λ/r`) and radial-oscillator (`k r²`)
//!   wells, both with closed-form spectra ([`radial`]);
//! * **polar:** three ring-shaped families layered on top of the radial
//!   well — a `1/sin²θ` pair, a `tan²θ`/`cot²θ` pair, and a complex
//!   `cot θ/sin θ` pair ([`angular`]).
//!
//! The [`assembler`] module couples the two factors self-consistently (the
//! polar coupling depends on ε, the radial energy depends on ρ), stacks the
//! upper and lower spinor components, and normalizes sampled wavefunctions.
//! Everything the closed forms claim is cross-checked numerically by the
//! finite-difference eigensolvers in [`oracle`].
//!
//! # Quick start
//!
//! ```
//! use spinor_spectra::model::{AngularFamily, AngularSpec, Constants, RadialKind, RadialSpec};
//! use spinor_spectra::assembler::solve_coupled;
//!
//! let constants = Constants::natural();
//! let radial = RadialSpec { kind: RadialKind::Coulomb { v0_lambda: 1.0 }, n_r: 0, l: 0.0 };
//! let angular = AngularSpec {
//!     family: AngularFamily::F1,
//!     alpha: 0.5,
//!     beta: 0.0,
//!     gamma: 0.5,
//!     m: 0,
//!     n_theta: 0,
//! };
//! let state = solve_coupled(&constants, &radial, &angular, 1e-12).unwrap();
//! assert!(state.converged);
//! assert!(state.epsilon.abs() < constants.mc2());
//! ```
//!
//! The `spinor-spectra` binary exposes the same machinery as a small CLI
//! (`spectrum`, `wavefunction`, `bound`, `verify`), and the `examples/`
//! directory walks through each capability in runnable form.

// Validation guards are written `!(x > bound)` rather than `x <= bound` so
// that NaN inputs fail closed instead of slipping through the comparison.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod angular;
pub mod assembler;
pub mod cli;
pub mod model;
pub mod oracle;
pub mod radial;
pub mod special;
