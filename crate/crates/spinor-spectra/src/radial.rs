//! Closed-form radial energies and wavefunctions.
//!
//! With the scalar potential equal to the vector potential, the radial
//! factor `u(r)` of the upper spinor obeys
//!
//! ```text
//! −u″ + [ρ/r² + η·W(r)] u = E u,    E = (ε² − M²c⁴)/c²,   η = (ε + Mc²)/c²
//! ```
//!
//! which is a non-relativistic hydrogen/oscillator problem whose coupling
//! depends on the energy itself. Matching the known non-relativistic
//! spectra therefore yields *algebraic* equations for ε:
//!
//! * **Coulomb well** `W = −V₀λ/r`: with `N = n_r + l + 1` and
//!   `τ = V₀λ/(2cN)`, the energy is `ε = Mc²(1−τ²)/(1+τ²)` — always inside
//!   `(−Mc², Mc²]`, approaching the rest energy as the coupling vanishes.
//!   The effective squared charge is `e²_rel = (ε + Mc²)V₀λ/c²` and the
//!   exponential scale `k = e²_rel/(2N)`.
//! * **Oscillator well** (`k r²` radial shape): eliminating the effective
//!   frequency `ω = √(8k(ε+Mc²))/c` from the non-relativistic spectrum
//!   gives the cubic `(ε−Mc²)²(ε+Mc²) = 8kc²(2n_r+l+3/2)²`, whose unique
//!   real root above `Mc²` is the bound-state energy. (Eliminating ω
//!   without squaring drops a power of the multiplicity factor; the
//!   numerical cross-checks in the test suite adjudicate the squared form.)
//!
//! Wavefunctions are returned non-normalized, exactly as the closed forms
//! produce them; normalization is a separate numerical step.

use thiserror::Error;

use crate::assembler::{AssemblerError, GridFunction};
use crate::model::{Constants, RadialKind, RadialSpec};
use crate::special::{laguerre, SpecialFnError};

#[derive(Debug, Error)]
pub enum RadialError {
    #[error("invalid radial input: {message}")]
    InvalidSpec { message: String },
    #[error("cubic root bracket [{lo}, {hi}] failed to produce a sign change (coefficients too extreme for f64 arithmetic)")]
    BracketFailure { lo: f64, hi: f64 },
    #[error("radial samples must be positive (got r = {r})")]
    NonPositiveRadius { r: f64 },
    #[error("energy detail does not match the requested potential kind")]
    MismatchedEnergy,
    #[error(transparent)]
    Special(#[from] SpecialFnError),
    #[error(transparent)]
    Grid(#[from] AssemblerError),
}

fn invalid_spec(violations: Vec<crate::model::Violation>) -> RadialError {
    let message =
        violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ");
    RadialError::InvalidSpec { message }
}

/// Kind-specific scales that accompany a closed-form radial energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RadialDetail {
    Coulomb {
        /// Dimensionless coupling `τ = V₀λ/(2cN)`.
        tau: f64,
        /// Exponential decay scale `k = e²_rel/(2N)` of the wavefunction.
        k_scale: f64,
    },
    Oscillator {
        /// Effective angular frequency `ω = √(8k(ε+Mc²))/c`.
        omega: f64,
    },
}

/// Bound-state energy plus the derived scales needed to evaluate the
/// corresponding wavefunction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialEnergyResult {
    pub epsilon: f64,
    pub detail: RadialDetail,
    /// Laguerre degree used by the wavefunction (the radial quantum number).
    pub nr_effective: u32,
}

impl RadialEnergyResult {
    pub fn tau(&self) -> Option<f64> {
        match self.detail {
            RadialDetail::Coulomb { tau, .. } => Some(tau),
            RadialDetail::Oscillator { .. } => None,
        }
    }

    pub fn k_scale(&self) -> Option<f64> {
        match self.detail {
            RadialDetail::Coulomb { k_scale, .. } => Some(k_scale),
            RadialDetail::Oscillator { .. } => None,
        }
    }

    pub fn omega(&self) -> Option<f64> {
        match self.detail {
            RadialDetail::Coulomb { .. } => None,
            RadialDetail::Oscillator { omega } => Some(omega),
        }
    }
}

/// Closed-form bound-state energy for the requested radial well.
///
/// # Examples
///
/// ```
/// use spinor_spectra::model::{Constants, RadialKind, RadialSpec};
/// use spinor_spectra::radial::radial_energy;
///
/// let spec = RadialSpec { kind: RadialKind::Coulomb { v0_lambda: 0.2 }, n_r: 0, l: 0.0 };
/// let result = radial_energy(&Constants::natural(), &spec).unwrap();
/// assert!((result.epsilon - 0.99 / 1.01).abs() < 1e-12);
/// ```
pub fn radial_energy(
    constants: &Constants,
    spec: &RadialSpec,
) -> Result<RadialEnergyResult, RadialError> {
    let mut violations = crate::model::validate_constants(constants);
    violations.extend(crate::model::validate_radial(spec));
    if !violations.is_empty() {
        return Err(invalid_spec(violations));
    }
    let mc2 = constants.mc2();
    let c = constants.c;
    match spec.kind {
        RadialKind::Coulomb { v0_lambda } => {
            let n_principal = spec.n_r as f64 + spec.l + 1.0;
            let tau = v0_lambda / (2.0 * c * n_principal);
            let epsilon = mc2 * (1.0 - tau * tau) / (1.0 + tau * tau);
            let e2_rel = (epsilon + mc2) * v0_lambda / (c * c);
            let k_scale = e2_rel / (2.0 * n_principal);
            Ok(RadialEnergyResult {
                epsilon,
                detail: RadialDetail::Coulomb { tau, k_scale },
                nr_effective: spec.n_r,
            })
        }
        RadialKind::Oscillator { k } => {
            let degree = 2.0 * spec.n_r as f64 + spec.l + 1.5;
            let rhs = 8.0 * k * c * c * degree * degree;
            let cubic = |eps: f64| (eps - mc2) * (eps - mc2) * (eps + mc2) - rhs;
            // mc2 + cbrt(rhs) + 1 exceeds the root analytically; the relative
            // bump keeps that true once the absolute margins fall below one
            // ulp of the cube root (rhs beyond ~1e48 in natural units).
            let (mut lo, mut hi) = (mc2, mc2 + rhs.cbrt() * (1.0 + 1e-9) + 1.0);
            if !(cubic(lo) <= 0.0 && cubic(hi) > 0.0) {
                return Err(RadialError::BracketFailure { lo, hi });
            }
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if cubic(mid) > 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                }
                if hi - lo <= 1e-12 * hi.abs().max(1.0) {
                    break;
                }
            }
            let epsilon = 0.5 * (lo + hi);
            let omega = (8.0 * k * (epsilon + mc2)).sqrt() / c;
            Ok(RadialEnergyResult {
                epsilon,
                detail: RadialDetail::Oscillator { omega },
                nr_effective: spec.n_r,
            })
        }
    }
}

/// Non-normalized radial factor `u(r)` sampled at strictly positive radii.
///
/// * Coulomb: `u(r) = (2kr)^{l+1} e^{−kr} L_{n_r}^{(2l+1)}(2kr)`
/// * Oscillator: `u(r) = (ωr²/2)^{(l+1)/2} e^{−ωr²/4} L_{n_r}^{(l+1/2)}(ωr²/2)`
///
/// `energy` must come from [`radial_energy`] for the same `spec` (the
/// detail variant carries the length scale).
pub fn radial_wavefunction(
    constants: &Constants,
    spec: &RadialSpec,
    energy: &RadialEnergyResult,
    r_samples: &[f64],
) -> Result<GridFunction, RadialError> {
    let mut violations = crate::model::validate_constants(constants);
    violations.extend(crate::model::validate_radial(spec));
    if !violations.is_empty() {
        return Err(invalid_spec(violations));
    }
    for &r in r_samples {
        if !(r > 0.0) {
            return Err(RadialError::NonPositiveRadius { r });
        }
    }
    let mut values = Vec::with_capacity(r_samples.len());
    match (spec.kind, energy.detail) {
        (RadialKind::Coulomb { .. }, RadialDetail::Coulomb { k_scale, .. }) => {
            for &r in r_samples {
                let z = 2.0 * k_scale * r;
                let u = z.powf(spec.l + 1.0) * (-k_scale * r).exp()
                    * laguerre(spec.n_r, 2.0 * spec.l + 1.0, z)?;
                values.push(u);
            }
        }
        (RadialKind::Oscillator { .. }, RadialDetail::Oscillator { omega }) => {
            for &r in r_samples {
                let z = 0.5 * omega * r * r;
                let u = z.powf(0.5 * (spec.l + 1.0)) * (-0.5 * z).exp()
                    * laguerre(spec.n_r, spec.l + 0.5, z)?;
                values.push(u);
            }
        }
        _ => return Err(RadialError::MismatchedEnergy),
    }
    Ok(GridFunction::from_real(r_samples.to_vec(), values)?)
}
