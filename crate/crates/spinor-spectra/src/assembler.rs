//! Coupling of the radial and polar factors, spinor assembly, and
//! numerical normalization.
//!
//! The separation ansatz `φ = u(r)/r · Θ(θ) · Φ(φ)` leaves the two factor
//! problems entangled through the energy: the polar equation's coupling is
//! `η = (ε + Mc²)/c²`, while the radial energy depends on the separation
//! constant `ρ` the polar solve produces. [`solve_coupled`] closes that
//! loop. [`assemble_spinor`] then samples the upper component on an
//! `(r, θ)` mesh and derives the lower component from it by the first-order
//! relation `χ ∝ (σ·∇)φ / (ε + Mc²)`, and [`normalize`] fixes the
//! per-factor normalization that the closed forms leave open.

use std::f64::consts::PI;

use num_complex::Complex64;
use thiserror::Error;

use crate::angular::{angular_wavefunction, azimuthal, solve_angular_params, AngularError};
use crate::model::{rho_to_l, AngularSolution, BoundState, Constants, RadialKind, RadialSpec};
use crate::radial::{radial_energy, radial_wavefunction, RadialError};

#[derive(Debug, Error)]
pub enum AssemblerError {
    #[error("abscissae and values differ in length ({abscissae} vs {values})")]
    LengthMismatch { abscissae: usize, values: usize },
    #[error("abscissae must be strictly increasing (violated at index {index})")]
    NonIncreasingAbscissae { index: usize },
    #[error("non-finite sample at index {index}")]
    NonFiniteSample { index: usize },
    #[error("grid must contain at least one sample")]
    EmptyGrid,
    #[error("cannot normalize a function with zero norm")]
    ZeroNorm,
    #[error("mesh too coarse: {axis} has {got} points, need at least {need}")]
    MeshTooCoarse { axis: &'static str, got: usize, need: usize },
    #[error("invalid solve parameter: {message}")]
    InvalidParameter { message: String },
    #[error("coupled solve found no bracket: {message}")]
    NoBracket { message: String },
    #[error(transparent)]
    Model(#[from] crate::model::ModelError),
    #[error(transparent)]
    Radial(Box<RadialError>),
    #[error(transparent)]
    Angular(Box<AngularError>),
}

// The radial and angular error types already wrap `AssemblerError` (their
// grid-construction variants), so they are boxed here to keep the mutual
// nesting finite in size.
impl From<RadialError> for AssemblerError {
    fn from(err: RadialError) -> Self {
        AssemblerError::Radial(Box::new(err))
    }
}

impl From<AngularError> for AssemblerError {
    fn from(err: AngularError) -> Self {
        AssemblerError::Angular(Box::new(err))
    }
}

/// A sampled complex-valued function of one real variable.
///
/// Invariants (enforced at construction): abscissae strictly increasing,
/// one value per abscissa, everything finite.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    abscissae: Vec<f64>,
    values: Vec<Complex64>,
}

impl GridFunction {
    pub fn new(abscissae: Vec<f64>, values: Vec<Complex64>) -> Result<Self, AssemblerError> {
        if abscissae.is_empty() {
            return Err(AssemblerError::EmptyGrid);
        }
        if abscissae.len() != values.len() {
            return Err(AssemblerError::LengthMismatch {
                abscissae: abscissae.len(),
                values: values.len(),
            });
        }
        for (i, &x) in abscissae.iter().enumerate() {
            if !x.is_finite() {
                return Err(AssemblerError::NonFiniteSample { index: i });
            }
            if i > 0 && x <= abscissae[i - 1] {
                return Err(AssemblerError::NonIncreasingAbscissae { index: i });
            }
        }
        for (i, v) in values.iter().enumerate() {
            if !v.re.is_finite() || !v.im.is_finite() {
                return Err(AssemblerError::NonFiniteSample { index: i });
            }
        }
        Ok(Self { abscissae, values })
    }

    /// Convenience constructor for purely real samples.
    pub fn from_real(abscissae: Vec<f64>, values: Vec<f64>) -> Result<Self, AssemblerError> {
        let values = values.into_iter().map(Complex64::from).collect();
        Self::new(abscissae, values)
    }

    pub fn abscissae(&self) -> &[f64] {
        &self.abscissae
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.abscissae.len()
    }

    pub fn is_empty(&self) -> bool {
        self.abscissae.is_empty()
    }

    /// Largest sample magnitude.
    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

/// Integration weight used by [`normalize`].
///
/// The separable measure `r² dr sinθ dθ dφ` splits across the factors:
/// `u(r)` already carries the `r` of `u/r` twice, so both the radial and
/// azimuthal factors normalize against the plain measure, while the polar
/// factor carries `sin θ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormWeight {
    /// `∫ |g(x)|² dx = 1`.
    Plain,
    /// `∫ |g(θ)|² sin θ dθ = 1` (meaningful for θ inside `(0, π)`).
    SinTheta,
}

impl NormWeight {
    fn at(self, x: f64) -> f64 {
        match self {
            NormWeight::Plain => 1.0,
            NormWeight::SinTheta => x.sin(),
        }
    }
}

/// Rescale `g` so its squared norm under `weight` integrates to one
/// (trapezoid rule on `g`'s own abscissae).
///
/// Normalizing is idempotent up to floating-point roundoff.
///
/// # Examples
///
/// ```
/// use spinor_spectra::assembler::{normalize, GridFunction, NormWeight};
/// let g = GridFunction::from_real(vec![0.0, 1.0, 2.0], vec![1.0; 3]).unwrap();
/// let n = normalize(&g, NormWeight::Plain).unwrap();
/// // ∫ |1/√2|² dx over [0, 2] = 1.
/// assert!((n.values()[0].re - 1.0 / 2f64.sqrt()).abs() < 1e-15);
/// ```
pub fn normalize(g: &GridFunction, weight: NormWeight) -> Result<GridFunction, AssemblerError> {
    if g.len() < 2 {
        return Err(AssemblerError::MeshTooCoarse { axis: "grid", got: g.len(), need: 2 });
    }
    let xs = g.abscissae();
    let vs = g.values();
    let mut norm_sq = 0.0;
    for i in 0..xs.len() - 1 {
        let f0 = vs[i].norm_sqr() * weight.at(xs[i]);
        let f1 = vs[i + 1].norm_sqr() * weight.at(xs[i + 1]);
        norm_sq += 0.5 * (f0 + f1) * (xs[i + 1] - xs[i]);
    }
    if !(norm_sq > f64::MIN_POSITIVE) {
        return Err(AssemblerError::ZeroNorm);
    }
    let scale = norm_sq.sqrt().recip();
    let values = vs.iter().map(|v| v * scale).collect();
    GridFunction::new(xs.to_vec(), values)
}

/// Everything one fixed-point map evaluation produces: the closed-form
/// radial energy at the effective `l` implied by the angular solve.
struct CoupledStep {
    epsilon: f64,
    solution: AngularSolution,
    l_effective: f64,
}

fn coupled_step(
    constants: &Constants,
    radial_spec: &RadialSpec,
    angular_spec: &crate::model::AngularSpec,
    eps: f64,
) -> Result<CoupledStep, AssemblerError> {
    let eta = constants.coupling_eta(eps);
    let solution = solve_angular_params(constants, angular_spec, eta)?;
    let l_effective = rho_to_l(solution.rho)?;
    let spec = RadialSpec { l: l_effective, ..*radial_spec };
    let energy = radial_energy(constants, &spec)?;
    Ok(CoupledStep { epsilon: energy.epsilon, solution, l_effective })
}

/// Scan `[lo, hi]` with `n` uniform probes and return the first adjacent
/// pair of *valid* probes whose residuals change sign. Probes where the
/// angular solve fails (the admissible branch can close inside the window)
/// reset the pairing instead of aborting the scan.
fn scan_for_bracket(
    g: &impl Fn(f64) -> Result<f64, AssemblerError>,
    lo: f64,
    hi: f64,
    n: usize,
) -> Option<(f64, f64, f64)> {
    let mut prev: Option<(f64, f64)> = None;
    for i in 0..n {
        let x = lo + (hi - lo) * i as f64 / (n - 1) as f64;
        let Ok(gx) = g(x) else {
            prev = None;
            continue;
        };
        if let Some((px, pg)) = prev {
            if (pg < 0.0) != (gx < 0.0) {
                return Some((px, x, pg));
            }
        }
        prev = Some((x, gx));
    }
    None
}

/// Solve the energy/separation-constant loop for a bound state.
///
/// The angular problem needs the coupling `η = (ε + Mc²)/c²`; the radial
/// energy needs the effective `l` from the angular separation constant.
/// This routine iterates the damped fixed-point map
///
/// ```text
/// ε ← ε + (r(ε) - ε)/2,    r(ε) = closed-form radial energy at l(ρ(ε)),
/// ```
///
/// declaring convergence when the residual at the candidate itself
/// satisfies `|r(ε*) - ε*| <= tol` (so an ε-independent separation constant
/// converges in one iteration). If the map has not settled after 200
/// iterations, the residual `r(ε) - ε` is bracketed by scanning the
/// physical energy window and bisected.
///
/// The `l` field of `radial_spec` is ignored: the returned
/// [`BoundState::radial_spec`] carries the derived `l_effective` instead.
/// `tol` is an absolute energy tolerance.
///
/// # Errors
///
/// Propagates validation errors from the radial and angular solvers;
/// returns [`AssemblerError::NoBracket`] when the fallback scan finds no
/// sign change (no bound state in the physical window).
pub fn solve_coupled(
    constants: &Constants,
    radial_spec: &RadialSpec,
    angular_spec: &crate::model::AngularSpec,
    tol: f64,
) -> Result<BoundState, AssemblerError> {
    solve_coupled_impl(constants, radial_spec, angular_spec, tol, 200)
}

fn solve_coupled_impl(
    constants: &Constants,
    radial_spec: &RadialSpec,
    angular_spec: &crate::model::AngularSpec,
    tol: f64,
    max_fixed_point: u32,
) -> Result<BoundState, AssemblerError> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(AssemblerError::InvalidParameter {
            message: format!("tolerance must be finite and positive (got {tol})"),
        });
    }
    let mc2 = constants.mc2();
    let step = |eps: f64| coupled_step(constants, radial_spec, angular_spec, eps);
    let finish = |eps: f64, converged: bool, iterations: u32| -> Result<BoundState, AssemblerError> {
        let at = step(eps)?;
        Ok(BoundState {
            epsilon: eps,
            rho: at.solution.rho,
            l_effective: at.l_effective,
            radial_spec: RadialSpec { l: at.l_effective, ..*radial_spec },
            angular_spec: *angular_spec,
            converged,
            iterations,
        })
    };

    let mut eps = match radial_spec.kind {
        // Mid-window start: the Coulomb well binds inside |ε| < Mc², the
        // oscillator above Mc².
        RadialKind::Coulomb { .. } => 0.0,
        RadialKind::Oscillator { .. } => mc2 + 1.0,
    };
    for it in 1..=max_fixed_point {
        let cand = step(eps)?.epsilon;
        let residual = step(cand)?.epsilon - cand;
        if residual.abs() <= tol {
            return finish(cand, true, it);
        }
        eps += 0.5 * (cand - eps);
    }

    // Fixed-point iteration stalled (strong feedback between ρ and ε);
    // bracket the residual across the physical window and bisect.
    let g = |eps: f64| -> Result<f64, AssemblerError> { Ok(step(eps)?.epsilon - eps) };
    let margin = 1.0 + mc2;
    let no_bracket = |message: String| AssemblerError::NoBracket { message };
    let (mut a, mut b, mut ga) = match radial_spec.kind {
        RadialKind::Coulomb { .. } => {
            scan_for_bracket(&g, -mc2 + 1e-6 * margin, mc2 - 1e-9 * margin, 61).ok_or_else(
                || no_bracket("no sign change of r(ε) - ε inside |ε| < Mc²".to_string()),
            )?
        }
        RadialKind::Oscillator { .. } => {
            // r(ε) stays above Mc² while growing sublinearly in ε, so
            // widening the window upward must eventually cross r(ε) = ε.
            let lo = mc2 + 1e-9 * margin;
            let mut width = margin;
            let mut found = None;
            for _ in 0..40 {
                if let Some(bracket) = scan_for_bracket(&g, lo, mc2 + width, 61) {
                    found = Some(bracket);
                    break;
                }
                width *= 2.0;
            }
            found.ok_or_else(|| {
                no_bracket("no sign change of r(ε) - ε above the rest energy".to_string())
            })?
        }
    };
    let mut iterations = max_fixed_point;
    let mut best = 0.5 * (a + b);
    let mut converged = false;
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        iterations += 1;
        best = mid;
        let gm = g(mid)?;
        if gm.abs() <= tol || (b - a) <= tol {
            converged = true;
            break;
        }
        if (gm < 0.0) == (ga < 0.0) {
            a = mid;
            ga = gm;
        } else {
            b = mid;
        }
    }
    finish(best, converged, iterations)
}

/// Upper and lower spinor components sampled over a separable
/// `(r, θ)` mesh at a fixed azimuth `φ₀`.
///
/// The upper component stays in factored form — `upper_radial` holds
/// `u(r)/r`, `upper_polar` holds `Θ(θ)`, `upper_azimuth` holds `Φ(φ₀)` —
/// so `φ(r_i, θ_j, φ₀) = upper_radial[i] · upper_polar[j] · upper_azimuth`.
/// The derivative coupling mixes the factors, so the lower component is a
/// dense matrix: `lower[i][j] = χ(r_i, θ_j, φ₀)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorSample {
    pub epsilon: f64,
    /// `u(r)/r` on the radial mesh.
    pub upper_radial: GridFunction,
    /// `Θ(θ)` on the polar mesh.
    pub upper_polar: GridFunction,
    /// `Φ(φ₀)` at the sampling azimuth.
    pub upper_azimuth: Complex64,
    /// The azimuth the sample was taken at.
    pub phi0: f64,
    /// `χ(r_i, θ_j, φ₀)`, row `i` following the radial mesh.
    pub lower: Vec<Vec<Complex64>>,
}

/// First derivative of a sampled function: centered differences in the
/// interior, one-sided at the two edges.
fn grid_derivative(g: &GridFunction) -> Vec<Complex64> {
    let xs = g.abscissae();
    let vs = g.values();
    let n = xs.len();
    let mut out = Vec::with_capacity(n);
    out.push((vs[1] - vs[0]) / (xs[1] - xs[0]));
    for i in 1..n - 1 {
        out.push((vs[i + 1] - vs[i - 1]) / (xs[i + 1] - xs[i - 1]));
    }
    out.push((vs[n - 1] - vs[n - 2]) / (xs[n - 1] - xs[n - 2]));
    out
}

/// Derive the lower spinor profile from factored upper-component samples:
///
/// ```text
/// χ(r, θ, φ₀) = -i·c/(ε + Mc²) · [ ∂_r + (1/r)∂_θ + im/(r sin θ) ] φ
/// ```
///
/// with the three directional pieces summed into a single scalar profile
/// (ħ = 1). `upper_radial` holds `u(r)/r` on a strictly positive radial
/// mesh, `upper_polar` holds `Θ(θ)` with `θ ⊂ (0, π)`, and `azimuth_factor`
/// is `Φ(φ₀)`; the azimuthal derivative is applied analytically as `im`.
/// Radial and polar derivatives use centered differences in the interior
/// and one-sided differences at the edges, so both meshes need at least 5
/// points for a meaningful interior.
pub fn lower_from_upper(
    constants: &Constants,
    epsilon: f64,
    m: i32,
    upper_radial: &GridFunction,
    upper_polar: &GridFunction,
    azimuth_factor: Complex64,
) -> Result<Vec<Vec<Complex64>>, AssemblerError> {
    if upper_radial.len() < 5 {
        return Err(AssemblerError::MeshTooCoarse {
            axis: "r",
            got: upper_radial.len(),
            need: 5,
        });
    }
    if upper_polar.len() < 5 {
        return Err(AssemblerError::MeshTooCoarse {
            axis: "theta",
            got: upper_polar.len(),
            need: 5,
        });
    }
    let denom = epsilon + constants.mc2();
    if !(denom.is_finite() && denom.abs() > 0.0) {
        return Err(AssemblerError::InvalidParameter {
            message: format!("lower component undefined at ε + Mc² = {denom}"),
        });
    }
    let rs = upper_radial.abscissae();
    if rs[0] <= 0.0 {
        return Err(AssemblerError::InvalidParameter {
            message: format!("radial mesh must be strictly positive (starts at {})", rs[0]),
        });
    }
    let thetas = upper_polar.abscissae();
    if thetas[0] <= 0.0 || thetas[thetas.len() - 1] >= PI {
        return Err(AssemblerError::InvalidParameter {
            message: "polar mesh must lie strictly inside (0, π)".to_string(),
        });
    }
    let pref = Complex64::new(0.0, -constants.c / denom) * azimuth_factor;
    let f = upper_radial.values();
    let g = upper_polar.values();
    let df = grid_derivative(upper_radial);
    let dg = grid_derivative(upper_polar);
    let im_m = Complex64::new(0.0, f64::from(m));
    let lower = rs
        .iter()
        .enumerate()
        .map(|(i, &r)| {
            thetas
                .iter()
                .enumerate()
                .map(|(j, &theta)| {
                    let gradient = df[i] * g[j]
                        + f[i] * dg[j] / r
                        + im_m * f[i] * g[j] / (r * theta.sin());
                    pref * gradient
                })
                .collect()
        })
        .collect();
    Ok(lower)
}

/// Sample the full spinor of a solved bound state on an `(r, θ)` mesh at
/// azimuth `phi0`.
///
/// The state's closed-form factors are evaluated exactly; the lower
/// component comes from [`lower_from_upper`]. Both meshes need at least 5
/// points. The state must be self-consistent (as produced by
/// [`solve_coupled`]): the radial spec's closed-form energy is recomputed
/// and checked against `state.epsilon`.
pub fn assemble_spinor(
    constants: &Constants,
    state: &BoundState,
    r_samples: &[f64],
    theta_samples: &[f64],
    phi0: f64,
) -> Result<SpinorSample, AssemblerError> {
    if r_samples.len() < 5 {
        return Err(AssemblerError::MeshTooCoarse {
            axis: "r",
            got: r_samples.len(),
            need: 5,
        });
    }
    if theta_samples.len() < 5 {
        return Err(AssemblerError::MeshTooCoarse {
            axis: "theta",
            got: theta_samples.len(),
            need: 5,
        });
    }
    let energy = radial_energy(constants, &state.radial_spec)?;
    if (energy.epsilon - state.epsilon).abs() > 1e-6 * (1.0 + state.epsilon.abs()) {
        return Err(AssemblerError::InvalidParameter {
            message: format!(
                "state energy {} is not self-consistent with its radial spec (closed form gives {})",
                state.epsilon, energy.epsilon
            ),
        });
    }
    let u = radial_wavefunction(constants, &state.radial_spec, &energy, r_samples)?;
    let f_values: Vec<Complex64> =
        u.values().iter().zip(r_samples).map(|(&v, &r)| v / r).collect();
    let upper_radial = GridFunction::new(r_samples.to_vec(), f_values)?;
    let eta = constants.coupling_eta(state.epsilon);
    let solution = solve_angular_params(constants, &state.angular_spec, eta)?;
    let upper_polar = angular_wavefunction(&solution, theta_samples)?;
    let upper_azimuth = azimuthal(state.angular_spec.m, &[phi0])?.values()[0];
    let lower = lower_from_upper(
        constants,
        state.epsilon,
        state.angular_spec.m,
        &upper_radial,
        &upper_polar,
        upper_azimuth,
    )?;
    Ok(SpinorSample {
        epsilon: state.epsilon,
        upper_radial,
        upper_polar,
        upper_azimuth,
        phi0,
        lower,
    })
}

#[cfg(test)]
mod grid_tests {
    use super::*;

    #[test]
    fn rejects_mismatched_lengths() {
        let err = GridFunction::from_real(vec![0.0, 1.0], vec![1.0]).unwrap_err();
        assert!(matches!(err, AssemblerError::LengthMismatch { abscissae: 2, values: 1 }));
    }

    #[test]
    fn rejects_non_increasing_abscissae() {
        let err = GridFunction::from_real(vec![0.0, 1.0, 1.0], vec![1.0; 3]).unwrap_err();
        assert!(matches!(err, AssemblerError::NonIncreasingAbscissae { index: 2 }));
    }

    #[test]
    fn rejects_non_finite_values() {
        let err = GridFunction::from_real(vec![0.0, 1.0], vec![1.0, f64::NAN]).unwrap_err();
        assert!(matches!(err, AssemblerError::NonFiniteSample { index: 1 }));
    }

    #[test]
    fn max_abs_reports_peak_magnitude() {
        let g = GridFunction::new(
            vec![0.0, 1.0],
            vec![Complex64::new(0.0, -3.0), Complex64::new(1.0, 0.0)],
        )
        .unwrap();
        assert_eq!(g.max_abs(), 3.0);
    }
}
