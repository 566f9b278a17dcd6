//! Shared domain types for the bound-state problem.
//!
//! The physical setup is a Dirac particle whose scalar and vector potentials
//! are equal, which reduces the upper spinor component to a Schrödinger-like
//! equation. After separating in spherical coordinates the problem splits
//! into
//!
//! * a radial factor `u(r)` governed by a Coulomb-like (`-V0*lambda/(2r)`)
//!   or oscillator (`k r^2`) potential,
//! * a polar factor `Θ(θ)` governed by one of three ring-shaped potential
//!   families (`F1`, `F2`, `F3`), and
//! * an azimuthal phase `e^{i m φ}`.
//!
//! The two factors are linked by a separation constant `ρ`: the angular
//! eigenvalue feeds the radial equation through an effective (generally
//! non-integer) orbital index `l` with `ρ = l(l+1)`.
//!
//! Everything here uses natural units with `ħ = 1`; the particle mass `M`
//! and the speed of light `c` stay symbolic so the non-relativistic and
//! ultra-relativistic regimes are both reachable.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Physical constants of the problem (`ħ = 1` throughout).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Constants {
    /// Particle mass `M` (must be `>= 0`).
    pub mass: f64,
    /// Speed of light `c` (must be `> 0`).
    pub c: f64,
}

impl Constants {
    /// Natural units: `M = c = 1`.
    pub fn natural() -> Self {
        Constants { mass: 1.0, c: 1.0 }
    }

    /// Rest energy `M c^2`.
    pub fn mc2(&self) -> f64 {
        self.mass * self.c * self.c
    }

    /// Coupling strength `η = (ε + M c²) / c²` that multiplies the angular
    /// potential after separation. Every angular solve is parameterised by
    /// this combination rather than by `ε` directly.
    pub fn coupling_eta(&self, epsilon: f64) -> f64 {
        (epsilon + self.mc2()) / (self.c * self.c)
    }
}

impl Default for Constants {
    fn default() -> Self {
        Constants::natural()
    }
}

/// Which radial potential the bound state lives in.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RadialKind {
    /// Attractive Coulomb tail `V(r) = -(V0 λ)/(2 r)`; the product `V0 λ`
    /// is the only combination that enters any observable.
    Coulomb { v0_lambda: f64 },
    /// Isotropic quadratic well `V(r) = k r^2`.
    Oscillator { k: f64 },
}

/// Complete description of a radial problem.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialSpec {
    pub kind: RadialKind,
    /// Radial quantum number (number of interior nodes of `u`).
    pub n_r: u32,
    /// Effective orbital index; generally non-integer because it comes from
    /// the angular separation constant via `ρ = l(l+1)`.
    pub l: f64,
}

/// The three solvable angular potential families.
///
/// With `x = cos θ`, the polar equation carries `η f(θ)` where
///
/// * `F1`: `f = (γ + β x + α x²) / sin²θ` — the classic ring-shaped well,
///   singular at both poles;
/// * `F2`: `f = (γ + β x² + α x⁴) / (sin²θ cos²θ)` — singular at the poles
///   *and* the equator, so the domain is a single quadrant;
/// * `F3`: `f = γ + β cot θ + α cot²θ` — here `β` is taken imaginary
///   (`β = i·b`), producing a complex potential with real spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AngularFamily {
    F1,
    F2,
    F3,
}

/// Complete description of an angular problem.
///
/// For `F1`/`F2` all three shape coefficients are real. For `F3` the `beta`
/// field stores the real number `b` in `β = i·b`; the solver applies the
/// factor `i` internally so that every field of this struct stays real.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AngularSpec {
    pub family: AngularFamily,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    /// Azimuthal quantum number.
    pub m: i32,
    /// Polar quantum number (degree of the Jacobi factor in `Θ`).
    pub n_theta: u32,
}

/// Parameters of a solved angular factor.
///
/// `s` and `λ` are the two shape parameters of the solvable model the family
/// maps onto; `ρ` is the separation constant handed to the radial problem.
/// `λ` is real for `F1`/`F2` and purely imaginary for `F3`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AngularSolution {
    pub family: AngularFamily,
    pub n_theta: u32,
    pub s: f64,
    pub lambda: Complex64,
    pub rho: f64,
    /// The coupling `η = (ε + Mc²)/c²` the solve was performed at.
    pub eta: f64,
}

/// A fully assembled bound state: the self-consistent energy together with
/// the radial and angular problem descriptions it was computed from.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundState {
    /// Relativistic energy `ε` (rest energy included).
    pub epsilon: f64,
    /// Separation constant linking the angular and radial factors.
    pub rho: f64,
    /// Effective orbital index, `rho = l_effective (l_effective + 1)`.
    pub l_effective: f64,
    /// Radial problem description with `l` resolved to `l_effective`.
    pub radial_spec: RadialSpec,
    pub angular_spec: AngularSpec,
    pub converged: bool,
    /// Fixed-point (or bisection) iterations spent.
    pub iterations: u32,
}

/// A single validation failure: a machine-readable code, the offending
/// field, and a human-readable explanation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub code: &'static str,
    pub field: &'static str,
    pub message: String,
}

impl Violation {
    fn new(code: &'static str, field: &'static str, message: String) -> Self {
        Violation { code, field, message }
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} [{}]: {}", self.code, self.field, self.message)
    }
}

#[derive(Debug, Error)]
pub enum ModelError {
    /// The separation constant fell below the `ρ >= -1/4` floor required for
    /// a real effective orbital index.
    #[error("rho + 1/4 >= 0 required for a real effective l (got rho = {rho})")]
    RhoBelowBound { rho: f64 },
}

fn finite(v: f64, code: &'static str, field: &'static str, out: &mut Vec<Violation>) -> bool {
    if v.is_finite() {
        true
    } else {
        out.push(Violation::new(code, field, format!("{field} must be finite (got {v})")));
        false
    }
}

/// Validate physical constants: `M >= 0`, `c > 0`, both finite.
pub fn validate_constants(consts: &Constants) -> Vec<Violation> {
    let mut out = Vec::new();
    if finite(consts.mass, "mass-not-finite", "mass", &mut out) && !(consts.mass >= 0.0) {
        out.push(Violation::new(
            "mass-negative",
            "mass",
            format!("mass >= 0 required (got {})", consts.mass),
        ));
    }
    if finite(consts.c, "c-not-finite", "c", &mut out) && !(consts.c > 0.0) {
        out.push(Violation::new(
            "c-not-positive",
            "c",
            format!("c > 0 required (got {})", consts.c),
        ));
    }
    out
}

/// Validate a radial problem description.
///
/// The Coulomb branch needs `l > -1` (so the Laguerre order `2l+1` stays
/// above `-1`) and a positive coupling product. The oscillator branch is
/// solvable down to `l > -3/2` and needs a positive stiffness `k`.
pub fn validate_radial(spec: &RadialSpec) -> Vec<Violation> {
    let mut out = Vec::new();
    match spec.kind {
        RadialKind::Coulomb { v0_lambda } => {
            if finite(v0_lambda, "v0lambda-not-finite", "v0_lambda", &mut out)
                && !(v0_lambda > 0.0)
            {
                out.push(Violation::new(
                    "v0lambda-not-positive",
                    "v0_lambda",
                    format!("v0_lambda > 0 required for an attractive tail (got {v0_lambda})"),
                ));
            }
            if finite(spec.l, "l-not-finite", "l", &mut out) && !(spec.l > -1.0) {
                out.push(Violation::new(
                    "l-out-of-range",
                    "l",
                    format!("l > -1 required for the Coulomb radial factor (got {})", spec.l),
                ));
            }
        }
        RadialKind::Oscillator { k } => {
            if finite(k, "k-not-finite", "k", &mut out) && !(k > 0.0) {
                out.push(Violation::new(
                    "k-not-positive",
                    "k",
                    format!("k > 0 required for a confining well (got {k})"),
                ));
            }
            if finite(spec.l, "l-not-finite", "l", &mut out) && !(spec.l > -1.5) {
                out.push(Violation::new(
                    "l-out-of-range",
                    "l",
                    format!("l > -3/2 required for the oscillator radial factor (got {})", spec.l),
                ));
            }
        }
    }
    out
}

/// Validate an angular problem description (shape coefficients finite; family
/// restrictions live on the solved parameters, not the raw inputs).
pub fn validate_angular_spec(spec: &AngularSpec) -> Vec<Violation> {
    let mut out = Vec::new();
    finite(spec.alpha, "alpha-not-finite", "alpha", &mut out);
    finite(spec.beta, "beta-not-finite", "beta", &mut out);
    finite(spec.gamma, "gamma-not-finite", "gamma", &mut out);
    out
}

/// Validate a solved angular parameter set against its family's
/// normalizability restrictions:
///
/// * `F1`: `s > 3/8` and `-(s + 1/4) < λ <= s - 1/2`, `λ` real;
/// * `F2`: `s > -1/2` and `λ > 1/2`, `λ` real;
/// * `F3`: `n_θ - 1 < s < n_θ - 1/2`, `λ` purely imaginary with
///   `|Im λ| < |(s - n_θ)(s - n_θ + 1)|`;
/// * every family: `ρ + 1/4 >= 0`.
pub fn validate_solution(sol: &AngularSolution) -> Vec<Violation> {
    let mut out = Vec::new();
    let s = sol.s;
    let lam = sol.lambda;
    if !finite(s, "s-not-finite", "s", &mut out)
        || !lam.re.is_finite()
        || !lam.im.is_finite()
    {
        if !lam.re.is_finite() || !lam.im.is_finite() {
            out.push(Violation::new(
                "lambda-not-finite",
                "lambda",
                format!("lambda must be finite (got {lam})"),
            ));
        }
        return out;
    }
    match sol.family {
        AngularFamily::F1 => {
            if lam.im != 0.0 {
                out.push(Violation::new(
                    "lambda-not-real",
                    "lambda",
                    format!("lambda must be real for family F1 (got {lam})"),
                ));
            }
            if !(s > 0.375) {
                out.push(Violation::new(
                    "s-out-of-range",
                    "s",
                    format!("s > 3/8 required for family F1 (got {s})"),
                ));
            }
            // The upper comparison is non-strict: at lambda = s - 1/2 the
            // wavefunction approaches a finite constant at theta = 0 instead
            // of decaying, which is still square-integrable. The free-field
            // reduction (alpha = beta = gamma = 0, m = 0) sits exactly on
            // that boundary with s = 1/2, lambda = 0.
            let lo = -(s + 0.25);
            let hi = s - 0.5;
            if !(lam.re > lo && lam.re <= hi) {
                out.push(Violation::new(
                    "lambda-out-of-range",
                    "lambda",
                    format!("-(s + 1/4) < lambda <= s - 1/2 required for family F1 (got lambda = {}, s = {s})", lam.re),
                ));
            }
        }
        AngularFamily::F2 => {
            if lam.im != 0.0 {
                out.push(Violation::new(
                    "lambda-not-real",
                    "lambda",
                    format!("lambda must be real for family F2 (got {lam})"),
                ));
            }
            if !(s > -0.5) {
                out.push(Violation::new(
                    "s-out-of-range",
                    "s",
                    format!("s > -1/2 required for family F2 (got {s})"),
                ));
            }
            if !(lam.re > 0.5) {
                out.push(Violation::new(
                    "lambda-out-of-range",
                    "lambda",
                    format!("lambda > 1/2 required for family F2 (got {})", lam.re),
                ));
            }
        }
        AngularFamily::F3 => {
            let n = f64::from(sol.n_theta);
            if !(s > n - 1.0 && s < n - 0.5) {
                out.push(Violation::new(
                    "s-out-of-range",
                    "s",
                    format!("n_theta - 1 < s < n_theta - 1/2 required for family F3 (got s = {s}, n_theta = {})", sol.n_theta),
                ));
            }
            if lam.re != 0.0 {
                out.push(Violation::new(
                    "lambda-not-imaginary",
                    "lambda",
                    format!("lambda must be purely imaginary for family F3 (got {lam})"),
                ));
            }
            let sigma = s - n;
            let cap = (sigma * (sigma + 1.0)).abs();
            if !(lam.im.abs() < cap) {
                out.push(Violation::new(
                    "lambda-out-of-range",
                    "lambda",
                    format!("|Im lambda| < |(s - n_theta)(s - n_theta + 1)| required for family F3 (got |Im lambda| = {}, cap = {cap})", lam.im.abs()),
                ));
            }
        }
    }
    if finite(sol.rho, "rho-not-finite", "rho", &mut out) && !(sol.rho + 0.25 >= 0.0) {
        out.push(Violation::new(
            "rho-below-bound",
            "rho",
            format!("rho + 1/4 >= 0 required (got rho = {})", sol.rho),
        ));
    }
    if finite(sol.eta, "eta-not-finite", "eta", &mut out) && !(sol.eta > 0.0) {
        out.push(Violation::new(
            "eta-not-positive",
            "eta",
            format!("eta > 0 required (got {})", sol.eta),
        ));
    }
    out
}

/// Map the separation constant to the effective orbital index: the larger
/// root of `l(l+1) = ρ`,
///
/// ```text
/// l = (-1 + sqrt(1 + 4ρ)) / 2,    ρ >= -1/4.
/// ```
///
/// The result is monotone in `ρ` and bounded below by `-1/2` (reached at
/// `ρ = -1/4` exactly).
///
/// # Examples
///
/// ```
/// use spinor_spectra::model::rho_to_l;
/// assert_eq!(rho_to_l(2.0).unwrap(), 1.0);
/// assert_eq!(rho_to_l(0.0).unwrap(), 0.0);
/// assert_eq!(rho_to_l(-0.25).unwrap(), -0.5);
/// assert!(rho_to_l(-0.26).is_err());
/// ```
pub fn rho_to_l(rho: f64) -> Result<f64, ModelError> {
    let disc = 1.0 + 4.0 * rho;
    if !(disc >= 0.0) {
        return Err(ModelError::RhoBelowBound { rho });
    }
    Ok((-1.0 + disc.sqrt()) / 2.0)
}
