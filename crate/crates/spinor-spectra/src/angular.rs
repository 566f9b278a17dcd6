//! Closed-form polar and azimuthal factors for the three ring-shaped
//! potential families.
//!
//! With the separation ansatz `φ = u(r)/r · Θ(θ) · e^{imφ}/√(2π)`, the polar
//! factor obeys
//!
//! ```text
//! -H″(θ) + [ (m² - 1/4)/sin²θ + η·f(θ) ] H(θ) = (ρ + 1/4) H(θ),
//! H(θ) = Θ(θ)·√(sin θ),
//! ```
//!
//! where `η = (ε + Mc²)/c²` couples the angular problem to the energy and
//! `ρ` is the separation constant handed to the radial equation. Three
//! shapes `f(θ)` admit closed-form solutions:
//!
//! ```text
//! F1:  f(θ) = (γ + β cos θ + α cos²θ) / sin²θ
//! F2:  f(θ) = (γ + β cos²θ + α cos⁴θ) / (sin²θ cos²θ)
//! F3:  f(θ) = γ + i·b cot θ + α cot²θ          (β = i·b, b real)
//! ```
//!
//! Each family maps onto a solvable model with two shape parameters
//! `(s, λ)`; [`solve_angular_params`] inverts that map, applies the
//! normalizability restrictions, and returns the admissible branch.
//! [`angular_wavefunction`] evaluates the corresponding `Θ(θ)` (a weight
//! factor times a Jacobi polynomial), [`azimuthal`] evaluates the trivial
//! `Φ(φ)` factor, and [`energy_upper_bound`] exposes the energy ceiling
//! implied by `ρ + 1/4 >= 0`.
//!
//! `F3` is a complex (PT-symmetric rather than Hermitian) potential: its
//! `λ` is purely imaginary, its `Θ` is genuinely complex on a real slice of
//! the domain, yet the separation constant `ρ` stays real on the admissible
//! branch.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use thiserror::Error;

use crate::assembler::{AssemblerError, GridFunction};
use crate::model::{
    validate_angular_spec, validate_constants, validate_solution, AngularFamily, AngularSolution,
    AngularSpec, Constants, Violation,
};
use crate::special::{jacobi, SpecialFnError};

/// Errors from solving or evaluating an angular factor.
#[derive(Debug, Error)]
pub enum AngularError {
    /// The inputs fail basic validation before any solving is attempted.
    #[error("invalid angular input: {message}")]
    InvalidSpec { message: String },
    /// The quadratic fixing the `F1` shape parameters has no real root, so
    /// no `(s, λ)` pair reproduces the requested potential.
    #[error(
        "shape-parameter quadratic has negative discriminant ({discriminant}); \
         no real (s, λ) pair reproduces this potential"
    )]
    NegativeDiscriminant { discriminant: f64 },
    /// Real candidates exist but every one violates the family's
    /// normalizability restrictions — the parameter set is unphysical.
    #[error("no admissible (s, λ) branch for family {family:?}: {details}")]
    NoAdmissibleBranch { family: AngularFamily, details: String },
    /// The admissible branch produced a separation constant below `-1/4`,
    /// for which no real effective angular momentum exists.
    #[error("separation constant rho = {rho} lies below the -1/4 bound")]
    RhoBelowBound { rho: f64 },
    /// A sample point lies outside the family's open polar domain.
    #[error("theta = {theta} is outside the open domain ({lo}, {hi}) of family {family:?}")]
    OutOfDomain { family: AngularFamily, theta: f64, lo: f64, hi: f64 },
    /// The requested energy bound divides by a vanishing shape coefficient.
    #[error("energy bound is undefined: {message}")]
    UndefinedBound { message: String },
    /// A special-function evaluation failed.
    #[error(transparent)]
    Special(#[from] SpecialFnError),
    /// Sample-grid construction failed.
    #[error(transparent)]
    Grid(#[from] AssemblerError),
}

/// Open interval of polar angles on which a family's potential is regular.
///
/// `F1` and `F3` live on `(0, π)`; `F2` has an additional `1/cos²θ` wall and
/// lives on `(0, π/2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaDomain {
    pub lo: f64,
    pub hi: f64,
}

impl ThetaDomain {
    /// The domain on which `family`'s potential is regular.
    pub fn for_family(family: AngularFamily) -> Self {
        match family {
            AngularFamily::F1 | AngularFamily::F3 => ThetaDomain { lo: 0.0, hi: PI },
            AngularFamily::F2 => ThetaDomain { lo: 0.0, hi: FRAC_PI_2 },
        }
    }

    /// Whether `theta` lies strictly inside the open interval.
    pub fn contains(&self, theta: f64) -> bool {
        theta > self.lo && theta < self.hi
    }

    /// `n` uniformly spaced interior points, excluding both endpoints.
    ///
    /// The step is `(hi - lo)/(n + 1)`, so the first and last samples sit
    /// one step inside the singular endpoints.
    pub fn uniform_interior(&self, n: usize) -> Vec<f64> {
        let h = (self.hi - self.lo) / (n as f64 + 1.0);
        (1..=n).map(|j| self.lo + h * j as f64).collect()
    }
}

/// The `F1` potential shape `(γ + β cos θ + α cos²θ)/sin²θ`.
pub fn shape_f1(alpha: f64, beta: f64, gamma: f64, theta: f64) -> f64 {
    let c = theta.cos();
    let s2 = theta.sin().powi(2);
    (gamma + beta * c + alpha * c * c) / s2
}

/// The `F2` potential shape `(γ + β cos²θ + α cos⁴θ)/(sin²θ cos²θ)`.
pub fn shape_f2(alpha: f64, beta: f64, gamma: f64, theta: f64) -> f64 {
    let c2 = theta.cos().powi(2);
    let s2 = theta.sin().powi(2);
    (gamma + beta * c2 + alpha * c2 * c2) / (s2 * c2)
}

/// The complex `F3` potential shape `γ + i·b cot θ + α cot²θ`.
///
/// `b` is the real number stored in [`AngularSpec::beta`] for this family.
pub fn shape_f3(alpha: f64, b: f64, gamma: f64, theta: f64) -> Complex64 {
    let cot = theta.cos() / theta.sin();
    Complex64::new(gamma + alpha * cot * cot, b * cot)
}

/// Separation constant produced by a `(s, λ)` pair of the given family.
fn separation_constant(spec: &AngularSpec, eta: f64, s: f64, lambda: Complex64) -> f64 {
    let n = f64::from(spec.n_theta);
    match spec.family {
        AngularFamily::F1 => (s + n).powi(2) - eta * spec.alpha - 0.25,
        AngularFamily::F2 => (lambda.re + s + 2.0 * n).powi(2) - eta * spec.alpha - 0.25,
        AngularFamily::F3 => {
            let sigma = s - n;
            eta * (spec.gamma - spec.alpha) + sigma * sigma
                + (lambda.im * lambda.im) / (sigma * sigma)
                - 0.25
        }
    }
}

/// Filter trial `(s, λ)` pairs through the family restrictions and pick the
/// admissible branch: smallest `s`, ties broken by smaller `|λ|`.
fn pick_candidate(
    spec: &AngularSpec,
    eta: f64,
    candidates: &[(f64, Complex64)],
) -> Result<AngularSolution, AngularError> {
    let mut admissible: Vec<AngularSolution> = Vec::new();
    let mut rho_only: Option<f64> = None;
    let mut rejected = Vec::new();
    for &(s, lambda) in candidates {
        let sol = AngularSolution {
            family: spec.family,
            n_theta: spec.n_theta,
            s,
            lambda,
            rho: separation_constant(spec, eta, s, lambda),
            eta,
        };
        let violations = validate_solution(&sol);
        if violations.is_empty() {
            admissible.push(sol);
        } else {
            if violations.iter().all(|v| v.code == "rho-below-bound") {
                rho_only.get_or_insert(sol.rho);
            }
            let codes: Vec<&str> = violations.iter().map(|v| v.code).collect();
            rejected.push(format!("(s = {s}, lambda = {lambda}): {}", codes.join(", ")));
        }
    }
    admissible.sort_by(|a, b| {
        a.s.total_cmp(&b.s)
            .then(a.lambda.norm().total_cmp(&b.lambda.norm()))
    });
    if let Some(sol) = admissible.into_iter().next() {
        return Ok(sol);
    }
    if let Some(rho) = rho_only {
        return Err(AngularError::RhoBelowBound { rho });
    }
    let details = if rejected.is_empty() {
        "no candidate (s, λ) pairs exist".to_string()
    } else {
        format!("every candidate violates a restriction: {}", rejected.join("; "))
    };
    Err(AngularError::NoAdmissibleBranch { family: spec.family, details })
}

/// Solve the polar problem for the `(s, λ, ρ)` parameter set of `spec` at
/// coupling `eta`.
///
/// The family restrictions enforced on the returned branch are those of
/// [`validate_solution`]; when several candidates pass, the one with the
/// smallest `s` wins (ties broken by smaller `|λ|`). The restrictions
/// guarantee a square-integrable `Θ` and, for `F3`, a real separation
/// constant.
///
/// # Errors
///
/// * [`AngularError::InvalidSpec`] for non-finite inputs or `eta <= 0`;
/// * [`AngularError::NegativeDiscriminant`] when the `F1` parameter
///   quadratic has no real root;
/// * [`AngularError::NoAdmissibleBranch`] when candidates exist but all
///   violate a family restriction;
/// * [`AngularError::RhoBelowBound`] when the only surviving branch maps to
///   `ρ < -1/4`.
///
/// # Examples
///
/// ```
/// use spinor_spectra::angular::solve_angular_params;
/// use spinor_spectra::model::{AngularFamily, AngularSpec, Constants};
///
/// // A pure csc² well split evenly between γ and α, solved at η = 2.
/// let spec = AngularSpec {
///     family: AngularFamily::F1,
///     alpha: 0.5,
///     beta: 0.0,
///     gamma: 0.5,
///     m: 0,
///     n_theta: 0,
/// };
/// let sol = solve_angular_params(&Constants::natural(), &spec, 2.0).unwrap();
/// assert!((sol.s - (1.0 + 2.0 * 2f64.sqrt()) / 2.0).abs() < 1e-14);
/// assert!((sol.rho - (1.0 + 2f64.sqrt())).abs() < 1e-14);
/// ```
pub fn solve_angular_params(
    constants: &Constants,
    spec: &AngularSpec,
    eta: f64,
) -> Result<AngularSolution, AngularError> {
    let mut violations = validate_constants(constants);
    violations.extend(validate_angular_spec(spec));
    if !(eta.is_finite() && eta > 0.0) {
        violations.push(Violation {
            code: "eta-not-positive",
            field: "eta",
            message: format!("coupling eta must be finite and positive (got {eta})"),
        });
    }
    if !violations.is_empty() {
        let message = violations
            .iter()
            .map(Violation::to_string)
            .collect::<Vec<_>>()
            .join("; ");
        return Err(AngularError::InvalidSpec { message });
    }
    match spec.family {
        AngularFamily::F1 => solve_f1(spec, eta),
        AngularFamily::F2 => solve_f2(spec, eta),
        AngularFamily::F3 => solve_f3(spec, eta),
    }
}

/// `F1`: the shape parameters satisfy
///
/// ```text
/// λ² + s² - s = A := η(γ + α) + m² - 1/4,
/// λ(2s - 1)   = B := -ηβ,
/// ```
///
/// so `t = (2s - 1)²` solves `t² - (4A + 1)t + 4B² = 0`. Each nonnegative
/// root yields candidates `s = (1 ± √t)/2`, `λ = B/(±√t)`; the degenerate
/// root `t = 0` (possible only for `B = 0`) pins `s = 1/2` and releases `λ`
/// to `±√(A + 1/4)`.
fn solve_f1(spec: &AngularSpec, eta: f64) -> Result<AngularSolution, AngularError> {
    let m2 = f64::from(spec.m).powi(2);
    let a_coeff = eta * (spec.gamma + spec.alpha) + m2 - 0.25;
    let b_coeff = -eta * spec.beta;
    let tq = 4.0 * a_coeff + 1.0;
    let disc = tq * tq - 16.0 * b_coeff * b_coeff;
    if disc < 0.0 {
        return Err(AngularError::NegativeDiscriminant { discriminant: disc });
    }
    let sd = disc.sqrt();
    let t_tol = 1e-12 * (1.0 + tq.abs());
    let mut candidates = Vec::new();
    for t in [(tq + sd) / 2.0, (tq - sd) / 2.0] {
        if t > t_tol {
            let rt = t.sqrt();
            for sign in [1.0, -1.0] {
                let two_s_minus_1 = sign * rt;
                candidates.push((
                    (1.0 + two_s_minus_1) / 2.0,
                    Complex64::new(b_coeff / two_s_minus_1, 0.0),
                ));
            }
        } else if t >= -t_tol && b_coeff.abs() <= 1e-10 * (1.0 + a_coeff.abs()) {
            let lam_sq = a_coeff + 0.25;
            if lam_sq >= 0.0 {
                let lam = lam_sq.sqrt();
                candidates.push((0.5, Complex64::new(lam, 0.0)));
                if lam > 0.0 {
                    candidates.push((0.5, Complex64::new(-lam, 0.0)));
                }
            }
        }
    }
    pick_candidate(spec, eta, &candidates)
}

/// `F2`: both parameters come from decoupled quadratics,
///
/// ```text
/// s(s - 1) = ηγ,
/// λ(λ - 1) = η(γ + β + α) + m² - 1/4,
/// ```
///
/// and normalizability selects the larger root of each.
fn solve_f2(spec: &AngularSpec, eta: f64) -> Result<AngularSolution, AngularError> {
    let m2 = f64::from(spec.m).powi(2);
    let s_arg = 1.0 + 4.0 * eta * spec.gamma;
    if s_arg < 0.0 {
        return Err(AngularError::NoAdmissibleBranch {
            family: spec.family,
            details: format!("s(s - 1) = ηγ = {} has no real root", eta * spec.gamma),
        });
    }
    let s = (1.0 + s_arg.sqrt()) / 2.0;
    let lam_rhs = eta * (spec.gamma + spec.beta + spec.alpha) + m2 - 0.25;
    let lam_arg = 1.0 + 4.0 * lam_rhs;
    if lam_arg < 0.0 {
        return Err(AngularError::NoAdmissibleBranch {
            family: spec.family,
            details: format!("λ(λ - 1) = {lam_rhs} has no real root"),
        });
    }
    let lambda = Complex64::new((1.0 + lam_arg.sqrt()) / 2.0, 0.0);
    pick_candidate(spec, eta, &[(s, lambda)])
}

/// `F3`: the parameters satisfy
///
/// ```text
/// s(s + 1) = ηα + m² - 1/4,
/// λ = -i·ηb/2,                       (β = i·b)
/// ```
///
/// with the admissible `s` branch confined to `(n_θ - 1, n_θ - 1/2)`.
fn solve_f3(spec: &AngularSpec, eta: f64) -> Result<AngularSolution, AngularError> {
    let m2 = f64::from(spec.m).powi(2);
    let rhs = eta * spec.alpha + m2 - 0.25;
    let disc = 1.0 + 4.0 * rhs;
    if disc < 0.0 {
        return Err(AngularError::NoAdmissibleBranch {
            family: spec.family,
            details: format!("s(s + 1) = {rhs} has no real root"),
        });
    }
    let sd = disc.sqrt();
    let lambda = Complex64::new(0.0, -eta * spec.beta / 2.0);
    let candidates = [((-1.0 + sd) / 2.0, lambda), ((-1.0 - sd) / 2.0, lambda)];
    pick_candidate(spec, eta, &candidates)
}

/// Evaluate the polar factor `Θ(θ)` of a solved angular problem on
/// `theta_samples` (strictly increasing, strictly inside the family
/// domain).
///
/// The closed forms are weight factors times Jacobi polynomials of degree
/// `n_θ`:
///
/// ```text
/// F1: Θ = (1 - cos θ)^{(s-λ)/2} (1 + cos θ)^{(s+λ)/2}
///         · P_n^{(s-λ-1/2, s+λ-1/2)}(cos θ) / √(sin θ)
/// F2: Θ = 2^{(λ+s)/2} (sin θ)^{λ-1/2} (cos θ)^s
///         · P_n^{(λ-1/2, s-1/2)}(cos 2θ)
/// F3: Θ = (-1)^{σ/2} (csc θ)^{σ+1/2} e^{λθ/σ}
///         · P_n^{(σ+iλ/σ, σ-iλ/σ)}(-i cot θ),    σ = s - n_θ
/// ```
///
/// For `F3` the purely imaginary `λ` makes both Jacobi parameters real while
/// the argument `-i cot θ` stays imaginary; the result is complex with a
/// θ-dependent phase.
pub fn angular_wavefunction(
    sol: &AngularSolution,
    theta_samples: &[f64],
) -> Result<GridFunction, AngularError> {
    let domain = ThetaDomain::for_family(sol.family);
    for &theta in theta_samples {
        if !domain.contains(theta) {
            return Err(AngularError::OutOfDomain {
                family: sol.family,
                theta,
                lo: domain.lo,
                hi: domain.hi,
            });
        }
    }
    let n = sol.n_theta;
    let s = sol.s;
    let mut values = Vec::with_capacity(theta_samples.len());
    match sol.family {
        AngularFamily::F1 => {
            let lam = sol.lambda.re;
            let a = Complex64::new(s - lam - 0.5, 0.0);
            let b = Complex64::new(s + lam - 0.5, 0.0);
            for &theta in theta_samples {
                let c = theta.cos();
                let poly = jacobi(n, a, b, Complex64::new(c, 0.0))?;
                let pref = (1.0 - c).powf((s - lam) / 2.0) * (1.0 + c).powf((s + lam) / 2.0)
                    / theta.sin().sqrt();
                values.push(poly * pref);
            }
        }
        AngularFamily::F2 => {
            let lam = sol.lambda.re;
            let a = Complex64::new(lam - 0.5, 0.0);
            let b = Complex64::new(s - 0.5, 0.0);
            let scale = 2f64.powf((lam + s) / 2.0);
            for &theta in theta_samples {
                let poly = jacobi(n, a, b, Complex64::new((2.0 * theta).cos(), 0.0))?;
                let pref = scale * theta.sin().powf(lam - 0.5) * theta.cos().powf(s);
                values.push(poly * pref);
            }
        }
        AngularFamily::F3 => {
            let sigma = s - f64::from(n);
            let a = Complex64::new(sigma, 0.0) + Complex64::i() * sol.lambda / sigma;
            let b = Complex64::new(sigma, 0.0) - Complex64::i() * sol.lambda / sigma;
            let phase = Complex64::new(-1.0, 0.0).powc(Complex64::new(sigma / 2.0, 0.0));
            for &theta in theta_samples {
                let cot = theta.cos() / theta.sin();
                let poly = jacobi(n, a, b, Complex64::new(0.0, -cot))?;
                let pref = phase
                    * theta.sin().recip().powf(sigma + 0.5)
                    * (sol.lambda * theta / sigma).exp();
                values.push(pref * poly);
            }
        }
    }
    Ok(GridFunction::new(theta_samples.to_vec(), values)?)
}

/// Evaluate the azimuthal factor `Φ(φ) = e^{imφ}/√(2π)` on `phi_samples`.
///
/// `Φ` is normalized so that `∫₀^{2π} |Φ|² dφ = 1` for every integer `m`.
///
/// # Examples
///
/// ```
/// use spinor_spectra::angular::azimuthal;
/// let phi = azimuthal(0, &[0.0, 1.0]).unwrap();
/// let expected = 1.0 / (2.0 * std::f64::consts::PI).sqrt();
/// assert!((phi.values()[1].re - expected).abs() < 1e-15);
/// assert_eq!(phi.values()[1].im, 0.0);
/// ```
pub fn azimuthal(m: i32, phi_samples: &[f64]) -> Result<GridFunction, AngularError> {
    let norm = (2.0 * PI).sqrt().recip();
    let values = phi_samples
        .iter()
        .map(|&phi| Complex64::new(0.0, f64::from(m) * phi).exp() * norm)
        .collect();
    Ok(GridFunction::new(phi_samples.to_vec(), values)?)
}

/// Energy ceiling implied by `ρ + 1/4 >= 0` at the solution's own shape
/// parameters.
///
/// Because `η = (ε + Mc²)/c²` grows with the energy while `ρ` loses a term
/// proportional to `η` times a shape coefficient, requiring a real effective
/// angular momentum caps the energy:
///
/// ```text
/// F1: ε <= c²(s + n_θ)²/α - Mc²
/// F2: ε <= c²(λ + s + 2n_θ)²/α - Mc²
/// F3: ε <= c²(σ² - λ²/σ²)/(α - γ) - Mc²,    σ = s - n_θ
/// ```
///
/// The expressions are necessary conditions evaluated at the solved
/// `(s, λ)`; they read as upper bounds when the denominator (`α`, or
/// `α - γ` for `F3`) is positive, and the inequality flips sign otherwise.
///
/// # Errors
///
/// [`AngularError::UndefinedBound`] when the denominator vanishes (the
/// constraint then does not involve the energy at all), and
/// [`AngularError::InvalidSpec`] when `spec` and `sol` disagree on the
/// family.
pub fn energy_upper_bound(
    constants: &Constants,
    spec: &AngularSpec,
    sol: &AngularSolution,
) -> Result<f64, AngularError> {
    if spec.family != sol.family {
        return Err(AngularError::InvalidSpec {
            message: format!(
                "spec family {:?} does not match solution family {:?}",
                spec.family, sol.family
            ),
        });
    }
    let c2 = constants.c * constants.c;
    let mc2 = constants.mc2();
    let n = f64::from(sol.n_theta);
    match sol.family {
        AngularFamily::F1 => {
            if spec.alpha == 0.0 {
                return Err(AngularError::UndefinedBound {
                    message: "family F1 needs alpha != 0 for an energy bound".to_string(),
                });
            }
            Ok(c2 * (sol.s + n).powi(2) / spec.alpha - mc2)
        }
        AngularFamily::F2 => {
            if spec.alpha == 0.0 {
                return Err(AngularError::UndefinedBound {
                    message: "family F2 needs alpha != 0 for an energy bound".to_string(),
                });
            }
            Ok(c2 * (sol.lambda.re + sol.s + 2.0 * n).powi(2) / spec.alpha - mc2)
        }
        AngularFamily::F3 => {
            let denom = spec.alpha - spec.gamma;
            if denom == 0.0 {
                return Err(AngularError::UndefinedBound {
                    message: "family F3 needs alpha != gamma for an energy bound".to_string(),
                });
            }
            let sigma = sol.s - n;
            let numer = sigma * sigma + (sol.lambda.im * sol.lambda.im) / (sigma * sigma);
            Ok(c2 * numer / denom - mc2)
        }
    }
}
