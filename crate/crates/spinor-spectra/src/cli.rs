//! Command-line interface over the closed-form solvers and the numerical
//! cross-check suite.
//!
//! Four subcommands:
//!
//! * `spectrum` — solve the coupled bound-state problem, print one record
//!   with the energy, separation constant, and shape parameters;
//! * `wavefunction` — sample one separable factor (`--factor
//!   radial|angular|azimuthal`) to CSV or JSON;
//! * `bound` — print the energy ceiling implied by `ρ + 1/4 >= 0`;
//! * `verify` — run the finite-difference cross-checks and report
//!   PASS/FAIL per check.
//!
//! Every physics flag can also come from a JSON config file (`--config`);
//! explicit flags override config fields, which override built-in
//! defaults. The config file additionally accepts `l_override`, which pins
//! the radial `l` directly and skips the angular coupling — handy for
//! probing the radial validation logic on its own.
//!
//! Exit codes: `0` success, `1` I/O failure, `2` validation failure,
//! `3` convergence failure. With `--format json`, failures are reported as
//! a JSON error object on stdout; otherwise a human-readable line goes to
//! stderr.
//!
//! Output is deterministic: identical invocations produce byte-identical
//! bytes (floats are printed with 17 significant digits in CSV, and JSON
//! field order follows the record structs).
//!
//! The `SPINOR_SPECTRA_LOG` environment variable (`quiet`, `info`,
//! `debug`) controls progress chatter on stderr; it never touches stdout.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::angular::{
    angular_wavefunction, azimuthal, energy_upper_bound, shape_f1, solve_angular_params,
    AngularError, ThetaDomain,
};
use crate::assembler::{solve_coupled, AssemblerError};
use crate::model::{AngularFamily, AngularSpec, Constants, RadialKind, RadialSpec};
use crate::oracle;
use crate::radial::{radial_energy, radial_wavefunction, RadialError};

/// Top-level argument grammar.
#[derive(Debug, Parser)]
#[command(
    name = "spinor-spectra",
    about = "Relativistic bound states in ring-shaped potentials",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve the coupled energy/separation-constant problem.
    Spectrum(ProblemArgs),
    /// Sample one separable factor of the wavefunction.
    Wavefunction(WavefunctionArgs),
    /// Print the energy ceiling implied by the separation constant.
    Bound(ProblemArgs),
    /// Cross-check the closed forms against finite-difference solvers.
    Verify(VerifyArgs),
}

/// Flags shared by every problem-solving subcommand. All of them are
/// optional on the command line; unset flags fall back to the config file,
/// then to built-in defaults.
#[derive(Debug, Args, Clone, Default)]
struct ProblemArgs {
    /// Radial well: coulomb or oscillator.
    #[arg(long, value_enum)]
    radial: Option<RadialKindArg>,
    /// Coulomb coupling strength V₀λ.
    #[arg(long = "v0lambda", allow_negative_numbers = true)]
    v0_lambda: Option<f64>,
    /// Oscillator stiffness k.
    #[arg(long, allow_negative_numbers = true)]
    k: Option<f64>,
    /// Angular family: f1, f2, or f3.
    #[arg(long, value_enum)]
    angular: Option<AngularFamilyArg>,
    /// Angular shape coefficient α.
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    /// Angular shape coefficient β (for f3: the real b in β = i·b).
    #[arg(long, allow_negative_numbers = true)]
    beta: Option<f64>,
    /// Angular shape coefficient γ.
    #[arg(long, allow_negative_numbers = true)]
    gamma: Option<f64>,
    /// Azimuthal quantum number m.
    #[arg(long, allow_negative_numbers = true)]
    m: Option<i32>,
    /// Radial quantum number n_r.
    #[arg(long = "n-r")]
    n_r: Option<u32>,
    /// Polar quantum number n_θ.
    #[arg(long = "n-theta")]
    n_theta: Option<u32>,
    /// Particle mass M.
    #[arg(long, allow_negative_numbers = true)]
    mass: Option<f64>,
    /// Speed of light c.
    #[arg(long, allow_negative_numbers = true)]
    c: Option<f64>,
    /// Absolute energy tolerance of the coupled solve.
    #[arg(long, allow_negative_numbers = true)]
    tol: Option<f64>,
    /// Output format.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Write the output to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON config file supplying defaults for any of the above.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct WavefunctionArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    /// Which separable factor to sample.
    #[arg(long, value_enum)]
    factor: Option<FactorArg>,
    /// Number of sample points across the factor's domain.
    #[arg(long)]
    samples: Option<usize>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Which checks to run: "all" or a substring of check names.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Replace every check's built-in tolerance with this one.
    #[arg(long, allow_negative_numbers = true)]
    tol: Option<f64>,
    /// Output format for the check report.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Write the report to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum RadialKindArg {
    Coulomb,
    Oscillator,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum AngularFamilyArg {
    F1,
    F2,
    F3,
}

impl From<AngularFamilyArg> for AngularFamily {
    fn from(arg: AngularFamilyArg) -> Self {
        match arg {
            AngularFamilyArg::F1 => AngularFamily::F1,
            AngularFamilyArg::F2 => AngularFamily::F2,
            AngularFamilyArg::F3 => AngularFamily::F3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum FactorArg {
    Radial,
    Angular,
    Azimuthal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum FormatArg {
    Csv,
    Json,
}

/// JSON config schema mirroring the command-line flags, plus `l_override`.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    radial: Option<RadialKindArg>,
    v0_lambda: Option<f64>,
    k: Option<f64>,
    angular: Option<AngularFamilyArg>,
    alpha: Option<f64>,
    beta: Option<f64>,
    gamma: Option<f64>,
    m: Option<i32>,
    n_r: Option<u32>,
    n_theta: Option<u32>,
    mass: Option<f64>,
    c: Option<f64>,
    tol: Option<f64>,
    factor: Option<FactorArg>,
    samples: Option<usize>,
    format: Option<FormatArg>,
    out: Option<PathBuf>,
    /// Pin the radial `l` directly, skipping the angular coupling.
    l_override: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum FailureKind {
    Io,
    Validation,
    Convergence,
}

impl FailureKind {
    fn exit_code(self) -> i32 {
        match self {
            FailureKind::Io => 1,
            FailureKind::Validation => 2,
            FailureKind::Convergence => 3,
        }
    }

    fn label(self) -> &'static str {
        match self {
            FailureKind::Io => "io",
            FailureKind::Validation => "validation",
            FailureKind::Convergence => "convergence",
        }
    }
}

#[derive(Debug)]
struct CliFailure {
    kind: FailureKind,
    message: String,
}

impl CliFailure {
    fn validation(message: impl Into<String>) -> Self {
        CliFailure { kind: FailureKind::Validation, message: message.into() }
    }

    fn convergence(message: impl Into<String>) -> Self {
        CliFailure { kind: FailureKind::Convergence, message: message.into() }
    }

    fn io(message: impl Into<String>) -> Self {
        CliFailure { kind: FailureKind::Io, message: message.into() }
    }
}

fn classify_assembler(err: &AssemblerError) -> FailureKind {
    match err {
        AssemblerError::NoBracket { .. } => FailureKind::Convergence,
        AssemblerError::Radial(inner) => classify_radial(inner),
        AssemblerError::Angular(inner) => classify_angular(inner),
        _ => FailureKind::Validation,
    }
}

fn classify_radial(err: &RadialError) -> FailureKind {
    match err {
        RadialError::BracketFailure { .. } => FailureKind::Convergence,
        RadialError::Grid(inner) => classify_assembler(inner),
        _ => FailureKind::Validation,
    }
}

fn classify_angular(err: &AngularError) -> FailureKind {
    match err {
        AngularError::Grid(inner) => classify_assembler(inner),
        _ => FailureKind::Validation,
    }
}

impl From<AssemblerError> for CliFailure {
    fn from(err: AssemblerError) -> Self {
        CliFailure { kind: classify_assembler(&err), message: err.to_string() }
    }
}

impl From<RadialError> for CliFailure {
    fn from(err: RadialError) -> Self {
        CliFailure { kind: classify_radial(&err), message: err.to_string() }
    }
}

impl From<AngularError> for CliFailure {
    fn from(err: AngularError) -> Self {
        CliFailure { kind: classify_angular(&err), message: err.to_string() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum LogLevel {
    Quiet,
    Info,
    Debug,
}

fn log_level() -> LogLevel {
    match std::env::var("SPINOR_SPECTRA_LOG").as_deref() {
        Ok("quiet") => LogLevel::Quiet,
        Ok("debug") => LogLevel::Debug,
        _ => LogLevel::Info,
    }
}

fn info(level: LogLevel, message: &str) {
    if level >= LogLevel::Info {
        eprintln!("{message}");
    }
}

fn debug(level: LogLevel, message: &str) {
    if level >= LogLevel::Debug {
        eprintln!("{message}");
    }
}

/// Everything a subcommand needs after flag/config/default merging.
#[derive(Debug, Clone)]
struct Resolved {
    constants: Constants,
    radial: RadialSpec,
    angular: AngularSpec,
    tol: f64,
    factor: FactorArg,
    samples: usize,
    format: FormatArg,
    out: Option<PathBuf>,
    l_override: Option<f64>,
}

fn load_config(path: &PathBuf) -> Result<RunConfig, CliFailure> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliFailure::io(format!("cannot read config {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliFailure::validation(format!("config {}: {e}", path.display())))
}

fn resolve(
    problem: &ProblemArgs,
    factor: Option<FactorArg>,
    samples: Option<usize>,
    default_format: FormatArg,
) -> Result<Resolved, CliFailure> {
    let config = match &problem.config {
        Some(path) => load_config(path)?,
        None => RunConfig::default(),
    };
    resolve_from_parts(problem, factor, samples, config, default_format)
}

/// Precedence per field: explicit flag, then config file, then default.
fn resolve_from_parts(
    problem: &ProblemArgs,
    factor: Option<FactorArg>,
    samples: Option<usize>,
    config: RunConfig,
    default_format: FormatArg,
) -> Result<Resolved, CliFailure> {
    let radial_kind = problem.radial.or(config.radial).unwrap_or(RadialKindArg::Coulomb);
    let v0_lambda = problem.v0_lambda.or(config.v0_lambda).unwrap_or(1.0);
    let k = problem.k.or(config.k).unwrap_or(1.0);
    let kind = match radial_kind {
        RadialKindArg::Coulomb => RadialKind::Coulomb { v0_lambda },
        RadialKindArg::Oscillator => RadialKind::Oscillator { k },
    };
    let family = problem.angular.or(config.angular).unwrap_or(AngularFamilyArg::F1);
    let angular = AngularSpec {
        family: family.into(),
        alpha: problem.alpha.or(config.alpha).unwrap_or(0.0),
        beta: problem.beta.or(config.beta).unwrap_or(0.0),
        gamma: problem.gamma.or(config.gamma).unwrap_or(0.0),
        m: problem.m.or(config.m).unwrap_or(0),
        n_theta: problem.n_theta.or(config.n_theta).unwrap_or(0),
    };
    let radial = RadialSpec {
        kind,
        n_r: problem.n_r.or(config.n_r).unwrap_or(0),
        l: 0.0,
    };
    let constants = Constants {
        mass: problem.mass.or(config.mass).unwrap_or(1.0),
        c: problem.c.or(config.c).unwrap_or(1.0),
    };
    let samples = samples.or(config.samples).unwrap_or(200);
    if samples < 2 {
        return Err(CliFailure::validation(format!(
            "need at least 2 samples (got {samples})"
        )));
    }
    Ok(Resolved {
        constants,
        radial,
        angular,
        tol: problem.tol.or(config.tol).unwrap_or(1e-10),
        factor: factor.or(config.factor).unwrap_or(FactorArg::Radial),
        samples,
        format: problem.format.or(config.format).unwrap_or(default_format),
        out: problem.out.clone().or(config.out),
        l_override: config.l_override,
    })
}

/// One solved bound state as printed by `spectrum`.
#[derive(Debug, Serialize)]
struct SpectrumRecord {
    epsilon: f64,
    rho: f64,
    l_effective: f64,
    s: f64,
    lambda: ComplexParts,
    /// Coulomb decay scale τ or oscillator frequency ω, whichever applies.
    tau_or_omega: f64,
    converged: bool,
    iterations: u32,
}

#[derive(Debug, Serialize)]
struct ComplexParts {
    re: f64,
    im: f64,
}

impl From<Complex64> for ComplexParts {
    fn from(z: Complex64) -> Self {
        ComplexParts { re: z.re, im: z.im }
    }
}

#[derive(Debug, Serialize)]
struct BoundRecord {
    family: AngularFamilyArg,
    epsilon: f64,
    bound: f64,
    satisfied: bool,
}

#[derive(Debug, Serialize)]
struct WavefunctionRecord {
    factor: FactorArg,
    abscissa: &'static str,
    points: Vec<PointRecord>,
}

#[derive(Debug, Serialize)]
struct PointRecord {
    x: f64,
    re: f64,
    im: f64,
}

#[derive(Debug, Serialize)]
struct CheckOutcome {
    check: &'static str,
    passed: bool,
    detail: String,
}

/// Parse the process arguments, run the requested subcommand, and return
/// the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    run_parsed(cli)
}

fn run_parsed(cli: Cli) -> i32 {
    let level = log_level();
    let json_errors = wants_json_errors(&cli.command);
    match execute(&cli.command, level) {
        Ok(()) => 0,
        Err(failure) => {
            if json_errors {
                let body = serde_json::json!({
                    "error": { "kind": failure.kind.label(), "message": failure.message }
                });
                println!("{body}");
            } else {
                eprintln!("error: {}", failure.message);
            }
            failure.kind.exit_code()
        }
    }
}

/// Whether failures should be reported as a JSON object. Only the explicit
/// `--format json` flag is consulted: a config file cannot switch the error
/// channel, because the config itself may be what failed to load.
fn wants_json_errors(command: &Command) -> bool {
    let format = match command {
        Command::Spectrum(p) | Command::Bound(p) => p.format,
        Command::Wavefunction(w) => w.problem.format,
        Command::Verify(v) => v.format,
    };
    format == Some(FormatArg::Json)
}

fn execute(command: &Command, level: LogLevel) -> Result<(), CliFailure> {
    match command {
        Command::Spectrum(problem) => {
            let resolved = resolve(problem, None, Some(2), FormatArg::Json)?;
            cmd_spectrum(&resolved, level)
        }
        Command::Wavefunction(args) => {
            let resolved = resolve(&args.problem, args.factor, args.samples, FormatArg::Csv)?;
            cmd_wavefunction(&resolved, level)
        }
        Command::Bound(problem) => {
            let resolved = resolve(problem, None, Some(2), FormatArg::Json)?;
            cmd_bound(&resolved, level)
        }
        Command::Verify(args) => cmd_verify(args, level),
    }
}

/// Solve the requested state: the coupled loop by default, or the radial
/// problem alone when the config pins `l_override`.
fn solve_state(
    resolved: &Resolved,
    level: LogLevel,
) -> Result<crate::model::BoundState, CliFailure> {
    if let Some(l) = resolved.l_override {
        debug(level, &format!("l_override = {l}: skipping the angular coupling"));
        let spec = RadialSpec { l, ..resolved.radial };
        let energy = radial_energy(&resolved.constants, &spec)?;
        return Ok(crate::model::BoundState {
            epsilon: energy.epsilon,
            rho: l * (l + 1.0),
            l_effective: l,
            radial_spec: spec,
            angular_spec: resolved.angular,
            converged: true,
            iterations: 0,
        });
    }
    let state = solve_coupled(
        &resolved.constants,
        &resolved.radial,
        &resolved.angular,
        resolved.tol,
    )?;
    if !state.converged {
        return Err(CliFailure::convergence(format!(
            "coupled solve did not reach |r(ε) - ε| <= {} within the iteration budget (best ε = {})",
            resolved.tol, state.epsilon
        )));
    }
    info(
        level,
        &format!("converged to ε = {} in {} iterations", state.epsilon, state.iterations),
    );
    Ok(state)
}

fn cmd_spectrum(resolved: &Resolved, level: LogLevel) -> Result<(), CliFailure> {
    let state = solve_state(resolved, level)?;
    let energy = radial_energy(&resolved.constants, &state.radial_spec)?;
    let eta = resolved.constants.coupling_eta(state.epsilon);
    let solution = solve_angular_params(&resolved.constants, &resolved.angular, eta)?;
    let tau_or_omega = energy.tau().or(energy.omega()).unwrap_or(f64::NAN);
    let record = SpectrumRecord {
        epsilon: state.epsilon,
        rho: state.rho,
        l_effective: state.l_effective,
        s: solution.s,
        lambda: solution.lambda.into(),
        tau_or_omega,
        converged: state.converged,
        iterations: state.iterations,
    };
    let content = match resolved.format {
        FormatArg::Json => format!("{}\n", to_json(&record)?),
        FormatArg::Csv => {
            let mut text = String::from(
                "epsilon,rho,l_effective,s,lambda_re,lambda_im,tau_or_omega,converged,iterations\n",
            );
            let _ = writeln!(
                text,
                "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{},{}",
                record.epsilon,
                record.rho,
                record.l_effective,
                record.s,
                record.lambda.re,
                record.lambda.im,
                record.tau_or_omega,
                record.converged,
                record.iterations
            );
            text
        }
    };
    emit(&resolved.out, &content)
}

fn cmd_bound(resolved: &Resolved, level: LogLevel) -> Result<(), CliFailure> {
    let state = solve_state(resolved, level)?;
    let eta = resolved.constants.coupling_eta(state.epsilon);
    let solution = solve_angular_params(&resolved.constants, &resolved.angular, eta)?;
    let bound = energy_upper_bound(&resolved.constants, &resolved.angular, &solution)?;
    let family = match resolved.angular.family {
        AngularFamily::F1 => AngularFamilyArg::F1,
        AngularFamily::F2 => AngularFamilyArg::F2,
        AngularFamily::F3 => AngularFamilyArg::F3,
    };
    let record = BoundRecord {
        family,
        epsilon: state.epsilon,
        bound,
        satisfied: state.epsilon <= bound,
    };
    let content = match resolved.format {
        FormatArg::Json => format!("{}\n", to_json(&record)?),
        FormatArg::Csv => {
            let mut text = String::from("family,epsilon,bound,satisfied\n");
            let _ = writeln!(
                text,
                "{:?},{:.16e},{:.16e},{}",
                record.family, record.epsilon, record.bound, record.satisfied
            );
            text.to_lowercase()
        }
    };
    emit(&resolved.out, &content)
}

fn cmd_wavefunction(resolved: &Resolved, level: LogLevel) -> Result<(), CliFailure> {
    let state = solve_state(resolved, level)?;
    let (abscissa, header, grid_fn) = match resolved.factor {
        FactorArg::Radial => {
            let energy = radial_energy(&resolved.constants, &state.radial_spec)?;
            // Sampling window wide enough for the exponential (Coulomb) or
            // Gaussian (oscillator) tail to die off.
            let r_max = match energy.detail {
                crate::radial::RadialDetail::Coulomb { k_scale, .. } => 12.0 / k_scale.max(1e-7),
                crate::radial::RadialDetail::Oscillator { omega } => 7.0 / omega.sqrt(),
            };
            let n = resolved.samples;
            let grid: Vec<f64> =
                (1..=n).map(|j| r_max * j as f64 / n as f64).collect();
            let u = radial_wavefunction(&resolved.constants, &state.radial_spec, &energy, &grid)?;
            ("r", "r,u_re,u_im", u)
        }
        FactorArg::Angular => {
            let eta = resolved.constants.coupling_eta(state.epsilon);
            let solution = solve_angular_params(&resolved.constants, &resolved.angular, eta)?;
            let domain = ThetaDomain::for_family(resolved.angular.family);
            let grid = domain.uniform_interior(resolved.samples);
            let theta = angular_wavefunction(&solution, &grid)?;
            ("theta", "theta,theta_re,theta_im", theta)
        }
        FactorArg::Azimuthal => {
            let n = resolved.samples;
            let grid: Vec<f64> = (0..n)
                .map(|j| 2.0 * std::f64::consts::PI * j as f64 / (n - 1) as f64)
                .collect();
            let phi = azimuthal(resolved.angular.m, &grid)?;
            ("phi", "phi,phi_re,phi_im", phi)
        }
    };
    debug(level, &format!("sampled {} points of the {:?} factor", grid_fn.len(), resolved.factor));
    let content = match resolved.format {
        FormatArg::Csv => {
            let mut text = String::with_capacity(grid_fn.len() * 64);
            text.push_str(header);
            text.push('\n');
            for (&x, v) in grid_fn.abscissae().iter().zip(grid_fn.values()) {
                let _ = writeln!(text, "{:.16e},{:.16e},{:.16e}", x, v.re, v.im);
            }
            text
        }
        FormatArg::Json => {
            let points = grid_fn
                .abscissae()
                .iter()
                .zip(grid_fn.values())
                .map(|(&x, v)| PointRecord { x, re: v.re, im: v.im })
                .collect();
            let record =
                WavefunctionRecord { factor: resolved.factor, abscissa, points };
            format!("{}\n", to_json(&record)?)
        }
    };
    emit(&resolved.out, &content)
}

fn cmd_verify(args: &VerifyArgs, level: LogLevel) -> Result<(), CliFailure> {
    if let Some(tol) = args.tol {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(CliFailure::validation(format!(
                "verify tolerance must be finite and positive (got {tol})"
            )));
        }
    }
    let mut outcomes = run_verification_suite(level, args.tol);
    if args.suite != "all" {
        outcomes.retain(|o| o.check.contains(args.suite.as_str()));
        if outcomes.is_empty() {
            return Err(CliFailure::validation(format!(
                "suite filter {:?} matches no checks (use \"all\" or a check-name substring)",
                args.suite
            )));
        }
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    let format = args.format.unwrap_or(FormatArg::Csv);
    let content = match format {
        FormatArg::Json => format!("{}\n", to_json(&outcomes)?),
        FormatArg::Csv => {
            let mut text = String::new();
            for outcome in &outcomes {
                let _ = writeln!(
                    text,
                    "{} {}: {}",
                    if outcome.passed { "PASS" } else { "FAIL" },
                    outcome.check,
                    outcome.detail
                );
            }
            let _ = writeln!(text, "{passed}/{} checks passed", outcomes.len());
            text
        }
    };
    emit(&args.out, &content)?;
    if passed == outcomes.len() {
        Ok(())
    } else {
        Err(CliFailure::convergence(format!(
            "{}/{} cross-checks failed",
            outcomes.len() - passed,
            outcomes.len()
        )))
    }
}

/// The numerical cross-check battery behind `verify`: every closed form the
/// library exposes is checked against an independent finite-difference
/// eigensolver or quadrature. `tol_override` replaces each check's built-in
/// tolerance when present.
fn run_verification_suite(level: LogLevel, tol_override: Option<f64>) -> Vec<CheckOutcome> {
    let constants = Constants::natural();
    let tol = |default: f64| tol_override.unwrap_or(default);
    let mut outcomes = Vec::new();
    let mut push = |check: &'static str, passed: bool, detail: String| {
        debug(level, &format!("check {check}: {}", if passed { "pass" } else { "FAIL" }));
        outcomes.push(CheckOutcome { check, passed, detail });
    };

    // Closed-form Coulomb levels against the self-consistent FD solver.
    for (check, v0_lambda, l, n_r) in [
        ("coulomb-ground-energy", 1.0, 0.0, 0u32),
        ("coulomb-excited-energy", 1.5, 1.0, 1u32),
    ] {
        let spec = RadialSpec { kind: RadialKind::Coulomb { v0_lambda }, n_r, l };
        let closed = radial_energy(&constants, &spec).map(|e| e.epsilon);
        let numeric = oracle::self_consistent_eig(
            &constants,
            &RadialKind::Coulomb { v0_lambda },
            l,
            n_r,
        );
        match (closed, numeric) {
            (Ok(a), Ok(b)) => push(
                check,
                (a - b).abs() <= tol(1e-6),
                format!("closed form {a:.12} vs finite difference {b:.12}"),
            ),
            (a, b) => push(check, false, format!("solver error: {a:?} / {b:?}")),
        }
    }

    // Oscillator level: both the cubic identity and the FD cross-check.
    {
        let spec =
            RadialSpec { kind: RadialKind::Oscillator { k: 0.125 }, n_r: 0, l: 0.0 };
        match radial_energy(&constants, &spec) {
            Ok(energy) => {
                let eps = energy.epsilon;
                let mc2 = constants.mc2();
                let d = 1.5;
                let residual =
                    (eps - mc2).powi(2) * (eps + mc2) - 8.0 * 0.125 * d * d;
                push(
                    "oscillator-cubic-identity",
                    residual.abs() <= tol(1e-10),
                    format!("ε = {eps:.12}, cubic residual {residual:.3e}"),
                );
            }
            Err(e) => push("oscillator-cubic-identity", false, format!("solver error: {e}")),
        }
        let closed = radial_energy(
            &constants,
            &RadialSpec { kind: RadialKind::Oscillator { k: 0.5 }, n_r: 0, l: 1.0 },
        )
        .map(|e| e.epsilon);
        let numeric = oracle::self_consistent_eig(
            &constants,
            &RadialKind::Oscillator { k: 0.5 },
            1.0,
            0,
        );
        match (closed, numeric) {
            (Ok(a), Ok(b)) => push(
                "oscillator-energy",
                (a - b).abs() <= tol(1e-6),
                format!("closed form {a:.12} vs finite difference {b:.12}"),
            ),
            (a, b) => push("oscillator-energy", false, format!("solver error: {a:?} / {b:?}")),
        }
    }

    // Polar eigenvalues: the (s, λ) closed forms against direct FD
    // eigenvalues of the full angular potentials.
    {
        let spec = AngularSpec {
            family: AngularFamily::F1,
            alpha: 0.5,
            beta: 0.0,
            gamma: 0.5,
            m: 0,
            n_theta: 0,
        };
        let eta = 2.0;
        match solve_angular_params(&constants, &spec, eta) {
            Ok(sol) => {
                let q = -0.25 + eta * (spec.gamma + spec.alpha);
                let disc = oracle::Discretization::new((0.0, std::f64::consts::PI), 2000)
                    .with_inverse_square_left(q)
                    .with_inverse_square_right(q);
                let numeric = oracle::fd_eigen(
                    |theta| {
                        -0.25 / theta.sin().powi(2) + eta * shape_f1(0.5, 0.0, 0.5, theta)
                    },
                    &disc,
                    0,
                );
                match numeric {
                    Ok(e) => {
                        let target = sol.rho + 0.25;
                        push(
                            "f1-polar-eigenvalue",
                            ((e - target) / target).abs() <= tol(1e-5),
                            format!("closed form {target:.10} vs finite difference {e:.10}"),
                        );
                    }
                    Err(err) => push("f1-polar-eigenvalue", false, format!("oracle error: {err}")),
                }
            }
            Err(err) => push("f1-polar-eigenvalue", false, format!("solver error: {err}")),
        }
    }
    {
        // The F2 potential splits into csc² and sec² walls around a constant.
        let (alpha, beta, gamma, eta) = (0.5, -0.5, 2.0, 1.0);
        let spec = AngularSpec {
            family: AngularFamily::F2,
            alpha,
            beta,
            gamma,
            m: 0,
            n_theta: 0,
        };
        match solve_angular_params(&constants, &spec, eta) {
            Ok(sol) => {
                let q_left = -0.25 + eta * (gamma + beta + alpha);
                let q_right = eta * gamma;
                let disc =
                    oracle::Discretization::new((0.0, std::f64::consts::FRAC_PI_2), 2000)
                        .with_inverse_square_left(q_left)
                        .with_inverse_square_right(q_right);
                let numeric = oracle::fd_eigen(
                    |theta| {
                        -0.25 / theta.sin().powi(2)
                            + eta * crate::angular::shape_f2(alpha, beta, gamma, theta)
                    },
                    &disc,
                    0,
                );
                match numeric {
                    Ok(e) => {
                        let target = sol.rho + 0.25;
                        push(
                            "f2-polar-eigenvalue",
                            ((e - target) / target).abs() <= tol(1e-5),
                            format!("closed form {target:.10} vs finite difference {e:.10}"),
                        );
                    }
                    Err(err) => push("f2-polar-eigenvalue", false, format!("oracle error: {err}")),
                }
            }
            Err(err) => push("f2-polar-eigenvalue", false, format!("solver error: {err}")),
        }
    }
    {
        // F3 is non-Hermitian; its real-λ surrogate (cot θ coupling with a
        // real coefficient) is Hermitian with ground energy σ² - λ²/σ².
        let (s, lam) = (-0.75, 0.1);
        let sigma: f64 = s;
        let target = sigma * sigma - lam * lam / (sigma * sigma);
        let q = s * (s + 1.0);
        let disc = oracle::Discretization::new((0.0, std::f64::consts::PI), 2000)
            .with_inverse_square_left(q)
            .with_inverse_square_right(q);
        let numeric = oracle::fd_eigen(
            |theta| {
                let cot = theta.cos() / theta.sin();
                s * (s + 1.0) / theta.sin().powi(2) - 2.0 * lam * cot
            },
            &disc,
            0,
        );
        match numeric {
            Ok(e) => push(
                "f3-surrogate-eigenvalue",
                ((e - target) / target).abs() <= tol(1e-5),
                format!("closed form {target:.10} vs finite difference {e:.10}"),
            ),
            Err(err) => push("f3-surrogate-eigenvalue", false, format!("oracle error: {err}")),
        }
    }

    // Radial node count: the n_r-th level must cross zero n_r times.
    {
        let spec = RadialSpec { kind: RadialKind::Coulomb { v0_lambda: 1.0 }, n_r: 2, l: 0.0 };
        let outcome = radial_energy(&constants, &spec).and_then(|energy| {
            let k = energy.k_scale().unwrap_or(1.0);
            let grid: Vec<f64> = (1..=900).map(|j| 0.02 / k + j as f64 * 0.05 / k).collect();
            radial_wavefunction(&constants, &spec, &energy, &grid)
        });
        match outcome {
            Ok(u) => match oracle::node_count(&u) {
                Ok(nodes) => push(
                    "radial-node-count",
                    nodes == 2,
                    format!("expected 2 interior nodes, counted {nodes}"),
                ),
                Err(err) => push("radial-node-count", false, format!("oracle error: {err}")),
            },
            Err(err) => push("radial-node-count", false, format!("solver error: {err}")),
        }
    }

    // Azimuthal normalization: ∫|Φ|² dφ = 1.
    {
        let outcome = oracle::quadrature(
            |phi| {
                azimuthal(1, &[phi]).map(|g| g.values()[0].norm_sqr()).unwrap_or(f64::NAN)
            },
            0.0,
            2.0 * std::f64::consts::PI,
            2000,
        );
        match outcome {
            Ok(total) => push(
                "azimuthal-normalization",
                (total - 1.0).abs() <= tol(1e-10),
                format!("∫|Φ|² dφ = {total:.12}"),
            ),
            Err(err) => push("azimuthal-normalization", false, format!("oracle error: {err}")),
        }
    }

    outcomes
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliFailure> {
    serde_json::to_string_pretty(value)
        .map_err(|e| CliFailure::validation(format!("serialization error: {e}")))
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), CliFailure> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| CliFailure::io(format!("cannot write {}: {e}", path.display()))),
        None => {
            let stdout = std::io::stdout();
            let mut handle = stdout.lock();
            handle
                .write_all(content.as_bytes())
                .and_then(|()| handle.flush())
                .map_err(|e| CliFailure::io(format!("cannot write to stdout: {e}")))
        }
    }
}
