//! End-to-end acceptance checks.
//!
//! One test per acceptance item, numbered in the order trace below; each
//! prints a single `[NN] label: PASS/FAIL` line (visible with
//! `cargo test -- --nocapture`, and always on failure). Items that sweep a
//! parameter grid collect every violation before failing so the line
//! reports the full extent of a regression.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{FRAC_PI_2, PI};
use std::process::Command;

use spinor_spectra::angular::{
    angular_wavefunction, energy_upper_bound, shape_f1, shape_f2, shape_f3, solve_angular_params,
    ThetaDomain,
};
use spinor_spectra::assembler::{solve_coupled, GridFunction};
use spinor_spectra::model::{
    validate_radial, validate_solution, AngularFamily, AngularSpec, AngularSolution, Constants,
    RadialKind, RadialSpec,
};
use spinor_spectra::oracle::{
    fd_eigen, node_count, ode_residual, quadrature, self_consistent_eig, Discretization,
};
use spinor_spectra::radial::{radial_energy, radial_wavefunction};
use spinor_spectra::special::{jacobi, jacobi_series, laguerre, laguerre_series};

fn report(number: u32, label: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("[{number:02}] {label}: PASS");
    } else {
        println!("[{number:02}] {label}: FAIL ({} problem(s))", failures.len());
        for failure in failures {
            println!("     - {failure}");
        }
        panic!("{label}: {} problem(s): {:#?}", failures.len(), failures);
    }
}

fn natural() -> Constants {
    Constants::natural()
}

fn uniform_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let step = (hi - lo) / (n - 1) as f64;
    (0..n).map(|i| lo + step * i as f64).collect()
}

#[test]
fn acceptance_01_coulomb_energies_match_fd_oracle() {
    let constants = natural();
    let mut failures = Vec::new();
    for v0_lambda in [0.2, 1.0, 2.0] {
        for l in [-0.5, 0.0, 1.0] {
            for n_r in 0..3u32 {
                let kind = RadialKind::Coulomb { v0_lambda };
                let spec = RadialSpec { kind, n_r, l };
                let closed = match radial_energy(&constants, &spec) {
                    Ok(e) => e.epsilon,
                    Err(e) => {
                        failures.push(format!("closed form failed at {spec:?}: {e}"));
                        continue;
                    }
                };
                let numeric = match self_consistent_eig(&constants, &kind, l, n_r) {
                    Ok(e) => e,
                    Err(e) => {
                        failures.push(format!("oracle failed at {spec:?}: {e}"));
                        continue;
                    }
                };
                let delta = (closed - numeric).abs();
                if delta > 1e-5 * constants.mc2() {
                    failures.push(format!(
                        "v0l={v0_lambda}, l={l}, n_r={n_r}: closed {closed:.10} vs oracle {numeric:.10} (|d|={delta:.3e})"
                    ));
                }
            }
        }
    }
    report(1, "coulomb energies vs finite-difference oracle", &failures);
}

#[test]
fn acceptance_02_oscillator_cubic_form_adjudicated_against_oracle() {
    let constants = natural();
    let mc2 = constants.mc2();
    let mut failures = Vec::new();
    let mut worst_unsquared = 0.0f64;
    for k in [0.125, 1.0, 5.0] {
        for l in [0.0, 1.0] {
            for n_r in 0..2u32 {
                let kind = RadialKind::Oscillator { k };
                let spec = RadialSpec { kind, n_r, l };
                let closed = match radial_energy(&constants, &spec) {
                    Ok(e) => e.epsilon,
                    Err(e) => {
                        failures.push(format!("closed form failed at {spec:?}: {e}"));
                        continue;
                    }
                };
                let numeric = match self_consistent_eig(&constants, &kind, l, n_r) {
                    Ok(e) => e,
                    Err(e) => {
                        failures.push(format!("oracle failed at {spec:?}: {e}"));
                        continue;
                    }
                };
                let delta = (closed - numeric).abs();
                if delta > 1e-5 * mc2 {
                    failures.push(format!(
                        "squared form: k={k}, l={l}, n_r={n_r}: closed {closed:.10} vs oracle {numeric:.10} (|d|={delta:.3e})"
                    ));
                }
                // The identity with the degree factor unsquared — as it
                // circulates in one printed source — predicts a different
                // root; record how far it drifts from the oracle.
                let degree = 2.0 * n_r as f64 + l + 1.5;
                let rhs = 8.0 * k * constants.c * constants.c * degree;
                let unsquared = bisect_cubic(mc2, rhs);
                worst_unsquared = worst_unsquared.max((unsquared - numeric).abs());
            }
        }
    }
    if worst_unsquared <= 1e-2 {
        failures.push(format!(
            "unsquared variant unexpectedly matches the oracle everywhere (max |d| = {worst_unsquared:.3e}); the two forms should be distinguishable"
        ));
    }
    report(2, "oscillator energy identity (squared form) vs oracle", &failures);
}

/// Root of (eps - mc2)^2 (eps + mc2) = rhs above the rest energy.
fn bisect_cubic(mc2: f64, rhs: f64) -> f64 {
    let f = |eps: f64| (eps - mc2) * (eps - mc2) * (eps + mc2) - rhs;
    let (mut lo, mut hi) = (mc2, mc2 + rhs.cbrt() + 1.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

#[test]
fn acceptance_03_polar_eigenvalues_match_fd_oracle() {
    let constants = natural();
    let mut failures = Vec::new();

    // F1 worked set: full potential (m^2 - 1/4)csc^2 + eta f1 with
    // inverse-square walls of strength -1/4 + eta (gamma + alpha) at both
    // endpoints; the n_theta-th eigenvalue must be rho + 1/4.
    let eta = 2.0;
    let (alpha, beta, gamma) = (0.5, 0.0, 0.5);
    for n_theta in 0..3u32 {
        let spec = AngularSpec { family: AngularFamily::F1, alpha, beta, gamma, m: 0, n_theta };
        let sol = solve_angular_params(&constants, &spec, eta).expect("F1 worked set solves");
        let q = -0.25 + eta * (gamma + alpha);
        let disc = Discretization::new((0.0, PI), 2400)
            .with_inverse_square_left(q)
            .with_inverse_square_right(q);
        let numeric = fd_eigen(
            |theta| -0.25 / theta.sin().powi(2) + eta * shape_f1(alpha, beta, gamma, theta),
            &disc,
            n_theta as usize,
        )
        .expect("F1 FD eigenvalue");
        let target = sol.rho + 0.25;
        let rel = ((numeric - target) / target).abs();
        if rel > 1e-5 {
            failures.push(format!(
                "F1 n_theta={n_theta}: closed {target:.10} vs FD {numeric:.10} (rel {rel:.3e})"
            ));
        }
    }

    // F2 worked set on (0, pi/2): csc^2-type wall at 0, sec^2-type wall at
    // pi/2 with strengths -1/4 + eta (gamma+beta+alpha) and eta gamma.
    let eta = 1.0;
    let (alpha, beta, gamma) = (0.5, -0.5, 2.0);
    for n_theta in 0..3u32 {
        let spec = AngularSpec { family: AngularFamily::F2, alpha, beta, gamma, m: 0, n_theta };
        let sol = solve_angular_params(&constants, &spec, eta).expect("F2 worked set solves");
        let q_left = -0.25 + eta * (gamma + beta + alpha);
        let q_right = eta * gamma;
        let disc = Discretization::new((0.0, FRAC_PI_2), 2400)
            .with_inverse_square_left(q_left)
            .with_inverse_square_right(q_right);
        let numeric = fd_eigen(
            |theta| -0.25 / theta.sin().powi(2) + eta * shape_f2(alpha, beta, gamma, theta),
            &disc,
            n_theta as usize,
        )
        .expect("F2 FD eigenvalue");
        let target = sol.rho + 0.25;
        let rel = ((numeric - target) / target).abs();
        if rel > 1e-5 {
            failures.push(format!(
                "F2 n_theta={n_theta}: closed {target:.10} vs FD {numeric:.10} (rel {rel:.3e})"
            ));
        }
    }

    // F3's operator is non-Hermitian (imaginary cot coupling), so a plain
    // symmetric FD eigensolver cannot see it directly. Two Hermitian legs
    // adjudicate the same parameter relations:
    //  (a) the real-coefficient cot form with identical (s, lambda)
    //      algebra, whose ground eigenvalue is sigma^2 - lambda^2/sigma^2;
    //  (b) the lambda -> 0 modulus problem, whose ground eigenvalue is
    //      sigma^2 and which fixes the csc^2 strength s(s+1).
    {
        let (s, lam) = (-0.75f64, 0.1f64);
        let sigma = s;
        let q = s * (s + 1.0);
        let disc = Discretization::new((0.0, PI), 2400)
            .with_inverse_square_left(q)
            .with_inverse_square_right(q);
        let target = sigma * sigma - lam * lam / (sigma * sigma);
        let numeric = fd_eigen(
            |theta| {
                let cot = theta.cos() / theta.sin();
                q / theta.sin().powi(2) - 2.0 * lam * cot
            },
            &disc,
            0,
        )
        .expect("F3 real-coefficient FD eigenvalue");
        let rel = ((numeric - target) / target).abs();
        if rel > 1e-5 {
            failures.push(format!(
                "F3 real-coefficient leg: closed {target:.10} vs FD {numeric:.10} (rel {rel:.3e})"
            ));
        }

        let target_mod = sigma * sigma;
        let numeric_mod = fd_eigen(|theta| q / theta.sin().powi(2), &disc, 0)
            .expect("F3 modulus FD eigenvalue");
        let rel = ((numeric_mod - target_mod) / target_mod).abs();
        if rel > 1e-5 {
            failures.push(format!(
                "F3 modulus leg: closed {target_mod:.10} vs FD {numeric_mod:.10} (rel {rel:.3e})"
            ));
        }

        // Both legs close the loop on the actual implementation: the solved
        // worked set must reproduce the same (s, lambda) the legs used.
        let spec = AngularSpec {
            family: AngularFamily::F3,
            alpha: 0.0625,
            beta: 0.2,
            gamma: 0.0,
            m: 0,
            n_theta: 0,
        };
        let sol = solve_angular_params(&constants, &spec, 1.0).expect("F3 worked set solves");
        if (sol.s - s).abs() > 1e-12 || (sol.lambda.im + lam).abs() > 1e-12 {
            failures.push(format!(
                "F3 worked set: expected (s, Im lambda) = ({s}, {}), got ({}, {})",
                -lam, sol.s, sol.lambda.im
            ));
        }
    }

    report(3, "polar eigenvalues vs finite-difference oracle", &failures);
}

#[test]
fn acceptance_04_closed_form_ode_residuals() {
    let constants = natural();
    let mut failures = Vec::new();

    // Radial closed forms, Coulomb and oscillator, n_r <= 2.
    for n_r in 0..3u32 {
        for l in [0.0, 1.0] {
            let spec = RadialSpec { kind: RadialKind::Coulomb { v0_lambda: 1.0 }, n_r, l };
            let energy = radial_energy(&constants, &spec).expect("Coulomb closed form");
            let k = energy.k_scale().unwrap();
            let e2 = 2.0 * k * (n_r as f64 + l + 1.0);
            let e_nr = energy.epsilon * energy.epsilon - 1.0;
            let rho = l * (l + 1.0);
            let rs: Vec<f64> = (0..16_000).map(|i| 0.5 + 1e-3 * i as f64).collect();
            let u = radial_wavefunction(&constants, &spec, &energy, &rs).unwrap();
            let res =
                ode_residual(&u, |r, u, d2| d2 + (e_nr - rho / (r * r) + e2 / r) * u).unwrap();
            if res > 1e-6 {
                failures.push(format!("Coulomb n_r={n_r}, l={l}: residual {res:.3e}"));
            }

            let spec = RadialSpec { kind: RadialKind::Oscillator { k: 0.5 }, n_r, l };
            let energy = radial_energy(&constants, &spec).expect("oscillator closed form");
            let omega = energy.omega().unwrap();
            let e_nr = energy.epsilon * energy.epsilon - 1.0;
            let rs: Vec<f64> = (0..4_000).map(|i| 0.2 + 1e-3 * i as f64).collect();
            let u = radial_wavefunction(&constants, &spec, &energy, &rs).unwrap();
            let res = ode_residual(&u, |r, u, d2| {
                d2 + (e_nr - rho / (r * r) - 0.25 * omega * omega * r * r) * u
            })
            .unwrap();
            if res > 1e-6 {
                failures.push(format!("oscillator n_r={n_r}, l={l}: residual {res:.3e}"));
            }
        }
    }

    // Polar closed forms via H = Theta sqrt(sin): d^2 H + [rho + 1/4
    // - (m^2 - 1/4)csc^2 - eta f] H = 0. F1/F2 at n_theta <= 2, F3 (complex
    // arithmetic) at n_theta <= 1.
    let polar_residual = |spec: &AngularSpec, eta: f64, grid: &[f64]| -> f64 {
        let sol = solve_angular_params(&constants, spec, eta).expect("angular solve");
        let theta_fn = angular_wavefunction(&sol, grid).expect("angular waveform");
        let h: Vec<Complex64> = theta_fn
            .abscissae()
            .iter()
            .zip(theta_fn.values())
            .map(|(&theta, &v)| v * theta.sin().sqrt())
            .collect();
        let h_fn = GridFunction::new(grid.to_vec(), h).unwrap();
        let m2 = f64::from(spec.m).powi(2);
        let (family, alpha, beta, gamma, rho) = (spec.family, spec.alpha, spec.beta, spec.gamma, sol.rho);
        ode_residual(&h_fn, move |theta, u, d2| {
            let shape = match family {
                AngularFamily::F1 => shape_f1(alpha, beta, gamma, theta).into(),
                AngularFamily::F2 => shape_f2(alpha, beta, gamma, theta).into(),
                AngularFamily::F3 => shape_f3(alpha, beta, gamma, theta),
            };
            let csc2 = theta.sin().powi(-2);
            d2 + (Complex64::new(rho + 0.25 - (m2 - 0.25) * csc2, 0.0) - shape * eta) * u
        })
        .unwrap()
    };

    for n_theta in 0..3u32 {
        let spec = AngularSpec {
            family: AngularFamily::F1,
            alpha: 0.5,
            beta: 0.0,
            gamma: 0.5,
            m: 0,
            n_theta,
        };
        let res = polar_residual(&spec, 2.0, &uniform_grid(0.3, PI - 0.3, 2801));
        if res > 1e-6 {
            failures.push(format!("F1 n_theta={n_theta}: residual {res:.3e}"));
        }

        let spec = AngularSpec {
            family: AngularFamily::F2,
            alpha: 0.5,
            beta: -0.5,
            gamma: 2.0,
            m: 0,
            n_theta,
        };
        let res = polar_residual(&spec, 1.0, &uniform_grid(0.2, FRAC_PI_2 - 0.2, 2801));
        if res > 1e-6 {
            failures.push(format!("F2 n_theta={n_theta}: residual {res:.3e}"));
        }
    }
    for (n_theta, alpha, gamma) in [(0u32, 0.0625, 0.0), (1u32, 0.64, 0.5)] {
        // alpha chosen so s(s+1) = eta*alpha - 1/4 puts s inside the
        // admissible window for the requested n_theta; gamma lifts the
        // separation constant back above its lower bound for the excited
        // state without touching the waveform itself.
        let spec = AngularSpec {
            family: AngularFamily::F3,
            alpha,
            beta: 0.2,
            gamma,
            m: 0,
            n_theta,
        };
        let res = polar_residual(&spec, 1.0, &uniform_grid(0.3, PI - 0.3, 2801));
        if res > 1e-6 {
            failures.push(format!("F3 n_theta={n_theta}: residual {res:.3e}"));
        }
    }

    report(4, "closed-form ODE residuals", &failures);
}

#[test]
fn acceptance_05_node_counts_match_quantum_numbers() {
    let constants = natural();
    let mut failures = Vec::new();

    for n_r in 0..3u32 {
        for l in [0.0, 1.0, 2.0] {
            for kind in [
                RadialKind::Coulomb { v0_lambda: 1.0 },
                RadialKind::Oscillator { k: 0.5 },
            ] {
                let spec = RadialSpec { kind, n_r, l };
                let energy = radial_energy(&constants, &spec).unwrap();
                let scale = energy.k_scale().unwrap_or_else(|| energy.omega().unwrap().sqrt());
                let rs: Vec<f64> = (1..=2500).map(|j| j as f64 * 0.008 * 12.0 / scale).collect();
                let u = radial_wavefunction(&constants, &spec, &energy, &rs).unwrap();
                let nodes = node_count(&u).unwrap();
                if nodes != n_r as usize {
                    failures.push(format!(
                        "radial {kind:?} n_r={n_r}, l={l}: counted {nodes} nodes"
                    ));
                }
            }
        }
    }

    for n_theta in 0..3u32 {
        let spec = AngularSpec {
            family: AngularFamily::F1,
            alpha: 0.5,
            beta: 0.0,
            gamma: 0.5,
            m: 0,
            n_theta,
        };
        let sol = solve_angular_params(&constants, &spec, 2.0).unwrap();
        let grid = ThetaDomain::for_family(AngularFamily::F1).uniform_interior(3000);
        let theta_fn = angular_wavefunction(&sol, &grid).unwrap();
        let nodes = node_count(&theta_fn).unwrap();
        if nodes != n_theta as usize {
            failures.push(format!("F1 n_theta={n_theta}: counted {nodes} nodes"));
        }

        let spec = AngularSpec {
            family: AngularFamily::F2,
            alpha: 0.5,
            beta: -0.5,
            gamma: 2.0,
            m: 0,
            n_theta,
        };
        let sol = solve_angular_params(&constants, &spec, 1.0).unwrap();
        let grid = ThetaDomain::for_family(AngularFamily::F2).uniform_interior(3000);
        let theta_fn = angular_wavefunction(&sol, &grid).unwrap();
        let nodes = node_count(&theta_fn).unwrap();
        if nodes != n_theta as usize {
            failures.push(format!("F2 n_theta={n_theta}: counted {nodes} nodes"));
        }
    }

    report(5, "node counts match quantum numbers", &failures);
}

#[test]
fn acceptance_06_free_angular_limit_reduces_to_integer_harmonics() {
    let constants = natural();
    let mut failures = Vec::new();
    for eta in [0.7, 2.0] {
        for m in -3i32..=3 {
            for n_theta in 0..4u32 {
                let spec = AngularSpec {
                    family: AngularFamily::F1,
                    alpha: 0.0,
                    beta: 0.0,
                    gamma: 0.0,
                    m,
                    n_theta,
                };
                let sol = solve_angular_params(&constants, &spec, eta).unwrap();
                let l_int = f64::from(n_theta) + f64::from(m.unsigned_abs());
                let target = l_int * (l_int + 1.0);
                if (sol.rho - target).abs() > 1e-12 {
                    failures.push(format!(
                        "eta={eta}, m={m}, n_theta={n_theta}: rho = {} vs L(L+1) = {target}",
                        sol.rho
                    ));
                }
            }
        }
    }
    report(6, "free angular limit reduces to integer harmonics", &failures);
}

#[test]
fn acceptance_07_parameter_relations_round_trip() {
    let constants = natural();
    let mut failures = Vec::new();
    let tol = |x: f64| 1e-12 * (1.0 + x.abs());

    // F1: draw shape coefficients, keep the draws the solver accepts, and
    // check the defining relations on the returned branch.
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE_0001);
    let mut accepted = 0;
    let mut attempts = 0;
    while accepted < 100 && attempts < 20_000 {
        attempts += 1;
        let eta = rng.gen_range(0.5..2.5);
        let spec = AngularSpec {
            family: AngularFamily::F1,
            alpha: rng.gen_range(-0.5..1.5),
            beta: rng.gen_range(-1.0..1.0),
            gamma: rng.gen_range(-0.5..1.5),
            m: rng.gen_range(-2i32..3),
            n_theta: rng.gen_range(0u32..3),
        };
        let Ok(sol) = solve_angular_params(&constants, &spec, eta) else { continue };
        accepted += 1;
        let (s, lam, n) = (sol.s, sol.lambda.re, f64::from(spec.n_theta));
        let m2 = f64::from(spec.m).powi(2);
        let lhs_a = lam * lam + s * s - s;
        let rhs_a = eta * (spec.gamma + spec.alpha) + m2 - 0.25;
        let lhs_b = lam * (2.0 * s - 1.0);
        let rhs_b = -eta * spec.beta;
        let rho = (s + n) * (s + n) - eta * spec.alpha - 0.25;
        if (lhs_a - rhs_a).abs() > tol(rhs_a)
            || (lhs_b - rhs_b).abs() > tol(rhs_b)
            || (sol.rho - rho).abs() > tol(rho)
        {
            failures.push(format!("F1 round trip broke at {spec:?}, eta={eta}"));
        }
    }
    if accepted < 100 {
        failures.push(format!("F1: only {accepted} admissible draws in {attempts} attempts"));
    }

    // F2: same strategy.
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE_0002);
    let mut accepted = 0;
    let mut attempts = 0;
    while accepted < 100 && attempts < 20_000 {
        attempts += 1;
        let eta = rng.gen_range(0.5..2.5);
        let spec = AngularSpec {
            family: AngularFamily::F2,
            alpha: rng.gen_range(-0.5..1.5),
            beta: rng.gen_range(-1.0..1.0),
            gamma: rng.gen_range(0.0..2.0),
            m: rng.gen_range(-2i32..3),
            n_theta: rng.gen_range(0u32..3),
        };
        let Ok(sol) = solve_angular_params(&constants, &spec, eta) else { continue };
        accepted += 1;
        let (s, lam, n) = (sol.s, sol.lambda.re, f64::from(spec.n_theta));
        let m2 = f64::from(spec.m).powi(2);
        let lhs_a = s * (s - 1.0);
        let rhs_a = eta * spec.gamma;
        let lhs_b = lam * (lam - 1.0);
        let rhs_b = eta * (spec.gamma + spec.beta + spec.alpha) + m2 - 0.25;
        let rho = (lam + s + 2.0 * n).powi(2) - eta * spec.alpha - 0.25;
        if (lhs_a - rhs_a).abs() > tol(rhs_a)
            || (lhs_b - rhs_b).abs() > tol(rhs_b)
            || (sol.rho - rho).abs() > tol(rho)
        {
            failures.push(format!("F2 round trip broke at {spec:?}, eta={eta}"));
        }
    }
    if accepted < 100 {
        failures.push(format!("F2: only {accepted} admissible draws in {attempts} attempts"));
    }

    // F3: draw s inside its window, back out alpha, then bound the cot
    // coupling by the lambda restriction so most draws are admissible.
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE_0003);
    let mut accepted = 0;
    let mut attempts = 0;
    while accepted < 100 && attempts < 20_000 {
        attempts += 1;
        let eta = rng.gen_range(0.5..2.5);
        let n_theta = rng.gen_range(0u32..3);
        let n = f64::from(n_theta);
        let s = rng.gen_range((n - 0.95)..(n - 0.55));
        let alpha = (s * (s + 1.0) + 0.25) / eta;
        let sigma = s - n;
        let cap = (sigma * (sigma + 1.0)).abs();
        let b = rng.gen_range(-0.9..0.9) * 2.0 * cap / eta;
        let spec = AngularSpec {
            family: AngularFamily::F3,
            alpha,
            beta: b,
            gamma: rng.gen_range(-0.5..0.5),
            m: 0,
            n_theta,
        };
        let Ok(sol) = solve_angular_params(&constants, &spec, eta) else { continue };
        accepted += 1;
        let m2 = 0.0;
        let lhs_a = sol.s * (sol.s + 1.0);
        let rhs_a = eta * spec.alpha + m2 - 0.25;
        let lam_expected = Complex64::new(0.0, -eta * spec.beta / 2.0);
        let sigma_sol = sol.s - n;
        let v = sol.lambda.im;
        let rho = eta * (spec.gamma - spec.alpha) + sigma_sol * sigma_sol
            + v * v / (sigma_sol * sigma_sol)
            - 0.25;
        if (lhs_a - rhs_a).abs() > tol(rhs_a)
            || (sol.lambda - lam_expected).norm() > tol(lam_expected.norm())
            || (sol.rho - rho).abs() > tol(rho)
        {
            failures.push(format!("F3 round trip broke at {spec:?}, eta={eta}"));
        }
    }
    if accepted < 100 {
        failures.push(format!("F3: only {accepted} admissible draws in {attempts} attempts"));
    }

    report(7, "parameter relations round trip on random admissible draws", &failures);
}

#[test]
fn acceptance_08_restrictions_reject_named_cases_and_accept_plotted_sets() {
    let constants = natural();
    let mut failures = Vec::new();

    // Named rejection: l = -1 in the Coulomb well.
    let spec = RadialSpec { kind: RadialKind::Coulomb { v0_lambda: 1.0 }, n_r: 0, l: -1.0 };
    match radial_energy(&constants, &spec) {
        Err(e) => {
            let msg = e.to_string();
            if !msg.contains("l > -1 required") {
                failures.push(format!("l = -1 rejection lacks the named violation: {msg}"));
            }
        }
        Ok(_) => failures.push("l = -1 Coulomb spec was accepted".into()),
    }

    // Named rejection: lambda = 0.4 for F2 (needs lambda > 1/2).
    let sol = AngularSolution {
        family: AngularFamily::F2,
        n_theta: 0,
        s: 1.2,
        lambda: Complex64::new(0.4, 0.0),
        rho: 1.0,
        eta: 1.0,
    };
    let violations = validate_solution(&sol);
    if !violations.iter().any(|v| v.code == "lambda-out-of-range") {
        failures.push(format!("F2 lambda = 0.4 not rejected: {violations:?}"));
    }

    // Named rejection: s = n_theta for F3 (sigma = 0 degenerates the map).
    let sol = AngularSolution {
        family: AngularFamily::F3,
        n_theta: 1,
        s: 1.0,
        lambda: Complex64::new(0.0, -0.05),
        rho: 0.5,
        eta: 1.0,
    };
    let violations = validate_solution(&sol);
    if !violations.iter().any(|v| v.code == "s-out-of-range") {
        failures.push(format!("F3 s = n_theta not rejected: {violations:?}"));
    }

    // Plotted radial parameter sets: Coulomb at l = -0.5 and l = 1;
    // oscillator at l = 0 and l = 1 with a soft frequency.
    for (kind, l) in [
        (RadialKind::Coulomb { v0_lambda: 1.0 }, -0.5),
        (RadialKind::Coulomb { v0_lambda: 1.0 }, 1.0),
        (RadialKind::Oscillator { k: 1e-7 }, 0.0),
        (RadialKind::Oscillator { k: 1e-7 }, 1.0),
    ] {
        let spec = RadialSpec { kind, n_r: 1, l };
        let violations = validate_radial(&spec);
        if !violations.is_empty() {
            failures.push(format!("plotted radial set {spec:?} rejected: {violations:?}"));
        }
        if let Err(e) = radial_energy(&constants, &spec) {
            failures.push(format!("plotted radial set {spec:?} failed to solve: {e}"));
        }
    }

    // Plotted polar parameter sets, as (family, s, lambda) pairs. The
    // (1, -0.5) pair satisfies only the first family's restrictions, so it
    // is checked there even though its printed label says otherwise; the
    // second-family pairs include the negative-s branch.
    for (family, s, lam) in [
        (AngularFamily::F1, 1.0, -0.5),
        (AngularFamily::F1, 1.5, -1.0),
        (AngularFamily::F2, -0.2, 0.6),
        (AngularFamily::F2, 1.0, 0.55),
    ] {
        let sol = AngularSolution {
            family,
            n_theta: 0,
            s,
            lambda: Complex64::new(lam, 0.0),
            rho: 1.0,
            eta: 1.0,
        };
        let violations = validate_solution(&sol);
        if !violations.is_empty() {
            failures.push(format!(
                "plotted polar set {family:?} (s={s}, lambda={lam}) rejected: {violations:?}"
            ));
        }
        // The closed-form waveform must evaluate cleanly on the open domain.
        let grid = ThetaDomain::for_family(family).uniform_interior(64);
        if let Err(e) = angular_wavefunction(&sol, &grid) {
            failures.push(format!(
                "plotted polar set {family:?} (s={s}, lambda={lam}) failed to sample: {e}"
            ));
        }
    }

    // The two PT-symmetric plotted sets sit on or beyond the admissible
    // window (s = 9.5 is the closure edge for n_theta = 10, and lambda = 1i
    // additionally violates the coupling bound), so they must be rejected.
    let edge = AngularSolution {
        family: AngularFamily::F3,
        n_theta: 10,
        s: 9.5,
        lambda: Complex64::new(0.0, 0.1),
        rho: 0.5,
        eta: 1.0,
    };
    if !validate_solution(&edge).iter().any(|v| v.code == "s-out-of-range") {
        failures.push("PT-symmetric plotted set s = 9.5 (n_theta = 10) was accepted".into());
    }
    let oversized = AngularSolution {
        family: AngularFamily::F3,
        n_theta: 10,
        s: 9.49,
        lambda: Complex64::new(0.0, 1.0),
        rho: 0.5,
        eta: 1.0,
    };
    if !validate_solution(&oversized).iter().any(|v| v.code == "lambda-out-of-range") {
        failures.push("PT-symmetric plotted set lambda = 1i was accepted".into());
    }

    report(8, "restrictions reject named cases and accept plotted sets", &failures);
}

#[test]
fn acceptance_09_special_functions_consistent_and_orthogonal() {
    let mut failures = Vec::new();

    // Recurrence vs series, Laguerre: n <= 8 over mixed orders and
    // arguments (the crate's recurrence path against its series path).
    for n in 0..=8u32 {
        for alpha in [0.5, 1.0, 2.3] {
            for x in [0.1, 1.7, 9.0] {
                let rec = laguerre(n, alpha, x).unwrap();
                let ser = laguerre_series(n, alpha, x).unwrap();
                let scale = 1.0 + rec.abs().max(ser.abs());
                if (rec - ser).abs() > 1e-10 * scale {
                    failures.push(format!(
                        "Laguerre n={n}, alpha={alpha}, x={x}: recurrence {rec} vs series {ser}"
                    ));
                }
            }
        }
    }

    // Recurrence vs series, Jacobi, including the conjugate-pair complex
    // parameters at imaginary argument used by the PT-symmetric family.
    for n in 0..=8u32 {
        for (a, b, x) in [
            (Complex64::new(0.5, 0.0), Complex64::new(1.5, 0.0), Complex64::new(0.3, 0.0)),
            (Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0), Complex64::new(-0.7, 0.0)),
            (
                Complex64::new(-0.75, 0.133),
                Complex64::new(-0.75, -0.133),
                Complex64::new(0.0, -2.2),
            ),
            (
                Complex64::new(-0.55, 0.4),
                Complex64::new(-0.55, -0.4),
                Complex64::new(0.0, -0.9),
            ),
        ] {
            let rec = jacobi(n, a, b, x).unwrap();
            let ser = jacobi_series(n, a, b, x).unwrap();
            let scale = 1.0 + rec.norm().max(ser.norm());
            if (rec - ser).norm() > 1e-10 * scale {
                failures.push(format!(
                    "Jacobi n={n}, a={a}, b={b}, x={x}: recurrence {rec} vs series {ser}"
                ));
            }
        }
    }

    // Laguerre orthogonality under the weight x^alpha e^{-x}: off-diagonal
    // inner products vanish relative to the diagonal norms. The x = t^2
    // substitution removes the weight's fractional-power cusp at the
    // origin so the composite rule converges at full order.
    for alpha in [0.5, 2.0] {
        let inner = |m: u32, n: u32| {
            quadrature(
                |t| {
                    let x = t * t;
                    2.0 * t.powf(2.0 * alpha + 1.0)
                        * (-x).exp()
                        * laguerre(m, alpha, x).unwrap()
                        * laguerre(n, alpha, x).unwrap()
                },
                0.0,
                9.0,
                20_000,
            )
            .unwrap()
        };
        let diag: Vec<f64> = (0..5u32).map(|n| inner(n, n)).collect();
        for m in 0..5u32 {
            for n in (m + 1)..5u32 {
                let off = inner(m, n);
                let scale = (diag[m as usize] * diag[n as usize]).sqrt();
                if off.abs() > 1e-6 * scale {
                    failures.push(format!(
                        "Laguerre orthogonality alpha={alpha}: <{m},{n}> = {off:.3e} vs norm {scale:.3e}"
                    ));
                }
            }
        }
    }

    report(9, "special functions: recurrence/series agreement and orthogonality", &failures);
}

#[test]
fn acceptance_10_energy_bounds_hold_for_converged_states() {
    let constants = natural();
    let mc2 = constants.mc2();
    let mut failures = Vec::new();

    let mut check = |radial: RadialSpec, angular: AngularSpec, requires_bound: bool| {
        let state = match solve_coupled(&constants, &radial, &angular, 1e-10) {
            Ok(s) => s,
            Err(e) => {
                failures.push(format!("coupled solve failed for {radial:?} + {angular:?}: {e}"));
                return;
            }
        };
        if !state.converged {
            failures.push(format!("state did not converge for {radial:?} + {angular:?}"));
            return;
        }
        match radial.kind {
            RadialKind::Coulomb { .. } => {
                if state.epsilon.abs() >= mc2 {
                    failures.push(format!(
                        "Coulomb state |epsilon| = {} is not below Mc^2",
                        state.epsilon.abs()
                    ));
                }
            }
            RadialKind::Oscillator { .. } => {
                if state.epsilon <= mc2 {
                    failures.push(format!(
                        "oscillator state epsilon = {} is not above Mc^2",
                        state.epsilon
                    ));
                }
            }
        }
        if requires_bound {
            let eta = constants.coupling_eta(state.epsilon);
            let sol = solve_angular_params(&constants, &angular, eta).expect("angular re-solve");
            let bound = energy_upper_bound(&constants, &angular, &sol).expect("bound defined");
            if state.epsilon > bound + 1e-9 * (1.0 + bound.abs()) {
                failures.push(format!(
                    "epsilon = {} exceeds its ceiling {bound} for {angular:?}",
                    state.epsilon
                ));
            }
        }
    };

    for v0_lambda in [0.5, 1.0] {
        for (m, n_theta, n_r) in [(0, 0, 0), (1, 0, 1), (0, 1, 0)] {
            check(
                RadialSpec { kind: RadialKind::Coulomb { v0_lambda }, n_r, l: 0.0 },
                AngularSpec {
                    family: AngularFamily::F1,
                    alpha: 0.5,
                    beta: 0.0,
                    gamma: 0.5,
                    m,
                    n_theta,
                },
                true,
            );
        }
    }
    for k in [0.5, 2.0] {
        check(
            RadialSpec { kind: RadialKind::Oscillator { k }, n_r: 0, l: 0.0 },
            AngularSpec {
                family: AngularFamily::F1,
                alpha: 0.5,
                beta: 0.0,
                gamma: 0.5,
                m: 0,
                n_theta: 0,
            },
            true,
        );
    }
    check(
        RadialSpec { kind: RadialKind::Coulomb { v0_lambda: 1.0 }, n_r: 0, l: 0.0 },
        AngularSpec {
            family: AngularFamily::F2,
            alpha: 0.5,
            beta: -0.5,
            gamma: 2.0,
            m: 0,
            n_theta: 0,
        },
        true,
    );
    // PT-symmetric family with alpha > gamma, where the ceiling applies.
    check(
        RadialSpec { kind: RadialKind::Coulomb { v0_lambda: 1.0 }, n_r: 0, l: 0.0 },
        AngularSpec {
            family: AngularFamily::F3,
            alpha: 0.0625,
            beta: 0.1,
            gamma: 0.0,
            m: 0,
            n_theta: 0,
        },
        true,
    );

    report(10, "energy windows and ceilings hold for converged states", &failures);
}

#[test]
fn acceptance_11_cli_is_deterministic_and_verification_passes() {
    let mut failures = Vec::new();
    let bin = env!("CARGO_BIN_EXE_spinor-spectra");

    let run = |args: &[&str]| {
        Command::new(bin)
            .args(args)
            .env("SPINOR_SPECTRA_LOG", "quiet")
            .output()
            .expect("binary should run")
    };

    // Repeated spectrum invocations must agree byte for byte.
    let spectrum_args =
        ["spectrum", "--radial", "coulomb", "--v0lambda", "1.0", "--angular", "f1", "--alpha", "0.5", "--gamma", "0.5", "--m", "1"];
    let first = run(&spectrum_args);
    let second = run(&spectrum_args);
    if !first.status.success() {
        failures.push(format!(
            "spectrum exited with {:?}: {}",
            first.status.code(),
            String::from_utf8_lossy(&first.stderr)
        ));
    } else if first.stdout != second.stdout {
        failures.push("spectrum reruns differ".into());
    }

    // Same for wavefunction sampling across all three factors.
    for factor in ["radial", "angular", "azimuthal"] {
        let args = [
            "wavefunction", "--factor", factor, "--samples", "257", "--angular", "f1",
            "--alpha", "0.5", "--gamma", "0.5", "--n-r", "1",
        ];
        let first = run(&args);
        let second = run(&args);
        if !first.status.success() {
            failures.push(format!(
                "wavefunction --factor {factor} exited with {:?}: {}",
                first.status.code(),
                String::from_utf8_lossy(&first.stderr)
            ));
        } else if first.stdout != second.stdout {
            failures.push(format!("wavefunction --factor {factor} reruns differ"));
        }
    }

    // The full verification battery passes within its time budget.
    let started = std::time::Instant::now();
    let verify = run(&["verify", "--suite", "all", "--tol", "1e-5"]);
    let elapsed = started.elapsed();
    if !verify.status.success() {
        failures.push(format!(
            "verify exited with {:?}:\n{}",
            verify.status.code(),
            String::from_utf8_lossy(&verify.stdout)
        ));
    }
    if elapsed.as_secs() > 300 {
        failures.push(format!("verify took {elapsed:?}, beyond the five-minute budget"));
    }

    report(11, "CLI determinism and verification suite", &failures);
}
