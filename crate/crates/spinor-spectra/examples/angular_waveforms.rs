//! Polar waveforms Theta(theta) for the three angular families.
//!
//! Shows the characteristic behavior of each closed form: F1 and F2 decay
//! into their potential walls (theta -> 0, pi for F1; theta -> 0, pi/2 for
//! F2), while the PT-symmetric F3 carries the potential's imaginary part
//! purely as a phase — its modulus does not depend on the cot-coupling b.
//!
//! Run with: `cargo run --example angular_waveforms`

use spinor_spectra::angular::{angular_wavefunction, solve_angular_params, ThetaDomain};
use spinor_spectra::model::{AngularFamily, AngularSpec, Constants};

fn profile(label: &str, spec: &AngularSpec, eta: f64) -> Result<(), Box<dyn std::error::Error>> {
    let constants = Constants::natural();
    let solution = solve_angular_params(&constants, spec, eta)?;
    let domain = ThetaDomain::for_family(spec.family);
    let grid = domain.uniform_interior(9);
    let theta_fn = angular_wavefunction(&solution, &grid)?;

    println!("{label}");
    println!("  s = {:.10}, lambda = {:.10} + {:.10}i", solution.s, solution.lambda.re, solution.lambda.im);
    println!("{:>12} {:>14} {:>14} {:>12}", "theta", "Re Theta", "Im Theta", "|Theta|");
    for (&theta, value) in grid.iter().zip(theta_fn.values()) {
        println!(
            "{:>12.6} {:>14.6} {:>14.6} {:>12.6}",
            theta,
            value.re,
            value.im,
            value.norm()
        );
    }
    println!();
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    profile(
        "F1 ground profile (alpha = gamma = 0.5, eta = 2):",
        &AngularSpec {
            family: AngularFamily::F1,
            alpha: 0.5,
            beta: 0.0,
            gamma: 0.5,
            m: 0,
            n_theta: 0,
        },
        2.0,
    )?;
    profile(
        "F2 ground profile (alpha = 0.5, beta = -0.5, gamma = 2, eta = 1):",
        &AngularSpec {
            family: AngularFamily::F2,
            alpha: 0.5,
            beta: -0.5,
            gamma: 2.0,
            m: 0,
            n_theta: 0,
        },
        1.0,
    )?;
    profile(
        "F3 PT-symmetric profile (alpha = 0.0625, b = 0.2, eta = 1):",
        &AngularSpec {
            family: AngularFamily::F3,
            alpha: 0.0625,
            beta: 0.2,
            gamma: 0.0,
            m: 0,
            n_theta: 0,
        },
        1.0,
    )?;
    println!("Note the symmetric |Theta| column for F3: the non-Hermitian term only twists the phase.");
    Ok(())
}
