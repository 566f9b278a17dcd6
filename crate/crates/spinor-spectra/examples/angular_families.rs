//! Separation constants for the three angular potential families.
//!
//! Each family maps its shape coefficients (alpha, beta, gamma) and the
//! coupling `eta` to a pair `(s, lambda)` and the separation constant
//! `rho`, which in turn fixes the effective orbital quantum number fed to
//! the radial problem. Family F3 is the PT-symmetric one: its `lambda` is
//! imaginary while `rho` stays real.
//!
//! Run with: `cargo run --example angular_families`

use spinor_spectra::angular::{energy_upper_bound, solve_angular_params};
use spinor_spectra::model::{rho_to_l, AngularFamily, AngularSpec, Constants};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let constants = Constants::natural();

    let cases = [
        (
            "F1: (gamma + beta cos + alpha cos^2)/sin^2",
            AngularSpec {
                family: AngularFamily::F1,
                alpha: 0.5,
                beta: 0.0,
                gamma: 0.5,
                m: 0,
                n_theta: 0,
            },
            2.0,
        ),
        (
            "F2: (gamma + beta cos^2 + alpha cos^4)/(sin^2 cos^2)",
            AngularSpec {
                family: AngularFamily::F2,
                alpha: 0.5,
                beta: -0.5,
                gamma: 2.0,
                m: 0,
                n_theta: 0,
            },
            1.0,
        ),
        (
            "F3: gamma + i b cot + alpha cot^2   (beta stores b)",
            AngularSpec {
                family: AngularFamily::F3,
                alpha: 0.0625,
                beta: 0.2,
                gamma: 0.0,
                m: 0,
                n_theta: 0,
            },
            1.0,
        ),
    ];

    for (label, spec, eta) in cases {
        let solution = solve_angular_params(&constants, &spec, eta)?;
        println!("{label}");
        println!("  eta     = {eta}");
        println!("  s       = {:.15}", solution.s);
        println!("  lambda  = {:.15} + {:.15}i", solution.lambda.re, solution.lambda.im);
        println!("  rho     = {:.15}", solution.rho);
        println!("  l_eff   = {:.15}", rho_to_l(solution.rho)?);
        let bound = energy_upper_bound(&constants, &spec, &solution)?;
        println!("  epsilon <= {bound:.15} for any bound state with this shape");
        println!();
    }

    // Excited polar states shift rho through the node count n_theta.
    println!("F1 worked case: rho versus the polar quantum number");
    for n_theta in 0..4u32 {
        let spec = AngularSpec {
            family: AngularFamily::F1,
            alpha: 0.5,
            beta: 0.0,
            gamma: 0.5,
            m: 0,
            n_theta,
        };
        let solution = solve_angular_params(&constants, &spec, 2.0)?;
        println!("  n_theta = {n_theta}: rho = {:.12}", solution.rho);
    }
    Ok(())
}
