//! Ring-shaped oscillator spectrum from the cubic energy identity.
//!
//! The oscillator energy is the root of
//! `(eps - Mc^2)^2 (eps + Mc^2) = 8 k c^2 D^2` above the rest energy,
//! with `D = 2 n_r + l + 3/2`. This example prints the low-lying levels,
//! verifies the cubic identity at the benchmark stiffness `k = 1/8`, and
//! shows the massless limit collapsing to a pure cube root.
//!
//! Run with: `cargo run --example oscillator_spectrum`

use spinor_spectra::model::{Constants, RadialKind, RadialSpec};
use spinor_spectra::radial::radial_energy;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let constants = Constants::natural();

    // Benchmark: k = 1/8, n_r = l = 0 turns the identity into
    // eps^3 - eps^2 - eps - 5/4 = 0, whose real root sits in (1.88, 1.89).
    let k = 0.125;
    let spec = RadialSpec { kind: RadialKind::Oscillator { k }, n_r: 0, l: 0.0 };
    let result = radial_energy(&constants, &spec)?;
    let eps = result.epsilon;
    println!("Benchmark stiffness k = {k}:");
    println!("  epsilon        = {eps:.15}");
    println!("  cubic residual = {:.3e}", eps * eps * eps - eps * eps - eps - 1.25);
    println!("  omega          = {:.15}", result.omega().unwrap());
    println!();

    println!("Low-lying levels at k = 0.5:");
    println!("{:>4} {:>4} {:>6} {:>22} {:>12}", "n_r", "l", "D", "epsilon", "omega");
    for n_r in 0..3u32 {
        for l in 0..3u32 {
            let spec = RadialSpec {
                kind: RadialKind::Oscillator { k: 0.5 },
                n_r,
                l: l as f64,
            };
            let result = radial_energy(&constants, &spec)?;
            println!(
                "{:>4} {:>4} {:>6.1} {:>22.16} {:>12.6}",
                n_r,
                l,
                2.0 * n_r as f64 + l as f64 + 1.5,
                result.epsilon,
                result.omega().unwrap(),
            );
        }
    }

    // In the massless limit the cubic degenerates: eps = (8 k c^2 D^2)^(1/3).
    let massless = Constants { mass: 0.0, c: 1.0 };
    let spec = RadialSpec { kind: RadialKind::Oscillator { k: 0.5 }, n_r: 1, l: 2.0 };
    let result = radial_energy(&massless, &spec)?;
    let d: f64 = 2.0 + 2.0 + 1.5;
    println!();
    println!("Massless limit at n_r = 1, l = 2:");
    println!("  epsilon    = {:.15}", result.epsilon);
    println!("  cube root  = {:.15}", (8.0 * 0.5 * d * d).cbrt());
    Ok(())
}
