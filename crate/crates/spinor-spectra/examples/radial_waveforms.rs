//! Radial waveforms `u(r)` and their node structure.
//!
//! Samples the closed-form radial factor for the first few Coulomb levels
//! and one oscillator level, prints a coarse profile, and counts interior
//! nodes — the n_r-th level must cross zero exactly n_r times.
//!
//! Run with: `cargo run --example radial_waveforms`

use spinor_spectra::model::{Constants, RadialKind, RadialSpec};
use spinor_spectra::oracle::node_count;
use spinor_spectra::radial::{radial_energy, radial_wavefunction};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let constants = Constants::natural();

    println!("Coulomb levels at V0*lambda = 1 (u is not normalized):");
    for n_r in 0..3u32 {
        let spec = RadialSpec {
            kind: RadialKind::Coulomb { v0_lambda: 1.0 },
            n_r,
            l: 0.0,
        };
        let energy = radial_energy(&constants, &spec)?;
        let k = energy.k_scale().unwrap();
        // Resolve the oscillations well past the last node, out to the tail.
        let grid: Vec<f64> = (1..=1200).map(|j| j as f64 * 0.02 / k).collect();
        let u = radial_wavefunction(&constants, &spec, &energy, &grid)?;
        let nodes = node_count(&u)?;
        println!();
        println!(
            "  n_r = {n_r}: epsilon = {:.12}, k_scale = {k:.6}, interior nodes = {nodes}",
            energy.epsilon
        );
        print!("    u(r) at r*k = 1..6:");
        for target in 1..=6 {
            let idx = grid.iter().position(|&r| r * k >= target as f64).unwrap();
            print!(" {:+.4}", u.values()[idx].re);
        }
        println!();
    }

    println!();
    println!("Oscillator level at k = 0.5, n_r = 2, l = 1:");
    let spec = RadialSpec { kind: RadialKind::Oscillator { k: 0.5 }, n_r: 2, l: 1.0 };
    let energy = radial_energy(&constants, &spec)?;
    let omega = energy.omega().unwrap();
    let grid: Vec<f64> = (1..=1500).map(|j| j as f64 * 0.004 * 7.0 / omega.sqrt()).collect();
    let u = radial_wavefunction(&constants, &spec, &energy, &grid)?;
    println!("  epsilon = {:.12}, omega = {omega:.6}", energy.epsilon);
    println!("  interior nodes = {} (expected 2)", node_count(&u)?);
    let peak = u.values().iter().map(|v| v.norm()).fold(0.0_f64, f64::max);
    println!("  peak |u| = {peak:.6}, |u| at the last sample = {:.3e}", u.values().last().unwrap().norm());
    Ok(())
}
