//! Imaginary-angle Ising partition functions from brute-force summation and
//! from the all-zero amplitude of the matching IQP circuit.

use std::f64::consts::{FRAC_PI_2, PI};

use dqc1::circuit::compile_iqp_from_ising;
use dqc1::oracles::ising_partition_function;
use dqc1::simulator::amplitude_zero;
use dqc1::IsingInstance;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> dqc1::Result<()> {
    let cases = [
        ("single coupling π/2", IsingInstance::new(2, [(0, 1, FRAC_PI_2)], [])?),
        ("single field π", IsingInstance::new(1, [], [(0, PI)])?),
    ];
    for (label, m) in &cases {
        let z = ising_partition_function(m)?;
        let amp = amplitude_zero(&compile_iqp_from_ising(m)?)?;
        println!("{label}: Z = {z:.6}, <0|C|0>·2ⁿ = {:.6}", amp * (m.n_spins() as f64).exp2());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in [3, 6, 9] {
        let m = IsingInstance::random(n, 2 * n, &mut rng);
        let z = ising_partition_function(&m)?;
        let amp = amplitude_zero(&compile_iqp_from_ising(&m)?)? * (n as f64).exp2();
        println!("n = {n}: Z = {z:.6}  amp·2ⁿ = {amp:.6}  |diff| = {:.1e}", (z - amp).norm());
        assert!((z - amp).norm() < 1e-9);
    }
    Ok(())
}
