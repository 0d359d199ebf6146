//! Output distribution of a one-clean-qubit circuit, cross-checked against the
//! dense density-matrix oracle, plus sampling from it.
//!
//! Pass `n` as the first argument to change the number of mixed qubits.

use dqc1::hardness::random_htcx_circuit;
use dqc1::oracles::density_matrix_dqc1;
use dqc1::simulator::{dqc1_distribution, f_value_index, format_bits};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> dqc1::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let u = random_htcx_circuit(n + 1, 20 * (n + 1), &mut rng);

    let start = std::time::Instant::now();
    let d = dqc1_distribution(&u)?;
    println!("n = {n}, {} gates, {:?}", u.len(), start.elapsed());
    println!("sum p = {:.12}, max p·2ⁿ = {:.12}", d.total(), d.max_prob() * (n as f64).exp2());
    assert!(d.is_anti_concentrated());

    if n <= 5 {
        let oracle = density_matrix_dqc1(&u)?;
        let diff = d
            .probs()
            .iter()
            .zip(oracle.probs())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        println!("max |simulator − density matrix| = {diff:.1e}");
        for z in 0..d.len().min(8) {
            println!(
                "  z = {}  p = {:.6}  f/2ⁿ = {:.6}",
                format_bits(z, n + 1),
                d.prob(z),
                f_value_index(&u, z)? / (n as f64).exp2()
            );
        }
    }

    let samples = d.sample(10, 42);
    let strings: Vec<String> = samples.iter().map(|&z| format_bits(z, n + 1)).collect();
    println!("samples: {}", strings.join(" "));
    Ok(())
}
