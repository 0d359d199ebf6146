//! Embeds an IQP circuit C into an (n+1)-qubit U with f(0^{n+1}, U) = |⟨0ⁿ|C|0ⁿ⟩|².

use dqc1::circuit::compile_iqp_from_poly;
use dqc1::hardness::build_worst_case_embedding;
use dqc1::oracles::gap;
use dqc1::simulator::{amplitude_zero, f_value, parse_bits};
use dqc1::PolyF2;

fn main() -> dqc1::Result<()> {
    let f = PolyF2::new(3, [vec![0, 1, 2]])?;
    let c = compile_iqp_from_poly(&f)?;
    let u = build_worst_case_embedding(&c)?;
    let value = f_value(&u, &parse_bits("0000")?)?;
    let amp = amplitude_zero(&c)?;
    println!("gap(f) = {}", gap(&f)?);
    println!("|<000|C|000>|² = {:.6}", amp.norm_sqr());
    println!("f(0000, U)     = {value:.6}");
    println!("U has {} gates on {} qubits", u.len(), u.width());
    assert!((value - 0.5625).abs() < 1e-10);
    Ok(())
}
