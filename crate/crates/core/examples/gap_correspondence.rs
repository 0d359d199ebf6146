//! A degree-3 polynomial over F₂ compiled to an IQP circuit: the all-zero
//! amplitude times 2ⁿ reproduces the exact gap.

use dqc1::circuit::compile_iqp_from_poly;
use dqc1::oracles::gap;
use dqc1::simulator::amplitude_zero;
use dqc1::PolyF2;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> dqc1::Result<()> {
    let f = PolyF2::new(3, [vec![0, 1, 2]])?;
    let c = compile_iqp_from_poly(&f)?;
    println!("f = x0 x1 x2: gap = {}, <000|C|000> = {:.6}", gap(&f)?, amplitude_zero(&c)?);

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut worst: f64 = 0.0;
    for n in 1..=10 {
        let f = PolyF2::random(n, 2 * n, &mut rng);
        let amp = amplitude_zero(&compile_iqp_from_poly(&f)?)?;
        let g = gap(&f)?;
        let err = (amp * (n as f64).exp2() - g as f64).norm();
        worst = worst.max(err);
        println!("n = {n:2}  monomials = {:2}  gap = {g:5}  amp·2ⁿ = {:+.9}", f.num_monomials(), amp.re * (n as f64).exp2());
    }
    println!("largest deviation: {worst:.2e}");
    assert!(worst < 1e-9);
    Ok(())
}
