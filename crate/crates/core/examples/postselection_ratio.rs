//! The postselection pair (U₁, U₂): their f-values are the zero-marginals of
//! V|0ⁿ⟩, so the ratio is a postselected conditional probability, and any
//! multiplicative-error estimates of them keep the ratio inside a known interval.

use dqc1::hardness::{build_postselection_pair, postselection_thresholds, ratio_bounds_check};
use dqc1::simulator::f_value_index;
use dqc1::{Circuit, Gate};

fn main() -> dqc1::Result<()> {
    let v = Circuit::from_gates(3, [Gate::H(0), Gate::H(1), Gate::cx(0, 2), Gate::T(1), Gate::H(1)])?;
    let (u1, u2) = build_postselection_pair(&v)?;
    let f1 = f_value_index(&u1, 0)?;
    let f2 = f_value_index(&u2, 0)?;
    println!("P(p=0) = f(U1) = {f1:.6}");
    println!("P(o=0, p=0) = f(U2) = {f2:.6}");
    println!("P(o=0 | p=0) = {:.6}", f2 / f1);

    let eps = 1.0 / 3.0;
    let check = ratio_bounds_check(f1, f2, eps, 10_000, 7)?;
    println!(
        "estimates within {eps:.3}: b/a in [{:.6}, {:.6}], observed [{:.6}, {:.6}], violations {}",
        check.lower, check.upper, check.min_observed, check.max_observed, check.violations
    );
    assert!(check.passed());

    for r in [2, 4, 8] {
        let (accept, reject) = postselection_thresholds(eps, r);
        println!("r = {r}: accept if b/a ≥ {accept:.4}, reject if b/a ≤ {reject:.4}");
    }
    Ok(())
}
