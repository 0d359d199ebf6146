//! Circuits whose `f(0^{n+1}, U)` reproduces a worst-case quantity of a
//! smaller circuit.

use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};

/// X on the clean qubit unless every listed qubit is |0⟩: an X followed by an
/// all-anti-controlled X that undoes it on the all-zero branch.
fn flip_unless_all_zero(c: &mut Circuit, qubits: Vec<usize>) -> Result<()> {
    let polarities = vec![false; qubits.len()];
    c.push(Gate::X(0))?;
    c.push(Gate::mcx(0, qubits, polarities)?)?;
    Ok(())
}

/// `U` with `U† = [I⊗|0⟩⟨0|^{⊗n} + X⊗(I − |0⟩⟨0|^{⊗n})](I⊗C)`, so that
/// `f(0^{n+1}, U) = |⟨0ⁿ|C|0ⁿ⟩|²`.
pub fn build_worst_case_embedding(c: &Circuit) -> Result<Circuit> {
    let width = c.width() + 1;
    let mut dagger = c.shifted(1, width)?;
    flip_unless_all_zero(&mut dagger, (1..width).collect())?;
    Ok(dagger.adjoint())
}

/// `(U₁, U₂)` with `U₁† = CX(1→0)(I⊗V)` and
/// `U₂† = [X on qubit 0 unless qubits 1, 2 are |00⟩](I⊗V)`.
///
/// `f(0^{n+1}, U₁)` is the probability that the first output qubit of `V|0ⁿ⟩`
/// reads 0, and `f(0^{n+1}, U₂)` that the first two read 00.
pub fn build_postselection_pair(v: &Circuit) -> Result<(Circuit, Circuit)> {
    if v.width() < 2 {
        return Err(Error::Domain(format!(
            "postselection pair needs at least 2 qubits, got {}",
            v.width()
        )));
    }
    let width = v.width() + 1;
    let base = v.shifted(1, width)?;

    let mut u1 = base.clone();
    u1.push(Gate::cx(1, 0))?;

    let mut u2 = base;
    flip_unless_all_zero(&mut u2, vec![1, 2])?;

    Ok((u1.adjoint(), u2.adjoint()))
}
