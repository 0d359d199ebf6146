//! Hadamard–diagonal–Hadamard (IQP) circuits whose ⟨0ⁿ|C|0ⁿ⟩ amplitude
//! encodes a counting quantity.

use super::{Circuit, Gate, IsingInstance, PolyF2};
use crate::error::Result;

fn hadamard_layer(c: &mut Circuit) -> Result<()> {
    for q in 0..c.width() {
        c.push(Gate::H(q))?;
    }
    Ok(())
}

/// `H^⊗n · D_f · H^⊗n` with `D_f|x⟩ = (−1)^{f(x)}|x⟩`, so that
/// `⟨0ⁿ|C|0ⁿ⟩ = gap(f)/2ⁿ`. Variable `i` lives on qubit `i`.
pub fn compile_iqp_from_poly(f: &PolyF2) -> Result<Circuit> {
    let mut c = Circuit::new(f.n_vars());
    hadamard_layer(&mut c)?;
    for m in f.monomials() {
        let g = match *m {
            [a] => Gate::Z(a),
            [a, b] => Gate::Cz(a, b),
            [a, b, d] => Gate::Ccz(a, b, d),
            _ => unreachable!("PolyF2 holds monomials of degree 1..=3"),
        };
        c.push(g)?;
    }
    hadamard_layer(&mut c)?;
    Ok(c)
}

/// `H^⊗n · Π e^{iθ_jk Z_j Z_k} · Π e^{iθ_j Z_j} · H^⊗n`, so that
/// `⟨0ⁿ|C|0ⁿ⟩ = Z/2ⁿ`.
///
/// `e^{iθZ}` is exactly `Rz(−2θ)`; `e^{iθ Z_j Z_k}` is `CX(j→k) · Rz_k(−2θ) · CX(j→k)`.
pub fn compile_iqp_from_ising(m: &IsingInstance) -> Result<Circuit> {
    let mut c = Circuit::new(m.n_spins());
    hadamard_layer(&mut c)?;
    for (j, k, theta) in m.couplings() {
        c.push(Gate::cx(j, k))?;
        c.push(Gate::rz(k, -2.0 * theta))?;
        c.push(Gate::cx(j, k))?;
    }
    for (j, theta) in m.fields() {
        c.push(Gate::rz(j, -2.0 * theta))?;
    }
    hadamard_layer(&mut c)?;
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_layout() {
        let f = PolyF2::new(3, [vec![0, 1, 2]]).unwrap();
        let c = compile_iqp_from_poly(&f).unwrap();
        assert_eq!(c.len(), 7);
        assert_eq!(c.gates()[3], Gate::Ccz(0, 1, 2));

        let c = compile_iqp_from_poly(&PolyF2::new(1, [vec![0]]).unwrap()).unwrap();
        assert_eq!(c.gates(), &[Gate::H(0), Gate::Z(0), Gate::H(0)]);
    }

    #[test]
    fn empty_poly_is_two_hadamard_layers() {
        let c = compile_iqp_from_poly(&PolyF2::zero(3)).unwrap();
        assert_eq!(c.len(), 6);
        assert!(c.gates().iter().all(|g| matches!(g, Gate::H(_))));
    }
}
