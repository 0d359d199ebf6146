use num_complex::Complex64;
use rayon::prelude::*;

use super::{Distribution, StateVector};
use crate::circuit::Circuit;
use crate::error::{Error, Result};

/// Default cap on mixed qubits for [`dqc1_distribution`] (15 qubits total).
pub const DEFAULT_MAX_MIXED: usize = 14;

/// Fixed number of work blocks for the distribution sum. The reduction runs over
/// blocks in index order, so results do not depend on the worker count.
const BLOCKS: usize = 64;

/// Parses a bit string such as `"0101"`; the first character is qubit 0.
pub fn parse_bits(s: &str) -> Result<Vec<bool>> {
    s.chars()
        .enumerate()
        .map(|(i, ch)| match ch {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(Error::format(
                format!("bit {i}"),
                format!("expected 0 or 1, got {other:?}"),
            )),
        })
        .collect()
}

/// Basis index of a bit string, first bit most significant.
pub fn bits_to_index(bits: &[bool]) -> usize {
    bits.iter().fold(0, |acc, &b| (acc << 1) | b as usize)
}

pub fn index_to_bits(index: usize, width: usize) -> Vec<bool> {
    (0..width).map(|q| index >> (width - 1 - q) & 1 == 1).collect()
}

pub fn format_bits(index: usize, width: usize) -> String {
    index_to_bits(index, width)
        .into_iter()
        .map(|b| if b { '1' } else { '0' })
        .collect()
}

/// `⟨0ⁿ|C|0ⁿ⟩`.
pub fn amplitude_zero(c: &Circuit) -> Result<Complex64> {
    let mut psi = StateVector::zero(c.width())?;
    psi.apply_circuit(c)?;
    Ok(psi.amplitude(0))
}

/// `f(z,U) = ⟨z|U(|0⟩⟨0|⊗I)U†|z⟩`, the squared norm of the clean-qubit-0
/// block of `U†|z⟩`. One state-vector pass.
pub fn f_value(u: &Circuit, z: &[bool]) -> Result<f64> {
    if z.len() != u.width() {
        return Err(Error::WidthMismatch {
            expected: u.width(),
            found: z.len(),
        });
    }
    f_value_index(u, bits_to_index(z))
}

/// As [`f_value`], with `z` given as a basis index.
pub fn f_value_index(u: &Circuit, z: usize) -> Result<f64> {
    if u.width() == 0 {
        return Err(Error::Domain("f(z,U) needs at least the clean qubit".into()));
    }
    let mut phi = StateVector::basis(u.width(), z)?;
    phi.apply_circuit(&u.adjoint())?;
    let half = phi.amplitudes().len() / 2;
    Ok(phi.amplitudes()[..half].iter().map(Complex64::norm_sqr).sum())
}

/// The DQC1 output distribution `p_z(U)` with the default size cap.
pub fn dqc1_distribution(u: &Circuit) -> Result<Distribution> {
    dqc1_distribution_with_limit(u, DEFAULT_MAX_MIXED)
}

/// `p_z(U) = 2^{-n} Σ_x |⟨z|U|0x⟩|²`: the maximally mixed register is expanded
/// into its 2ⁿ basis states, each propagated once.
pub fn dqc1_distribution_with_limit(u: &Circuit, max_mixed: usize) -> Result<Distribution> {
    if u.width() == 0 {
        return Err(Error::Domain("DQC1 needs at least the clean qubit".into()));
    }
    let n = u.width() - 1;
    if n > max_mixed {
        return Err(Error::SizeLimit {
            what: "mixed qubits",
            value: n,
            limit: max_mixed,
        });
    }
    let inputs = 1usize << n;
    let dim = 2 * inputs;
    let per_block = inputs.div_ceil(BLOCKS);

    let partials: Vec<Result<Vec<f64>>> = (0..inputs.div_ceil(per_block))
        .into_par_iter()
        .map(|b| {
            let mut acc = vec![0.0; dim];
            let mut psi = StateVector::zero(u.width())?;
            for x in b * per_block..((b + 1) * per_block).min(inputs) {
                psi.reset_to_basis(x);
                psi.apply_circuit(u)?;
                for (a, amp) in acc.iter_mut().zip(psi.amplitudes()) {
                    *a += amp.norm_sqr();
                }
            }
            Ok(acc)
        })
        .collect();

    let mut probs = vec![0.0; dim];
    for part in partials {
        for (p, v) in probs.iter_mut().zip(part?) {
            *p += v;
        }
    }
    let scale = 1.0 / inputs as f64;
    probs.iter_mut().for_each(|p| *p *= scale);
    Distribution::new(n, probs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{compile_iqp_from_poly, Gate, PolyF2};

    #[test]
    fn bit_helpers() {
        assert_eq!(parse_bits("0101").unwrap(), vec![false, true, false, true]);
        assert!(parse_bits("01x").is_err());
        assert_eq!(bits_to_index(&parse_bits("100").unwrap()), 4);
        for z in 0..16 {
            assert_eq!(bits_to_index(&index_to_bits(z, 4)), z);
        }
        assert_eq!(format_bits(5, 4), "0101");
    }

    #[test]
    fn f_value_identity() {
        let u = Circuit::new(3);
        assert_eq!(f_value(&u, &parse_bits("000").unwrap()).unwrap(), 1.0);
        assert_eq!(f_value(&u, &parse_bits("100").unwrap()).unwrap(), 0.0);
        assert!(f_value(&u, &parse_bits("00").unwrap()).is_err());
    }

    #[test]
    fn amplitude_zero_examples() {
        let x = Circuit::from_gates(1, [Gate::X(0)]).unwrap();
        assert_eq!(amplitude_zero(&x).unwrap(), Complex64::new(0.0, 0.0));
        assert_eq!(amplitude_zero(&Circuit::new(2)).unwrap(), Complex64::new(1.0, 0.0));
        let f = PolyF2::new(3, [vec![0, 1, 2]]).unwrap();
        let a = amplitude_zero(&compile_iqp_from_poly(&f).unwrap()).unwrap();
        assert!((a - Complex64::new(0.75, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn identity_distribution() {
        let d = dqc1_distribution(&Circuit::new(3)).unwrap();
        for z in 0..8 {
            let want = if z < 4 { 0.25 } else { 0.0 };
            assert!((d.prob(z) - want).abs() < 1e-15);
        }
    }

    #[test]
    fn hadamard_on_clean_qubit_is_uniform() {
        let u = Circuit::from_gates(2, [Gate::H(0)]).unwrap();
        let d = dqc1_distribution(&u).unwrap();
        assert!(d.probs().iter().all(|p| (p - 0.25).abs() < 1e-12));
    }

    #[test]
    fn size_limit() {
        let u = Circuit::new(5);
        assert!(matches!(
            dqc1_distribution_with_limit(&u, 3),
            Err(Error::SizeLimit { .. })
        ));
        assert!(dqc1_distribution(&Circuit::new(0)).is_err());
    }
}
