use num_complex::Complex64;

use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};

/// Hard cap on dense state width; 2^28 amplitudes is 4 GiB.
pub const MAX_STATE_QUBITS: usize = 28;

/// Dense state over `width` qubits. Qubit 0 is the most significant index bit.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    width: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// The computational basis state with the given index.
    pub fn basis(width: usize, index: usize) -> Result<Self> {
        check_width(width)?;
        let len = 1usize << width;
        if index >= len {
            return Err(Error::Domain(format!(
                "basis index {index} out of range for {width} qubits"
            )));
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); len];
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(StateVector { width, amps })
    }

    pub fn zero(width: usize) -> Result<Self> {
        Self::basis(width, 0)
    }

    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        let len = amps.len();
        if !len.is_power_of_two() {
            return Err(Error::Domain(format!(
                "amplitude count {len} is not a power of two"
            )));
        }
        Ok(StateVector {
            width: len.trailing_zeros() as usize,
            amps,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amps[index]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(Complex64::norm_sqr).sum()
    }

    /// Resets to a basis state without reallocating.
    pub(crate) fn reset_to_basis(&mut self, index: usize) {
        self.amps.fill(Complex64::new(0.0, 0.0));
        self.amps[index] = Complex64::new(1.0, 0.0);
    }

    fn bit(&self, qubit: usize) -> usize {
        1 << (self.width - 1 - qubit)
    }

    pub fn apply_circuit(&mut self, c: &Circuit) -> Result<()> {
        if c.width() != self.width {
            return Err(Error::WidthMismatch {
                expected: self.width,
                found: c.width(),
            });
        }
        for g in c.gates() {
            self.apply_gate_unchecked(g);
        }
        Ok(())
    }

    pub fn apply_gate(&mut self, g: &Gate) -> Result<()> {
        g.validate(self.width)?;
        self.apply_gate_unchecked(g);
        Ok(())
    }

    fn apply_gate_unchecked(&mut self, g: &Gate) {
        use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};
        let i = Complex64::i();
        match *g {
            Gate::H(q) => self.hadamard(q),
            Gate::X(q) => self.controlled_x(q, 0, 0),
            Gate::Z(q) => self.phase(q, Complex64::new(-1.0, 0.0)),
            Gate::S(q) => self.phase(q, i),
            Gate::Sdg(q) => self.phase(q, -i),
            Gate::T(q) => self.phase(q, Complex64::new(FRAC_1_SQRT_2, FRAC_1_SQRT_2)),
            Gate::Tdg(q) => self.phase(q, Complex64::from_polar(1.0, -FRAC_PI_4)),
            Gate::Rz { qubit, theta } => self.rz(qubit, theta),
            Gate::Cz(a, b) => self.negate_all_set(self.bit(a) | self.bit(b)),
            Gate::Ccz(a, b, c) => self.negate_all_set(self.bit(a) | self.bit(b) | self.bit(c)),
            Gate::Cx { control, target } => self.cx(control, target),
            Gate::Mcx {
                target,
                ref controls,
                ref polarities,
            } => {
                let mut mask = 0;
                let mut pattern = 0;
                for (&c, &p) in controls.iter().zip(polarities) {
                    let b = self.bit(c);
                    mask |= b;
                    if p {
                        pattern |= b;
                    }
                }
                self.controlled_x(target, mask, pattern)
            }
        }
    }

    fn hadamard(&mut self, q: usize) {
        let stride = self.bit(q);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        for block in self.amps.chunks_exact_mut(2 * stride) {
            let (lo, hi) = block.split_at_mut(stride);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = (x + y) * s;
                *b = (x - y) * s;
            }
        }
    }

    /// Multiplies the |1⟩ component of `q` by `phase`.
    fn phase(&mut self, q: usize, phase: Complex64) {
        let stride = self.bit(q);
        for block in self.amps.chunks_exact_mut(2 * stride) {
            for a in &mut block[stride..] {
                *a *= phase;
            }
        }
    }

    fn rz(&mut self, q: usize, theta: f64) {
        let stride = self.bit(q);
        let lo_phase = Complex64::from_polar(1.0, -theta / 2.0);
        let hi_phase = Complex64::from_polar(1.0, theta / 2.0);
        for block in self.amps.chunks_exact_mut(2 * stride) {
            let (lo, hi) = block.split_at_mut(stride);
            lo.iter_mut().for_each(|a| *a *= lo_phase);
            hi.iter_mut().for_each(|a| *a *= hi_phase);
        }
    }

    fn negate_all_set(&mut self, mask: usize) {
        let free = (self.amps.len() - 1) & !mask;
        for_each_submask(free, |s| {
            let idx = s | mask;
            self.amps[idx] = -self.amps[idx];
        });
    }

    fn cx(&mut self, control: usize, target: usize) {
        let cb = self.bit(control);
        let tb = self.bit(target);
        for (i, block) in self.amps.chunks_exact_mut(2 * tb).enumerate() {
            let (lo, hi) = block.split_at_mut(tb);
            if cb > tb {
                // the control bit is constant across the block
                if (i * 2 * tb) & cb != 0 {
                    lo.swap_with_slice(hi);
                }
            } else {
                for (l, h) in lo.chunks_exact_mut(2 * cb).zip(hi.chunks_exact_mut(2 * cb)) {
                    l[cb..].swap_with_slice(&mut h[cb..]);
                }
            }
        }
    }

    /// Flips `target` on every index whose `mask` bits equal `pattern`.
    /// Only the matching amplitude pairs are visited.
    fn controlled_x(&mut self, target: usize, mask: usize, pattern: usize) {
        let tb = self.bit(target);
        let free = (self.amps.len() - 1) & !(mask | tb);
        for_each_submask(free, |s| {
            let idx = s | pattern;
            self.amps.swap(idx, idx | tb);
        });
    }
}

/// Visits every submask of `mask` in increasing order, including 0 and `mask`.
fn for_each_submask(mask: usize, mut f: impl FnMut(usize)) {
    let mut s = 0usize;
    loop {
        f(s);
        if s == mask {
            break;
        }
        s = s.wrapping_sub(mask) & mask;
    }
}

pub(crate) fn check_width(width: usize) -> Result<()> {
    if width > MAX_STATE_QUBITS {
        return Err(Error::SizeLimit {
            what: "state width",
            value: width,
            limit: MAX_STATE_QUBITS,
        });
    }
    Ok(())
}

/// Returns `c` applied to a copy of `psi`.
pub fn apply_circuit(psi: &StateVector, c: &Circuit) -> Result<StateVector> {
    let mut out = psi.clone();
    out.apply_circuit(c)?;
    Ok(out)
}
