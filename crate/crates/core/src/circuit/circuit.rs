use super::Gate;
use crate::error::{Error, Result};

/// An ordered gate list over `width` qubits, applied first gate first.
///
/// Qubit 0 is the most significant bit of a basis-state index.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Circuit {
    width: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(width: usize) -> Self {
        Circuit {
            width,
            gates: Vec::new(),
        }
    }

    pub fn from_gates(width: usize, gates: impl IntoIterator<Item = Gate>) -> Result<Self> {
        let mut c = Circuit::new(width);
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    pub fn push(&mut self, gate: Gate) -> Result<&mut Self> {
        gate.validate(self.width)?;
        self.gates.push(gate);
        Ok(self)
    }

    /// Appends every gate of `other`; both circuits must have the same width.
    pub fn extend_from(&mut self, other: &Circuit) -> Result<&mut Self> {
        if other.width != self.width {
            return Err(Error::WidthMismatch {
                expected: self.width,
                found: other.width,
            });
        }
        self.gates.extend(other.gates.iter().cloned());
        Ok(self)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// The inverse circuit: gates reversed, each replaced by its inverse.
    pub fn adjoint(&self) -> Circuit {
        Circuit {
            width: self.width,
            gates: self.gates.iter().rev().map(Gate::inverse).collect(),
        }
    }

    /// Re-embeds this circuit into a wider register, moving qubit `q` to `q + offset`.
    pub fn shifted(&self, offset: usize, width: usize) -> Result<Circuit> {
        if self.width + offset > width {
            return Err(Error::WidthMismatch {
                expected: width,
                found: self.width + offset,
            });
        }
        let gates = self.gates.iter().map(|g| shift_gate(g, offset));
        Circuit::from_gates(width, gates)
    }
}

fn shift_gate(g: &Gate, k: usize) -> Gate {
    match g {
        Gate::H(q) => Gate::H(q + k),
        Gate::X(q) => Gate::X(q + k),
        Gate::Z(q) => Gate::Z(q + k),
        Gate::S(q) => Gate::S(q + k),
        Gate::Sdg(q) => Gate::Sdg(q + k),
        Gate::T(q) => Gate::T(q + k),
        Gate::Tdg(q) => Gate::Tdg(q + k),
        Gate::Rz { qubit, theta } => Gate::Rz {
            qubit: qubit + k,
            theta: *theta,
        },
        Gate::Cz(a, b) => Gate::Cz(a + k, b + k),
        Gate::Ccz(a, b, c) => Gate::Ccz(a + k, b + k, c + k),
        Gate::Cx { control, target } => Gate::Cx {
            control: control + k,
            target: target + k,
        },
        Gate::Mcx {
            target,
            controls,
            polarities,
        } => Gate::Mcx {
            target: target + k,
            controls: controls.iter().map(|c| c + k).collect(),
            polarities: polarities.clone(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjoint_examples() {
        let c = Circuit::from_gates(1, [Gate::H(0)]).unwrap();
        assert_eq!(c.adjoint(), c);

        let c = Circuit::from_gates(1, [Gate::S(0), Gate::H(0)]).unwrap();
        assert_eq!(c.adjoint().gates(), &[Gate::H(0), Gate::Sdg(0)]);

        let c = Circuit::from_gates(2, [Gate::T(0), Gate::cx(0, 1)]).unwrap();
        assert_eq!(c.adjoint().adjoint(), c);
    }

    #[test]
    fn push_validates() {
        let mut c = Circuit::new(2);
        assert!(c.push(Gate::H(2)).is_err());
        assert!(c.is_empty());
        c.push(Gate::Cz(0, 1)).unwrap();
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn shifted_moves_every_index() {
        let c = Circuit::from_gates(
            2,
            [
                Gate::cx(0, 1),
                Gate::mcx(1, vec![0], vec![false]).unwrap(),
            ],
        )
        .unwrap();
        let s = c.shifted(1, 3).unwrap();
        assert_eq!(s.width(), 3);
        assert_eq!(s.gates()[0], Gate::cx(1, 2));
        assert!(c.shifted(2, 3).is_err());
    }
}
