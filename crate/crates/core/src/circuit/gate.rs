use crate::error::{Error, Result};

/// A single gate of the native gate set.
///
/// Phase conventions: `S = diag(1, i)`, `T = diag(1, e^{iπ/4})` and
/// `Rz(θ) = diag(e^{-iθ/2}, e^{iθ/2})`. `Mcx` flips `target` when every
/// control matches its polarity bit (`false` fires on |0⟩, `true` on |1⟩).
#[derive(Debug, Clone, PartialEq)]
pub enum Gate {
    H(usize),
    X(usize),
    Z(usize),
    S(usize),
    Sdg(usize),
    T(usize),
    Tdg(usize),
    Rz { qubit: usize, theta: f64 },
    Cz(usize, usize),
    Ccz(usize, usize, usize),
    Cx { control: usize, target: usize },
    Mcx {
        target: usize,
        controls: Vec<usize>,
        polarities: Vec<bool>,
    },
}

impl Gate {
    pub fn cx(control: usize, target: usize) -> Self {
        Gate::Cx { control, target }
    }

    pub fn rz(qubit: usize, theta: f64) -> Self {
        Gate::Rz { qubit, theta }
    }

    /// Multi-controlled X. `polarities` must carry one bit per control.
    pub fn mcx(target: usize, controls: Vec<usize>, polarities: Vec<bool>) -> Result<Self> {
        if controls.len() != polarities.len() {
            return Err(Error::InvalidGate(format!(
                "MCX has {} controls but {} polarity bits",
                controls.len(),
                polarities.len()
            )));
        }
        Ok(Gate::Mcx {
            target,
            controls,
            polarities,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Gate::H(_) => "H",
            Gate::X(_) => "X",
            Gate::Z(_) => "Z",
            Gate::S(_) => "S",
            Gate::Sdg(_) => "SDG",
            Gate::T(_) => "T",
            Gate::Tdg(_) => "TDG",
            Gate::Rz { .. } => "RZ",
            Gate::Cz(..) => "CZ",
            Gate::Ccz(..) => "CCZ",
            Gate::Cx { .. } => "CX",
            Gate::Mcx { .. } => "MCX",
        }
    }

    /// Every qubit the gate touches, targets first.
    pub fn qubits(&self) -> Vec<usize> {
        match self {
            Gate::H(q)
            | Gate::X(q)
            | Gate::Z(q)
            | Gate::S(q)
            | Gate::Sdg(q)
            | Gate::T(q)
            | Gate::Tdg(q)
            | Gate::Rz { qubit: q, .. } => vec![*q],
            Gate::Cz(a, b) => vec![*a, *b],
            Gate::Ccz(a, b, c) => vec![*a, *b, *c],
            Gate::Cx { control, target } => vec![*target, *control],
            Gate::Mcx {
                target, controls, ..
            } => std::iter::once(*target)
                .chain(controls.iter().copied())
                .collect(),
        }
    }

    /// True for gates that are diagonal in the computational basis.
    pub fn is_diagonal(&self) -> bool {
        matches!(
            self,
            Gate::Z(_)
                | Gate::S(_)
                | Gate::Sdg(_)
                | Gate::T(_)
                | Gate::Tdg(_)
                | Gate::Rz { .. }
                | Gate::Cz(..)
                | Gate::Ccz(..)
        )
    }

    pub fn inverse(&self) -> Gate {
        match self {
            Gate::S(q) => Gate::Sdg(*q),
            Gate::Sdg(q) => Gate::S(*q),
            Gate::T(q) => Gate::Tdg(*q),
            Gate::Tdg(q) => Gate::T(*q),
            Gate::Rz { qubit, theta } => Gate::Rz {
                qubit: *qubit,
                theta: -theta,
            },
            other => other.clone(),
        }
    }

    pub fn validate(&self, width: usize) -> Result<()> {
        let qubits = self.qubits();
        for (i, &q) in qubits.iter().enumerate() {
            if q >= width {
                return Err(Error::InvalidGate(format!(
                    "{} acts on qubit {q} but the circuit has {width} qubits",
                    self.name()
                )));
            }
            if qubits[..i].contains(&q) {
                return Err(Error::InvalidGate(format!(
                    "{} uses qubit {q} more than once",
                    self.name()
                )));
            }
        }
        match self {
            Gate::Mcx {
                controls,
                polarities,
                ..
            } if controls.len() != polarities.len() => Err(Error::InvalidGate(format!(
                "MCX has {} controls but {} polarity bits",
                controls.len(),
                polarities.len()
            ))),
            Gate::Rz { theta, .. } if !theta.is_finite() => {
                Err(Error::InvalidGate("RZ angle must be finite".into()))
            }
            _ => Ok(()),
        }
    }
}
