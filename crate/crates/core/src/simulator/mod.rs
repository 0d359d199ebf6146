//! Dense state-vector simulation of circuits and of the one-clean-qubit model.

mod distribution;
mod dqc1;
mod state;

pub use distribution::{Distribution, BOUND_SLACK, NORMALIZATION_TOL};
pub use dqc1::{
    amplitude_zero, bits_to_index, dqc1_distribution, dqc1_distribution_with_limit, f_value,
    f_value_index, format_bits, index_to_bits, parse_bits, DEFAULT_MAX_MIXED,
};
pub use state::{apply_circuit, StateVector, MAX_STATE_QUBITS};
