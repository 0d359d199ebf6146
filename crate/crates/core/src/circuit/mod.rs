//! Circuit representation, counting objects and their IQP compilers.

mod circuit;
mod compile;
pub mod format;
mod gate;
mod ising;
mod poly;

pub use circuit::Circuit;
pub use compile::{compile_iqp_from_ising, compile_iqp_from_poly};
pub use format::{parse_circuit, serialize_circuit};
pub use gate::Gate;
pub use ising::IsingInstance;
pub use poly::PolyF2;
