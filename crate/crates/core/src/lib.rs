//! Exact simulation of the one-clean-qubit (DQC1) model and numerical checks of
//! its sampling-hardness argument at desk scale.
//!
//! * [`circuit`]: gate set, circuits, F₂ polynomials, Ising instances, IQP compilers
//!   and the JSON file formats.
//! * [`simulator`]: dense state vectors, `f(z,U)`, `⟨0ⁿ|C|0ⁿ⟩` and the DQC1 output
//!   distribution `p_z(U)`.
//! * [`oracles`]: brute-force gap, Ising partition function and a dense
//!   density-matrix evaluation of `p_z(U)`.
//! * [`hardness`]: worst-case embeddings, the postselection pair, noisy sampler
//!   models and the Markov / heavy-set / success-fraction chain.
//!
//! Qubit 0 is the clean qubit and the most significant bit of every basis index.

pub mod circuit;
pub mod error;
pub mod hardness;
pub mod oracles;
pub mod rng;
pub mod simulator;

pub use circuit::{Circuit, Gate, IsingInstance, PolyF2};
pub use error::{Error, Result};
pub use hardness::{ChainReport, Ensemble, ErrorBudget, SamplerModel};
pub use simulator::{Distribution, StateVector};
