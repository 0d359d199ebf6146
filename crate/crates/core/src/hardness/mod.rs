//! Worst-case constructions and the proof chain of the sampling-hardness
//! argument, as executable checks.

mod bounds;
mod budget;
mod chain;
mod embed;
mod ensemble;
mod sampler;

pub use bounds::{
    check_multiplicative_error, check_multiplicative_error_strict, l1_distance,
    postselection_thresholds, ratio_bounds_check, total_variation_distance, RatioCheck,
};
pub use budget::{success_fraction_bound, ErrorBudget};
pub use chain::{heavy_set_fraction, markov_outlier_fraction, verify_chain, BoundCheck, ChainReport};
pub use embed::{build_postselection_pair, build_worst_case_embedding};
pub use ensemble::{
    random_circuit, random_ensemble, random_htcx_circuit, Ensemble, EnsembleKind, EnsembleSpec,
};
pub use sampler::{approximate_count, make_noisy_distribution, parse_number, SamplerModel};
