//! The proof chain as measurements over an ensemble: Markov outliers, the heavy
//! set, and the fraction of pairs on which an approximate counter applied to a
//! noisy sampler recovers `f(z,U)` within multiplicative error 1/2.

use rayon::prelude::*;
use serde::Serialize;

use super::{
    approximate_count, check_multiplicative_error_strict, make_noisy_distribution,
    total_variation_distance, Ensemble, ErrorBudget, SamplerModel,
};
use crate::error::{Error, Result};
use crate::rng::derive_seed;
use crate::simulator::{dqc1_distribution, BOUND_SLACK};

/// An observed fraction next to the bound it is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundCheck {
    pub fraction: f64,
    pub bound: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainReport {
    pub n: usize,
    pub ensemble_size: usize,
    pub pairs: usize,
    pub eps: f64,
    pub delta: f64,
    pub eta: f64,
    pub sampler: String,
    pub seed: u64,
    pub max_tv: f64,
    pub max_scaled_prob: f64,
    pub anti_concentration_pass: bool,
    pub markov_threshold: f64,
    pub markov_fraction: f64,
    pub markov_bound: f64,
    pub markov_pass: bool,
    pub heavy_fraction: f64,
    pub heavy_bound: f64,
    pub heavy_pass: bool,
    pub success_fraction: f64,
    pub success_bound: f64,
    pub success_pass: bool,
    pub multiplicative_slack: f64,
    pub positive_pairs: usize,
    pub positive_successes: usize,
    pub passed: bool,
}

impl ChainReport {
    pub fn budget(&self) -> ErrorBudget {
        ErrorBudget {
            eps: self.eps,
            delta: self.delta,
            eta: self.eta,
        }
    }

    /// One `key=value` line per field, in declaration order.
    pub fn to_key_value(&self) -> String {
        let value = serde_json::to_value(self).expect("report is serializable");
        let mut out = String::new();
        for (k, v) in value.as_object().expect("report is an object") {
            let v = match v {
                serde_json::Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{k}={v}\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }
}

#[derive(Debug, Default, Clone, Copy)]
struct CircuitStats {
    pairs: usize,
    markov_outliers: usize,
    heavy: usize,
    successes: usize,
    positive: usize,
    positive_successes: usize,
    tv: f64,
    max_scaled_prob: f64,
    anti_concentrated: bool,
}

fn analyze(
    index: usize,
    u: &crate::circuit::Circuit,
    sampler: SamplerModel,
    budget: &ErrorBudget,
    seed: u64,
) -> Result<CircuitStats> {
    let p = dqc1_distribution(u)?;
    let n = p.n();
    let q = make_noisy_distribution(&p, sampler)
        .map_err(|e| Error::InvalidSampler(format!("circuit {index}: {e}")))?;
    let tv = total_variation_distance(&p, &q)?;
    if tv > budget.eps + BOUND_SLACK {
        return Err(Error::InvalidSampler(format!(
            "circuit {index}: sampler {sampler} has total variation {tv}, above eps = {}",
            budget.eps
        )));
    }
    let scale = (n as f64).exp2();
    let threshold = budget.markov_threshold(n);
    let mut stats = CircuitStats {
        pairs: p.len(),
        tv,
        max_scaled_prob: p.max_prob() * scale,
        anti_concentrated: p.is_anti_concentrated(),
        ..Default::default()
    };
    for (z, (&pz, &qz)) in p.probs().iter().zip(q.probs()).enumerate() {
        if (pz - qz).abs() >= threshold {
            stats.markov_outliers += 1;
        }
        if threshold <= pz / 3.0 {
            stats.heavy += 1;
        }
        let f = pz * scale;
        let estimate = approximate_count(qz, budget.eta, derive_seed(seed, index as u64, z as u64))?;
        let ok = check_multiplicative_error_strict(estimate * scale, f, 0.5);
        stats.successes += ok as usize;
        if f > 0.0 {
            stats.positive += 1;
            stats.positive_successes += ok as usize;
        }
    }
    Ok(stats)
}

/// Per-circuit statistics in ensemble order. Circuits are processed in
/// parallel; the collected order does not depend on the worker count.
fn analyze_all(
    ens: &Ensemble,
    sampler: SamplerModel,
    budget: &ErrorBudget,
    seed: u64,
) -> Result<Vec<CircuitStats>> {
    ens.circuits()
        .par_iter()
        .enumerate()
        .map(|(i, u)| analyze(i, u, sampler, budget, seed))
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

fn total<F: Fn(&CircuitStats) -> usize>(stats: &[CircuitStats], f: F) -> usize {
    stats.iter().map(f).sum()
}

/// Fraction of `(z, U)` with `|p_z − q_z| ≥ ε/(2^{n+1}δ)`, checked against `δ`.
/// Fails with an error if the sampler exceeds the total-variation budget on any circuit.
pub fn markov_outlier_fraction(
    ens: &Ensemble,
    sampler: SamplerModel,
    budget: &ErrorBudget,
) -> Result<BoundCheck> {
    let stats = analyze_all(ens, sampler, budget, 0)?;
    let fraction = total(&stats, |s| s.markov_outliers) as f64 / total(&stats, |s| s.pairs) as f64;
    Ok(BoundCheck {
        fraction,
        bound: budget.delta,
        passed: fraction <= budget.delta,
    })
}

/// Fraction of `(z, U)` with `ε/(2^{n+1}δ) ≤ p_z(U)/3`, which must strictly
/// exceed `(1−3ε/δ)/(2−3ε/δ)` for every ensemble.
pub fn heavy_set_fraction(ens: &Ensemble, budget: &ErrorBudget) -> Result<BoundCheck> {
    let stats = analyze_all(ens, SamplerModel::Exact, budget, 0)?;
    let fraction = total(&stats, |s| s.heavy) as f64 / total(&stats, |s| s.pairs) as f64;
    let bound = budget.heavy_set_bound();
    Ok(BoundCheck {
        fraction,
        bound,
        passed: fraction > bound,
    })
}

/// Runs the full chain. A pair succeeds when the counter's estimate `q̃` gives
/// `|q̃·2ⁿ − f(z,U)| < f(z,U)/2`, with `f = 0` succeeding only on `q̃ = 0`.
pub fn verify_chain(
    ens: &Ensemble,
    sampler: SamplerModel,
    budget: &ErrorBudget,
    seed: u64,
) -> Result<ChainReport> {
    let slack = budget.multiplicative_slack();
    if slack >= 0.5 {
        return Err(Error::InvalidBudget(format!(
            "eta = {} gives relative slack {slack} on good pairs, which must stay below 1/2",
            budget.eta
        )));
    }
    let stats = analyze_all(ens, sampler, budget, seed)?;
    let pairs = total(&stats, |s| s.pairs);
    let frac = |count: usize| count as f64 / pairs as f64;

    let markov_fraction = frac(total(&stats, |s| s.markov_outliers));
    let heavy_fraction = frac(total(&stats, |s| s.heavy));
    let success_fraction = frac(total(&stats, |s| s.successes));
    let heavy_bound = budget.heavy_set_bound();
    let success_bound = budget.success_bound();

    let markov_pass = markov_fraction <= budget.delta;
    let heavy_pass = heavy_fraction > heavy_bound;
    let success_pass = success_fraction > success_bound;
    let anti_concentration_pass = stats.iter().all(|s| s.anti_concentrated);

    Ok(ChainReport {
        n: ens.n(),
        ensemble_size: ens.len(),
        pairs,
        eps: budget.eps,
        delta: budget.delta,
        eta: budget.eta,
        sampler: sampler.to_string(),
        seed,
        max_tv: stats.iter().map(|s| s.tv).fold(0.0, f64::max),
        max_scaled_prob: stats.iter().map(|s| s.max_scaled_prob).fold(0.0, f64::max),
        anti_concentration_pass,
        markov_threshold: budget.markov_threshold(ens.n()),
        markov_fraction,
        markov_bound: budget.delta,
        markov_pass,
        heavy_fraction,
        heavy_bound,
        heavy_pass,
        success_fraction,
        success_bound,
        success_pass,
        multiplicative_slack: slack,
        positive_pairs: total(&stats, |s| s.positive),
        positive_successes: total(&stats, |s| s.positive_successes),
        passed: markov_pass && heavy_pass && success_pass && anti_concentration_pass,
    })
}
