use rand::distributions::{Distribution as _, WeightedIndex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Probabilities must sum to one within this tolerance.
pub const NORMALIZATION_TOL: f64 = 1e-9;
/// One-sided slack on the `p_z ≤ 2^{-n}` bound.
pub const BOUND_SLACK: f64 = 1e-12;

/// Output distribution over `z ∈ {0,1}^{n+1}` of an instance with `n` mixed qubits.
///
/// Index `z` is read with the clean qubit as its most significant bit.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    n: usize,
    probs: Vec<f64>,
}

impl Distribution {
    pub fn new(n: usize, probs: Vec<f64>) -> Result<Self> {
        let expected = 1usize
            .checked_shl(n as u32 + 1)
            .ok_or_else(|| Error::InvalidDistribution(format!("n = {n} is too large")))?;
        if probs.len() != expected {
            return Err(Error::InvalidDistribution(format!(
                "expected {expected} entries for n = {n}, got {}",
                probs.len()
            )));
        }
        if let Some((z, p)) = probs
            .iter()
            .enumerate()
            .find(|(_, p)| !p.is_finite() || **p < 0.0)
        {
            return Err(Error::InvalidDistribution(format!(
                "entry {z} is {p}, expected a nonnegative number"
            )));
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > NORMALIZATION_TOL {
            return Err(Error::InvalidDistribution(format!(
                "entries sum to {total}, expected 1"
            )));
        }
        Ok(Distribution { n, probs })
    }

    pub fn uniform(n: usize) -> Self {
        let len = 1usize << (n + 1);
        Distribution {
            n,
            probs: vec![1.0 / len as f64; len],
        }
    }

    pub fn point_mass(n: usize, z: usize) -> Result<Self> {
        let mut probs = vec![0.0; 1usize << (n + 1)];
        *probs
            .get_mut(z)
            .ok_or_else(|| Error::InvalidDistribution(format!("outcome {z} out of range")))? = 1.0;
        Ok(Distribution { n, probs })
    }

    /// Number of maximally mixed qubits.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn prob(&self, z: usize) -> f64 {
        self.probs[z]
    }

    pub fn total(&self) -> f64 {
        self.probs.iter().sum()
    }

    pub fn max_prob(&self) -> f64 {
        self.probs.iter().copied().fold(0.0, f64::max)
    }

    /// `max_z p_z ≤ 2^{-n}` up to [`BOUND_SLACK`].
    pub fn is_anti_concentrated(&self) -> bool {
        self.max_prob() <= (-(self.n as f64)).exp2() + BOUND_SLACK
    }

    /// Draws `count` outcomes; identical seeds give identical lists.
    pub fn sample(&self, count: usize, seed: u64) -> Vec<usize> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let weights = WeightedIndex::new(&self.probs).expect("distribution has positive mass");
        (0..count).map(|_| weights.sample(&mut rng)).collect()
    }
}
