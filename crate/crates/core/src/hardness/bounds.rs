use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::simulator::Distribution;

/// `Σ_z |p_z − q_z|`. This is the un-halved L1 distance, so disjoint
/// distributions are at distance 2.
pub fn total_variation_distance(p: &Distribution, q: &Distribution) -> Result<f64> {
    l1_distance(p.probs(), q.probs())
}

pub fn l1_distance(p: &[f64], q: &[f64]) -> Result<f64> {
    if p.len() != q.len() {
        return Err(Error::Domain(format!(
            "distributions have {} and {} entries",
            p.len(),
            q.len()
        )));
    }
    Ok(p.iter().zip(q).map(|(a, b)| (a - b).abs()).sum())
}

/// `|estimate − truth| ≤ eps · truth`.
pub fn check_multiplicative_error(estimate: f64, truth: f64, eps: f64) -> bool {
    (estimate - truth).abs() <= eps * truth
}

/// `|estimate − truth| < eps · truth`, reading the zero case as exact: a zero
/// truth is matched only by a zero estimate.
pub fn check_multiplicative_error_strict(estimate: f64, truth: f64, eps: f64) -> bool {
    if truth == 0.0 {
        estimate == 0.0
    } else {
        (estimate - truth).abs() < eps * truth
    }
}

/// Outcome of [`ratio_bounds_check`].
#[derive(Debug, Clone, PartialEq)]
pub struct RatioCheck {
    /// `(1−ε)/(1+ε) · f2/f1`
    pub lower: f64,
    /// `(1+ε)/(1−ε) · f2/f1`
    pub upper: f64,
    pub trials: usize,
    pub violations: usize,
    pub min_observed: f64,
    pub max_observed: f64,
}

impl RatioCheck {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Relative slack for rounding when `a` and `b` sit exactly on their interval ends.
const RATIO_ROUNDING: f64 = 1e-12;

/// Draws estimates `a`, `b` within relative error `eps` of `f1`, `f2` (interval
/// ends included with probability 1/4 each) and checks that `b/a` stays inside
/// `[(1−ε)/(1+ε), (1+ε)/(1−ε)] · f2/f1`.
pub fn ratio_bounds_check(
    f1: f64,
    f2: f64,
    eps: f64,
    trials: usize,
    seed: u64,
) -> Result<RatioCheck> {
    if !(f1 > 0.0 && f1.is_finite()) {
        return Err(Error::Domain(format!("f1 = {f1} must be positive")));
    }
    if !(f2 >= 0.0 && f2.is_finite()) {
        return Err(Error::Domain(format!("f2 = {f2} must be nonnegative")));
    }
    if !(0.0..1.0).contains(&eps) {
        return Err(Error::Domain(format!("eps = {eps} must lie in [0, 1)")));
    }
    let ratio = f2 / f1;
    let lower = (1.0 - eps) / (1.0 + eps) * ratio;
    let upper = (1.0 + eps) / (1.0 - eps) * ratio;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = |f: f64| -> f64 {
        let u = match rng.gen_range(0..4) {
            0 => -1.0,
            1 => 1.0,
            _ => rng.gen_range(-1.0..=1.0),
        };
        f * (1.0 + eps * u)
    };
    let mut check = RatioCheck {
        lower,
        upper,
        trials,
        violations: 0,
        min_observed: f64::INFINITY,
        max_observed: f64::NEG_INFINITY,
    };
    for _ in 0..trials {
        let a = draw(f1);
        let b = draw(f2);
        let r = b / a;
        check.min_observed = check.min_observed.min(r);
        check.max_observed = check.max_observed.max(r);
        if r < lower * (1.0 - RATIO_ROUNDING) || r > upper * (1.0 + RATIO_ROUNDING) {
            check.violations += 1;
        }
    }
    Ok(check)
}

/// Decision thresholds on `b/a` for a postselected language with error `2^{-r}`:
/// accepting instances give `b/a ≥ (1−ε)/(1+ε)·(1−2^{-r})`, rejecting ones give
/// `b/a ≤ (1+ε)/(1−ε)·2^{-r}`.
pub fn postselection_thresholds(eps: f64, r: u32) -> (f64, f64) {
    let err = (-(r as f64)).exp2();
    (
        (1.0 - eps) / (1.0 + eps) * (1.0 - err),
        (1.0 + eps) / (1.0 - eps) * err,
    )
}
