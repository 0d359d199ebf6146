use serde::Serialize;

use crate::error::{Error, Result};

/// Constants threading the sampling-hardness argument.
///
/// `eps` is the total-variation budget (un-halved L1), `delta` the Markov
/// parameter and `eta` the relative error of the approximate counter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ErrorBudget {
    pub eps: f64,
    pub delta: f64,
    pub eta: f64,
}

impl ErrorBudget {
    pub const DEFAULT_EPS: f64 = 1.0 / 36.0;
    pub const DEFAULT_DELTA: f64 = 1.0 / 6.0;
    pub const DEFAULT_ETA: f64 = 0.01;

    pub fn new(eps: f64, delta: f64, eta: f64) -> Result<Self> {
        if !(eps > 0.0 && eps.is_finite()) {
            return Err(Error::InvalidBudget(format!("eps = {eps} must be positive")));
        }
        if !(delta > 0.0 && delta < 1.0) {
            return Err(Error::InvalidBudget(format!("delta = {delta} must lie in (0, 1)")));
        }
        if !(0.0..1.0).contains(&eta) {
            return Err(Error::InvalidBudget(format!("eta = {eta} must lie in [0, 1)")));
        }
        if 3.0 * eps / delta >= 1.0 {
            return Err(Error::InvalidBudget(format!(
                "3·eps/delta = {} must be below 1",
                3.0 * eps / delta
            )));
        }
        Ok(ErrorBudget { eps, delta, eta })
    }

    /// `3ε/δ`.
    pub fn ratio(&self) -> f64 {
        3.0 * self.eps / self.delta
    }

    /// Additive error `ε / (2^{n+1} δ)` beyond which a pair counts as a Markov outlier.
    pub fn markov_threshold(&self, n: usize) -> f64 {
        self.eps / ((n as f64 + 1.0).exp2() * self.delta)
    }

    /// Lower bound `(1 − 3ε/δ)/(2 − 3ε/δ)` on the heavy-set fraction.
    pub fn heavy_set_bound(&self) -> f64 {
        let r = self.ratio();
        (1.0 - r) / (2.0 - r)
    }

    /// `F = 1 − δ − 1/(2 − 3ε/δ)`.
    pub fn success_bound(&self) -> f64 {
        1.0 - self.delta - 1.0 / (2.0 - self.ratio())
    }

    /// Relative error guaranteed on good pairs: `η + (1 + η)/3`.
    pub fn multiplicative_slack(&self) -> f64 {
        self.eta + (1.0 + self.eta) / 3.0
    }
}

impl Default for ErrorBudget {
    fn default() -> Self {
        ErrorBudget {
            eps: Self::DEFAULT_EPS,
            delta: Self::DEFAULT_DELTA,
            eta: Self::DEFAULT_ETA,
        }
    }
}

/// `F = 1 − δ − 1/(2 − 3ε/δ)`; a nonpositive result means the bound is vacuous.
pub fn success_fraction_bound(eps: f64, delta: f64) -> Result<f64> {
    if !(eps >= 0.0 && eps.is_finite()) {
        return Err(Error::Domain(format!("eps = {eps} must be nonnegative")));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::Domain(format!("delta = {delta} must lie in (0, 1)")));
    }
    let r = 3.0 * eps / delta;
    if r >= 1.0 {
        return Err(Error::Domain(format!("3·eps/delta = {r} must be below 1")));
    }
    Ok(1.0 - delta - 1.0 / (2.0 - r))
}
