use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::simulator::Distribution;

/// A hypothetical classical sampler, described by how its output distribution
/// `q` departs from the true `p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SamplerModel {
    Exact,
    /// `q = (1−λ)p + λ·uniform`.
    Mixture { lambda: f64 },
    /// Moves `tv/2` of mass from the largest entries to the smallest ones,
    /// giving `Σ|p−q| = tv`.
    MassShift { tv: f64 },
}

impl SamplerModel {
    pub fn validate(&self) -> Result<()> {
        match *self {
            SamplerModel::Exact => Ok(()),
            SamplerModel::Mixture { lambda } if (0.0..=1.0).contains(&lambda) => Ok(()),
            SamplerModel::Mixture { lambda } => Err(Error::InvalidSampler(format!(
                "mixture weight {lambda} must lie in [0, 1]"
            ))),
            SamplerModel::MassShift { tv } if (0.0..=2.0).contains(&tv) => Ok(()),
            SamplerModel::MassShift { tv } => Err(Error::InvalidSampler(format!(
                "mass shift {tv} must lie in [0, 2]"
            ))),
        }
    }
}

impl fmt::Display for SamplerModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SamplerModel::Exact => write!(f, "exact"),
            SamplerModel::Mixture { lambda } => write!(f, "mixture:{lambda}"),
            SamplerModel::MassShift { tv } => write!(f, "mass_shift:{tv}"),
        }
    }
}

/// Parses a decimal or a fraction such as `1/36`.
pub fn parse_number(s: &str) -> Result<f64> {
    let bad = || Error::Domain(format!("cannot parse {s:?} as a number"));
    let value = match s.split_once('/') {
        Some((num, den)) => {
            let num: f64 = num.trim().parse().map_err(|_| bad())?;
            let den: f64 = den.trim().parse().map_err(|_| bad())?;
            num / den
        }
        None => s.trim().parse().map_err(|_| bad())?,
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(bad())
    }
}

impl FromStr for SamplerModel {
    type Err = Error;

    /// `exact`, `mixture:LAMBDA` or `mass_shift:TV` (`mass-shift` also accepted).
    fn from_str(s: &str) -> Result<Self> {
        let (kind, param) = match s.split_once(':') {
            Some((k, p)) => (k, Some(p)),
            None => (s, None),
        };
        let param = |name: &str| -> Result<f64> {
            param
                .ok_or_else(|| Error::InvalidSampler(format!("{name} needs a parameter")))
                .and_then(parse_number)
        };
        let model = match kind {
            "exact" if param_absent(s) => SamplerModel::Exact,
            "mixture" => SamplerModel::Mixture {
                lambda: param("mixture")?,
            },
            "mass_shift" | "mass-shift" => SamplerModel::MassShift {
                tv: param("mass_shift")?,
            },
            _ => return Err(Error::InvalidSampler(format!("unknown sampler {s:?}"))),
        };
        model.validate()?;
        Ok(model)
    }
}

fn param_absent(s: &str) -> bool {
    !s.contains(':')
}

/// The output distribution of the sampler model applied to `p`.
pub fn make_noisy_distribution(p: &Distribution, model: SamplerModel) -> Result<Distribution> {
    model.validate()?;
    match model {
        SamplerModel::Exact => Ok(p.clone()),
        SamplerModel::Mixture { lambda } => {
            let u = 1.0 / p.len() as f64;
            let probs = p.probs().iter().map(|&x| (1.0 - lambda) * x + lambda * u).collect();
            Distribution::new(p.n(), probs)
        }
        SamplerModel::MassShift { tv } => mass_shift(p, tv),
    }
}

/// Greedy shift of `tv/2` mass. Donors are taken largest first and receivers
/// smallest first (ties by index); receivers are capped at `2^{-n} + tv/2`.
fn mass_shift(p: &Distribution, tv: f64) -> Result<Distribution> {
    let amount = tv / 2.0;
    let mut q = p.probs().to_vec();
    if amount == 0.0 {
        return Ok(p.clone());
    }
    let cap = (-(p.n() as f64)).exp2() + amount;

    let mut order: Vec<usize> = (0..q.len()).collect();
    order.sort_by(|&a, &b| q[b].total_cmp(&q[a]).then(a.cmp(&b)));

    let mut is_donor = vec![false; q.len()];
    let mut remaining = amount;
    for &i in &order {
        if remaining <= 0.0 {
            break;
        }
        let take = q[i].min(remaining);
        if take > 0.0 {
            q[i] -= take;
            remaining -= take;
            is_donor[i] = true;
        }
    }
    if remaining > 1e-15 {
        return Err(Error::InvalidSampler(format!(
            "mass shift {tv} exceeds the available mass"
        )));
    }

    let mut remaining = amount;
    for &i in order.iter().rev() {
        if remaining <= 0.0 {
            break;
        }
        if is_donor[i] {
            continue;
        }
        let give = (cap - q[i]).max(0.0).min(remaining);
        q[i] += give;
        remaining -= give;
    }
    if remaining > 1e-15 {
        return Err(Error::InvalidSampler(format!(
            "mass shift {tv} is infeasible: receivers cannot absorb the mass under the cap"
        )));
    }
    Distribution::new(p.n(), q)
}

/// Stand-in for an approximate counter with relative error `eta`: returns
/// `q·(1+u)` with `u` uniform on `[−η, η]`, drawn from `seed`.
pub fn approximate_count(q: f64, eta: f64, seed: u64) -> Result<f64> {
    if !(0.0..1.0).contains(&eta) {
        return Err(Error::Domain(format!("eta = {eta} must lie in [0, 1)")));
    }
    if eta == 0.0 {
        return Ok(q);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let u: f64 = rng.gen_range(-eta..=eta);
    Ok(q * (1.0 + u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hardness::total_variation_distance;

    #[test]
    fn parsing() {
        assert_eq!("exact".parse::<SamplerModel>().unwrap(), SamplerModel::Exact);
        assert_eq!(
            "mixture:0.25".parse::<SamplerModel>().unwrap(),
            SamplerModel::Mixture { lambda: 0.25 }
        );
        assert_eq!(
            "mass_shift:1/36".parse::<SamplerModel>().unwrap(),
            SamplerModel::MassShift { tv: 1.0 / 36.0 }
        );
        assert!("mixture".parse::<SamplerModel>().is_err());
        assert!("mixture:2".parse::<SamplerModel>().is_err());
        assert!("exact:1".parse::<SamplerModel>().is_err());
        assert!("wobbly".parse::<SamplerModel>().is_err());
    }

    #[test]
    fn zero_noise_is_identity() {
        let p = Distribution::new(1, vec![0.1, 0.2, 0.3, 0.4]).unwrap();
        assert_eq!(make_noisy_distribution(&p, SamplerModel::Mixture { lambda: 0.0 }).unwrap(), p);
        assert_eq!(make_noisy_distribution(&p, SamplerModel::MassShift { tv: 0.0 }).unwrap(), p);
        assert_eq!(make_noisy_distribution(&p, SamplerModel::Exact).unwrap(), p);
    }

    #[test]
    fn mass_shift_on_identity_distribution() {
        let p = Distribution::new(2, vec![0.25, 0.25, 0.25, 0.25, 0.0, 0.0, 0.0, 0.0]).unwrap();
        let q = make_noisy_distribution(&p, SamplerModel::MassShift { tv: 1.0 / 36.0 }).unwrap();
        let tv = total_variation_distance(&p, &q).unwrap();
        assert!((tv - 1.0 / 36.0).abs() < 1e-15);
        assert!((q.prob(0) - (0.25 - 1.0 / 72.0)).abs() < 1e-15);
        assert!((q.prob(7) - 1.0 / 72.0).abs() < 1e-15 || (q.prob(4) - 1.0 / 72.0).abs() < 1e-15);
    }

    #[test]
    fn mass_shift_infeasible() {
        let p = Distribution::point_mass(0, 0).unwrap();
        // receivers are capped at 1 + 1 = 2, but the only non-donor can take it all
        assert!(make_noisy_distribution(&p, SamplerModel::MassShift { tv: 2.0 }).is_ok());
        let p = Distribution::uniform(0);
        assert!(make_noisy_distribution(&p, SamplerModel::MassShift { tv: 2.0 }).is_err());
    }

    #[test]
    fn approximate_count_contract() {
        assert_eq!(approximate_count(0.0, 0.1, 4).unwrap(), 0.0);
        assert_eq!(approximate_count(0.3, 0.0, 4).unwrap(), 0.3);
        for seed in 0..1000 {
            let v = approximate_count(0.5, 0.01, seed).unwrap();
            assert!((0.495..=0.505).contains(&v));
        }
        assert_eq!(approximate_count(0.5, 0.01, 8).unwrap(), approximate_count(0.5, 0.01, 8).unwrap());
        assert!(approximate_count(0.5, 1.0, 0).is_err());
    }

    #[test]
    fn fractions_parse() {
        assert_eq!(parse_number("1/4").unwrap(), 0.25);
        assert_eq!(parse_number("0.5").unwrap(), 0.5);
        assert!(parse_number("1/0").is_err());
        assert!(parse_number("x").is_err());
    }
}
