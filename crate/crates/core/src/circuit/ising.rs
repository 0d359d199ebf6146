use std::collections::BTreeMap;

use rand::Rng;

use crate::error::{Error, Result};

/// Spins with pairwise coupling angles and single-spin field angles, in radians.
///
/// Its partition function is the imaginary-angle sum
/// `Z = Σ_{s∈{±1}ⁿ} exp(i[Σ_{j<k} θ_jk s_j s_k + Σ_j θ_j s_j])`.
#[derive(Debug, Clone, PartialEq)]
pub struct IsingInstance {
    n_spins: usize,
    couplings: BTreeMap<(usize, usize), f64>,
    fields: BTreeMap<usize, f64>,
}

impl IsingInstance {
    pub fn new(
        n_spins: usize,
        couplings: impl IntoIterator<Item = (usize, usize, f64)>,
        fields: impl IntoIterator<Item = (usize, f64)>,
    ) -> Result<Self> {
        let mut cmap = BTreeMap::new();
        for (j, k, theta) in couplings {
            if j == k {
                return Err(Error::InvalidIsing(format!("self-coupling on spin {j}")));
            }
            if j.max(k) >= n_spins {
                return Err(Error::InvalidIsing(format!(
                    "coupling ({j},{k}) out of range for {n_spins} spins"
                )));
            }
            check_angle(theta)?;
            if cmap.insert((j.min(k), j.max(k)), theta).is_some() {
                return Err(Error::InvalidIsing(format!("duplicate coupling ({j},{k})")));
            }
        }
        let mut fmap = BTreeMap::new();
        for (j, theta) in fields {
            if j >= n_spins {
                return Err(Error::InvalidIsing(format!(
                    "field on spin {j} out of range for {n_spins} spins"
                )));
            }
            check_angle(theta)?;
            if fmap.insert(j, theta).is_some() {
                return Err(Error::InvalidIsing(format!("duplicate field on spin {j}")));
            }
        }
        Ok(IsingInstance {
            n_spins,
            couplings: cmap,
            fields: fmap,
        })
    }

    /// Random instance with up to `n_couplings` distinct coupled pairs and a
    /// field on every spin; angles uniform in [-π, π).
    pub fn random<R: Rng + ?Sized>(n_spins: usize, n_couplings: usize, rng: &mut R) -> Self {
        use std::f64::consts::PI;
        let mut couplings = BTreeMap::new();
        if n_spins >= 2 {
            for _ in 0..n_couplings {
                let j = rng.gen_range(0..n_spins);
                let mut k = rng.gen_range(0..n_spins - 1);
                if k >= j {
                    k += 1;
                }
                couplings.insert((j.min(k), j.max(k)), rng.gen_range(-PI..PI));
            }
        }
        let fields = (0..n_spins)
            .map(|j| (j, rng.gen_range(-PI..PI)))
            .collect();
        IsingInstance {
            n_spins,
            couplings,
            fields,
        }
    }

    pub fn n_spins(&self) -> usize {
        self.n_spins
    }

    /// Couplings as `(j, k, θ)` with `j < k`.
    pub fn couplings(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.couplings.iter().map(|(&(j, k), &t)| (j, k, t))
    }

    pub fn fields(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.fields.iter().map(|(&j, &t)| (j, t))
    }

    /// The same instance with every angle negated.
    pub fn negated(&self) -> Self {
        IsingInstance {
            n_spins: self.n_spins,
            couplings: self.couplings.iter().map(|(&p, &t)| (p, -t)).collect(),
            fields: self.fields.iter().map(|(&j, &t)| (j, -t)).collect(),
        }
    }
}

fn check_angle(theta: f64) -> Result<()> {
    if theta.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidIsing("angles must be finite".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_instances() {
        assert!(IsingInstance::new(2, [(0, 0, 1.0)], []).is_err());
        assert!(IsingInstance::new(2, [(0, 2, 1.0)], []).is_err());
        assert!(IsingInstance::new(2, [], [(2, 1.0)]).is_err());
        assert!(IsingInstance::new(2, [(0, 1, 1.0), (1, 0, 2.0)], []).is_err());
        assert!(IsingInstance::new(2, [(0, 1, f64::NAN)], []).is_err());
    }

    #[test]
    fn pairs_are_normalized() {
        let m = IsingInstance::new(3, [(2, 0, 0.5)], [(1, 0.25)]).unwrap();
        assert_eq!(m.couplings().collect::<Vec<_>>(), vec![(0, 2, 0.5)]);
        assert_eq!(m.negated().fields().next(), Some((1, -0.25)));
    }
}
