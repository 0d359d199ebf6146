use std::collections::BTreeSet;

use rand::Rng;

use crate::error::{Error, Result};

/// A polynomial over F₂ of degree at most 3 with no constant term.
///
/// Each monomial is a strictly increasing list of 1 to 3 variable indices.
/// A constant term would only flip the sign of the gap, so it is not representable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyF2 {
    n_vars: usize,
    monomials: BTreeSet<Vec<usize>>,
}

impl PolyF2 {
    /// Builds a polynomial. Variables inside a monomial may come in any order;
    /// repeated variables, repeated monomials and degrees outside 1..=3 are rejected.
    pub fn new<I, M>(n_vars: usize, monomials: I) -> Result<Self>
    where
        I: IntoIterator<Item = M>,
        M: Into<Vec<usize>>,
    {
        let mut set = BTreeSet::new();
        for (i, m) in monomials.into_iter().enumerate() {
            let mut m: Vec<usize> = m.into();
            if m.is_empty() || m.len() > 3 {
                return Err(Error::InvalidPolynomial(format!(
                    "monomial {i} has degree {}, expected 1..=3",
                    m.len()
                )));
            }
            m.sort_unstable();
            if m.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidPolynomial(format!(
                    "monomial {i} repeats a variable"
                )));
            }
            if let Some(&v) = m.last().filter(|&&v| v >= n_vars) {
                return Err(Error::InvalidPolynomial(format!(
                    "monomial {i} uses x{v} but there are {n_vars} variables"
                )));
            }
            if !set.insert(m) {
                return Err(Error::InvalidPolynomial(format!(
                    "monomial {i} is a duplicate"
                )));
            }
        }
        Ok(PolyF2 {
            n_vars,
            monomials: set,
        })
    }

    pub fn zero(n_vars: usize) -> Self {
        PolyF2 {
            n_vars,
            monomials: BTreeSet::new(),
        }
    }

    /// A random polynomial: each of the possible monomials of degree ≤ 3 is
    /// drawn independently, `count` draws without replacement at most.
    pub fn random<R: Rng + ?Sized>(n_vars: usize, count: usize, rng: &mut R) -> Self {
        let mut set = BTreeSet::new();
        if n_vars == 0 {
            return PolyF2::zero(0);
        }
        for _ in 0..count {
            let degree = rng.gen_range(1..=3.min(n_vars));
            let mut m: Vec<usize> = Vec::with_capacity(degree);
            while m.len() < degree {
                let v = rng.gen_range(0..n_vars);
                if !m.contains(&v) {
                    m.push(v);
                }
            }
            m.sort_unstable();
            set.insert(m);
        }
        PolyF2 {
            n_vars,
            monomials: set,
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn monomials(&self) -> impl Iterator<Item = &[usize]> {
        self.monomials.iter().map(Vec::as_slice)
    }

    pub fn num_monomials(&self) -> usize {
        self.monomials.len()
    }

    /// f(x) where bit `i` of `x` is the value of variable `i`.
    pub fn eval(&self, x: u64) -> bool {
        self.monomials
            .iter()
            .filter(|m| m.iter().all(|&v| x >> v & 1 == 1))
            .count()
            % 2
            == 1
    }
}
