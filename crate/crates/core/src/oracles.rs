//! Brute-force reference values, computed without the state-vector simulator.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::circuit::{Circuit, Gate, IsingInstance, PolyF2};
use crate::error::{Error, Result};
use crate::simulator::Distribution;

pub const DEFAULT_MAX_GAP_VARS: usize = 24;
pub const MAX_ISING_SPINS: usize = 20;
pub const MAX_DENSITY_MIXED: usize = 6;

/// `gap(f) = Σ_x (−1)^{f(x)}` with the default size cap.
pub fn gap(f: &PolyF2) -> Result<i64> {
    gap_with_limit(f, DEFAULT_MAX_GAP_VARS)
}

/// Exhaustive gap, 64 assignments per machine word.
///
/// Lane `l` of a word holds the assignment whose low six variables are the bits
/// of `l`; the remaining variables are constant across the word.
pub fn gap_with_limit(f: &PolyF2, max_vars: usize) -> Result<i64> {
    let n = f.n_vars();
    if n > max_vars || n > 40 {
        return Err(Error::SizeLimit {
            what: "polynomial variables",
            value: n,
            limit: max_vars.min(40),
        });
    }
    const LANE_PATTERNS: [u64; 6] = [
        0xAAAA_AAAA_AAAA_AAAA,
        0xCCCC_CCCC_CCCC_CCCC,
        0xF0F0_F0F0_F0F0_F0F0,
        0xFF00_FF00_FF00_FF00,
        0xFFFF_0000_FFFF_0000,
        0xFFFF_FFFF_0000_0000,
    ];
    let low = n.min(6);
    let valid: u64 = if low == 6 { !0 } else { (1u64 << (1 << low)) - 1 };
    let blocks: u64 = 1 << (n - low);
    let monomials: Vec<&[usize]> = f.monomials().collect();

    let mut ones: u64 = 0;
    for h in 0..blocks {
        let var_word = |v: usize| -> u64 {
            if v < 6 {
                LANE_PATTERNS[v]
            } else if h >> (v - 6) & 1 == 1 {
                !0
            } else {
                0
            }
        };
        let word = monomials.iter().fold(0u64, |acc, m| {
            acc ^ m.iter().fold(!0u64, |w, &v| w & var_word(v))
        });
        ones += (word & valid).count_ones() as u64;
    }
    Ok((1i64 << n) - 2 * ones as i64)
}

/// `Z = Σ_{s∈{±1}ⁿ} exp(i[Σ_{j<k} θ_jk s_j s_k + Σ_j θ_j s_j])`, summed in
/// increasing configuration order with spin `j` read from bit `j` (0 ↦ +1).
pub fn ising_partition_function(m: &IsingInstance) -> Result<Complex64> {
    let n = m.n_spins();
    if n > MAX_ISING_SPINS {
        return Err(Error::SizeLimit {
            what: "Ising spins",
            value: n,
            limit: MAX_ISING_SPINS,
        });
    }
    let couplings: Vec<_> = m.couplings().collect();
    let fields: Vec<_> = m.fields().collect();
    let spin = |x: u64, j: usize| if x >> j & 1 == 0 { 1.0 } else { -1.0 };
    let mut z = Complex64::new(0.0, 0.0);
    for x in 0..1u64 << n {
        let angle: f64 = couplings
            .iter()
            .map(|&(j, k, t)| t * spin(x, j) * spin(x, k))
            .chain(fields.iter().map(|&(j, t)| t * spin(x, j)))
            .sum();
        z += Complex64::from_polar(1.0, angle);
    }
    Ok(z)
}

/// Dense matrix of one gate, built entry by entry from its definition.
/// Qubit 0 is the most significant index bit.
pub fn gate_matrix(g: &Gate, width: usize) -> DMatrix<Complex64> {
    let dim = 1usize << width;
    let bit = |idx: usize, q: usize| idx >> (width - 1 - q) & 1;
    let flip = |idx: usize, q: usize| idx ^ (1 << (width - 1 - q));
    let one = Complex64::new(1.0, 0.0);
    let phase_on = |q: usize, ph: Complex64| {
        DMatrix::from_fn(dim, dim, move |r, c| {
            if r != c {
                Complex64::new(0.0, 0.0)
            } else if bit(c, q) == 1 {
                ph
            } else {
                one
            }
        })
    };
    let permutation = |target: usize, fires: &dyn Fn(usize) -> bool| {
        DMatrix::from_fn(dim, dim, |r, c| {
            let image = if fires(c) { flip(c, target) } else { c };
            if r == image {
                one
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    };
    let pi = std::f64::consts::PI;
    match g {
        Gate::H(q) => DMatrix::from_fn(dim, dim, |r, c| {
            if r == c || r == flip(c, *q) {
                let sign = if bit(r, *q) == 1 && bit(c, *q) == 1 { -1.0 } else { 1.0 };
                Complex64::new(sign / 2f64.sqrt(), 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        }),
        Gate::X(q) => permutation(*q, &|_| true),
        Gate::Z(q) => phase_on(*q, Complex64::from_polar(1.0, pi)),
        Gate::S(q) => phase_on(*q, Complex64::from_polar(1.0, pi / 2.0)),
        Gate::Sdg(q) => phase_on(*q, Complex64::from_polar(1.0, -pi / 2.0)),
        Gate::T(q) => phase_on(*q, Complex64::from_polar(1.0, pi / 4.0)),
        Gate::Tdg(q) => phase_on(*q, Complex64::from_polar(1.0, -pi / 4.0)),
        Gate::Rz { qubit, theta } => DMatrix::from_fn(dim, dim, |r, c| {
            if r != c {
                Complex64::new(0.0, 0.0)
            } else if bit(c, *qubit) == 1 {
                Complex64::from_polar(1.0, theta / 2.0)
            } else {
                Complex64::from_polar(1.0, -theta / 2.0)
            }
        }),
        Gate::Cz(a, b) => DMatrix::from_fn(dim, dim, |r, c| match (r == c, bit(c, *a) & bit(c, *b)) {
            (false, _) => Complex64::new(0.0, 0.0),
            (true, 1) => -one,
            (true, _) => one,
        }),
        Gate::Ccz(a, b, d) => DMatrix::from_fn(dim, dim, |r, c| {
            match (r == c, bit(c, *a) & bit(c, *b) & bit(c, *d)) {
                (false, _) => Complex64::new(0.0, 0.0),
                (true, 1) => -one,
                (true, _) => one,
            }
        }),
        Gate::Cx { control, target } => permutation(*target, &|c| bit(c, *control) == 1),
        Gate::Mcx {
            target,
            controls,
            polarities,
        } => permutation(*target, &|c| {
            controls
                .iter()
                .zip(polarities)
                .all(|(&q, &p)| bit(c, q) == p as usize)
        }),
    }
}

/// Full unitary of a circuit as a product of dense gate matrices.
pub fn circuit_unitary(c: &Circuit) -> DMatrix<Complex64> {
    let dim = 1usize << c.width();
    c.gates()
        .iter()
        .fold(DMatrix::identity(dim, dim), |u, g| gate_matrix(g, c.width()) * u)
}

/// Diagonal of `U (|0⟩⟨0| ⊗ I/2ⁿ) U†`, by explicit matrix conjugation.
pub fn density_matrix_dqc1(u: &Circuit) -> Result<Distribution> {
    if u.width() == 0 {
        return Err(Error::Domain("DQC1 needs at least the clean qubit".into()));
    }
    let n = u.width() - 1;
    if n > MAX_DENSITY_MIXED {
        return Err(Error::SizeLimit {
            what: "mixed qubits for the density-matrix oracle",
            value: n,
            limit: MAX_DENSITY_MIXED,
        });
    }
    let dim = 1usize << u.width();
    let half = dim / 2;
    let weight = Complex64::new(1.0 / half as f64, 0.0);
    let rho = DMatrix::from_fn(dim, dim, |r, c| {
        if r == c && r < half {
            weight
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let unitary = circuit_unitary(u);
    let out = &unitary * rho * unitary.adjoint();
    Distribution::new(n, (0..dim).map(|z| out[(z, z)].re).collect())
}
