use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{build_postselection_pair, build_worst_case_embedding};
use crate::circuit::format::read_circuit;
use crate::circuit::{compile_iqp_from_ising, compile_iqp_from_poly, Circuit, Gate, IsingInstance, PolyF2};
use crate::error::{Error, Result};
use crate::rng::derive_seed;

/// A finite family of `(n+1)`-qubit circuits standing in for the unitary family
/// over which the hardness statements average.
#[derive(Debug, Clone, PartialEq)]
pub struct Ensemble {
    n: usize,
    circuits: Vec<Circuit>,
}

impl Ensemble {
    pub fn new(circuits: Vec<Circuit>) -> Result<Self> {
        let first = circuits
            .first()
            .ok_or_else(|| Error::InvalidEnsemble("ensemble is empty".into()))?;
        let width = first.width();
        if width == 0 {
            return Err(Error::InvalidEnsemble("circuits need a clean qubit".into()));
        }
        if let Some((i, c)) = circuits.iter().enumerate().find(|(_, c)| c.width() != width) {
            return Err(Error::InvalidEnsemble(format!(
                "circuit {i} has {} qubits, expected {width}",
                c.width()
            )));
        }
        Ok(Ensemble {
            n: width - 1,
            circuits,
        })
    }

    /// Number of mixed qubits.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn circuits(&self) -> &[Circuit] {
        &self.circuits
    }

    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }
}

/// Built-in random generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnsembleKind {
    /// Worst-case embeddings of IQP circuits from random degree-3 polynomials;
    /// `depth` is the number of monomial draws.
    Iqp,
    /// Worst-case embeddings of IQP circuits from random Ising instances;
    /// `depth` is the number of coupling draws.
    Ising,
    /// Random `{H, T, CX}` circuits on all `n+1` qubits with `depth` gates.
    Htcx,
    /// Alternating `U₁`, `U₂` postselection circuits built from random
    /// `{H, T, CX}` circuits `V` on `n` qubits.
    Postselect,
}

impl EnsembleKind {
    pub const ALL: [EnsembleKind; 4] = [
        EnsembleKind::Iqp,
        EnsembleKind::Ising,
        EnsembleKind::Htcx,
        EnsembleKind::Postselect,
    ];

    fn name(&self) -> &'static str {
        match self {
            EnsembleKind::Iqp => "iqp",
            EnsembleKind::Ising => "ising",
            EnsembleKind::Htcx => "htcx",
            EnsembleKind::Postselect => "postselect",
        }
    }
}

impl FromStr for EnsembleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        EnsembleKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidEnsemble(format!("unknown ensemble kind {s:?}")))
    }
}

impl fmt::Display for EnsembleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `random:<kind>:<n>:<count>:<depth>:<seed>` or `dir:<path>`.
#[derive(Debug, Clone, PartialEq)]
pub enum EnsembleSpec {
    Random {
        kind: EnsembleKind,
        n: usize,
        count: usize,
        depth: usize,
        seed: u64,
    },
    Dir(PathBuf),
}

impl FromStr for EnsembleSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(path) = s.strip_prefix("dir:") {
            return Ok(EnsembleSpec::Dir(PathBuf::from(path)));
        }
        let parts: Vec<&str> = s.split(':').collect();
        let [tag, kind, n, count, depth, seed] = parts[..] else {
            return Err(Error::InvalidEnsemble(format!(
                "expected random:<kind>:<n>:<count>:<depth>:<seed> or dir:<path>, got {s:?}"
            )));
        };
        if tag != "random" {
            return Err(Error::InvalidEnsemble(format!("unknown ensemble source {tag:?}")));
        }
        let num = |field: &str, v: &str| -> Result<u64> {
            v.parse()
                .map_err(|_| Error::InvalidEnsemble(format!("{field} {v:?} is not an integer")))
        };
        Ok(EnsembleSpec::Random {
            kind: kind.parse()?,
            n: num("n", n)? as usize,
            count: num("count", count)? as usize,
            depth: num("depth", depth)? as usize,
            seed: num("seed", seed)?,
        })
    }
}

impl fmt::Display for EnsembleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnsembleSpec::Random {
                kind,
                n,
                count,
                depth,
                seed,
            } => write!(f, "random:{kind}:{n}:{count}:{depth}:{seed}"),
            EnsembleSpec::Dir(p) => write!(f, "dir:{}", p.display()),
        }
    }
}

impl EnsembleSpec {
    pub fn build(&self) -> Result<Ensemble> {
        match *self {
            EnsembleSpec::Random {
                kind,
                n,
                count,
                depth,
                seed,
            } => random_ensemble(kind, n, count, depth, seed),
            EnsembleSpec::Dir(ref path) => load_dir(path),
        }
    }
}

fn load_dir(path: &std::path::Path) -> Result<Ensemble> {
    let io = |e: std::io::Error| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    };
    let mut files: Vec<PathBuf> = std::fs::read_dir(path)
        .map_err(io)?
        .map(|entry| entry.map(|e| e.path()).map_err(io))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    files.sort();
    let circuits = files.iter().map(read_circuit).collect::<Result<Vec<_>>>()?;
    Ensemble::new(circuits)
}

/// Random circuit over `{H, T, CX}` with `depth` gates.
pub fn random_htcx_circuit<R: Rng + ?Sized>(width: usize, depth: usize, rng: &mut R) -> Circuit {
    let mut c = Circuit::new(width);
    if width == 0 {
        return c;
    }
    let kinds = if width >= 2 { 3 } else { 2 };
    for _ in 0..depth {
        let q = rng.gen_range(0..width);
        let g = match rng.gen_range(0..kinds) {
            0 => Gate::H(q),
            1 => Gate::T(q),
            _ => {
                let mut t = rng.gen_range(0..width - 1);
                if t >= q {
                    t += 1;
                }
                Gate::cx(q, t)
            }
        };
        c.push(g).expect("generated gate is valid");
    }
    c
}

/// Random circuit drawing from every gate kind, including anti-controlled MCX.
pub fn random_circuit<R: Rng + ?Sized>(width: usize, depth: usize, rng: &mut R) -> Circuit {
    use std::f64::consts::PI;
    let mut c = Circuit::new(width);
    if width == 0 {
        return c;
    }
    for _ in 0..depth {
        let mut qubits: Vec<usize> = (0..width).collect();
        // partial shuffle for distinct qubits
        for i in 0..width.min(4) {
            let j = rng.gen_range(i..width);
            qubits.swap(i, j);
        }
        let max_kind = match width {
            1 => 8,
            2 => 10,
            _ => 12,
        };
        let g = match rng.gen_range(0..max_kind) {
            0 => Gate::H(qubits[0]),
            1 => Gate::X(qubits[0]),
            2 => Gate::Z(qubits[0]),
            3 => Gate::S(qubits[0]),
            4 => Gate::Sdg(qubits[0]),
            5 => Gate::T(qubits[0]),
            6 => Gate::Tdg(qubits[0]),
            7 => Gate::rz(qubits[0], rng.gen_range(-PI..PI)),
            8 => Gate::Cz(qubits[0], qubits[1]),
            9 => Gate::cx(qubits[0], qubits[1]),
            10 => Gate::Ccz(qubits[0], qubits[1], qubits[2]),
            _ => {
                let k = rng.gen_range(1..width.min(4));
                let controls = qubits[1..=k].to_vec();
                let polarities = (0..k).map(|_| rng.gen_bool(0.5)).collect();
                Gate::mcx(qubits[0], controls, polarities).expect("polarity count matches")
            }
        };
        c.push(g).expect("generated gate is valid");
    }
    c
}

pub fn random_ensemble(
    kind: EnsembleKind,
    n: usize,
    count: usize,
    depth: usize,
    seed: u64,
) -> Result<Ensemble> {
    let min_n = if kind == EnsembleKind::Postselect { 2 } else { 1 };
    if n < min_n {
        return Err(Error::InvalidEnsemble(format!(
            "{kind} ensembles need n ≥ {min_n}, got {n}"
        )));
    }
    let circuits = (0..count)
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, i as u64, 0));
            match kind {
                EnsembleKind::Iqp => {
                    let f = PolyF2::random(n, depth, &mut rng);
                    build_worst_case_embedding(&compile_iqp_from_poly(&f)?)
                }
                EnsembleKind::Ising => {
                    let m = IsingInstance::random(n, depth, &mut rng);
                    build_worst_case_embedding(&compile_iqp_from_ising(&m)?)
                }
                EnsembleKind::Htcx => Ok(random_htcx_circuit(n + 1, depth, &mut rng)),
                EnsembleKind::Postselect => {
                    let v = random_htcx_circuit(n, depth, &mut rng);
                    let (u1, u2) = build_postselection_pair(&v)?;
                    Ok(if i % 2 == 0 { u1 } else { u2 })
                }
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ensemble::new(circuits)
}
