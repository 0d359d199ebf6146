//! JSON file formats for circuits, polynomials and Ising instances.
//!
//! ```text
//! circuit: {"qubits": m, "gates": [{"g": NAME, "t": [..], "c": [..]?, "pol": [..]?, "theta": x?}]}
//! poly:    {"n": n, "monomials": [[0], [1, 2], [0, 1, 2]]}
//! ising:   {"n": n, "couplings": [[j, k, theta]], "fields": [[j, theta]]}
//! ```
//!
//! Gate names are `H X Z S SDG T TDG RZ CZ CCZ CX MCX`. `CX` and `MCX` put the
//! target in `t` and controls in `c`; `pol` holds one 0/1 bit per control
//! (default all 1). `RZ` requires `theta` in radians.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{Circuit, Gate, IsingInstance, PolyF2};
use crate::error::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCircuit {
    qubits: usize,
    gates: Vec<RawGate>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGate {
    g: String,
    t: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    c: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pol: Option<Vec<u8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    theta: Option<f64>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPoly {
    n: usize,
    monomials: Vec<Vec<usize>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawIsing {
    n: usize,
    #[serde(default)]
    couplings: Vec<(usize, usize, f64)>,
    #[serde(default)]
    fields: Vec<(usize, f64)>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::format(
        format!("line {}, column {}", e.line(), e.column()),
        e.to_string(),
    )
}

fn raw_to_gate(raw: RawGate, loc: &str) -> Result<Gate> {
    let RawGate { g, t, c, pol, theta } = raw;
    let err = |msg: String| Error::format(loc, msg);
    let name = g.to_ascii_uppercase();

    let want_targets = |n: usize| -> Result<()> {
        if t.len() == n {
            Ok(())
        } else {
            Err(err(format!("{name} takes {n} target(s), got {}", t.len())))
        }
    };
    let forbid = |present: bool, field: &str| -> Result<()> {
        if present {
            Err(err(format!("{name} does not accept \"{field}\"")))
        } else {
            Ok(())
        }
    };
    if name != "RZ" {
        forbid(theta.is_some(), "theta")?;
    }
    if name != "MCX" {
        forbid(pol.is_some(), "pol")?;
    }
    if name != "MCX" && name != "CX" {
        forbid(c.is_some(), "c")?;
    }

    let gate = match name.as_str() {
        "H" | "X" | "Z" | "S" | "SDG" | "T" | "TDG" => {
            want_targets(1)?;
            let q = t[0];
            match name.as_str() {
                "H" => Gate::H(q),
                "X" => Gate::X(q),
                "Z" => Gate::Z(q),
                "S" => Gate::S(q),
                "SDG" => Gate::Sdg(q),
                "T" => Gate::T(q),
                _ => Gate::Tdg(q),
            }
        }
        "RZ" => {
            want_targets(1)?;
            let theta = theta.ok_or_else(|| err("RZ requires \"theta\"".into()))?;
            Gate::rz(t[0], theta)
        }
        "CZ" => {
            want_targets(2)?;
            Gate::Cz(t[0], t[1])
        }
        "CCZ" => {
            want_targets(3)?;
            Gate::Ccz(t[0], t[1], t[2])
        }
        "CX" => {
            want_targets(1)?;
            match c.as_deref() {
                Some(&[control]) => Gate::cx(control, t[0]),
                _ => return Err(err("CX takes exactly one control in \"c\"".into())),
            }
        }
        "MCX" => {
            want_targets(1)?;
            let controls = c.unwrap_or_default();
            let polarities = match pol {
                None => vec![true; controls.len()],
                Some(bits) => bits
                    .into_iter()
                    .map(|b| match b {
                        0 => Ok(false),
                        1 => Ok(true),
                        other => Err(err(format!("polarity bit must be 0 or 1, got {other}"))),
                    })
                    .collect::<Result<Vec<_>>>()?,
            };
            Gate::mcx(t[0], controls, polarities).map_err(|e| err(e.to_string()))?
        }
        _ => return Err(err(format!("unknown gate kind \"{g}\""))),
    };
    Ok(gate)
}

fn gate_to_raw(g: &Gate) -> RawGate {
    let mut raw = RawGate {
        g: g.name().to_string(),
        t: Vec::new(),
        c: None,
        pol: None,
        theta: None,
    };
    match g {
        Gate::H(q) | Gate::X(q) | Gate::Z(q) | Gate::S(q) | Gate::Sdg(q) | Gate::T(q) | Gate::Tdg(q) => {
            raw.t = vec![*q]
        }
        Gate::Rz { qubit, theta } => {
            raw.t = vec![*qubit];
            raw.theta = Some(*theta);
        }
        Gate::Cz(a, b) => raw.t = vec![*a, *b],
        Gate::Ccz(a, b, c) => raw.t = vec![*a, *b, *c],
        Gate::Cx { control, target } => {
            raw.t = vec![*target];
            raw.c = Some(vec![*control]);
        }
        Gate::Mcx {
            target,
            controls,
            polarities,
        } => {
            raw.t = vec![*target];
            raw.c = Some(controls.clone());
            raw.pol = Some(polarities.iter().map(|&p| p as u8).collect());
        }
    }
    raw
}

pub fn parse_circuit(text: &str) -> Result<Circuit> {
    let raw: RawCircuit = serde_json::from_str(text).map_err(json_error)?;
    let mut c = Circuit::new(raw.qubits);
    for (i, rg) in raw.gates.into_iter().enumerate() {
        let loc = format!("gates[{i}]");
        let gate = raw_to_gate(rg, &loc)?;
        c.push(gate).map_err(|e| Error::format(&loc, e.to_string()))?;
    }
    Ok(c)
}

/// Canonical compact JSON for a circuit.
pub fn serialize_circuit(c: &Circuit) -> String {
    let raw = RawCircuit {
        qubits: c.width(),
        gates: c.gates().iter().map(gate_to_raw).collect(),
    };
    serde_json::to_string(&raw).expect("circuit JSON is always serializable")
}

pub fn parse_poly(text: &str) -> Result<PolyF2> {
    let raw: RawPoly = serde_json::from_str(text).map_err(json_error)?;
    PolyF2::new(raw.n, raw.monomials).map_err(|e| Error::format("monomials", e.to_string()))
}

pub fn serialize_poly(f: &PolyF2) -> String {
    let raw = RawPoly {
        n: f.n_vars(),
        monomials: f.monomials().map(<[usize]>::to_vec).collect(),
    };
    serde_json::to_string(&raw).expect("polynomial JSON is always serializable")
}

pub fn parse_ising(text: &str) -> Result<IsingInstance> {
    let raw: RawIsing = serde_json::from_str(text).map_err(json_error)?;
    IsingInstance::new(raw.n, raw.couplings, raw.fields)
        .map_err(|e| Error::format("instance", e.to_string()))
}

pub fn serialize_ising(m: &IsingInstance) -> String {
    let raw = RawIsing {
        n: m.n_spins(),
        couplings: m.couplings().collect(),
        fields: m.fields().collect(),
    };
    serde_json::to_string(&raw).expect("Ising JSON is always serializable")
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn with_path<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Format { location, message } => Error::Format {
            location: format!("{}: {location}", path.display()),
            message,
        },
        other => other,
    })
}

pub fn read_circuit(path: impl AsRef<Path>) -> Result<Circuit> {
    let path = path.as_ref();
    with_path(path, parse_circuit(&read(path)?))
}

pub fn read_poly(path: impl AsRef<Path>) -> Result<PolyF2> {
    let path = path.as_ref();
    with_path(path, parse_poly(&read(path)?))
}

pub fn read_ising(path: impl AsRef<Path>) -> Result<IsingInstance> {
    let path = path.as_ref();
    with_path(path, parse_ising(&read(path)?))
}

pub fn write_circuit(path: impl AsRef<Path>, c: &Circuit) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, serialize_circuit(c) + "\n").map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}
