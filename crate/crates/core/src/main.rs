use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_complex::Complex64;

use dqc1::circuit::format::{read_circuit, read_ising, read_poly, write_circuit};
use dqc1::hardness::{
    build_postselection_pair, build_worst_case_embedding, heavy_set_fraction, parse_number,
    verify_chain, EnsembleSpec, ErrorBudget, SamplerModel,
};
use dqc1::oracles::{gap, ising_partition_function};
use dqc1::simulator::{
    amplitude_zero, dqc1_distribution_with_limit, f_value, format_bits, parse_bits,
};
use dqc1::Error;

const DEFAULT_ENSEMBLE: &str = "random:iqp:4:50:12:1";

#[derive(Parser)]
#[command(name = "dqc1", version, about = "One-clean-qubit simulation and hardness-chain checks")]
struct Cli {
    /// Worker threads; output does not depend on this value.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact gap(f) of a degree-3 polynomial file.
    Gap {
        #[arg(long)]
        poly: PathBuf,
    },
    /// Ising partition function, printed as `re,im`.
    IsingZ {
        #[arg(long)]
        model: PathBuf,
    },
    /// ⟨0ⁿ|C|0ⁿ⟩ of a circuit file, printed as `re,im`.
    IqpAmp {
        #[arg(long)]
        circuit: PathBuf,
    },
    /// f(z,U) for one output string z (first bit is the clean qubit).
    FValue {
        #[arg(long)]
        circuit: PathBuf,
        #[arg(long)]
        z: String,
    },
    /// Full DQC1 output distribution as `z,probability` rows.
    Dqc1Dist {
        #[arg(long)]
        circuit: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Largest total width accepted (clean qubit included).
        #[arg(long, default_value_t = 15)]
        max_qubits: usize,
    },
    /// Writes the worst-case embedding U of an n-qubit circuit C.
    EmbedIqp {
        #[arg(long)]
        circuit: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Writes the postselection pair (U₁, U₂) built from a circuit V.
    EmbedPostselect {
        #[arg(long)]
        circuit: PathBuf,
        #[arg(long)]
        out1: PathBuf,
        #[arg(long)]
        out2: PathBuf,
    },
    /// Samples output strings from the DQC1 distribution.
    Sample {
        #[arg(long)]
        circuit: PathBuf,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 15)]
        max_qubits: usize,
    },
    /// Heavy-set fraction of an ensemble against (1−3ε/δ)/(2−3ε/δ).
    ///
    /// SPEC is `random:<iqp|ising|htcx|postselect>:<n>:<count>:<depth>:<seed>` or `dir:<path>`.
    Anticoncentration {
        #[arg(long, default_value = DEFAULT_ENSEMBLE)]
        ensemble: String,
        #[arg(long, default_value = "1/36")]
        eps: String,
        #[arg(long, default_value = "1/6")]
        delta: String,
    },
    /// Runs the Markov, heavy-set and success-fraction chain over an ensemble.
    ///
    /// SPEC is `random:<iqp|ising|htcx|postselect>:<n>:<count>:<depth>:<seed>` or `dir:<path>`;
    /// the sampler is `exact`, `mixture:LAMBDA` or `mass_shift:TV`.
    VerifyChain {
        #[arg(long, default_value = DEFAULT_ENSEMBLE)]
        ensemble: String,
        #[arg(long, default_value = "mass_shift:1/36")]
        sampler: String,
        #[arg(long, default_value = "1/36")]
        eps: String,
        #[arg(long, default_value = "1/6")]
        delta: String,
        #[arg(long, default_value = "1/100")]
        eta: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

/// Text to print and whether every asserted bound held.
struct Outcome {
    text: String,
    passed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, passed: true }
    }
}

fn complex(z: Complex64) -> String {
    format!("{:?},{:?}", z.re, z.im)
}

fn write_file(path: &PathBuf, text: &str) -> dqc1::Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn run(command: Command) -> dqc1::Result<Outcome> {
    match command {
        Command::Gap { poly } => Ok(Outcome::ok(format!("{}\n", gap(&read_poly(poly)?)?))),
        Command::IsingZ { model } => {
            let z = ising_partition_function(&read_ising(model)?)?;
            Ok(Outcome::ok(complex(z) + "\n"))
        }
        Command::IqpAmp { circuit } => {
            let a = amplitude_zero(&read_circuit(circuit)?)?;
            Ok(Outcome::ok(complex(a) + "\n"))
        }
        Command::FValue { circuit, z } => {
            let f = f_value(&read_circuit(circuit)?, &parse_bits(&z)?)?;
            Ok(Outcome::ok(format!("{f:?}\n")))
        }
        Command::Dqc1Dist {
            circuit,
            out,
            max_qubits,
        } => {
            let u = read_circuit(circuit)?;
            let d = dqc1_distribution_with_limit(&u, max_qubits.saturating_sub(1))?;
            let mut csv = String::from("z,probability\n");
            for (z, p) in d.probs().iter().enumerate() {
                writeln!(csv, "{},{:.16e}", format_bits(z, u.width()), p).unwrap();
            }
            let passed = d.is_anti_concentrated();
            match out {
                Some(path) => {
                    write_file(&path, &csv)?;
                    Ok(Outcome {
                        text: String::new(),
                        passed,
                    })
                }
                None => Ok(Outcome { text: csv, passed }),
            }
        }
        Command::EmbedIqp { circuit, out } => {
            let u = build_worst_case_embedding(&read_circuit(circuit)?)?;
            write_circuit(out, &u)?;
            Ok(Outcome::ok(String::new()))
        }
        Command::EmbedPostselect {
            circuit,
            out1,
            out2,
        } => {
            let (u1, u2) = build_postselection_pair(&read_circuit(circuit)?)?;
            write_circuit(out1, &u1)?;
            write_circuit(out2, &u2)?;
            Ok(Outcome::ok(String::new()))
        }
        Command::Sample {
            circuit,
            count,
            seed,
            max_qubits,
        } => {
            let u = read_circuit(circuit)?;
            let d = dqc1_distribution_with_limit(&u, max_qubits.saturating_sub(1))?;
            let mut text = String::new();
            for z in d.sample(count, seed) {
                text.push_str(&format_bits(z, u.width()));
                text.push('\n');
            }
            Ok(Outcome::ok(text))
        }
        Command::Anticoncentration {
            ensemble,
            eps,
            delta,
        } => {
            let ens = ensemble.parse::<EnsembleSpec>()?.build()?;
            let budget = ErrorBudget::new(parse_number(&eps)?, parse_number(&delta)?, 0.0)?;
            let check = heavy_set_fraction(&ens, &budget)?;
            let text = format!(
                "heavy_fraction={:?}\nthreshold={:?}\npass={}\n",
                check.fraction, check.bound, check.passed
            );
            Ok(Outcome {
                text,
                passed: check.passed,
            })
        }
        Command::VerifyChain {
            ensemble,
            sampler,
            eps,
            delta,
            eta,
            seed,
            json,
        } => {
            let ens = ensemble.parse::<EnsembleSpec>()?.build()?;
            let sampler: SamplerModel = sampler.parse()?;
            let budget =
                ErrorBudget::new(parse_number(&eps)?, parse_number(&delta)?, parse_number(&eta)?)?;
            let report = verify_chain(&ens, sampler, &budget, seed)?;
            let text = if json {
                report.to_json() + "\n"
            } else {
                report.to_key_value()
            };
            Ok(Outcome {
                text,
                passed: report.passed,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(k) = cli.threads {
        pool = pool.num_threads(k.max(1));
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start worker pool: {e}");
            return ExitCode::from(1);
        }
    };
    match pool.install(|| run(cli.command)) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: bound violated");
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
