//! Writing circuits in the JSON format and loading a directory of them back
//! as an ensemble.

use dqc1::circuit::format::{read_circuit, write_circuit};
use dqc1::circuit::serialize_circuit;
use dqc1::hardness::{heavy_set_fraction, random_htcx_circuit, EnsembleSpec};
use dqc1::ErrorBudget;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> dqc1::Result<()> {
    let dir = std::env::temp_dir().join(format!("dqc1-circuit-files-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| dqc1::Error::Io {
        path: dir.display().to_string(),
        message: e.to_string(),
    })?;

    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for i in 0..5 {
        let c = random_htcx_circuit(4, 12, &mut rng);
        let path = dir.join(format!("u{i}.json"));
        write_circuit(&path, &c)?;
        assert_eq!(read_circuit(&path)?, c);
        if i == 0 {
            println!("{}", serialize_circuit(&c));
        }
    }

    let spec: EnsembleSpec = format!("dir:{}", dir.display()).parse()?;
    let ens = spec.build()?;
    let check = heavy_set_fraction(&ens, &ErrorBudget::default())?;
    println!("{} circuits, heavy fraction {:.4} > {:.4}", ens.len(), check.fraction, check.bound);
    let _ = std::fs::remove_dir_all(&dir);
    Ok(())
}
