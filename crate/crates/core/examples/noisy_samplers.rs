//! Noisy samplers within a total-variation budget of 1/36 and the fraction of
//! outcomes on which they stray by more than ε/(2^{n+1}δ).

use dqc1::hardness::{
    make_noisy_distribution, markov_outlier_fraction, random_ensemble, total_variation_distance,
    EnsembleKind,
};
use dqc1::simulator::dqc1_distribution;
use dqc1::{Circuit, ErrorBudget, SamplerModel};

fn main() -> dqc1::Result<()> {
    let budget = ErrorBudget::default();
    let p = dqc1_distribution(&Circuit::new(3))?;
    for model in [
        SamplerModel::Exact,
        SamplerModel::Mixture { lambda: 1.0 / 72.0 },
        SamplerModel::MassShift { tv: 1.0 / 36.0 },
    ] {
        let q = make_noisy_distribution(&p, model)?;
        println!("{model:<32} TV = {:.6}", total_variation_distance(&p, &q)?);
    }

    let ens = random_ensemble(EnsembleKind::Htcx, 3, 50, 30, 2)?;
    for model in [SamplerModel::Mixture { lambda: 1.0 / 72.0 }, SamplerModel::MassShift { tv: 1.0 / 36.0 }] {
        let check = markov_outlier_fraction(&ens, model, &budget)?;
        println!(
            "{model:<32} outlier fraction {:.4} (bound {:.4}) {}",
            check.fraction,
            check.bound,
            if check.passed { "ok" } else { "VIOLATED" }
        );
        assert!(check.passed);
    }
    Ok(())
}
