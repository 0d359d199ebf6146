//! The full chain at ε = 1/36, δ = 1/6, η = 1/100 on every built-in ensemble:
//! heavy-set fraction above 1/3 and success fraction above 1/6.

use dqc1::hardness::{random_ensemble, verify_chain, EnsembleKind};
use dqc1::{ErrorBudget, SamplerModel};

fn main() -> dqc1::Result<()> {
    let budget = ErrorBudget::default();
    println!(
        "heavy-set bound {:.4}, success bound F = {:.4}",
        budget.heavy_set_bound(),
        budget.success_bound()
    );
    for kind in EnsembleKind::ALL {
        let ens = random_ensemble(kind, 4, 20, 12, 3)?;
        let report = verify_chain(&ens, SamplerModel::MassShift { tv: budget.eps }, &budget, 9)?;
        println!(
            "{kind:<10} markov {:.4}  heavy {:.4}  success {:.4}  {}",
            report.markov_fraction,
            report.heavy_fraction,
            report.success_fraction,
            if report.passed { "pass" } else { "FAIL" }
        );
        assert!(report.passed);
    }
    Ok(())
}
