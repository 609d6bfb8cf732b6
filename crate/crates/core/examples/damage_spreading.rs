//! Flips one node at T = 1 and follows the Hamming distance to the
//! unperturbed run, with and without memory. Also reports how far the
//! historic dynamics drift from the ahistoric twin.

use beta_automata::{run_ensemble, DamageSpec, ExperimentConfig, MemoryModel};

fn main() {
    for beta in [0.9, 1.0, 2.0] {
        for memory in [MemoryModel::Ahistoric, MemoryModel::TauMajority(9), MemoryModel::FullMajority] {
            let cfg = ExperimentConfig { beta, memory, damage: Some(DamageSpec::Random), ..ExperimentConfig::default() };
            let res = run_ensemble(&cfg).unwrap();
            let at = |t| res.runs.iter().map(|r| r.damage.as_ref().unwrap().at(t).unwrap()).sum::<f64>() / 11.0;
            let cross = res.runs[0].asymptotic.cross_distance.map_or("-".to_string(), |c| format!("{c:.3}"));
            println!(
                "beta {beta:<3} {:<14} damage T=5 {:.3}  T=30 {:.3}  T=100 {:.3}  cross {cross}",
                memory.to_string(),
                at(5),
                at(30),
                at(100)
            );
        }
    }
}
