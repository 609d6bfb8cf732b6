//! τ-majority memory against the ahistoric parity rule on two skeletons.

use beta_automata::{run_ensemble, ExperimentConfig, MemoryModel};

fn main() {
    let models = [
        MemoryModel::Ahistoric,
        MemoryModel::TauMajority(3),
        MemoryModel::TauMajority(4),
        MemoryModel::TauMajority(9),
        MemoryModel::TauMajority(19),
        MemoryModel::FullMajority,
    ];
    for beta in [1.0, 2.0] {
        println!("beta = {beta}");
        for memory in models {
            let res = run_ensemble(&ExperimentConfig { beta, memory, ..ExperimentConfig::default() }).unwrap();
            let late: Vec<f64> = res.runs.iter().map(|r| r.changing_rate.mean_over(40, 100).unwrap()).collect();
            let (lo, hi) = late.iter().fold((1.0f64, 0.0f64), |(a, b), &v| (a.min(v), b.max(v)));
            println!(
                "  {:<14} changing rate T=40..100: mean {:.4}  seeds {lo:.4}..{hi:.4}",
                memory.to_string(),
                late.iter().sum::<f64>() / late.len() as f64
            );
        }
    }
}
