//! Geometric α-memory: the critical factors below which memory cannot act,
//! then single-active-node runs for several α.

use beta_automata::memory::{critical_alpha, NodeMemory};
use beta_automata::{run_ensemble, ExperimentConfig, InitSpec, MemoryModel};

fn main() {
    println!("critical alpha");
    for t in [3, 4, 5, 6, 8, 10, 20, 50] {
        println!("  T = {t:>2}: {:.12}", critical_alpha(t).unwrap());
    }

    // An unbalanced history flips the trait once α exceeds the critical value.
    for alpha in [0.54, 0.6, 0.65] {
        for history in ["110", "1110"] {
            let mut m = NodeMemory::new(MemoryModel::Alpha(alpha));
            let traits: String = history.chars().map(|c| if m.record(c == '1') { '1' } else { '0' }).collect();
            println!("  alpha {alpha:<4} history {history:<4} -> traits {traits}");
        }
    }

    for beta in [0.9, 1.0, 2.0] {
        for alpha in [0.0, 0.6, 0.7, 0.8, 0.9, 1.0] {
            let cfg = ExperimentConfig {
                beta,
                memory: MemoryModel::Alpha(alpha),
                init: InitSpec::SingleActive(0),
                ..ExperimentConfig::default()
            };
            let res = run_ensemble(&cfg).unwrap();
            let extinct = res.runs.iter().filter(|r| r.changing_rate.window(2, 99).any(|(_, v)| v == 0.0)).count();
            println!(
                "beta {beta:<3} alpha {alpha:<3} changing rate at T=100 {:.3}, extinct in {extinct}/11",
                res.runs.iter().map(|r| r.changing_rate.at(100).unwrap()).sum::<f64>() / 11.0
            );
        }
    }
}
