//! Memoryless parity rule on Gabriel graphs: eleven simulations from random
//! half-filled initial states.

use beta_automata::{run_ensemble, ExperimentConfig};

fn main() {
    let cfg = ExperimentConfig { beta: 1.0, ..ExperimentConfig::default() };
    let res = run_ensemble(&cfg).expect("ensemble");

    println!("mean degree {:.3}", res.mean_degree());
    println!("{:>3} {:>10} {:>12}", "sim", "density", "changing");
    for r in &res.runs {
        println!(
            "{:>3} {:>10.4} {:>12.4}",
            r.index,
            r.density.mean_over(20, 100).unwrap(),
            r.changing_rate.mean_over(20, 100).unwrap()
        );
    }
    let first = &res.runs[0].changing_rate;
    let head: Vec<String> = first.window(2, 12).map(|(_, v)| format!("{v:.3}")).collect();
    println!("sim 0, T = 2..12: {}", head.join(" "));
}
