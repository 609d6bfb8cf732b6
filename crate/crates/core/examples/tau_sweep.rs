//! Asymptotic changing rate and damage over τ at β = 2, written as CSV.
//!
//! cargo run --example tau_sweep -- [out.csv]

use beta_automata::io::write_sweep_csv;
use beta_automata::{sweep, ExperimentConfig, SweepParameter};

fn main() {
    let mut taus: Vec<u32> = (1..=99).step_by(2).collect();
    taus.push(100);
    let template = ExperimentConfig { beta: 2.0, ..ExperimentConfig::default() };
    let table = sweep(&template, &SweepParameter::Tau(taus)).unwrap();

    for r in table.rows.iter().step_by(5) {
        println!("tau {:>3}: changing {:.4}  damage {:.4}", r.value, r.asymptotic_changing_rate, r.asymptotic_damage);
    }
    let best = table.argmin_changing_rate().unwrap();
    println!("lowest changing rate at tau = {} ({:.4})", best.value, best.asymptotic_changing_rate);

    let path = std::env::args().nth(1).unwrap_or_else(|| "tau_sweep.csv".into());
    let file = std::fs::File::create(&path).unwrap();
    write_sweep_csv(std::io::BufWriter::new(file), "example", &table).unwrap();
    println!("wrote {path}");
}
