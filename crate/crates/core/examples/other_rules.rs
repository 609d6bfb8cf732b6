//! Rules other than parity: neutral majority, a custom totalistic table,
//! and parity memory over the last three states.

use beta_automata::engine::TotalisticTable;
use beta_automata::metrics::{changing_rate, density_series};
use beta_automata::{build_beta_skeleton, generate_points, run, MemoryModel, Rule, SkeletonConfig, StateVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let points = generate_points(1000, 3).unwrap();
    let graph = build_beta_skeleton(&points, SkeletonConfig::new(1.0).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let init = StateVector::initial((0..1000).map(|_| rng.random_bool(0.5)).collect());

    let max_degree = graph.degrees().into_iter().max().unwrap() as u32;
    // Anti-majority: on exactly when fewer than half of the neighbours are.
    let anti = TotalisticTable::from_fn(max_degree, |sum, degree, state| match (2 * sum).cmp(&degree) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Equal => state,
    });

    let cases = [
        ("majority", Rule::MajorityNeutral, MemoryModel::Ahistoric),
        ("majority, tau=5", Rule::MajorityNeutral, MemoryModel::TauMajority(5)),
        ("anti-majority", Rule::TotalisticTable(anti), MemoryModel::Ahistoric),
        ("parity", Rule::Parity, MemoryModel::Ahistoric),
        ("parity, parity3", Rule::Parity, MemoryModel::ParityWindow3),
    ];
    for (name, rule, memory) in cases {
        let tr = run(&graph, &init, &rule, memory, 60).unwrap();
        let d = density_series(&tr);
        let c = changing_rate(&tr).unwrap();
        println!(
            "{name:<16} density T=60 {:.3}  changing rate T=10 {:.3}  T=60 {:.3}",
            d.at(60).unwrap(),
            c.at(10).unwrap(),
            c.at(60).unwrap()
        );
    }
}
