//! Builds lune-based β-skeletons on one point set and compares them.
//!
//! cargo run --example beta_skeletons -- [n] [seed]

use beta_automata::geometry::{build_beta_skeleton, degree_stats, generate_points, SkeletonConfig};
use beta_automata::io::write_graph;

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(1000, |s| s.parse().expect("n"));
    let seed: u64 = args.next().map_or(0, |s| s.parse().expect("seed"));

    let points = generate_points(n, seed).expect("points");
    let betas = [0.9, 1.0, 1.5, 2.0, 3.0];
    let graphs: Vec<_> = betas
        .iter()
        .map(|&b| build_beta_skeleton(&points, SkeletonConfig::new(b).unwrap()))
        .collect();

    println!("{:>5} {:>7} {:>7} {:>4} {:>4}", "beta", "edges", "K", "min", "max");
    for (b, g) in betas.iter().zip(&graphs) {
        let s = degree_stats(g);
        println!("{b:>5} {:>7} {:>7.3} {:>4} {:>4}", g.edge_count(), s.mean, s.min, s.max);
    }
    for w in graphs.windows(2) {
        assert!(w[1].is_subgraph_of(&w[0]));
    }
    println!("each skeleton contains the next one");

    let hist = degree_stats(&graphs[1]).histogram;
    println!("degree histogram at beta = 1: {hist:?}");

    let path = std::env::temp_dir().join("gabriel.txt");
    let file = std::fs::File::create(&path).unwrap();
    write_graph(std::io::BufWriter::new(file), &points, 1.0, &graphs[1]).unwrap();
    println!("wrote {}", path.display());
}
