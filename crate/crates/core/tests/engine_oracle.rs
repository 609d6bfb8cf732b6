//! Trajectories from the engine compared against a direct transliteration of
//! the dense-matrix reference loop, with memory computed from the whole
//! recorded history at every step.

use beta_automata::engine::{run, Rule, StateVector};
use beta_automata::geometry::{build_beta_skeleton, generate_points, SkeletonConfig, SkeletonGraph};
use beta_automata::memory::MemoryModel;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn dense(g: &SkeletonGraph) -> Vec<Vec<u8>> {
    let n = g.n();
    let mut adj = vec![vec![0u8; n]; n];
    for (i, j) in g.edges() {
        adj[i][j] = 1;
        adj[j][i] = 1;
    }
    adj
}

/// `s` from the full history `isig[..=it]` of one node.
fn trait_of(history: &[u8], model: MemoryModel) -> u8 {
    let it = history.len();
    let last = history[it - 1];
    match model {
        MemoryModel::Ahistoric => last,
        MemoryModel::TauMajority(tau) => {
            let itin = it.saturating_sub(tau as usize);
            let itaux = (it - itin) as u32;
            let inn: u32 = history[itin..].iter().map(|&b| b as u32).sum();
            if 2 * inn > itaux {
                1
            } else if 2 * inn < itaux {
                0
            } else {
                last
            }
        }
        MemoryModel::FullMajority => trait_of(history, MemoryModel::TauMajority(u32::MAX)),
        MemoryModel::Alpha(alpha) => {
            let (mut w, mut big) = (0.0, 0.0);
            for (t, &s) in history.iter().enumerate() {
                let weight = alpha.powi((it - 1 - t) as i32);
                w += weight * s as f64;
                big += weight;
            }
            let m = w / big;
            if (m - 0.5).abs() <= 1e-12 {
                last
            } else if m > 0.5 {
                1
            } else {
                0
            }
        }
        MemoryModel::ParityWindow3 => unreachable!(),
    }
}

fn reference(adj: &[Vec<u8>], init: &[bool], model: MemoryModel, maxit: usize) -> Vec<Vec<bool>> {
    let n = adj.len();
    let mut isig: Vec<Vec<u8>> = vec![Vec::new(); n];
    let mut new: Vec<u8> = init.iter().map(|&b| b as u8).collect();
    let mut out = Vec::new();
    for _ in 0..maxit {
        out.push(new.iter().map(|&b| b == 1).collect());
        let mut mode = vec![0u8; n];
        for i in 0..n {
            isig[i].push(new[i]);
            mode[i] = trait_of(&isig[i], model);
        }
        for i in 0..n {
            let iadd: u32 = (0..n).filter(|&j| adj[i][j] == 1).map(|j| mode[j] as u32).sum();
            new[i] = (iadd % 2) as u8;
        }
    }
    out
}

#[test]
fn engine_matches_dense_reference() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let models = [
        MemoryModel::Ahistoric,
        MemoryModel::TauMajority(3),
        MemoryModel::TauMajority(4),
        MemoryModel::TauMajority(19),
        MemoryModel::FullMajority,
        MemoryModel::Alpha(0.6),
        MemoryModel::Alpha(0.8),
        MemoryModel::Alpha(1.0),
    ];
    for inst in 0..12u64 {
        let beta = [0.9, 1.0, 1.5, 2.0][inst as usize % 4];
        let n = 80;
        let g = build_beta_skeleton(&generate_points(n, 500 + inst).unwrap(), SkeletonConfig::new(beta).unwrap());
        let adj = dense(&g);
        let init: Vec<bool> = if inst % 3 == 0 {
            (0..n).map(|i| i == 0).collect()
        } else {
            (0..n).map(|_| rng.random_bool(0.5)).collect()
        };
        for model in models {
            let tr = run(&g, &StateVector::initial(init.clone()), &Rule::Parity, model, 60).unwrap();
            assert_eq!(tr.states, reference(&adj, &init, model, 60), "instance {inst}, {model}");
        }
    }
}
