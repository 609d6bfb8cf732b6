//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the process exits non-zero if any of them fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use beta_automata::engine::{run, Rule, StateVector};
use beta_automata::experiments::{self, run_ensemble, sweep, DamageSpec, ExperimentConfig, InitSpec, SweepParameter};
use beta_automata::geometry::{brute_force_skeleton, build_beta_skeleton, generate_points, SkeletonConfig};
use beta_automata::memory::{critical_alpha, MemoryModel, NodeMemory};
use beta_automata::metrics;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn skeleton(n: usize, seed: u64, beta: f64) -> beta_automata::SkeletonGraph {
    build_beta_skeleton(&generate_points(n, seed).unwrap(), SkeletonConfig::new(beta).unwrap())
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut mismatches = 0;
    let sets = 200;
    for s in 0..sets {
        let n = rng.random_range(2..=50);
        let pts = generate_points(n, 10_000 + s).unwrap();
        for beta in [0.9, 1.0, 1.5, 2.0] {
            let cfg = SkeletonConfig::new(beta).unwrap();
            if build_beta_skeleton(&pts, cfg) != brute_force_skeleton(&pts, cfg) {
                mismatches += 1;
            }
        }
    }
    let took = start.elapsed();
    outcome(
        mismatches == 0 && took < Duration::from_secs(10),
        format!("{sets} point sets x 4 betas, {mismatches} mismatches, {took:.2?}"),
    )
}

fn mean_connectivity() -> Outcome {
    let start = Instant::now();
    let mut pass = true;
    let mut parts = Vec::new();
    for (beta, target) in [(1.0, 3.85), (2.0, 2.50), (0.9, 6.64)] {
        let cfg = ExperimentConfig { beta, ..ExperimentConfig::default() };
        let k = (0..cfg.n_seeds)
            .map(|i| experiments::realize(&cfg, i).unwrap().graph.degrees().iter().sum::<usize>() as f64 / cfg.n as f64)
            .sum::<f64>()
            / cfg.n_seeds as f64;
        pass &= (k - target).abs() <= 0.25;
        parts.push(format!("beta={beta}: {k:.3} (target {target})"));
    }
    let took = start.elapsed();
    pass &= took < Duration::from_secs(60);
    outcome(pass, format!("{}, {took:.2?}", parts.join("; ")))
}

fn beta_monotonicity() -> Outcome {
    let mut violations = 0;
    for s in 0..100 {
        let pts = generate_points(40, 20_000 + s).unwrap();
        let graphs: Vec<_> = [0.9, 1.0, 1.5, 2.0]
            .iter()
            .map(|&b| build_beta_skeleton(&pts, SkeletonConfig::new(b).unwrap()))
            .collect();
        for lo in 0..graphs.len() {
            for hi in lo + 1..graphs.len() {
                violations += graphs[hi].edges().filter(|&(i, j)| !graphs[lo].has_edge(i, j)).count();
            }
        }
    }
    outcome(violations == 0, format!("100 point sets, {violations} violations"))
}

fn ahistoric_parity() -> Outcome {
    let cfg = ExperimentConfig { beta: 1.0, ..ExperimentConfig::default() };
    let res = run_ensemble(&cfg).unwrap();
    let mut pass = true;
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    let mut dens = 0.0;
    for r in &res.runs {
        let cr = r.changing_rate.mean_over(20, 100).unwrap();
        lo = lo.min(cr);
        hi = hi.max(cr);
        pass &= (0.45..=0.55).contains(&cr);
        dens += r.density.mean_over(20, 100).unwrap();
    }
    dens /= res.runs.len() as f64;
    pass &= (0.45..=0.55).contains(&dens);
    outcome(pass, format!("changing rate per seed in [{lo:.4}, {hi:.4}], density {dens:.4}"))
}

fn damage_spreading() -> Outcome {
    let cfg = ExperimentConfig { beta: 1.0, damage: Some(DamageSpec::Random), ..ExperimentConfig::default() };
    let res = run_ensemble(&cfg).unwrap();
    let per_seed: Vec<f64> = res.runs.iter().map(|r| r.damage.as_ref().unwrap().mean_over(30, 100).unwrap()).collect();
    let mean = per_seed.iter().sum::<f64>() / per_seed.len() as f64;
    let lo = per_seed.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = per_seed.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    outcome((0.40..=0.60).contains(&mean), format!("damage mean {mean:.4} (per seed {lo:.4}..{hi:.4})"))
}

fn in_band_over(series: &metrics::ObservableSeries, lo: usize, hi: usize, band: (f64, f64)) -> bool {
    series.window(lo, hi).all(|(_, v)| v >= band.0 && v <= band.1)
}

fn memory_moderation() -> Outcome {
    let tau = MemoryModel::TauMajority(19);
    let at2 = run_ensemble(&ExperimentConfig { beta: 2.0, memory: tau, ..ExperimentConfig::default() }).unwrap();
    let good2 = at2.runs.iter().filter(|r| in_band_over(&r.changing_rate, 40, 100, (0.0, 0.1))).count();
    let at1 = run_ensemble(&ExperimentConfig { beta: 1.0, memory: tau, ..ExperimentConfig::default() }).unwrap();
    let good1 = at1.runs.iter().filter(|r| in_band_over(&r.changing_rate, 40, 100, (0.05, 0.25))).count();
    let range = |res: &experiments::ExperimentResult| {
        res.runs.iter().flat_map(|r| r.changing_rate.window(40, 100).map(|(_, v)| v)).fold(
            (f64::INFINITY, f64::NEG_INFINITY),
            |(a, b), v| (a.min(v), b.max(v)),
        )
    };
    let (a2, b2) = range(&at2);
    let (a1, b1) = range(&at1);
    outcome(
        good2 >= 9 && good1 == at1.runs.len(),
        format!(
            "beta=2: {good2}/11 seeds in [0,0.1] (range {a2:.4}..{b2:.4}); beta=1: {good1}/11 in [0.05,0.25] (range {a1:.4}..{b1:.4})"
        ),
    )
}

fn alpha_extinction() -> Outcome {
    let cfg = ExperimentConfig {
        beta: 2.0,
        memory: MemoryModel::Alpha(0.6),
        init: InitSpec::SingleActive(0),
        ..ExperimentConfig::default()
    };
    let res = run_ensemble(&cfg).unwrap();
    let at: Vec<Option<usize>> = res
        .runs
        .iter()
        .map(|r| r.changing_rate.steps().find(|&(t, v)| t < 100 && v == 0.0).map(|(t, _)| t))
        .collect();
    let extinct = at.iter().filter(|t| t.is_some()).count();
    let steps: Vec<String> = at.iter().map(|t| t.map_or("-".into(), |t| t.to_string())).collect();
    outcome(extinct == at.len(), format!("{extinct}/{} extinct, first zero at T = [{}]", at.len(), steps.join(", ")))
}

fn alpha_ineffective() -> Outcome {
    let mut exceptions = 0u64;
    let mut histories = 0u64;
    for alpha in [0.1, 0.3, 0.5] {
        for len in 1..=12u32 {
            for bits in 0..(1u32 << len) {
                histories += 1;
                let mut m = NodeMemory::new(MemoryModel::Alpha(alpha));
                for k in 0..len {
                    let sigma = bits >> k & 1 == 1;
                    if m.record(sigma) != sigma {
                        exceptions += 1;
                    }
                }
            }
        }
    }
    outcome(exceptions == 0, format!("{histories} histories, {exceptions} exceptions"))
}

fn equivalence_identities() -> Outcome {
    let t_max = 25;
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for inst in 0..50u64 {
        let beta = [0.9, 1.0, 1.5, 2.0][inst as usize % 4];
        let g = skeleton(30, 30_000 + inst, beta);
        let init = StateVector::initial((0..30).map(|_| rng.random_bool(0.5)).collect());
        for rule in [Rule::Parity, Rule::MajorityNeutral] {
            let go = |m| run(&g, &init, &rule, m, t_max).unwrap();
            let pairs = [
                ("tau1=ahistoric", MemoryModel::TauMajority(1), MemoryModel::Ahistoric),
                ("alpha0=ahistoric", MemoryModel::Alpha(0.0), MemoryModel::Ahistoric),
                ("alpha1=full", MemoryModel::Alpha(1.0), MemoryModel::FullMajority),
                ("tauT=full", MemoryModel::TauMajority(t_max as u32), MemoryModel::FullMajority),
                ("tau>T=full", MemoryModel::TauMajority(t_max as u32 + 7), MemoryModel::FullMajority),
            ];
            for (name, a, b) in pairs {
                let (x, y) = (go(a), go(b));
                if x.states != y.states || x.traits != y.traits {
                    failures.push(format!("{name}@{inst}/{rule}"));
                }
            }
        }
    }
    outcome(failures.is_empty(), format!("50 instances x 2 rules x 5 identities, failures: {failures:?}"))
}

fn damage_linearity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut failures = 0;
    for inst in 0..50u64 {
        let beta = [0.9, 1.0, 1.5, 2.0][inst as usize % 4];
        let g = skeleton(50, 40_000 + inst, beta);
        let sigma: Vec<bool> = (0..50).map(|_| rng.random_bool(0.5)).collect();
        let j = rng.random_range(0..50);
        let mut flipped = sigma.clone();
        flipped[j] = !flipped[j];
        let go = |s: StateVector| run(&g, &s, &Rule::Parity, MemoryModel::Ahistoric, 60).unwrap();
        let damage = metrics::damage_series(&go(StateVector::initial(sigma)), &go(StateVector::initial(flipped))).unwrap();
        let indicator = metrics::density_series(&go(StateVector::single_active(50, j)));
        if damage.values != indicator.values {
            failures += 1;
        }
    }
    outcome(failures == 0, format!("50 instances, {failures} mismatches"))
}

fn critical_alpha_roots() -> Outcome {
    let golden = (5f64.sqrt() - 1.0) / 2.0;
    let a3 = critical_alpha(3).unwrap();
    let roots: Vec<f64> = (3..=200).map(|t| critical_alpha(t).unwrap()).collect();
    let first_tie = roots.windows(2).position(|w| w[1] >= w[0]).map(|k| k + 4);
    let a200 = *roots.last().unwrap();
    outcome(
        (a3 - golden).abs() <= 1e-10 && first_tie.is_none() && (a200 - 0.5).abs() <= 1e-3,
        format!(
            "alpha_3 - golden = {:.1e}, first T not below its predecessor: {}, alpha_200 = {a200:.6}",
            a3 - golden,
            first_tie.map_or("none".into(), |t| t.to_string())
        ),
    )
}

fn tau_sweep_shape() -> Outcome {
    let start = Instant::now();
    let mut taus: Vec<u32> = (1..=99).step_by(2).collect();
    taus.push(100);
    let template = ExperimentConfig { beta: 2.0, ..ExperimentConfig::default() };
    let table = sweep(&template, &SweepParameter::Tau(taus)).unwrap();
    let extra = sweep(&template, &SweepParameter::Tau(vec![50])).unwrap();
    let best = table.argmin_changing_rate().unwrap();
    let full = table.row(2.0, 100.0).unwrap().asymptotic_changing_rate;
    let half = extra.rows[0].asymptotic_changing_rate;
    let took = start.elapsed();
    outcome(
        (35.0..=70.0).contains(&best.value) && full > half && took < Duration::from_secs(900),
        format!(
            "argmin tau = {} ({:.4}), rate(100) = {full:.4}, rate(50) = {half:.4}, {took:.2?}",
            best.value, best.asymptotic_changing_rate
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("graph oracle equivalence", oracle_equivalence),
        ("mean connectivity", mean_connectivity),
        ("beta monotonicity", beta_monotonicity),
        ("ahistoric parity dynamics", ahistoric_parity),
        ("damage spreading", damage_spreading),
        ("memory moderation", memory_moderation),
        ("alpha-memory extinction", alpha_extinction),
        ("alpha <= 0.5 ineffective", alpha_ineffective),
        ("memory equivalence identities", equivalence_identities),
        ("parity damage linearity", damage_linearity),
        ("critical alpha", critical_alpha_roots),
        ("tau sweep shape", tau_sweep_shape),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        failed += !o.pass as usize;
        println!("{} {:>2} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, k + 1, o.detail);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
