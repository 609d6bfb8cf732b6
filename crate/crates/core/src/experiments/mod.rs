//! Multi-seed ensembles, damage protocols and parameter sweeps.

pub mod seeds;
mod sweep;

use rand::Rng;
use rayon::prelude::*;

use crate::engine::{run, EngineError, Rule, StateVector, Trajectory};
use crate::geometry::{
    build_beta_skeleton, degree_stats, generate_points, DegreeStats, GeometryError, PointSet,
    SkeletonConfig, SkeletonGraph,
};
use crate::memory::MemoryModel;
use crate::metrics::{self, MetricsError, ObservableSeries};
use seeds::{point_seed, simulation_seed, stream_rng, Stream};

pub use sweep::{sweep, sweep_betas, SweepParameter, SweepRow, SweepTable};

#[derive(Debug, thiserror::Error)]
pub enum ExperimentError {
    #[error("invalid experiment config: {0}")]
    InvalidConfig(String),
    #[error("sweep range is empty")]
    EmptySweep,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Metrics(#[from] MetricsError),
}

/// How the initial configuration of each simulation is drawn.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InitSpec {
    /// Independent fair coin per node.
    RandomHalf,
    /// One node on, every other node off.
    SingleActive(usize),
    Explicit(Vec<bool>),
}

/// Which node a damage run flips at `T = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DamageSpec {
    Node(usize),
    /// Uniform per simulation.
    Random,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub n: usize,
    pub beta: f64,
    pub rule: Rule,
    pub memory: MemoryModel,
    pub t_max: usize,
    pub n_seeds: usize,
    pub init: InitSpec,
    pub damage: Option<DamageSpec>,
    pub master_seed: u64,
    pub share_points_across_beta: bool,
    pub asymptotic_window: usize,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            n: 1000,
            beta: 1.0,
            rule: Rule::Parity,
            memory: MemoryModel::Ahistoric,
            t_max: 100,
            n_seeds: 11,
            init: InitSpec::RandomHalf,
            damage: None,
            master_seed: 0,
            share_points_across_beta: true,
            asymptotic_window: metrics::DEFAULT_ASYMPTOTIC_WINDOW,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<(), ExperimentError> {
        let bad = |m: String| Err(ExperimentError::InvalidConfig(m));
        if self.n == 0 {
            return bad("n must be at least 1".into());
        }
        SkeletonConfig::new(self.beta)?;
        if self.t_max < 2 {
            return bad("t_max must be at least 2".into());
        }
        if self.n_seeds == 0 {
            return bad("n_seeds must be at least 1".into());
        }
        self.memory
            .validate()
            .map_err(|e| ExperimentError::InvalidConfig(e.to_string()))?;
        match &self.init {
            InitSpec::SingleActive(id) if *id >= self.n => {
                return bad(format!("single_active node {id} out of range for n = {}", self.n));
            }
            InitSpec::Explicit(v) if v.len() != self.n => {
                return bad(format!("explicit init has {} states for n = {}", v.len(), self.n));
            }
            _ => {}
        }
        if let Some(DamageSpec::Node(id)) = self.damage {
            if id >= self.n {
                return bad(format!("damage node {id} out of range for n = {}", self.n));
            }
        }
        if self.asymptotic_window == 0 || self.asymptotic_window > self.t_max - 1 {
            return bad(format!(
                "asymptotic window {} must lie in 1..={}",
                self.asymptotic_window,
                self.t_max - 1
            ));
        }
        Ok(())
    }
}

/// Everything random about one simulation of an ensemble.
#[derive(Debug, Clone)]
pub struct Realization {
    pub index: usize,
    pub seed: u64,
    pub points: PointSet,
    pub graph: SkeletonGraph,
    pub initial: StateVector,
    /// Node flipped by the damage run, when damage is configured.
    pub flip_node: Option<usize>,
}

impl Realization {
    pub fn perturbed_initial(&self) -> Option<StateVector> {
        self.flip_node.map(|node| {
            let mut s = self.initial.clone();
            s.sigma[node] = !s.sigma[node];
            s
        })
    }
}

/// Draws points, graph, initial state and damage target of simulation `index`.
pub fn realize(config: &ExperimentConfig, index: usize) -> Result<Realization, ExperimentError> {
    let seed = simulation_seed(config.master_seed, index);
    let points = generate_points(config.n, point_seed(seed, config.beta, config.share_points_across_beta))?;
    let graph = build_beta_skeleton(&points, SkeletonConfig::new(config.beta)?);
    let (initial, flip_node) = draw_states(config, seed);
    Ok(Realization { index, seed, points, graph, initial, flip_node })
}

fn draw_states(config: &ExperimentConfig, seed: u64) -> (StateVector, Option<usize>) {
    let n = config.n;
    let initial = match &config.init {
        InitSpec::RandomHalf => {
            let mut rng = stream_rng(seed, Stream::InitialState);
            StateVector::initial((0..n).map(|_| rng.random_bool(0.5)).collect())
        }
        InitSpec::SingleActive(id) => StateVector::single_active(n, *id),
        InitSpec::Explicit(v) => StateVector::initial(v.clone()),
    };
    let flip_node = config.damage.map(|d| match d {
        DamageSpec::Node(id) => id,
        DamageSpec::Random => stream_rng(seed, Stream::DamageTarget).random_range(0..n),
    });
    (initial, flip_node)
}

/// Asymptotic (trailing-mean) levels of one simulation.
#[derive(Debug, Clone, PartialEq)]
pub struct Asymptotics {
    pub density: f64,
    pub changing_rate: f64,
    pub damage: Option<f64>,
    pub cross_distance: Option<f64>,
}

/// Observables of one simulation.
#[derive(Debug, Clone, PartialEq)]
pub struct SeedRun {
    pub index: usize,
    pub seed: u64,
    pub degrees: DegreeStats,
    pub density: ObservableSeries,
    pub changing_rate: ObservableSeries,
    pub damage: Option<ObservableSeries>,
    pub flip_node: Option<usize>,
    pub cross_distance: Option<ObservableSeries>,
    pub asymptotic: Asymptotics,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentResult {
    pub config: ExperimentConfig,
    pub runs: Vec<SeedRun>,
}

impl ExperimentResult {
    /// Mean degree over all realised graphs.
    pub fn mean_degree(&self) -> f64 {
        self.runs.iter().map(|r| r.degrees.mean).sum::<f64>() / self.runs.len() as f64
    }

    pub fn mean_asymptotic_changing_rate(&self) -> f64 {
        mean(self.runs.iter().map(|r| r.asymptotic.changing_rate))
    }

    pub fn mean_asymptotic_damage(&self) -> Option<f64> {
        let v: Option<Vec<f64>> = self.runs.iter().map(|r| r.asymptotic.damage).collect();
        v.map(|v| mean(v.into_iter()))
    }
}

fn mean(it: impl Iterator<Item = f64>) -> f64 {
    let (s, c) = it.fold((0.0, 0usize), |(s, c), v| (s + v, c + 1));
    if c == 0 { 0.0 } else { s / c as f64 }
}

/// Runs the historic trajectory of one realisation.
pub fn historic_run(config: &ExperimentConfig, real: &Realization) -> Result<Trajectory, ExperimentError> {
    Ok(run(&real.graph, &real.initial, &config.rule, config.memory, config.t_max)?.with_seed(real.seed))
}

fn simulate(
    config: &ExperimentConfig,
    real: &Realization,
    with_cross_distance: bool,
) -> Result<SeedRun, ExperimentError> {
    let k = config.asymptotic_window;
    let historic = historic_run(config, real)?;
    let density = metrics::density_series(&historic);
    let changing_rate = metrics::changing_rate(&historic)?;

    let damage = match real.perturbed_initial() {
        Some(p) => {
            let perturbed = run(&real.graph, &p, &config.rule, config.memory, config.t_max)?;
            Some(metrics::damage_series(&historic, &perturbed)?)
        }
        None => None,
    };
    let cross_distance = if with_cross_distance && !config.memory.is_ahistoric() {
        let twin = run(&real.graph, &real.initial, &config.rule, MemoryModel::Ahistoric, config.t_max)?;
        Some(metrics::cross_distance(&historic, &twin)?)
    } else {
        None
    };

    let asymptotic = Asymptotics {
        density: metrics::asymptotic(&density, k)?,
        changing_rate: metrics::asymptotic(&changing_rate, k)?,
        damage: damage.as_ref().map(|s| metrics::asymptotic(s, k)).transpose()?,
        cross_distance: cross_distance.as_ref().map(|s| metrics::asymptotic(s, k)).transpose()?,
    };
    Ok(SeedRun {
        index: real.index,
        seed: real.seed,
        degrees: degree_stats(&real.graph),
        density,
        changing_rate,
        damage,
        flip_node: real.flip_node,
        cross_distance,
        asymptotic,
    })
}

/// Runs every simulation of the ensemble. Simulations execute in parallel;
/// results come back ordered by simulation index.
pub fn run_ensemble(config: &ExperimentConfig) -> Result<ExperimentResult, ExperimentError> {
    config.validate()?;
    let runs = (0..config.n_seeds)
        .into_par_iter()
        .map(|i| simulate(config, &realize(config, i)?, true))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ExperimentResult { config: config.clone(), runs })
}
