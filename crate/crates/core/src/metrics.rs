//! Observables computed from trajectories.
//!
//! Distances are always taken between states, never traits.

use crate::engine::{StateVector, Trajectory};

/// Default number of trailing values averaged by [`asymptotic`].
pub const DEFAULT_ASYMPTOTIC_WINDOW: usize = 10;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum MetricsError {
    #[error("changing rate needs at least two steps, trajectory has {0}")]
    TooShort(usize),
    #[error("series has {len} values, asymptotic level needs {k}")]
    SeriesShorterThanWindow { len: usize, k: usize },
    #[error("asymptotic window must be positive")]
    EmptyWindow,
    #[error("trajectories are not comparable: {0}")]
    Mismatch(&'static str),
}

/// Per-step values of one observable. `values[k]` belongs to step
/// `first_step + k`.
#[derive(Debug, Clone, PartialEq)]
pub struct ObservableSeries {
    pub name: String,
    pub first_step: usize,
    pub values: Vec<f64>,
}

impl ObservableSeries {
    pub fn new(name: impl Into<String>, first_step: usize, values: Vec<f64>) -> Self {
        Self { name: name.into(), first_step, values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at step `t`, if recorded.
    pub fn at(&self, t: usize) -> Option<f64> {
        t.checked_sub(self.first_step).and_then(|k| self.values.get(k)).copied()
    }

    /// `(T, value)` pairs with `lo <= T <= hi`.
    pub fn window(&self, lo: usize, hi: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.steps().filter(move |&(t, _)| t >= lo && t <= hi)
    }

    pub fn steps(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.values.iter().enumerate().map(move |(k, &v)| (self.first_step + k, v))
    }

    /// Mean over steps `lo..=hi`; `None` when no step falls in range.
    pub fn mean_over(&self, lo: usize, hi: usize) -> Option<f64> {
        let (sum, count) = self.window(lo, hi).fold((0.0, 0usize), |(s, c), (_, v)| (s + v, c + 1));
        (count > 0).then(|| sum / count as f64)
    }
}

fn fraction_ones(sigma: &[bool]) -> f64 {
    if sigma.is_empty() {
        return 0.0;
    }
    sigma.iter().filter(|&&b| b).count() as f64 / sigma.len() as f64
}

/// Normalised Hamming distance between two equal-length patterns.
pub fn hamming_fraction(a: &[bool], b: &[bool]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    if a.is_empty() {
        return 0.0;
    }
    a.iter().zip(b).filter(|(x, y)| x != y).count() as f64 / a.len() as f64
}

pub fn density(states: &StateVector) -> f64 {
    fraction_ones(&states.sigma)
}

pub fn density_series(trajectory: &Trajectory) -> ObservableSeries {
    let values = trajectory.states.iter().map(|s| fraction_ones(s)).collect();
    ObservableSeries::new("density", 1, values)
}

/// Fraction of nodes that changed since the previous step, from `T = 2` on.
pub fn changing_rate(trajectory: &Trajectory) -> Result<ObservableSeries, MetricsError> {
    if trajectory.len() < 2 {
        return Err(MetricsError::TooShort(trajectory.len()));
    }
    let values = trajectory.states.windows(2).map(|w| hamming_fraction(&w[0], &w[1])).collect();
    Ok(ObservableSeries::new("changing_rate", 2, values))
}

fn pairwise_distance(a: &Trajectory, b: &Trajectory, name: &str) -> ObservableSeries {
    let values = a.states.iter().zip(&b.states).map(|(x, y)| hamming_fraction(x, y)).collect();
    ObservableSeries::new(name, 1, values)
}

fn check_common(a: &Trajectory, b: &Trajectory) -> Result<(), MetricsError> {
    if a.graph_fingerprint != b.graph_fingerprint || a.n() != b.n() {
        return Err(MetricsError::Mismatch("different graphs"));
    }
    if a.rule != b.rule {
        return Err(MetricsError::Mismatch("different rules"));
    }
    if a.len() != b.len() {
        return Err(MetricsError::Mismatch("different lengths"));
    }
    Ok(())
}

/// Spread of a single-node perturbation between two otherwise identical runs.
pub fn damage_series(reference: &Trajectory, perturbed: &Trajectory) -> Result<ObservableSeries, MetricsError> {
    check_common(reference, perturbed)?;
    if reference.memory != perturbed.memory {
        return Err(MetricsError::Mismatch("different memory models"));
    }
    let flipped = reference.initial().iter().zip(perturbed.initial()).filter(|(a, b)| a != b).count();
    if flipped != 1 {
        return Err(MetricsError::Mismatch("initial states must differ in exactly one node"));
    }
    Ok(pairwise_distance(reference, perturbed, "damage"))
}

/// Distance between a run with memory and its memoryless twin.
pub fn cross_distance(historic: &Trajectory, ahistoric: &Trajectory) -> Result<ObservableSeries, MetricsError> {
    check_common(historic, ahistoric)?;
    if historic.initial() != ahistoric.initial() {
        return Err(MetricsError::Mismatch("different initial states"));
    }
    Ok(pairwise_distance(historic, ahistoric, "cross_distance"))
}

/// Mean of the last `k` values.
pub fn asymptotic(series: &ObservableSeries, k: usize) -> Result<f64, MetricsError> {
    if k == 0 {
        return Err(MetricsError::EmptyWindow);
    }
    let len = series.len();
    if len < k {
        return Err(MetricsError::SeriesShorterThanWindow { len, k });
    }
    Ok(series.values[len - k..].iter().sum::<f64>() / k as f64)
}
