use std::fmt;

use rayon::prelude::*;

use super::{realize, simulate, DamageSpec, ExperimentConfig, ExperimentError, Realization, SeedRun};
use crate::memory::MemoryModel;

/// Memory parameter varied by a sweep.
#[derive(Debug, Clone, PartialEq)]
pub enum SweepParameter {
    /// τ-majority lengths. A τ at or above `t_max` is full memory.
    Tau(Vec<u32>),
    /// α-memory factors.
    Alpha(Vec<f64>),
}

impl SweepParameter {
    pub fn len(&self) -> usize {
        match self {
            SweepParameter::Tau(v) => v.len(),
            SweepParameter::Alpha(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn name(&self) -> &'static str {
        match self {
            SweepParameter::Tau(_) => "tau",
            SweepParameter::Alpha(_) => "alpha",
        }
    }

    fn models(&self) -> Vec<(f64, MemoryModel)> {
        match self {
            SweepParameter::Tau(v) => v.iter().map(|&t| (t as f64, MemoryModel::TauMajority(t))).collect(),
            SweepParameter::Alpha(v) => v.iter().map(|&a| (a, MemoryModel::Alpha(a))).collect(),
        }
    }
}

impl fmt::Display for SweepParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let values: Vec<String> = match self {
            SweepParameter::Tau(v) => v.iter().map(u32::to_string).collect(),
            SweepParameter::Alpha(v) => v.iter().map(f64::to_string).collect(),
        };
        write!(f, "{}:{}", self.name(), values.join(","))
    }
}

/// Ensemble summary for one `(β, parameter value)` pair.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub beta: f64,
    pub value: f64,
    pub memory: MemoryModel,
    /// Mean over simulations of the asymptotic changing rate.
    pub asymptotic_changing_rate: f64,
    /// Mean over simulations of the asymptotic damage.
    pub asymptotic_damage: f64,
    pub runs: Vec<SeedRun>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub parameter: &'static str,
    pub rows: Vec<SweepRow>,
}

impl SweepTable {
    /// Row with the lowest asymptotic changing rate (first one on ties).
    pub fn argmin_changing_rate(&self) -> Option<&SweepRow> {
        self.rows.iter().fold(None, |best: Option<&SweepRow>, r| match best {
            Some(b) if b.asymptotic_changing_rate <= r.asymptotic_changing_rate => Some(b),
            _ => Some(r),
        })
    }

    pub fn row(&self, beta: f64, value: f64) -> Option<&SweepRow> {
        self.rows.iter().find(|r| r.beta == beta && r.value == value)
    }
}

/// Asymptotic changing rate and damage for every parameter value at the
/// template's β. Realisations (points, graph, initial state) are drawn once
/// and reused for every value. Damage defaults to flipping node 0.
pub fn sweep(template: &ExperimentConfig, parameter: &SweepParameter) -> Result<SweepTable, ExperimentError> {
    sweep_betas(template, &[template.beta], parameter)
}

/// [`sweep`] over several β values; rows are ordered by β, then parameter.
pub fn sweep_betas(
    template: &ExperimentConfig,
    betas: &[f64],
    parameter: &SweepParameter,
) -> Result<SweepTable, ExperimentError> {
    if parameter.is_empty() || betas.is_empty() {
        return Err(ExperimentError::EmptySweep);
    }
    let mut rows = Vec::with_capacity(betas.len() * parameter.len());
    for &beta in betas {
        let base = ExperimentConfig {
            beta,
            damage: Some(template.damage.unwrap_or(DamageSpec::Node(0))),
            ..template.clone()
        };
        base.validate()?;
        for (_, m) in parameter.models() {
            ExperimentConfig { memory: m, ..base.clone() }.validate()?;
        }
        let reals: Vec<Realization> = (0..base.n_seeds)
            .into_par_iter()
            .map(|i| realize(&base, i))
            .collect::<Result<_, _>>()?;

        let beta_rows = parameter
            .models()
            .into_par_iter()
            .map(|(value, memory)| {
                let cfg = ExperimentConfig { memory, ..base.clone() };
                let runs = reals
                    .par_iter()
                    .map(|r| simulate(&cfg, r, false))
                    .collect::<Result<Vec<_>, _>>()?;
                let k = runs.len() as f64;
                Ok(SweepRow {
                    beta,
                    value,
                    memory,
                    asymptotic_changing_rate: runs.iter().map(|r| r.asymptotic.changing_rate).sum::<f64>() / k,
                    asymptotic_damage: runs.iter().filter_map(|r| r.asymptotic.damage).sum::<f64>() / k,
                    runs,
                })
            })
            .collect::<Result<Vec<_>, ExperimentError>>()?;
        rows.extend(beta_rows);
    }
    Ok(SweepTable { parameter: parameter.name(), rows })
}
