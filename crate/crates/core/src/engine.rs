//! Synchronous evolution of a two-state automaton on a graph.
//!
//! Each step first passes the current states through node memory to get
//! traits, then applies the rule to the sum of neighbour traits. A node never
//! counts itself.

use std::collections::BTreeMap;
use std::fmt;

use crate::geometry::SkeletonGraph;
use crate::memory::{MemoryBank, MemoryModel};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EngineError {
    #[error("expected {expected} nodes, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("t_max must be at least 1")]
    ZeroSteps,
    #[error("rule table has no entry for sum={sum}, degree={degree}, state={state}")]
    MissingTableEntry { sum: u32, degree: u32, state: bool },
}

/// Lookup table from `(neighbour sum, degree, current state)` to next state.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TotalisticTable {
    entries: BTreeMap<(u32, u32, bool), bool>,
}

impl TotalisticTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, sum: u32, degree: u32, state: bool, next: bool) {
        self.entries.insert((sum, degree, state), next);
    }

    /// Tabulates `f` for every degree up to `max_degree` and every feasible sum.
    pub fn from_fn(max_degree: u32, f: impl Fn(u32, u32, bool) -> bool) -> Self {
        let mut table = Self::new();
        for degree in 0..=max_degree {
            for sum in 0..=degree {
                for state in [false, true] {
                    table.insert(sum, degree, state, f(sum, degree, state));
                }
            }
        }
        table
    }

    pub fn get(&self, sum: u32, degree: u32, state: bool) -> Option<bool> {
        self.entries.get(&(sum, degree, state)).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rule {
    /// Next state is the neighbour-trait sum mod 2.
    Parity,
    /// Strict majority of neighbour traits; a tie keeps the current state.
    MajorityNeutral,
    TotalisticTable(TotalisticTable),
}

impl Rule {
    fn apply(&self, sum: u32, degree: u32, state: bool) -> Result<bool, EngineError> {
        Ok(match self {
            Rule::Parity => sum % 2 == 1,
            Rule::MajorityNeutral => match (2 * sum).cmp(&degree) {
                std::cmp::Ordering::Greater => true,
                std::cmp::Ordering::Less => false,
                std::cmp::Ordering::Equal => state,
            },
            Rule::TotalisticTable(t) => t
                .get(sum, degree, state)
                .ok_or(EngineError::MissingTableEntry { sum, degree, state })?,
        })
    }

    /// The same rule as an explicit table covering degrees `0..=max_degree`.
    pub fn tabulate(&self, max_degree: u32) -> TotalisticTable {
        TotalisticTable::from_fn(max_degree, |s, k, x| {
            self.apply(s, k, x).expect("table covers every feasible entry")
        })
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::Parity => f.write_str("parity"),
            Rule::MajorityNeutral => f.write_str("majority"),
            Rule::TotalisticTable(t) => write!(f, "table[{}]", t.len()),
        }
    }
}

/// States of all nodes at one time step (`step` counts from 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateVector {
    pub sigma: Vec<bool>,
    pub step: usize,
}

impl StateVector {
    pub fn initial(sigma: Vec<bool>) -> Self {
        Self { sigma, step: 1 }
    }

    pub fn zeros(n: usize) -> Self {
        Self::initial(vec![false; n])
    }

    /// All zeros except `node`.
    pub fn single_active(n: usize, node: usize) -> Self {
        let mut s = Self::zeros(n);
        s.sigma[node] = true;
        s
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }

    pub fn ones(&self) -> usize {
        self.sigma.iter().filter(|&&b| b).count()
    }
}

/// Computes the next state from the current traits.
pub fn step(
    graph: &SkeletonGraph,
    traits: &[bool],
    current: &StateVector,
    rule: &Rule,
) -> Result<StateVector, EngineError> {
    let mut next = Vec::with_capacity(graph.n());
    step_into(graph, traits, &current.sigma, rule, &mut next)?;
    Ok(StateVector { sigma: next, step: current.step + 1 })
}

fn step_into(
    graph: &SkeletonGraph,
    traits: &[bool],
    current: &[bool],
    rule: &Rule,
    next: &mut Vec<bool>,
) -> Result<(), EngineError> {
    let n = graph.n();
    for len in [traits.len(), current.len()] {
        if len != n {
            return Err(EngineError::DimensionMismatch { expected: n, got: len });
        }
    }
    next.clear();
    for i in 0..n {
        let nbrs = graph.neighbors(i);
        let sum = nbrs.iter().filter(|&&j| traits[j as usize]).count() as u32;
        next.push(rule.apply(sum, nbrs.len() as u32, current[i])?);
    }
    Ok(())
}

/// A recorded run. `states[k]` and `traits[k]` belong to step `T = k + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub graph_fingerprint: u64,
    pub rule: Rule,
    pub memory: MemoryModel,
    /// Seed of the realisation this run belongs to, when there is one.
    pub seed: Option<u64>,
    pub states: Vec<Vec<bool>>,
    pub traits: Vec<Vec<bool>>,
}

impl Trajectory {
    pub fn n(&self) -> usize {
        self.states.first().map_or(0, Vec::len)
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// State vector at step `t` (1-based).
    pub fn state(&self, t: usize) -> StateVector {
        StateVector { sigma: self.states[t - 1].clone(), step: t }
    }

    pub fn initial(&self) -> &[bool] {
        &self.states[0]
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

/// Runs `t_max` steps, the first being `initial`.
pub fn run(
    graph: &SkeletonGraph,
    initial: &StateVector,
    rule: &Rule,
    memory: MemoryModel,
    t_max: usize,
) -> Result<Trajectory, EngineError> {
    if t_max == 0 {
        return Err(EngineError::ZeroSteps);
    }
    let n = graph.n();
    if initial.len() != n {
        return Err(EngineError::DimensionMismatch { expected: n, got: initial.len() });
    }
    let mut bank = MemoryBank::new(memory, n);
    let mut states = Vec::with_capacity(t_max);
    let mut traits = Vec::with_capacity(t_max);
    states.push(initial.sigma.clone());
    for t in 0..t_max {
        let s = bank.record(&states[t]);
        if t + 1 < t_max {
            let mut next = Vec::with_capacity(n);
            step_into(graph, &s, &states[t], rule, &mut next)?;
            states.push(next);
        }
        traits.push(s);
    }
    Ok(Trajectory {
        graph_fingerprint: graph.fingerprint(),
        rule: rule.clone(),
        memory,
        seed: None,
        states,
        traits,
    })
}
