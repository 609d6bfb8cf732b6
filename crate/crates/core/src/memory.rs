//! Node memory: each node keeps a summary of its past states and exposes a
//! trait state that the transition rule reads instead of the raw state.
//!
//! History is recorded from `T = 1`, the initial configuration.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

/// Half-width of the band around 0.5 in which an α-weighted mean counts as a tie.
pub const ALPHA_TIE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MemoryModel {
    /// Trait equals the current state.
    Ahistoric,
    /// Majority over the last `tau` states; ties keep the current state.
    TauMajority(u32),
    /// Majority over the whole history; ties keep the current state.
    FullMajority,
    /// Geometrically discounted mean thresholded at 0.5.
    Alpha(f64),
    /// XOR of the last three states.
    ParityWindow3,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum MemoryError {
    #[error("memory state was created for {state}, not {model}")]
    ModelMismatch { state: MemoryModel, model: MemoryModel },
    #[error("tau must be at least 1")]
    ZeroTau,
    #[error("alpha must lie in [0, 1], got {0}")]
    AlphaOutOfRange(f64),
    #[error("unrecognised memory model '{0}'")]
    Unrecognised(String),
}

impl MemoryModel {
    pub fn validate(self) -> Result<Self, MemoryError> {
        match self {
            MemoryModel::TauMajority(0) => Err(MemoryError::ZeroTau),
            MemoryModel::Alpha(a) if !(0.0..=1.0).contains(&a) => Err(MemoryError::AlphaOutOfRange(a)),
            m => Ok(m),
        }
    }

    pub fn is_ahistoric(self) -> bool {
        matches!(self, MemoryModel::Ahistoric)
    }
}

impl fmt::Display for MemoryModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MemoryModel::Ahistoric => f.write_str("ahistoric"),
            MemoryModel::TauMajority(t) => write!(f, "majority:{t}"),
            MemoryModel::FullMajority => f.write_str("majority:full"),
            MemoryModel::Alpha(a) => write!(f, "alpha:{a}"),
            MemoryModel::ParityWindow3 => f.write_str("parity3"),
        }
    }
}

impl FromStr for MemoryModel {
    type Err = MemoryError;

    /// `ahistoric | majority:<tau> | majority:full | alpha:<value> | parity3`
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || MemoryError::Unrecognised(s.to_string());
        let model = match s.split_once(':') {
            None => match s {
                "ahistoric" => MemoryModel::Ahistoric,
                "parity3" => MemoryModel::ParityWindow3,
                _ => return Err(bad()),
            },
            Some(("majority", "full")) => MemoryModel::FullMajority,
            Some(("majority", tau)) => MemoryModel::TauMajority(tau.trim().parse().map_err(|_| bad())?),
            Some(("alpha", a)) => {
                let a: f64 = a.trim().parse().map_err(|_| bad())?;
                if !a.is_finite() {
                    return Err(bad());
                }
                MemoryModel::Alpha(a)
            }
            Some(_) => return Err(bad()),
        };
        model.validate()
    }
}

/// Per-node memory bookkeeping for one model.
#[derive(Debug, Clone, PartialEq)]
pub enum NodeMemory {
    Ahistoric,
    TauMajority {
        tau: u32,
        window: VecDeque<bool>,
        ones: u32,
    },
    FullMajority {
        ones: u64,
        total: u64,
    },
    Alpha {
        alpha: f64,
        /// Discounted sum of past states.
        omega: f64,
        /// Discounted sum of unit weights, `1 + α + ... + α^(T-1)`.
        capacity: f64,
        /// Exact counts, used when `alpha == 1`.
        ones: u64,
        total: u64,
    },
    ParityWindow3 {
        recent: [bool; 3],
        steps: u64,
    },
}

impl NodeMemory {
    pub fn new(model: MemoryModel) -> Self {
        match model {
            MemoryModel::Ahistoric => NodeMemory::Ahistoric,
            MemoryModel::TauMajority(tau) => NodeMemory::TauMajority {
                tau,
                window: VecDeque::with_capacity(tau as usize),
                ones: 0,
            },
            MemoryModel::FullMajority => NodeMemory::FullMajority { ones: 0, total: 0 },
            MemoryModel::Alpha(alpha) => NodeMemory::Alpha {
                alpha,
                omega: 0.0,
                capacity: 0.0,
                ones: 0,
                total: 0,
            },
            MemoryModel::ParityWindow3 => NodeMemory::ParityWindow3 { recent: [false; 3], steps: 0 },
        }
    }

    /// Restores an α-memory from saved charges, e.g. after a checkpoint.
    /// `total` and `ones` are only consulted when `alpha == 1`.
    pub fn alpha_from_charges(alpha: f64, omega: f64, capacity: f64, ones: u64, total: u64) -> Self {
        NodeMemory::Alpha { alpha, omega, capacity, ones, total }
    }

    pub fn model(&self) -> MemoryModel {
        match self {
            NodeMemory::Ahistoric => MemoryModel::Ahistoric,
            NodeMemory::TauMajority { tau, .. } => MemoryModel::TauMajority(*tau),
            NodeMemory::FullMajority { .. } => MemoryModel::FullMajority,
            NodeMemory::Alpha { alpha, .. } => MemoryModel::Alpha(*alpha),
            NodeMemory::ParityWindow3 { .. } => MemoryModel::ParityWindow3,
        }
    }

    /// `(ω, Ω)` for α-memory.
    pub fn charges(&self) -> Option<(f64, f64)> {
        match self {
            NodeMemory::Alpha { omega, capacity, .. } => Some((*omega, *capacity)),
            _ => None,
        }
    }

    /// Records `sigma` as the newest state and returns the trait state.
    pub fn record(&mut self, sigma: bool) -> bool {
        match self {
            NodeMemory::Ahistoric => sigma,
            NodeMemory::TauMajority { tau, window, ones } => {
                if window.len() == *tau as usize && window.pop_front() == Some(true) {
                    *ones -= 1;
                }
                window.push_back(sigma);
                *ones += sigma as u32;
                majority_or_keep(*ones as u64, window.len() as u64, sigma)
            }
            NodeMemory::FullMajority { ones, total } => {
                *ones += sigma as u64;
                *total += 1;
                majority_or_keep(*ones, *total, sigma)
            }
            NodeMemory::Alpha { alpha, omega, capacity, ones, total } => {
                let a = *alpha;
                *omega = a * *omega + f64::from(sigma as u8);
                *capacity = a * *capacity + 1.0;
                *ones += sigma as u64;
                *total += 1;
                if a == 1.0 {
                    return majority_or_keep(*ones, *total, sigma);
                }
                let m = *omega / *capacity;
                if m > 0.5 + ALPHA_TIE_TOLERANCE {
                    true
                } else if m < 0.5 - ALPHA_TIE_TOLERANCE {
                    false
                } else {
                    sigma
                }
            }
            NodeMemory::ParityWindow3 { recent, steps } => {
                recent.rotate_left(1);
                recent[2] = sigma;
                *steps += 1;
                // Unfilled slots are false, so the XOR covers the bootstrap:
                // s1 = σ1, s2 = σ1 ⊕ σ2.
                recent[0] ^ recent[1] ^ recent[2]
            }
        }
    }
}

fn majority_or_keep(ones: u64, len: u64, last: bool) -> bool {
    match (2 * ones).cmp(&len) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => last,
    }
}

/// Feeds `sigma_new` into `state` after checking it belongs to `model`.
pub fn memory_update(
    state: &mut NodeMemory,
    sigma_new: bool,
    model: MemoryModel,
) -> Result<bool, MemoryError> {
    let own = state.model();
    let same = match (own, model) {
        // α compared by bit pattern
        (MemoryModel::Alpha(a), MemoryModel::Alpha(b)) => a.to_bits() == b.to_bits(),
        (a, b) => a == b,
    };
    if !same {
        return Err(MemoryError::ModelMismatch { state: own, model });
    }
    Ok(state.record(sigma_new))
}

/// Memory for every node of a network, updated in lockstep.
#[derive(Debug, Clone)]
pub struct MemoryBank {
    model: MemoryModel,
    nodes: Vec<NodeMemory>,
}

impl MemoryBank {
    pub fn new(model: MemoryModel, n: usize) -> Self {
        Self { model, nodes: vec![NodeMemory::new(model); n] }
    }

    pub fn model(&self) -> MemoryModel {
        self.model
    }

    pub fn nodes(&self) -> &[NodeMemory] {
        &self.nodes
    }

    /// Records one synchronous step of states and writes the traits into `traits`.
    pub fn record_into(&mut self, sigma: &[bool], traits: &mut Vec<bool>) {
        assert_eq!(sigma.len(), self.nodes.len(), "state length must match memory bank");
        traits.clear();
        traits.extend(self.nodes.iter_mut().zip(sigma).map(|(m, &s)| m.record(s)));
    }

    pub fn record(&mut self, sigma: &[bool]) -> Vec<bool> {
        let mut out = Vec::with_capacity(sigma.len());
        self.record_into(sigma, &mut out);
        out
    }
}

/// Root in `(0.5, 1)` of `α^T - 2α + 1 = 0`, the smallest memory factor that
/// can change a trait within `T` steps. `None` for `T < 3`.
///
/// Written as `α = 1/2 + ε`, the equation becomes `ε = (1/2 + ε)^T / 2`, a
/// contraction for `T >= 3`. Iterating on `ε` avoids the cancellation in
/// `1 - 2α`. The root approaches 0.5 like `2^-(T+1)`, so from `T = 54` on the
/// nearest double is 0.5 itself.
pub fn critical_alpha(t: u32) -> Option<f64> {
    if t < 3 {
        return None;
    }
    let g = |e: f64| 0.5 * (0.5 + e).powi(t as i32);
    let mut e = 0.25;
    for _ in 0..10_000 {
        let next = g(e);
        if next == e {
            break;
        }
        e = next;
    }
    Some(0.5 + e)
}
