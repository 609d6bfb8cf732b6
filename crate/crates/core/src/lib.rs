//! Two-state automata on lune-based β-skeletons, with optional node memory.
//!
//! The pipeline is: [`geometry`] draws points and builds the skeleton,
//! [`memory`] turns each node's state history into a trait state,
//! [`engine`] applies the parity or majority rule to neighbour traits,
//! [`metrics`] reduces trajectories to density, changing rate and damage, and
//! [`experiments`] runs seeded ensembles and parameter sweeps on top. [`io`]
//! holds the file formats and [`cli`] the command-line front end.
//!
//! Runnable walkthroughs live in this crate's `examples/` directory.

pub mod cli;
pub mod engine;
pub mod experiments;
pub mod geometry;
pub mod io;
pub mod memory;
pub mod metrics;

pub use engine::{run, step, Rule, StateVector, Trajectory};
pub use experiments::{run_ensemble, sweep, DamageSpec, ExperimentConfig, InitSpec, SweepParameter};
pub use geometry::{build_beta_skeleton, generate_points, Point, PointSet, SkeletonConfig, SkeletonGraph};
pub use memory::{critical_alpha, MemoryModel};
