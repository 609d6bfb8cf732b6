//! Random point sets and lune-based β-skeleton graphs.

mod grid;
mod lune;
mod points;
mod skeleton;

pub use grid::UniformGrid;
pub use lune::{lune_membership, BoundingBox, Lune};
pub use points::{generate_points, Point, PointSet};
pub use skeleton::{
    brute_force_skeleton, build_beta_skeleton, degree_stats, DegreeStats, SkeletonConfig,
    SkeletonGraph,
};

#[derive(Debug, thiserror::Error)]
pub enum GeometryError {
    #[error("point set must contain at least one point")]
    EmptyPointSet,
    #[error("point {0} duplicates an earlier point")]
    DuplicatePoint(usize),
    #[error("point {0} has a non-finite coordinate")]
    NonFinite(usize),
    #[error("beta must be a positive finite number, got {0}")]
    InvalidBeta(f64),
    #[error("lune of a point with itself is undefined")]
    DegeneratePair,
    #[error("self-loop at node {0}")]
    SelfLoop(usize),
    #[error("node {node} out of range for {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },
}
