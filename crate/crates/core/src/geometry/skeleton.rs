use std::collections::BTreeMap;

use rayon::prelude::*;

use super::grid::UniformGrid;
use super::lune::Lune;
use super::{GeometryError, PointSet};

/// Parameters of a lune-based β-skeleton.
///
/// The lune is always open: points on its boundary do not block an edge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SkeletonConfig {
    pub beta: f64,
}

impl SkeletonConfig {
    pub fn new(beta: f64) -> Result<Self, GeometryError> {
        if beta > 0.0 && beta.is_finite() {
            Ok(Self { beta })
        } else {
            Err(GeometryError::InvalidBeta(beta))
        }
    }
}

/// Undirected simple graph stored as sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonGraph {
    adjacency: Vec<Vec<u32>>,
}

impl SkeletonGraph {
    /// Builds a graph from an edge list. Self-loops are rejected; repeated
    /// edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GeometryError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(i, j) in edges {
            if i >= n || j >= n {
                return Err(GeometryError::NodeOutOfRange { node: i.max(j), n });
            }
            if i == j {
                return Err(GeometryError::SelfLoop(i));
            }
            adjacency[i].push(j as u32);
            adjacency[j].push(i as u32);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self { adjacency })
    }

    pub fn empty(n: usize) -> Self {
        Self { adjacency: vec![Vec::new(); n] }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, i: usize) -> &[u32] {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].binary_search(&(j as u32)).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(i, list)| {
            list.iter()
                .map(|&j| j as usize)
                .filter(move |&j| j > i)
                .map(move |j| (i, j))
        })
    }

    /// True iff every edge of `self` is also an edge of `other`.
    pub fn is_subgraph_of(&self, other: &SkeletonGraph) -> bool {
        self.n() == other.n() && self.edges().all(|(i, j)| other.has_edge(i, j))
    }

    /// Applies a relabelling where new node `k` is old node `order[k]`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        let mut inverse = vec![0usize; order.len()];
        for (new, &old) in order.iter().enumerate() {
            inverse[old] = new;
        }
        let edges: Vec<(usize, usize)> = self.edges().map(|(i, j)| (inverse[i], inverse[j])).collect();
        Self::from_edges(self.n(), &edges).expect("permutation of a valid graph")
    }

    /// FNV-1a over the node count and sorted edge list. Used to check that
    /// two trajectories ran on the same wiring.
    pub fn fingerprint(&self) -> u64 {
        const PRIME: u64 = 0x0000_0100_0000_01b3;
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut feed = |v: u64| {
            for b in v.to_le_bytes() {
                h ^= b as u64;
                h = h.wrapping_mul(PRIME);
            }
        };
        feed(self.n() as u64);
        for (i, j) in self.edges() {
            feed(i as u64);
            feed(j as u64);
        }
        h
    }
}

/// Summary of node degrees `K_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeStats {
    pub mean: f64,
    pub min: usize,
    pub max: usize,
    /// degree -> number of nodes with that degree
    pub histogram: BTreeMap<usize, usize>,
}

pub fn degree_stats(graph: &SkeletonGraph) -> DegreeStats {
    let degrees = graph.degrees();
    let mut histogram = BTreeMap::new();
    for &k in &degrees {
        *histogram.entry(k).or_insert(0) += 1;
    }
    let n = degrees.len().max(1) as f64;
    DegreeStats {
        mean: degrees.iter().sum::<usize>() as f64 / n,
        min: degrees.iter().copied().min().unwrap_or(0),
        max: degrees.iter().copied().max().unwrap_or(0),
        histogram,
    }
}

/// Builds the β-skeleton of `points`.
///
/// Every pair is tested, but blockers are only looked up in grid cells that
/// overlap the lune's bounding box. The cell holding the lune centre is probed
/// first; for long pairs it almost always contains a blocker.
pub fn build_beta_skeleton(points: &PointSet, config: SkeletonConfig) -> SkeletonGraph {
    let pts = points.points();
    let n = pts.len();
    let cell = (1.0 / (n as f64).sqrt()).min(1.0);
    let grid = UniformGrid::new(pts, cell);
    let beta = config.beta;

    let lists: Vec<Vec<(usize, usize)>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut out = Vec::new();
            for j in i + 1..n {
                let lune = Lune::new(pts[i], pts[j], beta).expect("distinct points, valid beta");
                let blocks = |z: u32| {
                    let z = z as usize;
                    z != i && z != j && lune.contains(pts[z])
                };
                let blocked = grid.cell_members(lune.centre()).iter().any(|&z| blocks(z))
                    || grid.any_in_box(&lune.bounding_box(), blocks);
                if !blocked {
                    out.push((i, j));
                }
            }
            out
        })
        .collect();

    let edges: Vec<(usize, usize)> = lists.into_iter().flatten().collect();
    SkeletonGraph::from_edges(n, &edges).expect("edges between valid node ids")
}

/// Reference construction: every pair against every other point, no pruning.
pub fn brute_force_skeleton(points: &PointSet, config: SkeletonConfig) -> SkeletonGraph {
    let pts = points.points();
    let n = pts.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let lune = Lune::new(pts[i], pts[j], config.beta).expect("distinct points, valid beta");
            let blocked = (0..n).any(|z| z != i && z != j && lune.contains(pts[z]));
            if !blocked {
                edges.push((i, j));
            }
        }
    }
    SkeletonGraph::from_edges(n, &edges).expect("edges between valid node ids")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{generate_points, lune_membership, Point};

    fn set(points: &[(f64, f64)]) -> PointSet {
        PointSet::from_points(points.iter().map(|&(x, y)| Point::new(x, y)).collect(), 0).unwrap()
    }

    #[test]
    fn two_points_single_edge() {
        let ps = set(&[(0.1, 0.1), (0.9, 0.8)]);
        for beta in [0.5, 1.0, 2.0, 5.0] {
            let cfg = SkeletonConfig::new(beta).unwrap();
            let g = build_beta_skeleton(&ps, cfg);
            assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
            assert_eq!(brute_force_skeleton(&ps, cfg), g);
        }
    }

    #[test]
    fn collinear_midpoint_blocks_long_edge() {
        let ps = set(&[(0.0, 0.0), (0.5, 0.0), (1.0, 0.0)]);
        assert!(lune_membership(ps.get(0), ps.get(2), 1.0, ps.get(1)).unwrap());
        let g = build_beta_skeleton(&ps, SkeletonConfig::new(1.0).unwrap());
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn equilateral_triangle_keeps_all_edges_at_two() {
        // Apex chosen so that all three squared side lengths are exactly 1.0
        // in double precision; each vertex then sits on the boundary of the
        // other pairs' lunes.
        let apex = 0.866_025_403_784_438_7;
        let ps = set(&[(0.0, 0.0), (1.0, 0.0), (0.5, apex)]);
        let (a, b, c) = (ps.get(0), ps.get(1), ps.get(2));
        assert_eq!(a.dist2(b), 1.0);
        assert_eq!(a.dist2(c), 1.0);
        assert_eq!(b.dist2(c), 1.0);
        let cfg = SkeletonConfig::new(2.0).unwrap();
        let g = build_beta_skeleton(&ps, cfg);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(brute_force_skeleton(&ps, cfg), g);
    }

    #[test]
    fn monotone_in_beta() {
        let ps = generate_points(300, 4).unwrap();
        let graphs: Vec<SkeletonGraph> = [0.9, 1.0, 1.5, 2.0]
            .iter()
            .map(|&b| build_beta_skeleton(&ps, SkeletonConfig::new(b).unwrap()))
            .collect();
        for w in graphs.windows(2) {
            assert!(w[1].is_subgraph_of(&w[0]));
        }
    }

    #[test]
    fn degree_stats_small_cases() {
        let s = degree_stats(&SkeletonGraph::empty(5));
        assert_eq!((s.mean, s.min, s.max), (0.0, 0, 0));
        let s = degree_stats(&SkeletonGraph::from_edges(2, &[(0, 1)]).unwrap());
        assert_eq!((s.mean, s.min, s.max), (1.0, 1, 1));
        assert_eq!(s.histogram.get(&1), Some(&2));
    }

    #[test]
    fn from_edges_rejects_loops_and_out_of_range() {
        assert!(matches!(SkeletonGraph::from_edges(3, &[(1, 1)]), Err(GeometryError::SelfLoop(1))));
        assert!(SkeletonGraph::from_edges(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn translation_preserves_adjacency() {
        // Translate by a dyadic offset on points kept away from the border.
        let base = generate_points(120, 21).unwrap();
        let shrunk: Vec<Point> = base.points().iter().map(|p| Point::new(p.x * 0.5, p.y * 0.5)).collect();
        let moved: Vec<Point> = shrunk.iter().map(|p| Point::new(p.x + 0.25, p.y + 0.125)).collect();
        let a = PointSet::from_points(shrunk, 0).unwrap();
        let b = PointSet::from_points(moved, 0).unwrap();
        for beta in [0.9, 1.0, 2.0] {
            let cfg = SkeletonConfig::new(beta).unwrap();
            assert_eq!(build_beta_skeleton(&a, cfg), build_beta_skeleton(&b, cfg));
        }
    }

    #[test]
    fn quarter_turn_preserves_adjacency() {
        // (x, y) -> (1 - y, x) keeps the unit square and is exact for
        // coordinates in [0, 1] up to rounding of 1 - y.
        let base = generate_points(150, 33).unwrap();
        let rotated: Vec<Point> = base.points().iter().map(|p| Point::new(1.0 - p.y, p.x)).collect();
        let rot = PointSet::from_points(rotated, 0).unwrap();
        let cfg = SkeletonConfig::new(1.0).unwrap();
        assert_eq!(build_beta_skeleton(&base, cfg), build_beta_skeleton(&rot, cfg));
    }
}
