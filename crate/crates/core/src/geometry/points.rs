use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::GeometryError;

/// A node location in the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    #[inline]
    pub fn dist2(self, other: Point) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }

    fn key(self) -> (u64, u64) {
        (self.x.to_bits(), self.y.to_bits())
    }
}

/// Ordered node coordinates; the index of a point is its node id.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    points: Vec<Point>,
    seed: u64,
}

impl PointSet {
    /// Wraps explicit coordinates. Rejects empty and duplicated inputs.
    pub fn from_points(points: Vec<Point>, seed: u64) -> Result<Self, GeometryError> {
        if points.is_empty() {
            return Err(GeometryError::EmptyPointSet);
        }
        let mut seen = HashSet::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if !p.x.is_finite() || !p.y.is_finite() {
                return Err(GeometryError::NonFinite(i));
            }
            if !seen.insert(p.key()) {
                return Err(GeometryError::DuplicatePoint(i));
            }
        }
        Ok(Self { points, seed })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn get(&self, id: usize) -> Point {
        self.points[id]
    }

    /// Relabels nodes: new id `k` holds old point `order[k]`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        Self {
            points: order.iter().map(|&i| self.points[i]).collect(),
            seed: self.seed,
        }
    }
}

/// Draws `n` points uniformly in the unit square.
///
/// Coordinates come from ChaCha8 seeded with `seed` via `seed_from_u64`,
/// drawn as `x0, y0, x1, y1, ...`. A draw that duplicates an earlier point is
/// discarded and redrawn from the same stream, so the result always has `n`
/// distinct points.
pub fn generate_points(n: usize, seed: u64) -> Result<PointSet, GeometryError> {
    if n == 0 {
        return Err(GeometryError::EmptyPointSet);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(n);
    let mut seen = HashSet::with_capacity(n);
    while points.len() < n {
        let p = Point::new(rng.random::<f64>(), rng.random::<f64>());
        if seen.insert(p.key()) {
            points.push(p);
        }
    }
    Ok(PointSet { points, seed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_point_in_unit_square() {
        let ps = generate_points(1, 99).unwrap();
        assert_eq!(ps.len(), 1);
        let p = ps.get(0);
        assert!((0.0..=1.0).contains(&p.x) && (0.0..=1.0).contains(&p.y));
    }

    #[test]
    fn deterministic_for_seed() {
        let a = generate_points(100, 12345).unwrap();
        let b = generate_points(100, 12345).unwrap();
        assert_eq!(a, b);
        let c = generate_points(100, 12346).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn thousand_points_in_bounds_and_distinct() {
        let ps = generate_points(1000, 7).unwrap();
        assert_eq!(ps.len(), 1000);
        for p in ps.points() {
            assert!((0.0..=1.0).contains(&p.x) && (0.0..=1.0).contains(&p.y));
        }
        assert!(PointSet::from_points(ps.points().to_vec(), 7).is_ok());
    }

    #[test]
    fn zero_points_rejected() {
        assert!(matches!(generate_points(0, 1), Err(GeometryError::EmptyPointSet)));
    }

    #[test]
    fn duplicates_rejected_in_explicit_sets() {
        let pts = vec![Point::new(0.1, 0.2), Point::new(0.3, 0.4), Point::new(0.1, 0.2)];
        assert!(matches!(
            PointSet::from_points(pts, 0),
            Err(GeometryError::DuplicatePoint(2))
        ));
    }
}
