//! Lune-based β-neighbourhoods.
//!
//! For `β >= 1` the neighbourhood of `(p, q)` is the intersection of two disks
//! of radius `β·d/2` centred at `(1-β/2)p + (β/2)q` and `(β/2)p + (1-β/2)q`.
//! For `β <= 1` it is the intersection of the two disks of radius `d/(2β)`
//! whose boundary circles pass through both `p` and `q`. At `β = 1` both
//! constructions are the disk with diameter `pq`.
//!
//! Membership is strict: a point on the boundary is outside the lune.

use super::{GeometryError, Point};

/// Axis-aligned box, `[min_x, max_x] x [min_y, max_y]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundingBox {
    pub min_x: f64,
    pub min_y: f64,
    pub max_x: f64,
    pub max_y: f64,
}

/// A precomputed β-neighbourhood for one point pair.
#[derive(Debug, Clone, Copy)]
pub struct Lune {
    c1: Point,
    c2: Point,
    radius2: f64,
    radius: f64,
}

impl Lune {
    pub fn new(p: Point, q: Point, beta: f64) -> Result<Self, GeometryError> {
        if !(beta > 0.0) || !beta.is_finite() {
            return Err(GeometryError::InvalidBeta(beta));
        }
        let d2 = p.dist2(q);
        if d2 == 0.0 {
            return Err(GeometryError::DegeneratePair);
        }
        Ok(if beta >= 1.0 {
            Self::large_beta(p, q, beta, d2)
        } else {
            Self::small_beta(p, q, beta, d2)
        })
    }

    fn large_beta(p: Point, q: Point, beta: f64, d2: f64) -> Self {
        let a = 1.0 - beta / 2.0;
        let b = beta / 2.0;
        let c1 = Point::new(a * p.x + b * q.x, a * p.y + b * q.y);
        let c2 = Point::new(b * p.x + a * q.x, b * p.y + a * q.y);
        let radius2 = beta * beta * 0.25 * d2;
        Self { c1, c2, radius2, radius: radius2.sqrt() }
    }

    fn small_beta(p: Point, q: Point, beta: f64, d2: f64) -> Self {
        let radius2 = d2 / (4.0 * beta * beta);
        let half2 = 0.25 * d2;
        // Offset of the centres from the midpoint, along the bisector.
        let h = (radius2 - half2).max(0.0).sqrt();
        let d = d2.sqrt();
        let (ux, uy) = (-(q.y - p.y) / d, (q.x - p.x) / d);
        let mx = (p.x + q.x) * 0.5;
        let my = (p.y + q.y) * 0.5;
        let c1 = Point::new(mx + h * ux, my + h * uy);
        let c2 = Point::new(mx - h * ux, my - h * uy);
        Self { c1, c2, radius2, radius: radius2.sqrt() }
    }

    #[inline]
    pub fn contains(&self, x: Point) -> bool {
        x.dist2(self.c1) < self.radius2 && x.dist2(self.c2) < self.radius2
    }

    /// Radius of each of the two disks.
    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Midpoint of the two disk centres, always the midpoint of `pq`.
    pub fn centre(&self) -> Point {
        Point::new((self.c1.x + self.c2.x) * 0.5, (self.c1.y + self.c2.y) * 0.5)
    }

    /// Intersection of the two disks' bounding boxes; contains the lune.
    pub fn bounding_box(&self) -> BoundingBox {
        let r = self.radius;
        BoundingBox {
            min_x: (self.c1.x - r).max(self.c2.x - r),
            max_x: (self.c1.x + r).min(self.c2.x + r),
            min_y: (self.c1.y - r).max(self.c2.y - r),
            max_y: (self.c1.y + r).min(self.c2.y + r),
        }
    }
}

/// True iff `x` lies strictly inside the β-neighbourhood of `(p, q)`.
pub fn lune_membership(p: Point, q: Point, beta: f64, x: Point) -> Result<bool, GeometryError> {
    Ok(Lune::new(p, q, beta)?.contains(x))
}
