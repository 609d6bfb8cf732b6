//! Uniform bucket grid used to prune blocker candidates.

use super::lune::BoundingBox;
use super::Point;

/// Points bucketed into square cells, stored in CSR layout.
#[derive(Debug, Clone)]
pub struct UniformGrid {
    origin: Point,
    cell: f64,
    cols: usize,
    rows: usize,
    starts: Vec<usize>,
    items: Vec<u32>,
}

impl UniformGrid {
    /// Buckets `points` into cells of side `cell` covering their bounding box.
    pub fn new(points: &[Point], cell: f64) -> Self {
        let (mut min_x, mut min_y) = (f64::INFINITY, f64::INFINITY);
        let (mut max_x, mut max_y) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in points {
            min_x = min_x.min(p.x);
            min_y = min_y.min(p.y);
            max_x = max_x.max(p.x);
            max_y = max_y.max(p.y);
        }
        let cols = (((max_x - min_x) / cell).floor() as usize + 1).max(1);
        let rows = (((max_y - min_y) / cell).floor() as usize + 1).max(1);
        let mut grid = Self {
            origin: Point::new(min_x, min_y),
            cell,
            cols,
            rows,
            starts: vec![0; cols * rows + 1],
            items: vec![0; points.len()],
        };
        let cells: Vec<usize> = points.iter().map(|&p| grid.cell_index(p)).collect();
        for &c in &cells {
            grid.starts[c + 1] += 1;
        }
        for c in 0..cols * rows {
            grid.starts[c + 1] += grid.starts[c];
        }
        let mut fill = grid.starts.clone();
        for (i, &c) in cells.iter().enumerate() {
            grid.items[fill[c]] = i as u32;
            fill[c] += 1;
        }
        grid
    }

    fn col_of(&self, x: f64) -> usize {
        let c = ((x - self.origin.x) / self.cell).floor();
        (c.max(0.0) as usize).min(self.cols - 1)
    }

    fn row_of(&self, y: f64) -> usize {
        let r = ((y - self.origin.y) / self.cell).floor();
        (r.max(0.0) as usize).min(self.rows - 1)
    }

    fn cell_index(&self, p: Point) -> usize {
        self.row_of(p.y) * self.cols + self.col_of(p.x)
    }

    pub fn cell_size(&self) -> f64 {
        self.cell
    }

    /// Points bucketed in the cell containing `p`.
    pub fn cell_members(&self, p: Point) -> &[u32] {
        let c = self.cell_index(p);
        &self.items[self.starts[c]..self.starts[c + 1]]
    }

    /// Calls `visit` for every point in cells overlapping `bb`, stopping as
    /// soon as it returns `true`. Returns whether a visit stopped the scan.
    pub fn any_in_box(&self, bb: &BoundingBox, mut visit: impl FnMut(u32) -> bool) -> bool {
        if bb.min_x > bb.max_x || bb.min_y > bb.max_y {
            return false;
        }
        let (c0, c1) = (self.col_of(bb.min_x), self.col_of(bb.max_x));
        let (r0, r1) = (self.row_of(bb.min_y), self.row_of(bb.max_y));
        for r in r0..=r1 {
            let row = r * self.cols;
            let span = &self.items[self.starts[row + c0]..self.starts[row + c1 + 1]];
            if span.iter().any(|&i| visit(i)) {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_query_finds_every_point_inside() {
        let pts: Vec<Point> = (0..400)
            .map(|k| Point::new((k % 20) as f64 / 19.0, (k / 20) as f64 / 19.0))
            .collect();
        let grid = UniformGrid::new(&pts, 0.13);
        let bb = BoundingBox { min_x: 0.2, max_x: 0.55, min_y: 0.31, max_y: 0.9 };
        let mut seen = Vec::new();
        grid.any_in_box(&bb, |i| {
            seen.push(i as usize);
            false
        });
        for (i, p) in pts.iter().enumerate() {
            let inside = p.x >= bb.min_x && p.x <= bb.max_x && p.y >= bb.min_y && p.y <= bb.max_y;
            if inside {
                assert!(seen.contains(&i), "missed point {i}");
            }
        }
    }

    #[test]
    fn every_point_lands_in_exactly_one_cell() {
        let pts: Vec<Point> = (0..97).map(|k| Point::new((k as f64 * 0.37) % 1.0, (k as f64 * 0.61) % 1.0)).collect();
        let grid = UniformGrid::new(&pts, 0.1);
        let mut all: Vec<u32> = grid.items.clone();
        all.sort();
        assert_eq!(all, (0..97).collect::<Vec<u32>>());
        for (i, p) in pts.iter().enumerate() {
            assert!(grid.cell_members(*p).contains(&(i as u32)));
        }
    }
}
