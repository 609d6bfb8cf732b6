//! Plain-text graph files.
//!
//! ```text
//! <n> <beta> <seed>
//! <id> <x> <y>        (n lines, id = 0..n-1)
//! <i> <j>              (one line per edge, i < j)
//! ```
//!
//! Reals are written with 17 significant digits so a file read back yields
//! bit-identical coordinates.

use std::io::{BufRead, Write};

use super::{fmt_real, IoError};
use crate::geometry::{Point, PointSet, SkeletonGraph};

#[derive(Debug, Clone, PartialEq)]
pub struct GraphFile {
    pub beta: f64,
    pub points: PointSet,
    pub graph: SkeletonGraph,
}

pub fn write_graph<W: Write>(
    mut out: W,
    points: &PointSet,
    beta: f64,
    graph: &SkeletonGraph,
) -> std::io::Result<()> {
    writeln!(out, "{} {} {}", points.len(), fmt_real(beta), points.seed())?;
    for (i, p) in points.points().iter().enumerate() {
        writeln!(out, "{} {} {}", i, fmt_real(p.x), fmt_real(p.y))?;
    }
    for (i, j) in graph.edges() {
        writeln!(out, "{i} {j}")?;
    }
    out.flush()
}

pub fn read_graph<R: BufRead>(input: R) -> Result<GraphFile, IoError> {
    let mut lines = input.lines().enumerate().filter_map(|(k, l)| match l {
        Ok(l) if l.trim().is_empty() => None,
        Ok(l) => Some(Ok((k + 1, l))),
        Err(e) => Some(Err(e)),
    });
    let parse_err = |line: usize, msg: &str| IoError::Parse { line, message: msg.to_string() };

    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "empty graph file"))??;
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 3 {
        return Err(parse_err(hl, "header must be `n beta seed`"));
    }
    let n: usize = head[0].parse().map_err(|_| parse_err(hl, "bad node count"))?;
    let beta: f64 = head[1].parse().map_err(|_| parse_err(hl, "bad beta"))?;
    let seed: u64 = head[2].parse().map_err(|_| parse_err(hl, "bad seed"))?;

    let mut pts = Vec::with_capacity(n);
    for id in 0..n {
        let (ln, line) = lines.next().ok_or_else(|| parse_err(hl, "fewer point lines than n"))??;
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != 3 || f[0].parse::<usize>().ok() != Some(id) {
            return Err(parse_err(ln, "expected `id x y` with consecutive ids"));
        }
        let x: f64 = f[1].parse().map_err(|_| parse_err(ln, "bad x"))?;
        let y: f64 = f[2].parse().map_err(|_| parse_err(ln, "bad y"))?;
        pts.push(Point::new(x, y));
    }

    let mut edges = Vec::new();
    for item in lines {
        let (ln, line) = item?;
        let f: Vec<&str> = line.split_whitespace().collect();
        let (i, j) = match f.as_slice() {
            [a, b] => (
                a.parse::<usize>().map_err(|_| parse_err(ln, "bad edge endpoint"))?,
                b.parse::<usize>().map_err(|_| parse_err(ln, "bad edge endpoint"))?,
            ),
            _ => return Err(parse_err(ln, "expected `i j`")),
        };
        if i >= j {
            return Err(parse_err(ln, "edges must satisfy i < j"));
        }
        edges.push((i, j));
    }

    let points = PointSet::from_points(pts, seed)?;
    let graph = SkeletonGraph::from_edges(n, &edges)?;
    Ok(GraphFile { beta, points, graph })
}
