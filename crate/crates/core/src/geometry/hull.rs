//! Convex hulls with exact orientation predicates, used to prune the
//! farthest-pair search.

use robust::{orient2d, Coord};

use super::point::ColoredPoint;

/// A hull corner together with the lowest point index found at that location.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HullVertex {
    pub index: usize,
    pub x: f64,
    pub y: f64,
}

fn coord(v: &HullVertex) -> Coord<f64> {
    Coord { x: v.x, y: v.y }
}

/// Vertices of the convex hull of the given points (Andrew's monotone chain).
/// Collinear boundary points are dropped; coincident points collapse into one
/// vertex carrying their smallest index. Degenerate inputs return every
/// distinct location on the hull boundary extremes (one or two vertices).
pub fn convex_hull(points: &[(usize, ColoredPoint)]) -> Vec<HullVertex> {
    let mut pts: Vec<HullVertex> = points
        .iter()
        .map(|&(index, p)| HullVertex {
            index,
            x: p.x,
            y: p.y,
        })
        .collect();
    pts.sort_by(|a, b| {
        a.x.total_cmp(&b.x)
            .then(a.y.total_cmp(&b.y))
            .then(a.index.cmp(&b.index))
    });
    // Coincident locations are adjacent after sorting; the first has the lowest index.
    pts.dedup_by(|later, earlier| later.x == earlier.x && later.y == earlier.y);
    if pts.len() <= 2 {
        return pts;
    }

    let mut hull: Vec<HullVertex> = Vec::with_capacity(2 * pts.len());
    for p in pts.iter() {
        while hull.len() >= 2
            && orient2d(
                coord(&hull[hull.len() - 2]),
                coord(&hull[hull.len() - 1]),
                coord(p),
            ) <= 0.0
        {
            hull.pop();
        }
        hull.push(*p);
    }
    let lower_len = hull.len() + 1;
    for p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len
            && orient2d(
                coord(&hull[hull.len() - 2]),
                coord(&hull[hull.len() - 1]),
                coord(p),
            ) <= 0.0
        {
            hull.pop();
        }
        hull.push(*p);
    }
    hull.pop();
    hull
}
