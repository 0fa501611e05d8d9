//! Static 2-d tree for exact nearest-neighbor queries over one color class.
//!
//! Nodes live in a flat array: the node of a range `[lo, hi)` sits at its
//! median `(lo + hi) / 2`, with the left subtree in `[lo, mid)` and the right
//! subtree in `[mid + 1, hi)`. No child pointers.

use crate::error::{invalid_input, Result};

use super::point::{squared_distance, ColoredPoint};

#[derive(Debug, Clone, Copy)]
struct Node {
    point: ColoredPoint,
    index: usize,
    axis: Axis,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Axis {
    X,
    Y,
}

impl Axis {
    #[inline]
    fn coord(self, p: &ColoredPoint) -> f64 {
        match self {
            Axis::X => p.x,
            Axis::Y => p.y,
        }
    }
}

/// Result of a nearest-neighbor query.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Neighbor {
    /// Index of the stored point, as supplied at construction.
    pub index: usize,
    pub squared_distance: f64,
}

impl Neighbor {
    pub fn distance(&self) -> f64 {
        self.squared_distance.sqrt()
    }

    #[inline]
    fn beats(&self, other: &Neighbor) -> bool {
        self.squared_distance < other.squared_distance
            || (self.squared_distance == other.squared_distance && self.index < other.index)
    }
}

/// Exact nearest-neighbor index over points of a single color. Ties between
/// equidistant stored points go to the lowest stored index.
#[derive(Debug, Clone)]
pub struct NearestNeighborIndex {
    nodes: Vec<Node>,
}

impl NearestNeighborIndex {
    /// Index over `points`, identified by their position in the slice.
    pub fn build(points: &[ColoredPoint]) -> Result<Self> {
        Self::build_indexed(points.iter().copied().enumerate().collect())
    }

    /// Index over `(index, point)` entries, identified by the given indexes.
    pub fn build_indexed(entries: Vec<(usize, ColoredPoint)>) -> Result<Self> {
        let Some(first) = entries.first() else {
            return Err(invalid_input(
                "nearest-neighbor index needs at least one point",
            ));
        };
        let color = first.1.color;
        if let Some((i, p)) = entries.iter().find(|(_, p)| p.color != color) {
            return Err(invalid_input(format!(
                "point {i} has color {} but the index holds color {color}",
                p.color
            )));
        }
        if let Some((i, _)) = entries.iter().find(|(_, p)| !p.is_finite()) {
            return Err(invalid_input(format!(
                "point {i} has a non-finite coordinate"
            )));
        }
        let mut nodes: Vec<Node> = entries
            .into_iter()
            .map(|(index, point)| Node {
                point,
                index,
                axis: Axis::X,
            })
            .collect();
        build_range(&mut nodes);
        Ok(Self { nodes })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// The stored point nearest to `query`.
    pub fn nearest(&self, query: &ColoredPoint) -> Neighbor {
        let mut best = Neighbor {
            index: usize::MAX,
            squared_distance: f64::INFINITY,
        };
        self.search(0, self.nodes.len(), query, &mut best);
        best
    }

    fn search(&self, lo: usize, hi: usize, query: &ColoredPoint, best: &mut Neighbor) {
        if lo >= hi {
            return;
        }
        let mid = lo + (hi - lo) / 2;
        let node = &self.nodes[mid];
        let candidate = Neighbor {
            index: node.index,
            squared_distance: squared_distance(query, &node.point),
        };
        if candidate.beats(best) {
            *best = candidate;
        }
        let diff = node.axis.coord(query) - node.axis.coord(&node.point);
        let (near, far) = if diff < 0.0 {
            ((lo, mid), (mid + 1, hi))
        } else {
            ((mid + 1, hi), (lo, mid))
        };
        self.search(near.0, near.1, query, best);
        // Equal plane distance still descends: a tie there may carry a lower index.
        if diff * diff <= best.squared_distance {
            self.search(far.0, far.1, query, best);
        }
    }
}

fn build_range(nodes: &mut [Node]) {
    if nodes.len() <= 1 {
        if let Some(n) = nodes.first_mut() {
            n.axis = Axis::X;
        }
        return;
    }
    let (mut min_x, mut max_x, mut min_y, mut max_y) = (
        f64::INFINITY,
        f64::NEG_INFINITY,
        f64::INFINITY,
        f64::NEG_INFINITY,
    );
    for n in nodes.iter() {
        min_x = min_x.min(n.point.x);
        max_x = max_x.max(n.point.x);
        min_y = min_y.min(n.point.y);
        max_y = max_y.max(n.point.y);
    }
    let axis = if max_x - min_x >= max_y - min_y {
        Axis::X
    } else {
        Axis::Y
    };
    let mid = nodes.len() / 2;
    nodes.select_nth_unstable_by(mid, |a, b| {
        axis.coord(&a.point).total_cmp(&axis.coord(&b.point))
    });
    nodes[mid].axis = axis;
    let (left, rest) = nodes.split_at_mut(mid);
    build_range(left);
    build_range(&mut rest[1..]);
}
