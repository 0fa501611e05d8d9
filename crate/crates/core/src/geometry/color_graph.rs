//! Complete graphs on the colors of a point set, each edge witnessed by the
//! bichromatic closest or farthest pair of its two color classes.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::hull::{convex_hull, HullVertex};
use super::kdtree::NearestNeighborIndex;
use super::point::{squared_distance, ColoredPoint, ColoredPointSet};

/// Class-size product above which farthest pairs are searched on hulls.
const HULL_CUTOFF: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ColorGraphMode {
    Closest,
    Farthest,
}

/// Extreme bichromatic pair for the colors `color_i < color_j`.
/// `point_a` has `color_i`, `point_b` has `color_j`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ColorPairWitness {
    pub color_i: usize,
    pub color_j: usize,
    pub point_a: usize,
    pub point_b: usize,
    pub distance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ColorGraph {
    num_colors: usize,
    mode: ColorGraphMode,
    /// Row-major over `(i, j)` with `i < j`.
    edges: Vec<ColorPairWitness>,
}

impl ColorGraph {
    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn mode(&self) -> ColorGraphMode {
        self.mode
    }

    pub fn edges(&self) -> &[ColorPairWitness] {
        &self.edges
    }

    fn slot(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        assert!(i != j && j < self.num_colors, "no color edge ({i}, {j})");
        // Edges before row i: sum_{r<i} (t - 1 - r).
        i * (2 * self.num_colors - i - 1) / 2 + (j - i - 1)
    }

    /// Witness for the unordered color pair `{i, j}`.
    pub fn witness(&self, i: usize, j: usize) -> &ColorPairWitness {
        &self.edges[self.slot(i, j)]
    }

    pub fn weight(&self, i: usize, j: usize) -> f64 {
        self.witness(i, j).distance
    }
}

/// Candidate pair ordered by (squared distance, point_a, point_b).
#[derive(Debug, Clone, Copy)]
struct Candidate {
    sq: f64,
    a: usize,
    b: usize,
}

impl Candidate {
    fn lex_less(&self, other: &Candidate) -> bool {
        (self.a, self.b) < (other.a, other.b)
    }

    fn closer_than(&self, other: &Candidate) -> bool {
        self.sq < other.sq || (self.sq == other.sq && self.lex_less(other))
    }

    fn farther_than(&self, other: &Candidate) -> bool {
        self.sq > other.sq || (self.sq == other.sq && self.lex_less(other))
    }

    fn into_witness(self, color_i: usize, color_j: usize) -> ColorPairWitness {
        ColorPairWitness {
            color_i,
            color_j,
            point_a: self.a,
            point_b: self.b,
            distance: self.sq.sqrt(),
        }
    }
}

fn indexed_class(set: &ColoredPointSet, class: &[usize]) -> Vec<(usize, ColoredPoint)> {
    class.iter().map(|&i| (i, *set.point(i))).collect()
}

/// Closest color graph: one nearest-neighbor index per color class; every
/// point of a higher color queries it. Witness ties resolve to the
/// lexicographically smallest `(point_a, point_b)`.
pub fn build_closest_color_graph(set: &ColoredPointSet) -> ColorGraph {
    let t = set.num_colors();
    let classes = set.color_classes();
    let rows: Vec<Vec<ColorPairWitness>> = (0..t)
        .into_par_iter()
        .map(|i| {
            if i + 1 == t {
                return Vec::new();
            }
            let index = NearestNeighborIndex::build_indexed(indexed_class(set, &classes[i]))
                .expect("validated set has a nonempty class for every color");
            ((i + 1)..t)
                .map(|j| {
                    let mut best: Option<Candidate> = None;
                    for &b in &classes[j] {
                        let nn = index.nearest(set.point(b));
                        let cand = Candidate {
                            sq: nn.squared_distance,
                            a: nn.index,
                            b,
                        };
                        if best.is_none_or(|cur| cand.closer_than(&cur)) {
                            best = Some(cand);
                        }
                    }
                    best.expect("nonempty class").into_witness(i, j)
                })
                .collect()
        })
        .collect();
    ColorGraph {
        num_colors: t,
        mode: ColorGraphMode::Closest,
        edges: rows.into_iter().flatten().collect(),
    }
}

/// Farthest color graph: each pair is computed on the convex hulls of the
/// two classes when they are large, by a full scan otherwise.
pub fn build_farthest_color_graph(set: &ColoredPointSet) -> ColorGraph {
    let t = set.num_colors();
    let classes = set.color_classes();
    let hulls: Vec<Vec<HullVertex>> = classes
        .par_iter()
        .map(|c| convex_hull(&indexed_class(set, c)))
        .collect();
    let pairs: Vec<(usize, usize)> = (0..t)
        .flat_map(|i| ((i + 1)..t).map(move |j| (i, j)))
        .collect();
    let edges = pairs
        .par_iter()
        .map(|&(i, j)| {
            if classes[i].len() * classes[j].len() > HULL_CUTOFF {
                farthest_pair_hull(&hulls[i], &hulls[j]).into_witness(i, j)
            } else {
                farthest_pair_scan(set, &classes[i], &classes[j]).into_witness(i, j)
            }
        })
        .collect();
    ColorGraph {
        num_colors: t,
        mode: ColorGraphMode::Farthest,
        edges,
    }
}

fn farthest_pair_scan(set: &ColoredPointSet, class_i: &[usize], class_j: &[usize]) -> Candidate {
    let mut best: Option<Candidate> = None;
    for &a in class_i {
        for &b in class_j {
            let cand = Candidate {
                sq: squared_distance(set.point(a), set.point(b)),
                a,
                b,
            };
            if best.is_none_or(|cur| cand.farther_than(&cur)) {
                best = Some(cand);
            }
        }
    }
    best.expect("nonempty classes")
}

fn farthest_pair_hull(hull_i: &[HullVertex], hull_j: &[HullVertex]) -> Candidate {
    let mut best: Option<Candidate> = None;
    for u in hull_i {
        for v in hull_j {
            let (dx, dy) = (u.x - v.x, u.y - v.y);
            let cand = Candidate {
                sq: dx * dx + dy * dy,
                a: u.index,
                b: v.index,
            };
            if best.is_none_or(|cur| cand.farther_than(&cur)) {
                best = Some(cand);
            }
        }
    }
    best.expect("nonempty hulls")
}

/// Farthest pair between two classes by the hull route and by the full scan.
/// Exposed so tests can check that the two routes agree.
pub fn farthest_pair_both_routes(
    set: &ColoredPointSet,
    i: usize,
    j: usize,
) -> (ColorPairWitness, ColorPairWitness) {
    let classes = set.color_classes();
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    let hull_lo = convex_hull(&indexed_class(set, &classes[lo]));
    let hull_hi = convex_hull(&indexed_class(set, &classes[hi]));
    (
        farthest_pair_hull(&hull_lo, &hull_hi).into_witness(lo, hi),
        farthest_pair_scan(set, &classes[lo], &classes[hi]).into_witness(lo, hi),
    )
}
