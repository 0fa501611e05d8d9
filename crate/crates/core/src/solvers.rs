//! Color-spanning matching pipelines.
//!
//! Every geometric solver builds a color graph, solves a perfect-matching
//! problem on its `2k` color vertices, and expands each chosen color edge to
//! its stored witness pair. For all three objectives some optimal solution
//! uses only witness pairs: replacing a matched pair by the closest (MinSum,
//! MinMax) or farthest (MaxMin) pair of the same two colors never hurts, and
//! different color edges never share a point.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid_input, invalid_instance, Error, Result};
use crate::geometry::{
    build_closest_color_graph, build_farthest_color_graph, ColorGraph, ColoredPointSet,
};
use crate::graph::VertexColoredGraph;
use crate::matching::{
    bottleneck_perfect_matching, edge_stats, maxmin_perfect_matching, min_weight_perfect_matching,
    Matching, WeightedGraph,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    MinSum,
    MaxMin,
    MinMax,
    /// Only the exhaustive oracle optimizes this one.
    MaxSum,
}

impl Objective {
    pub const ALL: [Objective; 4] = [
        Objective::MinSum,
        Objective::MaxMin,
        Objective::MinMax,
        Objective::MaxSum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Objective::MinSum => "minsum",
            Objective::MaxMin => "maxmin",
            Objective::MinMax => "minmax",
            Objective::MaxSum => "maxsum",
        }
    }

    /// The statistic this objective optimizes.
    pub fn value_of(self, total: f64, min_edge: f64, max_edge: f64) -> f64 {
        match self {
            Objective::MinSum | Objective::MaxSum => total,
            Objective::MaxMin => min_edge,
            Objective::MinMax => max_edge,
        }
    }

    pub fn maximizes(self) -> bool {
        matches!(self, Objective::MaxMin | Objective::MaxSum)
    }

    /// True when `candidate` is strictly better than `incumbent`.
    pub fn improves(self, candidate: f64, incumbent: f64) -> bool {
        if self.maximizes() {
            candidate > incumbent
        } else {
            candidate < incumbent
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Objective::ALL
            .into_iter()
            .find(|o| o.name() == s.to_ascii_lowercase())
            .ok_or_else(|| invalid_input(format!("unknown objective {s:?}")))
    }
}

/// `k` point pairs whose `2k` endpoints carry pairwise distinct colors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ColorSpanningMatching {
    /// Point-index pairs, ordered by the smaller endpoint color.
    pub pairs: Vec<(usize, usize)>,
    /// Sorted endpoint colors.
    pub colors_covered: Vec<usize>,
    pub total_weight: f64,
    pub min_edge_weight: f64,
    pub max_edge_weight: f64,
}

impl ColorSpanningMatching {
    /// Computes statistics from Euclidean distances, summing in pair order.
    pub fn from_pairs(set: &ColoredPointSet, pairs: Vec<(usize, usize)>) -> Self {
        let mut pairs = pairs;
        pairs.sort_by_key(|&(a, b)| set.point(a).color.min(set.point(b).color));
        let (total, min, max) = edge_stats(pairs.iter().map(|&(a, b)| set.dist(a, b)));
        let mut colors_covered: Vec<usize> = pairs
            .iter()
            .flat_map(|&(a, b)| [set.point(a).color, set.point(b).color])
            .collect();
        colors_covered.sort_unstable();
        Self {
            pairs,
            colors_covered,
            total_weight: total,
            min_edge_weight: min,
            max_edge_weight: max,
        }
    }

    pub fn value(&self, objective: Objective) -> f64 {
        objective.value_of(
            self.total_weight,
            self.min_edge_weight,
            self.max_edge_weight,
        )
    }

    pub fn k(&self) -> usize {
        self.pairs.len()
    }

    /// Checks that the pairs cover every color of `set` exactly once and that
    /// the statistics recompute exactly.
    pub fn validate(&self, set: &ColoredPointSet) -> std::result::Result<(), String> {
        let t = set.num_colors();
        if 2 * self.pairs.len() != t {
            return Err(format!("{} pairs cannot span {t} colors", self.pairs.len()));
        }
        let mut seen = vec![false; t];
        for &(a, b) in &self.pairs {
            for p in [a, b] {
                if p >= set.len() {
                    return Err(format!("point {p} out of range"));
                }
                let c = set.point(p).color;
                if seen[c] {
                    return Err(format!("color {c} covered twice"));
                }
                seen[c] = true;
            }
        }
        let recomputed = Self::from_pairs(set, self.pairs.clone());
        if recomputed.colors_covered != self.colors_covered
            || recomputed.total_weight != self.total_weight
            || recomputed.min_edge_weight != self.min_edge_weight
            || recomputed.max_edge_weight != self.max_edge_weight
        {
            return Err("statistics do not recompute from the pairs".into());
        }
        Ok(())
    }
}

fn color_weighted_graph(cg: &ColorGraph) -> WeightedGraph {
    WeightedGraph::complete(cg.num_colors(), |i, j| cg.weight(i, j))
        .expect("color graph weights are finite distances")
}

fn expand(set: &ColoredPointSet, cg: &ColorGraph, m: &Matching) -> ColorSpanningMatching {
    let pairs = m
        .edges
        .iter()
        .map(|&(i, j)| {
            let w = cg.witness(i, j);
            (w.point_a, w.point_b)
        })
        .collect();
    ColorSpanningMatching::from_pairs(set, pairs)
}

fn run_pipeline(
    set: &ColoredPointSet,
    cg: ColorGraph,
    solve: fn(&WeightedGraph) -> Option<Matching>,
) -> Result<ColorSpanningMatching> {
    let g = color_weighted_graph(&cg);
    let m = solve(&g).expect("complete graph on an even number of colors has a perfect matching");
    Ok(expand(set, &cg, &m))
}

/// Minimum total length color-spanning matching.
pub fn solve_minsum(set: &ColoredPointSet) -> Result<ColorSpanningMatching> {
    set.half_colors()?;
    run_pipeline(
        set,
        build_closest_color_graph(set),
        min_weight_perfect_matching,
    )
}

/// Color-spanning matching maximizing the shortest matched pair.
pub fn solve_maxmin(set: &ColoredPointSet) -> Result<ColorSpanningMatching> {
    set.half_colors()?;
    run_pipeline(
        set,
        build_farthest_color_graph(set),
        maxmin_perfect_matching,
    )
}

/// Color-spanning matching minimizing the longest matched pair.
pub fn solve_minmax(set: &ColoredPointSet) -> Result<ColorSpanningMatching> {
    set.half_colors()?;
    run_pipeline(
        set,
        build_closest_color_graph(set),
        bottleneck_perfect_matching,
    )
}

pub fn solve(set: &ColoredPointSet, objective: Objective) -> Result<ColorSpanningMatching> {
    match objective {
        Objective::MinSum => solve_minsum(set),
        Objective::MaxMin => solve_maxmin(set),
        Objective::MinMax => solve_minmax(set),
        Objective::MaxSum => Err(invalid_input(
            "maxsum has no polynomial pipeline here; use the oracle",
        )),
    }
}

/// Minimum-weight colorful matching of a vertex-colored graph with `2k`
/// colors: `k` disjoint edges whose endpoints carry all `2k` colors.
///
/// Contracts each color class to one vertex, keeping the lightest
/// cross-color edge per color pair (lowest edge index on ties), and solves
/// minimum-weight perfect matching on the contracted graph. Monochromatic
/// edges are ignored. Returns `Ok(None)` when no colorful matching exists.
pub fn solve_k_multicolored_matching(g: &VertexColoredGraph) -> Result<Option<Matching>> {
    let t = g.num_colors();
    if t == 0 || !t.is_multiple_of(2) {
        return Err(invalid_instance(format!(
            "colorful matchings need an even, positive number of colors; got {t}"
        )));
    }
    if let Some(c) = g.color_classes().iter().position(Vec::is_empty) {
        return Err(invalid_instance(format!("color {c} has no vertices")));
    }
    let mut lightest: BTreeMap<(usize, usize), (f64, usize)> = BTreeMap::new();
    for (k, &(u, v)) in g.edges().iter().enumerate() {
        let (cu, cv) = (g.color(u), g.color(v));
        if cu == cv {
            continue;
        }
        let w = g.edge_weight(k);
        lightest
            .entry((cu.min(cv), cu.max(cv)))
            .and_modify(|cur| {
                if w < cur.0 {
                    *cur = (w, k);
                }
            })
            .or_insert((w, k));
    }
    let contracted = WeightedGraph::new(t, lightest.iter().map(|(&(i, j), &(w, _))| (i, j, w)))?;
    let Some(m) = min_weight_perfect_matching(&contracted) else {
        return Ok(None);
    };
    Ok(Some(Matching::from_weighted_edges(m.edges.iter().map(
        |&(i, j)| {
            let (w, k) = lightest[&(i, j)];
            let (u, v) = g.edges()[k];
            (u, v, w)
        },
    ))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::geometry::ColoredPoint;

    const TOL: f64 = 1e-9;

    fn two_points() -> ColoredPointSet {
        ColoredPointSet::new(
            vec![
                ColoredPoint::new(0.0, 0.0, 0),
                ColoredPoint::new(3.0, 4.0, 1),
            ],
            2,
        )
        .unwrap()
    }

    #[test]
    fn two_color_instances() {
        let s = two_points();
        for obj in [Objective::MinSum, Objective::MaxMin, Objective::MinMax] {
            let m = solve(&s, obj).unwrap();
            assert_eq!(m.pairs, vec![(0, 1)]);
            assert_eq!(m.value(obj), 5.0);
            m.validate(&s).unwrap();
        }
        let more = ColoredPointSet::new(
            vec![
                ColoredPoint::new(0.0, 0.0, 0),
                ColoredPoint::new(1.0, 0.0, 1),
                ColoredPoint::new(-4.0, 0.0, 0),
                ColoredPoint::new(9.0, 0.0, 1),
            ],
            2,
        )
        .unwrap();
        assert_eq!(solve_minsum(&more).unwrap().total_weight, 1.0);
        assert_eq!(solve_minmax(&more).unwrap().max_edge_weight, 1.0);
        assert_eq!(solve_maxmin(&more).unwrap().min_edge_weight, 13.0);
    }

    #[test]
    fn odd_colors_rejected() {
        let s = ColoredPointSet::new(
            (0..3)
                .map(|c| ColoredPoint::new(c as f64, 0.0, c))
                .collect(),
            3,
        )
        .unwrap();
        for obj in [Objective::MinSum, Objective::MaxMin, Objective::MinMax] {
            assert!(matches!(solve(&s, obj), Err(Error::InvalidInstance(_))));
        }
        assert!(matches!(
            solve(&two_points(), Objective::MaxSum),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn figure1_values() {
        let s = fixtures::figure1();
        let minsum = solve_minsum(&s).unwrap();
        assert!((minsum.total_weight - 1.8).abs() < TOL);
        // a = 0, b = 1, c = 2, f = 5
        assert_eq!(minsum.pairs, vec![(0, 2), (1, 5)]);
        let maxmin = solve_maxmin(&s).unwrap();
        assert!((maxmin.min_edge_weight - 2f64.sqrt()).abs() < TOL);
        assert!((maxmin.total_weight - 2.0 * 2f64.sqrt()).abs() < TOL);
        // d = 3, e = 4
        assert_eq!(maxmin.pairs, vec![(0, 3), (1, 4)]);
    }

    #[test]
    fn figure2_values() {
        let s = fixtures::figure2();
        let minmax = solve_minmax(&s).unwrap();
        assert!((minmax.max_edge_weight - 1.6).abs() < TOL);
        assert!((minmax.total_weight - 3.2).abs() < TOL);
        // c = 2, d = 3, e = 4, f = 5
        assert_eq!(minmax.pairs, vec![(2, 4), (3, 5)]);
        assert!((solve_minsum(&s).unwrap().total_weight - 3.0).abs() < TOL);
    }

    #[test]
    fn objective_names_round_trip() {
        for o in Objective::ALL {
            assert_eq!(o.name().parse::<Objective>().unwrap(), o);
        }
        assert!("median".parse::<Objective>().is_err());
    }

    #[test]
    fn multicolored_matching_example() {
        let g = VertexColoredGraph::with_weights(
            vec![0, 1, 2, 3],
            4,
            [(0, 1, 1.0), (2, 3, 2.0), (0, 2, 10.0), (1, 3, 10.0)],
        )
        .unwrap();
        let m = solve_k_multicolored_matching(&g).unwrap().unwrap();
        assert_eq!(m.edges, vec![(0, 1), (2, 3)]);
        assert_eq!(m.total_weight, 3.0);
    }

    #[test]
    fn multicolored_matching_ignores_monochromatic_edges() {
        let g = VertexColoredGraph::new(vec![0, 0, 1, 1], 2, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(solve_k_multicolored_matching(&g).unwrap(), None);
    }

    #[test]
    fn multicolored_matching_rejects_bad_colorings() {
        let odd = VertexColoredGraph::new(vec![0, 1, 2], 3, [(0, 1)]).unwrap();
        assert!(solve_k_multicolored_matching(&odd).is_err());
        let missing = VertexColoredGraph::new(vec![0, 1, 1], 4, [(0, 1)]).unwrap();
        assert!(solve_k_multicolored_matching(&missing).is_err());
    }

    #[test]
    fn multicolored_matching_uses_lightest_cross_edge() {
        // Colors 0,1 have two candidate edges; the 0.5 one must be chosen.
        let g = VertexColoredGraph::with_weights(
            vec![0, 0, 1, 1],
            2,
            [(0, 2, 3.0), (1, 3, 0.5), (0, 1, 0.1)],
        )
        .unwrap();
        let m = solve_k_multicolored_matching(&g).unwrap().unwrap();
        assert_eq!(m.edges, vec![(1, 3)]);
        assert_eq!(m.total_weight, 0.5);
    }
}
