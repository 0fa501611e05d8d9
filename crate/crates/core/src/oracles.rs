//! Exhaustive reference solvers.
//!
//! Each oracle predicts the number of candidates it would enumerate and
//! refuses to start when that exceeds the budget.

use crate::error::{invalid_instance, Error, Result};
use crate::geometry::ColoredPointSet;
use crate::graph::VertexColoredGraph;
use crate::matching::{Matching, WeightedGraph};
use crate::solvers::{ColorSpanningMatching, Objective};

pub const DEFAULT_MAX_STATES: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_states: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self {
            max_states: DEFAULT_MAX_STATES,
        }
    }
}

impl OracleBudget {
    pub fn new(max_states: u64) -> Self {
        Self { max_states }
    }

    pub fn check(&self, predicted: u128) -> Result<()> {
        if predicted > self.max_states as u128 {
            Err(Error::BudgetExceeded {
                predicted,
                cap: self.max_states,
            })
        } else {
            Ok(())
        }
    }
}

/// `(n-1)!!`, the number of perfect pairings of `n` items (`n` even).
pub fn pairing_count(n: usize) -> u128 {
    (1..n)
        .step_by(2)
        .fold(1u128, |acc, f| acc.saturating_mul(f as u128))
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| {
        acc.saturating_mul((n - i) as u128) / (i as u128 + 1)
    })
}

/// Every perfect pairing of `0..n`, each as a list of `(a, b)` with `a < b`.
/// The lowest unpaired item is always paired first, so no pairing repeats.
fn all_pairings(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(
        free: &mut Vec<usize>,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if free.is_empty() {
            out.push(cur.clone());
            return;
        }
        let a = free.remove(0);
        for i in 0..free.len() {
            let b = free.remove(i);
            cur.push((a, b));
            rec(free, cur, out);
            cur.pop();
            free.insert(i, b);
        }
        free.insert(0, a);
    }
    let mut out = Vec::new();
    rec(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

/// Optimal color-spanning matchings for all four objectives, from one pass
/// over every representative choice and every pairing of the chosen points.
#[derive(Debug, Clone, PartialEq)]
pub struct GeometricOptima {
    pub minsum: ColorSpanningMatching,
    pub maxmin: ColorSpanningMatching,
    pub minmax: ColorSpanningMatching,
    pub maxsum: ColorSpanningMatching,
}

impl GeometricOptima {
    pub fn get(&self, objective: Objective) -> &ColorSpanningMatching {
        match objective {
            Objective::MinSum => &self.minsum,
            Objective::MaxMin => &self.maxmin,
            Objective::MinMax => &self.minmax,
            Objective::MaxSum => &self.maxsum,
        }
    }
}

pub fn brute_force_geometric_all(
    set: &ColoredPointSet,
    budget: OracleBudget,
) -> Result<GeometricOptima> {
    set.half_colors()?;
    let t = set.num_colors();
    let classes = set.color_classes();
    let choices = classes
        .iter()
        .fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128));
    budget.check(choices.saturating_mul(pairing_count(t)))?;

    let pairings = all_pairings(t);
    let objectives = Objective::ALL;
    // Per objective: (value, representatives, pairing index).
    let mut best: [Option<(f64, Vec<usize>, usize)>; 4] = [None, None, None, None];
    let mut pick = vec![0usize; t];
    let mut reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    loop {
        for (pi, pairing) in pairings.iter().enumerate() {
            let mut total = 0.0;
            let mut min = f64::INFINITY;
            let mut max = f64::NEG_INFINITY;
            for &(a, b) in pairing {
                let d = set.dist(reps[a], reps[b]);
                total += d;
                min = min.min(d);
                max = max.max(d);
            }
            for (slot, obj) in best.iter_mut().zip(objectives) {
                let v = obj.value_of(total, min, max);
                if slot
                    .as_ref()
                    .is_none_or(|(cur, _, _)| obj.improves(v, *cur))
                {
                    *slot = Some((v, reps.clone(), pi));
                }
            }
        }
        // Odometer over representatives, last color fastest.
        let mut c = t;
        loop {
            if c == 0 {
                let [minsum, maxmin, minmax, maxsum] = best.map(|slot| {
                    let (_, reps, pi) = slot.expect("at least one candidate");
                    let pairs = pairings[pi]
                        .iter()
                        .map(|&(a, b)| (reps[a], reps[b]))
                        .collect();
                    ColorSpanningMatching::from_pairs(set, pairs)
                });
                return Ok(GeometricOptima {
                    minsum,
                    maxmin,
                    minmax,
                    maxsum,
                });
            }
            c -= 1;
            pick[c] += 1;
            if pick[c] < classes[c].len() {
                reps[c] = classes[c][pick[c]];
                break;
            }
            pick[c] = 0;
            reps[c] = classes[c][0];
        }
    }
}

/// Exact optimum for `objective` by enumerating one representative per color
/// and every perfect pairing of the representatives.
pub fn brute_force_geometric(
    set: &ColoredPointSet,
    objective: Objective,
    budget: OracleBudget,
) -> Result<ColorSpanningMatching> {
    Ok(brute_force_geometric_all(set, budget)?
        .get(objective)
        .clone())
}

/// Exact optimal perfect matching of `g` under `objective`, or `None` when
/// no perfect matching exists.
pub fn brute_force_graph_matching(
    g: &WeightedGraph,
    objective: Objective,
    budget: OracleBudget,
) -> Result<Option<Matching>> {
    let n = g.num_vertices();
    if n % 2 == 1 {
        return Ok(None);
    }
    budget.check(pairing_count(n))?;
    let mut w = vec![vec![None; n]; n];
    for &(u, v, x) in g.edges() {
        w[u][v] = Some(x);
        w[v][u] = Some(x);
    }

    type Pairs = Vec<(usize, usize, f64)>;

    struct Search<'a> {
        w: &'a [Vec<Option<f64>>],
        objective: Objective,
        used: Vec<bool>,
        cur: Pairs,
        best: Option<(f64, Pairs)>,
    }

    impl Search<'_> {
        fn run(&mut self) {
            let Some(u) = self.used.iter().position(|&x| !x) else {
                let (total, min, max) = crate::matching::edge_stats(self.cur.iter().map(|e| e.2));
                let v = self.objective.value_of(total, min, max);
                if self
                    .best
                    .as_ref()
                    .is_none_or(|(b, _)| self.objective.improves(v, *b))
                {
                    self.best = Some((v, self.cur.clone()));
                }
                return;
            };
            self.used[u] = true;
            for v in u + 1..self.used.len() {
                if self.used[v] {
                    continue;
                }
                if let Some(x) = self.w[u][v] {
                    self.used[v] = true;
                    self.cur.push((u, v, x));
                    self.run();
                    self.cur.pop();
                    self.used[v] = false;
                }
            }
            self.used[u] = false;
        }
    }

    let mut s = Search {
        w: &w,
        objective,
        used: vec![false; n],
        cur: Vec::new(),
        best: None,
    };
    s.run();
    Ok(s.best
        .map(|(_, edges)| Matching::from_weighted_edges(edges)))
}

/// Cross-color edges incident to each color class, as `(edge index, other
/// color)`.
fn incident_by_color(g: &VertexColoredGraph) -> Vec<Vec<(usize, usize)>> {
    let mut incident = vec![Vec::new(); g.num_colors()];
    for (k, &(u, v)) in g.edges().iter().enumerate() {
        let (cu, cv) = (g.color(u), g.color(v));
        if cu != cv {
            incident[cu].push((k, cv));
            incident[cv].push((k, cu));
        }
    }
    incident
}

/// Calls `visit` with the edge indices of every colorful matching of `g`:
/// `num_colors / 2` edges whose endpoints carry every color exactly once.
/// Monochromatic edges never participate. A partial choice is extended by
/// edge `next` only when `compatible(chosen, next)` holds.
pub(crate) fn for_each_colorful_matching(
    g: &VertexColoredGraph,
    mut compatible: impl FnMut(&[usize], usize) -> bool,
    mut visit: impl FnMut(&[usize]),
) {
    struct Walk<'a, C, V> {
        incident: &'a [Vec<(usize, usize)>],
        covered: Vec<bool>,
        chosen: Vec<usize>,
        compatible: C,
        visit: V,
    }

    impl<C: FnMut(&[usize], usize) -> bool, V: FnMut(&[usize])> Walk<'_, C, V> {
        fn rec(&mut self) {
            // The lowest uncovered color decides which edge comes next, so
            // every matching is produced once.
            let Some(c) = self.covered.iter().position(|&x| !x) else {
                (self.visit)(&self.chosen);
                return;
            };
            self.covered[c] = true;
            for &(k, other) in &self.incident[c] {
                if !self.covered[other] && (self.compatible)(&self.chosen, k) {
                    self.covered[other] = true;
                    self.chosen.push(k);
                    self.rec();
                    self.chosen.pop();
                    self.covered[other] = false;
                }
            }
            self.covered[c] = false;
        }
    }

    let incident = incident_by_color(g);
    let mut walk = Walk {
        incident: &incident,
        covered: vec![false; g.num_colors()],
        chosen: Vec::new(),
        compatible: &mut compatible,
        visit: &mut visit,
    };
    walk.rec();
}

/// Checks the preconditions shared by the colorful-matching oracles and
/// returns `k`, or `None` when some color class is empty.
///
/// The predicted state count is the product of the `k` largest per-color
/// incident cross-edge counts: each search level branches over the edges of
/// one color not used by an earlier level.
pub(crate) fn colorful_matching_setup(
    g: &VertexColoredGraph,
    budget: OracleBudget,
) -> Result<Option<usize>> {
    let t = g.num_colors();
    if t == 0 || !t.is_multiple_of(2) {
        return Err(invalid_instance(format!(
            "colorful matchings need an even, positive number of colors; got {t}"
        )));
    }
    let k = t / 2;
    let mut degrees: Vec<usize> = incident_by_color(g).iter().map(Vec::len).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    budget.check(
        degrees[..k]
            .iter()
            .fold(1u128, |acc, &d| acc.saturating_mul(d as u128)),
    )?;
    if g.color_classes().iter().any(Vec::is_empty) {
        return Ok(None);
    }
    Ok(Some(k))
}

/// Minimum-weight colorful matching by exhaustive search, or `None`.
pub fn brute_force_colorful_graph_matching(
    g: &VertexColoredGraph,
    budget: OracleBudget,
) -> Result<Option<Matching>> {
    if colorful_matching_setup(g, budget)?.is_none() {
        return Ok(None);
    }
    let mut best: Option<(f64, Vec<usize>)> = None;
    for_each_colorful_matching(
        g,
        |_, _| true,
        |chosen| {
            let mut sorted = chosen.to_vec();
            sorted.sort_unstable();
            let total: f64 = sorted.iter().map(|&k| g.edge_weight(k)).sum();
            if best.as_ref().is_none_or(|(b, _)| total < *b) {
                best = Some((total, sorted));
            }
        },
    );
    Ok(best.map(|(_, ks)| {
        Matching::from_weighted_edges(ks.into_iter().map(|k| {
            let (u, v) = g.edges()[k];
            (u, v, g.edge_weight(k))
        }))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::geometry::ColoredPoint;

    #[test]
    fn counts() {
        assert_eq!(pairing_count(0), 1);
        assert_eq!(pairing_count(2), 1);
        assert_eq!(pairing_count(8), 105);
        assert_eq!(pairing_count(10), 945);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 5), 0);
        assert_eq!(all_pairings(6).len(), 15);
    }

    #[test]
    fn figure1_maxsum() {
        let s = fixtures::figure1();
        let all = brute_force_geometric_all(&s, OracleBudget::default()).unwrap();
        assert!((all.maxsum.total_weight - (1.0 + 5f64.sqrt())).abs() < 1e-9);
        assert!((all.minsum.total_weight - 1.8).abs() < 1e-9);
        assert!((all.maxmin.min_edge_weight - 2f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn figure2_minsum_is_three() {
        let s = fixtures::figure2();
        let m = brute_force_geometric(&s, Objective::MinSum, OracleBudget::default()).unwrap();
        assert!((m.total_weight - 3.0).abs() < 1e-9);
    }

    #[test]
    fn two_points_every_objective() {
        let s = ColoredPointSet::new(
            vec![
                ColoredPoint::new(0.0, 0.0, 0),
                ColoredPoint::new(3.0, 4.0, 1),
            ],
            2,
        )
        .unwrap();
        for o in Objective::ALL {
            let m = brute_force_geometric(&s, o, OracleBudget::default()).unwrap();
            assert_eq!(m.value(o), 5.0);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let s = fixtures::figure1();
        let err = brute_force_geometric(&s, Objective::MinSum, OracleBudget::new(2)).unwrap_err();
        assert_eq!(
            err,
            Error::BudgetExceeded {
                predicted: 12,
                cap: 2
            }
        );
    }

    #[test]
    fn graph_oracle_k4() {
        let g = WeightedGraph::new(
            4,
            [
                (0, 1, 1.0),
                (2, 3, 1.0),
                (0, 2, 2.0),
                (1, 3, 2.0),
                (0, 3, 5.0),
                (1, 2, 5.0),
            ],
        )
        .unwrap();
        let b = OracleBudget::default();
        assert_eq!(
            brute_force_graph_matching(&g, Objective::MinSum, b)
                .unwrap()
                .unwrap()
                .total_weight,
            2.0
        );
        assert_eq!(
            brute_force_graph_matching(&g, Objective::MinMax, b)
                .unwrap()
                .unwrap()
                .max_edge_weight,
            1.0
        );
        assert_eq!(
            brute_force_graph_matching(&g, Objective::MaxMin, b)
                .unwrap()
                .unwrap()
                .min_edge_weight,
            5.0
        );
        let odd = WeightedGraph::complete(5, |_, _| 1.0).unwrap();
        assert_eq!(
            brute_force_graph_matching(&odd, Objective::MinSum, b).unwrap(),
            None
        );
    }

    #[test]
    fn colorful_oracle() {
        let b = OracleBudget::default();
        let g = VertexColoredGraph::with_weights(
            vec![0, 1, 2, 3],
            4,
            [(0, 1, 1.0), (2, 3, 2.0), (0, 2, 10.0), (1, 3, 10.0)],
        )
        .unwrap();
        let m = brute_force_colorful_graph_matching(&g, b).unwrap().unwrap();
        assert_eq!(m.total_weight, 3.0);
        assert_eq!(m.edges, vec![(0, 1), (2, 3)]);
        let mono = VertexColoredGraph::new(vec![0, 0, 1, 1], 2, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(brute_force_colorful_graph_matching(&mono, b).unwrap(), None);
        let odd = VertexColoredGraph::new(vec![0, 1, 2], 3, []).unwrap();
        assert!(brute_force_colorful_graph_matching(&odd, b).is_err());
    }

    #[test]
    fn colorful_enumeration_is_exhaustive_and_unique() {
        // K4 with 4 distinct colors has exactly 3 colorful matchings.
        let g = VertexColoredGraph::new(
            vec![0, 1, 2, 3],
            4,
            [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        let mut seen = Vec::new();
        for_each_colorful_matching(
            &g,
            |_, _| true,
            |ks| {
                let mut ks = ks.to_vec();
                ks.sort_unstable();
                seen.push(ks);
            },
        );
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 3);
    }
}
