//! General-graph matching: perfect-matching existence, minimum-weight perfect
//! matching, and the two threshold objectives (bottleneck and max-min).

mod blossom;
mod cardinality;
mod graph;

pub use cardinality::has_perfect_matching;
pub use graph::{Matching, WeightedGraph};

pub(crate) use graph::edge_stats;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Sense {
    Minimize,
    Maximize,
}

/// Optimal-total perfect matching through the maximum-weight blossom
/// solver run in max-cardinality mode. For minimization every weight `w`
/// becomes `max_w - w`; all perfect matchings share a size, so the shift
/// does not move the optimum.
fn optimal_total_perfect_matching(g: &WeightedGraph, sense: Sense) -> Option<Matching> {
    let n = g.num_vertices();
    if n % 2 == 1 {
        return None;
    }
    if n == 0 {
        return Some(Matching::from_weighted_edges(std::iter::empty()));
    }
    let real: Vec<f64> = g.edges().iter().map(|e| e.2).collect();
    let scaled = blossom::scale_weights(&real);
    let top = scaled.iter().copied().max().unwrap_or(0);
    let int_edges: Vec<(usize, usize, blossom::IntWeight)> = g
        .edges()
        .iter()
        .zip(&scaled)
        .map(|(&(u, v, _), &w)| {
            let w = match sense {
                Sense::Minimize => top - w,
                Sense::Maximize => w,
            };
            (u, v, w)
        })
        .collect();
    let mates = blossom::max_weight_mates(n, &int_edges, true);
    if mates.iter().any(Option::is_none) {
        return None;
    }
    Some(Matching::from_mates(g, &mates))
}

/// Perfect matching of minimum total weight, or `None` when `g` has no
/// perfect matching.
pub fn min_weight_perfect_matching(g: &WeightedGraph) -> Option<Matching> {
    optimal_total_perfect_matching(g, Sense::Minimize)
}

/// Perfect matching of maximum total weight, or `None` when infeasible.
pub fn max_weight_perfect_matching(g: &WeightedGraph) -> Option<Matching> {
    optimal_total_perfect_matching(g, Sense::Maximize)
}

/// Smallest index `i` in `0..len` for which `feasible(i)` holds, assuming
/// feasibility is monotone (once true, true for every larger index).
fn first_feasible(len: usize, mut feasible: impl FnMut(usize) -> bool) -> Option<usize> {
    let (mut lo, mut hi) = (0, len);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if feasible(mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    (lo < len).then_some(lo)
}

/// Perfect matching minimizing the largest edge weight.
///
/// Binary search over the sorted distinct weights for the smallest threshold
/// whose `<=` subgraph has a perfect matching. Among the bottleneck-optimal
/// matchings the one of minimum total weight is returned.
pub fn bottleneck_perfect_matching(g: &WeightedGraph) -> Option<Matching> {
    if g.num_vertices() == 0 {
        return Some(Matching::from_weighted_edges(std::iter::empty()));
    }
    let weights = g.distinct_weights();
    let idx = first_feasible(weights.len(), |i| {
        has_perfect_matching(&g.filter_edges(|w| w <= weights[i]))
    })?;
    let threshold = weights[idx];
    min_weight_perfect_matching(&g.filter_edges(|w| w <= threshold))
}

/// Perfect matching maximizing the smallest edge weight.
///
/// Binary search for the largest threshold whose `>=` subgraph has a perfect
/// matching. Among the optimal matchings the one of maximum total weight is
/// returned.
pub fn maxmin_perfect_matching(g: &WeightedGraph) -> Option<Matching> {
    if g.num_vertices() == 0 {
        return Some(Matching::from_weighted_edges(std::iter::empty()));
    }
    let mut weights = g.distinct_weights();
    weights.reverse();
    let idx = first_feasible(weights.len(), |i| {
        has_perfect_matching(&g.filter_edges(|w| w >= weights[i]))
    })?;
    let threshold = weights[idx];
    max_weight_perfect_matching(&g.filter_edges(|w| w >= threshold))
}
