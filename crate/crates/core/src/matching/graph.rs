use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{invalid_input, Result};

/// Simple undirected graph with non-negative finite edge weights.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightedGraph {
    num_vertices: usize,
    edges: Vec<(usize, usize, f64)>,
}

impl WeightedGraph {
    /// Validates the edge list. Endpoints are normalized to `u < v` and
    /// parallel edges collapse to their minimum weight; the surviving edges
    /// are kept in `(u, v)` order.
    pub fn new(
        num_vertices: usize,
        edges: impl IntoIterator<Item = (usize, usize, f64)>,
    ) -> Result<Self> {
        let mut by_pair: BTreeMap<(usize, usize), f64> = BTreeMap::new();
        for (u, v, w) in edges {
            if u == v {
                return Err(invalid_input(format!("self-loop at vertex {u}")));
            }
            if u >= num_vertices || v >= num_vertices {
                return Err(invalid_input(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{num_vertices}"
                )));
            }
            if !w.is_finite() || w < 0.0 {
                return Err(invalid_input(format!(
                    "edge ({u}, {v}) has weight {w}; weights must be finite and non-negative"
                )));
            }
            let key = (u.min(v), u.max(v));
            by_pair
                .entry(key)
                .and_modify(|cur| *cur = cur.min(w))
                .or_insert(w);
        }
        Ok(Self {
            num_vertices,
            edges: by_pair.into_iter().map(|((u, v), w)| (u, v, w)).collect(),
        })
    }

    /// Complete graph with `weight(u, v)` on every pair `u < v`.
    pub fn complete(
        num_vertices: usize,
        mut weight: impl FnMut(usize, usize) -> f64,
    ) -> Result<Self> {
        let mut edges = Vec::with_capacity(num_vertices * num_vertices.saturating_sub(1) / 2);
        for u in 0..num_vertices {
            for v in (u + 1)..num_vertices {
                edges.push((u, v, weight(u, v)));
            }
        }
        Self::new(num_vertices, edges)
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn edges(&self) -> &[(usize, usize, f64)] {
        &self.edges
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<f64> {
        let key = (u.min(v), u.max(v));
        self.edges
            .binary_search_by(|&(a, b, _)| (a, b).cmp(&key))
            .ok()
            .map(|i| self.edges[i].2)
    }

    /// Subgraph keeping only the edges accepted by `keep`.
    pub fn filter_edges(&self, mut keep: impl FnMut(f64) -> bool) -> WeightedGraph {
        WeightedGraph {
            num_vertices: self.num_vertices,
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|&(_, _, w)| keep(w))
                .collect(),
        }
    }

    /// Sorted distinct edge weights.
    pub fn distinct_weights(&self) -> Vec<f64> {
        let mut ws: Vec<f64> = self.edges.iter().map(|e| e.2).collect();
        ws.sort_by(f64::total_cmp);
        ws.dedup();
        ws
    }
}

/// A set of vertex-disjoint graph edges and its weight statistics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Matching {
    pub edges: Vec<(usize, usize)>,
    pub total_weight: f64,
    pub min_edge_weight: f64,
    pub max_edge_weight: f64,
}

impl Matching {
    /// Builds a matching from `(u, v, weight)` triples; edges are normalized
    /// to `u < v` and sorted. Statistics of an empty matching are all zero.
    pub fn from_weighted_edges(edges: impl IntoIterator<Item = (usize, usize, f64)>) -> Self {
        let mut list: Vec<(usize, usize, f64)> = edges
            .into_iter()
            .map(|(u, v, w)| (u.min(v), u.max(v), w))
            .collect();
        list.sort_by_key(|e| (e.0, e.1));
        let (total, min, max) = edge_stats(list.iter().map(|e| e.2));
        Matching {
            edges: list.iter().map(|&(u, v, _)| (u, v)).collect(),
            total_weight: total,
            min_edge_weight: min,
            max_edge_weight: max,
        }
    }

    /// Reads weights for a mate array (`mate[v] = Some(u)`) out of `g`.
    pub(crate) fn from_mates(g: &WeightedGraph, mate: &[Option<usize>]) -> Self {
        Self::from_weighted_edges(mate.iter().enumerate().filter_map(|(v, m)| {
            m.filter(|&u| v < u)
                .map(|u| (v, u, g.weight(v, u).expect("mate pairs are graph edges")))
        }))
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Checks vertex-disjointness, edge membership, and that the statistics
    /// recompute exactly from `g`.
    pub fn validate_against(&self, g: &WeightedGraph) -> std::result::Result<(), String> {
        let mut used = vec![false; g.num_vertices()];
        let mut weights = Vec::with_capacity(self.edges.len());
        for &(u, v) in &self.edges {
            let w = g
                .weight(u, v)
                .ok_or_else(|| format!("({u}, {v}) is not a graph edge"))?;
            for x in [u, v] {
                if used[x] {
                    return Err(format!("vertex {x} is matched twice"));
                }
                used[x] = true;
            }
            weights.push(w);
        }
        let (total, min, max) = edge_stats(weights.into_iter());
        if total != self.total_weight || min != self.min_edge_weight || max != self.max_edge_weight
        {
            return Err(format!(
                "statistics ({}, {}, {}) do not recompute to ({total}, {min}, {max})",
                self.total_weight, self.min_edge_weight, self.max_edge_weight
            ));
        }
        Ok(())
    }

    pub fn is_perfect_for(&self, g: &WeightedGraph) -> bool {
        2 * self.edges.len() == g.num_vertices() && self.validate_against(g).is_ok()
    }
}

/// (sum, min, max) accumulated left to right; all zero for no weights.
pub(crate) fn edge_stats(weights: impl Iterator<Item = f64>) -> (f64, f64, f64) {
    let mut total = 0.0;
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    let mut any = false;
    for w in weights {
        any = true;
        total += w;
        min = min.min(w);
        max = max.max(w);
    }
    if any {
        (total, min, max)
    } else {
        (0.0, 0.0, 0.0)
    }
}
