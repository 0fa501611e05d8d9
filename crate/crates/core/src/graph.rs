//! Simple graphs, optionally vertex-colored and edge-weighted.

use std::collections::BTreeSet;

use crate::error::{invalid_input, Result};

/// Undirected simple graph. Edges are stored normalized (`u < v`) in
/// insertion order.
#[derive(Debug, Clone, PartialEq)]
pub struct SimpleGraph {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<bool>>,
}

impl SimpleGraph {
    /// Rejects self-loops, out-of-range endpoints and duplicate edges.
    pub fn new(
        num_vertices: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut adjacency = vec![vec![false; num_vertices]; num_vertices];
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(invalid_input(format!("self-loop at vertex {u}")));
            }
            if u >= num_vertices || v >= num_vertices {
                return Err(invalid_input(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{num_vertices}"
                )));
            }
            if adjacency[u][v] {
                return Err(invalid_input(format!("duplicate edge ({u}, {v})")));
            }
            adjacency[u][v] = true;
            adjacency[v][u] = true;
            list.push((u.min(v), u.max(v)));
        }
        Ok(Self {
            num_vertices,
            edges: list,
            adjacency,
        })
    }

    /// Like [`SimpleGraph::new`] but silently drops repeated edges.
    pub fn new_dedup(
        num_vertices: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let unique: Vec<_> = edges
            .into_iter()
            .filter(|&(u, v)| seen.insert((u.min(v), u.max(v))))
            .collect();
        Self::new(num_vertices, unique)
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u][v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].iter().filter(|&&a| a).count()
    }
}

/// A simple graph whose vertices carry colors in `0..num_colors`, with
/// optional non-negative edge weights (parallel to the edge list).
#[derive(Debug, Clone, PartialEq)]
pub struct VertexColoredGraph {
    graph: SimpleGraph,
    colors: Vec<usize>,
    num_colors: usize,
    weights: Option<Vec<f64>>,
}

impl VertexColoredGraph {
    pub fn new(
        colors: Vec<usize>,
        num_colors: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        Self::build(colors, num_colors, edges.into_iter().collect(), None)
    }

    pub fn with_weights(
        colors: Vec<usize>,
        num_colors: usize,
        edges: impl IntoIterator<Item = (usize, usize, f64)>,
    ) -> Result<Self> {
        let (pairs, weights): (Vec<_>, Vec<_>) =
            edges.into_iter().map(|(u, v, w)| ((u, v), w)).unzip();
        Self::build(colors, num_colors, pairs, Some(weights))
    }

    fn build(
        colors: Vec<usize>,
        num_colors: usize,
        edges: Vec<(usize, usize)>,
        weights: Option<Vec<f64>>,
    ) -> Result<Self> {
        if let Some((v, &c)) = colors.iter().enumerate().find(|(_, &c)| c >= num_colors) {
            return Err(invalid_input(format!(
                "vertex {v} has color {c} but only {num_colors} colors are declared"
            )));
        }
        if let Some(ws) = &weights {
            if let Some(w) = ws.iter().find(|w| !w.is_finite() || **w < 0.0) {
                return Err(invalid_input(format!(
                    "edge weight {w} must be finite and non-negative"
                )));
            }
        }
        let graph = SimpleGraph::new(colors.len(), edges)?;
        // An edgeless graph has nothing to weigh.
        let weights = weights.filter(|ws| !ws.is_empty());
        Ok(Self {
            graph,
            colors,
            num_colors,
            weights,
        })
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn num_vertices(&self) -> usize {
        self.graph.num_vertices()
    }

    pub fn num_edges(&self) -> usize {
        self.graph.num_edges()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        self.graph.edges()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.graph.adjacent(u, v)
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn weights(&self) -> Option<&[f64]> {
        self.weights.as_deref()
    }

    /// Weight of edge `k`; unweighted graphs weigh 1.0 per edge.
    pub fn edge_weight(&self, k: usize) -> f64 {
        self.weights.as_ref().map_or(1.0, |ws| ws[k])
    }

    /// Vertices grouped by color, each class in increasing vertex order.
    pub fn color_classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.num_colors];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }
}
