//! Reductions from k-Independent Set to k-Multicolored Independent Set
//! (MCIS) and from MCIS to k-Multicolored Independent Matching (MCIM), with
//! exhaustive solvers for all three problems and a certifier that checks
//! the three answers agree.
//!
//! A colorful independent set takes one vertex of every color with no edge
//! among them. A colorful independent matching on `2k` colors takes `k`
//! edges whose endpoints carry every color once, such that no graph edge
//! joins endpoints of two different chosen edges.

use std::cell::Cell;
use std::fmt;

use crate::error::{invalid_input, Error, Result};
use crate::graph::{SimpleGraph, VertexColoredGraph};
use crate::oracles::{binomial, colorful_matching_setup, for_each_colorful_matching, OracleBudget};

/// Where an output vertex of a reduction came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// Copy number `copy` of source vertex `source`.
    Copy { source: usize, copy: usize },
    /// Source vertex carried over unchanged.
    Original { source: usize },
    /// New vertex with no source counterpart.
    Gadget { index: usize },
}

impl Provenance {
    pub fn source(self) -> Option<usize> {
        match self {
            Provenance::Copy { source, .. } | Provenance::Original { source } => Some(source),
            Provenance::Gadget { .. } => None,
        }
    }

    pub fn tag(self) -> String {
        match self {
            Provenance::Copy { copy, .. } => format!("copy:{copy}"),
            Provenance::Original { .. } => "orig".into(),
            Provenance::Gadget { index } => format!("gadget:{index}"),
        }
    }

    /// Inverse of `(source(), tag())`.
    pub fn from_parts(source: Option<usize>, tag: &str) -> Option<Self> {
        match (source, tag.split_once(':')) {
            (Some(source), Some(("copy", i))) => Some(Provenance::Copy {
                source,
                copy: i.parse().ok()?,
            }),
            (None, Some(("gadget", i))) => Some(Provenance::Gadget {
                index: i.parse().ok()?,
            }),
            (Some(source), None) if tag == "orig" => Some(Provenance::Original { source }),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReductionArtifact {
    pub output: VertexColoredGraph,
    /// Indexed by output vertex.
    pub vertex_provenance: Vec<Provenance>,
}

fn copies_artifact(
    g: &SimpleGraph,
    k: usize,
    edges: Vec<(usize, usize)>,
) -> Result<ReductionArtifact> {
    let n = g.num_vertices();
    let colors = (0..k).flat_map(|i| std::iter::repeat_n(i, n)).collect();
    let output = VertexColoredGraph::new(
        colors,
        k,
        SimpleGraph::new_dedup(k * n, edges)?.edges().to_vec(),
    )?;
    let vertex_provenance = (0..k)
        .flat_map(|copy| (0..n).map(move |source| Provenance::Copy { source, copy }))
        .collect();
    Ok(ReductionArtifact {
        output,
        vertex_provenance,
    })
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        Err(invalid_input("k must be at least 1"))
    } else {
        Ok(())
    }
}

/// The copy-and-gadget edges: `k` colored copies of `g` (copy `i` holds
/// vertex `i*n + v`), and for every edge `(u, v)` and copies `i < j` the
/// edges `(u_i,u_j)`, `(v_i,v_j)`, `(u_i,v_j)`, `(u_j,v_i)`.
fn copy_and_gadget_edges(g: &SimpleGraph, k: usize) -> Vec<(usize, usize)> {
    let n = g.num_vertices();
    let id = |v: usize, i: usize| i * n + v;
    let mut edges = Vec::new();
    for i in 0..k {
        edges.extend(g.edges().iter().map(|&(u, v)| (id(u, i), id(v, i))));
    }
    for &(u, v) in g.edges() {
        for i in 0..k {
            for j in i + 1..k {
                edges.push((id(u, i), id(u, j)));
                edges.push((id(v, i), id(v, j)));
                edges.push((id(u, i), id(v, j)));
                edges.push((id(u, j), id(v, i)));
            }
        }
    }
    edges
}

/// k-Independent Set to MCIS, using only the copy and edge-gadget edges.
///
/// Not a valid reduction when `g` has isolated vertices: the copies of an
/// isolated vertex stay pairwise non-adjacent, so picking that one vertex in
/// every copy forms a colorful independent set even when `g` has no
/// independent set of size `k`. Kept for comparison; see
/// [`reduce_is_to_mcis`].
pub fn reduce_is_to_mcis_edge_gadgets_only(g: &SimpleGraph, k: usize) -> Result<ReductionArtifact> {
    check_k(k)?;
    copies_artifact(g, k, copy_and_gadget_edges(g, k))
}

/// k-Independent Set to MCIS: `k` copies of `g`, copy `i` colored `i`, with
/// every pair of copies of one vertex made adjacent and, for every edge
/// `(u, v)` and copies `i != j`, `u_i` adjacent to `v_j`.
///
/// A colorful independent set then uses `k` distinct source vertices that
/// are pairwise non-adjacent in `g`, and conversely. The output has `k*n`
/// vertices and `k*m + C(k,2)*(n + 2m)` edges.
pub fn reduce_is_to_mcis(g: &SimpleGraph, k: usize) -> Result<ReductionArtifact> {
    check_k(k)?;
    let n = g.num_vertices();
    let mut edges = copy_and_gadget_edges(g, k);
    for v in 0..n {
        for i in 0..k {
            for j in i + 1..k {
                edges.push((i * n + v, j * n + v));
            }
        }
    }
    copies_artifact(g, k, edges)
}

/// MCIS with `k` colors to MCIM with `2k` colors: keeps `g` and adds gadget
/// vertices `u_0..u_k` (vertex `n+i`, color `k+i`), each adjacent to exactly
/// the vertices of color `i`. Edge weights are dropped.
pub fn reduce_mcis_to_mcim(g: &VertexColoredGraph) -> Result<ReductionArtifact> {
    let n = g.num_vertices();
    let k = g.num_colors();
    check_k(k)?;
    let colors = g.colors().iter().copied().chain(k..2 * k).collect();
    let edges = g
        .edges()
        .iter()
        .copied()
        .chain((0..n).map(|v| (v, n + g.color(v))));
    let output = VertexColoredGraph::new(colors, 2 * k, edges)?;
    let vertex_provenance = (0..n)
        .map(|source| Provenance::Original { source })
        .chain((0..k).map(|index| Provenance::Gadget { index }))
        .collect();
    Ok(ReductionArtifact {
        output,
        vertex_provenance,
    })
}

/// Lexicographically first independent set of size `k`, or `None`.
pub fn brute_force_independent_set(
    g: &SimpleGraph,
    k: usize,
    budget: OracleBudget,
) -> Result<Option<Vec<usize>>> {
    let n = g.num_vertices();
    budget.check(binomial(n, k))?;

    fn rec(g: &SimpleGraph, k: usize, start: usize, cur: &mut Vec<usize>) -> bool {
        if cur.len() == k {
            return true;
        }
        for v in start..g.num_vertices() {
            if cur.iter().all(|&u| !g.adjacent(u, v)) {
                cur.push(v);
                if rec(g, k, v + 1, cur) {
                    return true;
                }
                cur.pop();
            }
        }
        false
    }

    let mut cur = Vec::with_capacity(k);
    Ok(rec(g, k, 0, &mut cur).then_some(cur))
}

/// A colorful independent set as a vertex per color (index = color), or
/// `None`.
pub fn brute_force_mcis(
    g: &VertexColoredGraph,
    budget: OracleBudget,
) -> Result<Option<Vec<usize>>> {
    let classes = g.color_classes();
    budget.check(
        classes
            .iter()
            .fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128)),
    )?;

    fn rec(g: &VertexColoredGraph, classes: &[Vec<usize>], cur: &mut Vec<usize>) -> bool {
        let Some(class) = classes.get(cur.len()) else {
            return true;
        };
        for &v in class {
            if cur.iter().all(|&u| !g.adjacent(u, v)) {
                cur.push(v);
                if rec(g, classes, cur) {
                    return true;
                }
                cur.pop();
            }
        }
        false
    }

    let mut cur = Vec::with_capacity(classes.len());
    Ok(rec(g, &classes, &mut cur).then_some(cur))
}

/// True when no graph edge joins an endpoint of `a` to an endpoint of `b`.
pub fn edges_independent(g: &VertexColoredGraph, a: (usize, usize), b: (usize, usize)) -> bool {
    [(a.0, b.0), (a.0, b.1), (a.1, b.0), (a.1, b.1)]
        .iter()
        .all(|&(x, y)| x != y && !g.adjacent(x, y))
}

/// A colorful independent matching (edges normalized and sorted), or
/// `None`.
pub fn brute_force_mcim(
    g: &VertexColoredGraph,
    budget: OracleBudget,
) -> Result<Option<Vec<(usize, usize)>>> {
    if colorful_matching_setup(g, budget)?.is_none() {
        return Ok(None);
    }
    let edges = g.edges();
    let done = Cell::new(false);
    let mut found: Option<Vec<(usize, usize)>> = None;
    for_each_colorful_matching(
        g,
        |chosen, next| {
            !done.get()
                && chosen
                    .iter()
                    .all(|&k| edges_independent(g, edges[k], edges[next]))
        },
        |chosen| {
            if !done.replace(true) {
                let mut pick: Vec<(usize, usize)> = chosen.iter().map(|&k| edges[k]).collect();
                pick.sort_unstable();
                found = Some(pick);
            }
        },
    );
    Ok(found)
}

/// Outcome of running all three exhaustive solvers along the reduction
/// chain `g -> MCIS instance -> MCIM instance`.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub k: usize,
    pub has_independent_set: bool,
    pub has_colorful_independent_set: bool,
    pub has_colorful_independent_matching: bool,
    /// Independent set of `g` found directly.
    pub independent_set: Option<Vec<usize>>,
    /// Colorful independent set of the MCIS instance, lifted to vertices of `g`.
    pub lifted_from_mcis: Option<Vec<usize>>,
    /// Colorful independent matching of the MCIM instance, lifted to
    /// vertices of `g`.
    pub lifted_from_mcim: Option<Vec<usize>>,
    pub mcis_size: (usize, usize),
    pub mcim_size: (usize, usize),
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let set = |s: &Option<Vec<usize>>| {
            s.as_ref().map_or_else(
                || "-".to_string(),
                |v| v.iter().map(usize::to_string).collect::<Vec<_>>().join(","),
            )
        };
        writeln!(f, "k={}", self.k)?;
        writeln!(f, "independent_set={}", self.has_independent_set)?;
        writeln!(
            f,
            "colorful_independent_set={}",
            self.has_colorful_independent_set
        )?;
        writeln!(
            f,
            "colorful_independent_matching={}",
            self.has_colorful_independent_matching
        )?;
        writeln!(f, "equivalent=true")?;
        writeln!(
            f,
            "mcis_instance={} vertices {} edges",
            self.mcis_size.0, self.mcis_size.1
        )?;
        writeln!(
            f,
            "mcim_instance={} vertices {} edges",
            self.mcim_size.0, self.mcim_size.1
        )?;
        writeln!(f, "witness_is={}", set(&self.independent_set))?;
        writeln!(f, "witness_mcis={}", set(&self.lifted_from_mcis))?;
        writeln!(f, "witness_mcim={}", set(&self.lifted_from_mcim))
    }
}

fn violation(msg: impl Into<String>) -> Error {
    Error::EquivalenceViolation(msg.into())
}

/// Lifts output vertices to their sources and checks that they form an
/// independent set of `k` distinct vertices of `g`.
fn lift(
    g: &SimpleGraph,
    k: usize,
    provenance: &[Provenance],
    vertices: &[usize],
    what: &str,
) -> Result<Vec<usize>> {
    let mut lifted = Vec::with_capacity(vertices.len());
    for &v in vertices {
        lifted.push(
            provenance[v]
                .source()
                .ok_or_else(|| violation(format!("{what} witness uses gadget vertex {v}")))?,
        );
    }
    lifted.sort_unstable();
    lifted.dedup();
    let independent = lifted
        .iter()
        .enumerate()
        .all(|(i, &u)| lifted[i + 1..].iter().all(|&v| !g.adjacent(u, v)));
    if lifted.len() != k || !independent {
        return Err(violation(format!(
            "{what} witness lifts to {lifted:?}, not an independent set of size {k}"
        )));
    }
    Ok(lifted)
}

/// Runs both reductions on `(g, k)`, solves all three instances
/// exhaustively, checks the size formulas and that the three feasibility
/// answers agree, and lifts every witness back to `g`.
pub fn certify_equivalence(g: &SimpleGraph, k: usize, budget: OracleBudget) -> Result<Certificate> {
    let (n, m) = (g.num_vertices(), g.num_edges());
    let mcis = reduce_is_to_mcis(g, k)?;
    let mcim = reduce_mcis_to_mcim(&mcis.output)?;
    let (gi, gm) = (&mcis.output, &mcim.output);
    if gi.num_vertices() != k * n || gi.num_colors() != k {
        return Err(violation("MCIS instance has the wrong size"));
    }
    if gm.num_vertices() != gi.num_vertices() + k
        || gm.num_edges() != gi.num_edges() + gi.num_vertices()
        || gm.num_colors() != 2 * k
    {
        return Err(violation("MCIM instance has the wrong size"));
    }
    if gi.num_edges() != k * m + k * (k - 1) / 2 * (n + 2 * m) {
        return Err(violation("MCIS instance has the wrong edge count"));
    }

    let independent_set = brute_force_independent_set(g, k, budget)?;
    let colorful = brute_force_mcis(gi, budget)?;
    let matching = brute_force_mcim(gm, budget)?;
    let bits = [
        independent_set.is_some(),
        colorful.is_some(),
        matching.is_some(),
    ];
    if bits[0] != bits[1] || bits[1] != bits[2] {
        return Err(violation(format!(
            "k-IS {}, colorful IS {}, colorful independent matching {}",
            bits[0], bits[1], bits[2]
        )));
    }

    let lifted_from_mcis = colorful
        .as_deref()
        .map(|s| lift(g, k, &mcis.vertex_provenance, s, "colorful IS"))
        .transpose()?;
    let lifted_from_mcim = matching
        .as_deref()
        .map(|edges| {
            // Each chosen edge pairs one gadget with one MCIS-instance vertex.
            let inner: Vec<usize> = edges
                .iter()
                .flat_map(|&(a, b)| [a, b])
                .filter_map(|v| mcim.vertex_provenance[v].source())
                .collect();
            if !is_colorful_independent_set(gi, &inner) {
                return Err(violation(format!(
                    "matching {edges:?} does not lift to a colorful independent set"
                )));
            }
            lift(
                g,
                k,
                &mcis.vertex_provenance,
                &inner,
                "colorful independent matching",
            )
        })
        .transpose()?;

    Ok(Certificate {
        k,
        has_independent_set: bits[0],
        has_colorful_independent_set: bits[1],
        has_colorful_independent_matching: bits[2],
        independent_set,
        lifted_from_mcis,
        lifted_from_mcim,
        mcis_size: (gi.num_vertices(), gi.num_edges()),
        mcim_size: (gm.num_vertices(), gm.num_edges()),
    })
}

/// True when `vertices` holds one vertex of every color of `g` and no two
/// of them are adjacent.
pub fn is_colorful_independent_set(g: &VertexColoredGraph, vertices: &[usize]) -> bool {
    let mut colors: Vec<usize> = vertices.iter().map(|&v| g.color(v)).collect();
    colors.sort_unstable();
    colors.dedup();
    colors.len() == g.num_colors()
        && vertices.len() == g.num_colors()
        && vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !g.adjacent(u, v)))
}
