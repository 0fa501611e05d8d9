//! Seeded instance generators.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64(seed)`, so output
//! depends only on the arguments and is identical across platforms.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution as _, Normal};

use crate::error::{invalid_input, Error, Result};
use crate::geometry::{ColoredPoint, ColoredPointSet};
use crate::graph::{SimpleGraph, VertexColoredGraph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Distribution {
    /// Independent uniform points in the unit square.
    #[default]
    Uniform,
    /// One Gaussian blob (sigma 0.05) per color, centers uniform in the
    /// unit square.
    Clustered,
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Distribution::Uniform => "uniform",
            Distribution::Clustered => "clustered",
        })
    }
}

impl FromStr for Distribution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform" => Ok(Distribution::Uniform),
            "clustered" => Ok(Distribution::Clustered),
            _ => Err(invalid_input(format!("unknown distribution {s:?}"))),
        }
    }
}

/// Colors for `n` items: item `i < t` gets color `i`, the rest are uniform.
fn spread_colors(rng: &mut ChaCha8Rng, n: usize, t: usize) -> Vec<usize> {
    (0..n)
        .map(|i| if i < t { i } else { rng.random_range(0..t) })
        .collect()
}

fn check_counts(n: usize, t: usize) -> Result<()> {
    if t < 2 {
        return Err(invalid_input("need at least 2 colors"));
    }
    if t > n {
        return Err(invalid_input(format!(
            "{t} colors cannot occur among {n} points"
        )));
    }
    Ok(())
}

/// `n` points with `t` colors, every color present.
pub fn random_points(
    n: usize,
    t: usize,
    distribution: Distribution,
    seed: u64,
) -> Result<ColoredPointSet> {
    check_counts(n, t)?;
    let mut rng = rng(seed);
    let colors = spread_colors(&mut rng, n, t);
    let points = match distribution {
        Distribution::Uniform => colors
            .into_iter()
            .map(|c| ColoredPoint::new(rng.random(), rng.random(), c))
            .collect(),
        Distribution::Clustered => {
            let centers: Vec<(f64, f64)> = (0..t).map(|_| (rng.random(), rng.random())).collect();
            let noise = Normal::new(0.0, 0.05).expect("valid sigma");
            colors
                .into_iter()
                .map(|c| {
                    let (cx, cy) = centers[c];
                    ColoredPoint::new(cx + noise.sample(&mut rng), cy + noise.sample(&mut rng), c)
                })
                .collect()
        }
    };
    ColoredPointSet::new(points, t)
}

pub fn uniform_points(n: usize, t: usize, seed: u64) -> Result<ColoredPointSet> {
    random_points(n, t, Distribution::Uniform, seed)
}

/// Uniform points where color `c` has exactly `sizes[c]` points, listed
/// color by color.
pub fn points_with_class_sizes(sizes: &[usize], seed: u64) -> Result<ColoredPointSet> {
    let mut rng = rng(seed);
    let points = sizes
        .iter()
        .enumerate()
        .flat_map(|(c, &s)| std::iter::repeat_n(c, s))
        .map(|c| ColoredPoint::new(rng.random(), rng.random(), c))
        .collect();
    ColoredPointSet::new(points, sizes.len())
}

/// G(n, p) random graph.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<SimpleGraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid_input(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::new(n, edges)
}

/// G(n, p) with `t` vertex colors, every color present. Weighted graphs get
/// integer weights in `1..=100`, so sums of weights are exact.
pub fn random_colored_graph(
    n: usize,
    t: usize,
    p: f64,
    weighted: bool,
    seed: u64,
) -> Result<VertexColoredGraph> {
    if t == 0 || t > n {
        return Err(invalid_input(format!(
            "{t} colors cannot occur among {n} vertices"
        )));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid_input(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let mut rng = rng(seed);
    let colors = spread_colors(&mut rng, n, t);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                let w = if weighted {
                    rng.random_range(1..=100u32) as f64
                } else {
                    1.0
                };
                edges.push((u, v, w));
            }
        }
    }
    if weighted {
        VertexColoredGraph::with_weights(colors, t, edges)
    } else {
        VertexColoredGraph::new(colors, t, edges.into_iter().map(|(u, v, _)| (u, v)))
    }
}
