use serde::{Deserialize, Serialize};

use crate::error::{invalid_input, invalid_instance, Result};

/// A point in the Euclidean plane carrying one color label.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ColoredPoint {
    pub x: f64,
    pub y: f64,
    pub color: usize,
}

impl ColoredPoint {
    pub fn new(x: f64, y: f64, color: usize) -> Self {
        Self { x, y, color }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// Squared Euclidean distance. All distance comparisons in the crate go
/// through this key so that every route agrees bit for bit.
#[inline]
pub fn squared_distance(p: &ColoredPoint, q: &ColoredPoint) -> f64 {
    let dx = p.x - q.x;
    let dy = p.y - q.y;
    dx * dx + dy * dy
}

/// Euclidean (L2) distance between two points.
#[inline]
pub fn distance(p: &ColoredPoint, q: &ColoredPoint) -> f64 {
    squared_distance(p, q).sqrt()
}

/// A validated colored point set: `t >= 2` colors, each of which occurs at
/// least once, and finite coordinates throughout.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ColoredPointSet {
    points: Vec<ColoredPoint>,
    num_colors: usize,
}

impl ColoredPointSet {
    pub fn new(points: Vec<ColoredPoint>, num_colors: usize) -> Result<Self> {
        if num_colors < 2 {
            return Err(invalid_instance(format!(
                "need at least 2 colors, got {num_colors}"
            )));
        }
        let mut seen = vec![false; num_colors];
        for (i, p) in points.iter().enumerate() {
            if !p.is_finite() {
                return Err(invalid_input(format!(
                    "point {i} has a non-finite coordinate"
                )));
            }
            if p.color >= num_colors {
                return Err(invalid_input(format!(
                    "point {i} has color {} but only {num_colors} colors are declared",
                    p.color
                )));
            }
            seen[p.color] = true;
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(invalid_instance(format!("color {missing} has no points")));
        }
        Ok(Self { points, num_colors })
    }

    pub fn points(&self) -> &[ColoredPoint] {
        &self.points
    }

    pub fn point(&self, index: usize) -> &ColoredPoint {
        &self.points[index]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    /// Point indexes grouped by color, each group in increasing index order.
    pub fn color_classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.num_colors];
        for (i, p) in self.points.iter().enumerate() {
            classes[p.color].push(i);
        }
        classes
    }

    pub fn dist(&self, a: usize, b: usize) -> f64 {
        distance(&self.points[a], &self.points[b])
    }

    /// `k` for a set with `2k` colors; errors when the color count is odd.
    pub fn half_colors(&self) -> Result<usize> {
        if !self.num_colors.is_multiple_of(2) {
            return Err(invalid_instance(format!(
                "matching instances need an even number of colors, got {}",
                self.num_colors
            )));
        }
        Ok(self.num_colors / 2)
    }
}
