//! The two objective-separating point sets, shipped as points files.
//!
//! Figure 1 (`eps = 0.1`): two unit squares side by side,
//! `a = (1,0):0`, `b = (1,1):1`, `c = (eps,0):2`, `d = (0,1):2`,
//! `e = (2,0):3`, `f = (2-eps,1):3`.
//!
//! Figure 2 (`eps = 0.1`): `c = (0,0):0` and `d = (2+eps,0):1` at distance
//! `2+eps`; `e`, `f` directly below them at `1.5+eps`; `a`, `b` above at
//! distance `1-eps` from each other and `2+eps` from `c` and `d`
//! respectively.

use crate::geometry::ColoredPointSet;
use crate::io::parse_points;

pub const EPSILON: f64 = 0.1;

pub const FIGURE1_POINTS: &str = include_str!("../fixtures/figure1.points");
pub const FIGURE2_POINTS: &str = include_str!("../fixtures/figure2.points");

/// Point order in both fixtures: a, b, c, d, e, f.
pub fn figure1() -> ColoredPointSet {
    parse_points(FIGURE1_POINTS).expect("figure1 fixture parses")
}

/// Point order: a, b, c, d, e, f.
pub fn figure2() -> ColoredPointSet {
    parse_points(FIGURE2_POINTS).expect("figure2 fixture parses")
}
