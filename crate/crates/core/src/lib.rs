//! Optimal color-spanning matchings over colored planar point sets and
//! vertex-colored graphs, with exhaustive reference solvers and executable
//! reductions between the multicolored independent set and independent
//! matching problems.
//!
//! The geometric pipelines reduce a point set with `2k` colors to a complete
//! graph on its colors, weighted by bichromatic closest or farthest pairs,
//! and then solve a perfect-matching problem on that graph:
//!
//! | objective | color graph | matching                         |
//! |-----------|-------------|----------------------------------|
//! | MinSum    | closest     | minimum-weight perfect matching  |
//! | MinMax    | closest     | bottleneck perfect matching      |
//! | MaxMin    | farthest    | max-min perfect matching         |

pub mod error;
pub mod fixtures;
pub mod generate;
pub mod geometry;
pub mod graph;
pub mod hardness;
pub mod io;
pub mod matching;
pub mod oracles;
pub mod render;
pub mod solvers;

pub use error::{Error, Result};
