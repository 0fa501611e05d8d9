//! Colored planar point sets and their closest/farthest color graphs.

mod color_graph;
mod hull;
mod kdtree;
mod point;

pub use color_graph::{
    build_closest_color_graph, build_farthest_color_graph, farthest_pair_both_routes, ColorGraph,
    ColorGraphMode, ColorPairWitness,
};
pub use hull::{convex_hull, HullVertex};
pub use kdtree::{NearestNeighborIndex, Neighbor};
pub use point::{distance, squared_distance, ColoredPoint, ColoredPointSet};

/// Index over one color class; errors on an empty or mixed-color list.
pub fn build_nn_index(points: &[ColoredPoint]) -> crate::Result<NearestNeighborIndex> {
    NearestNeighborIndex::build(points)
}
