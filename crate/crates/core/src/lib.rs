//! Minimum spanning tree weight by a pure `(min, max, +)` dynamic program.
//!
//! The MST weight of a connected graph equals the sum of min-max (bottleneck)
//! distances of the edges `e_1, ..., e_{n-1}` of any fixed spanning tree, where
//! the distance of `e_i` is taken after the weights of `e_1, ..., e_{i-1}` have
//! been set to zero. Computing those distances with a Floyd–Warshall style
//! recurrence followed by cheap incremental updates gives an `O(n^3)` program
//! whose operation sequence does not depend on the weights at all.
//!
//! Module map:
//!
//! * [`graph`] and [`edgelist`]: graphs, weightings, the complete-graph
//!   extension and the fixed spanning tree.
//! * [`minmax`]: all-pairs min-max distances and the zero-edge update.
//! * [`puredp`]: the decomposition and the two pure-DP solvers.
//! * [`oracles`]: Kruskal, exhaustive enumeration, Maggs–Plotkin and Hu.
//! * [`circuit`]: the solver compiled to a straight-line program.
//! * [`machine`]: the operation interface all of the above are written against.
//! * [`generate`]: seeded random instances.

pub mod circuit;
pub mod edgelist;
mod error;
pub mod generate;
pub mod graph;
pub mod machine;
pub mod minmax;
pub mod oracles;
pub mod puredp;
mod weight;

pub use circuit::{
    compile_mst_circuit, compile_naive_circuit, count_ops, evaluate, Circuit, Node, NodeId,
};
pub use edgelist::{parse_graph, write_edge_list};
pub use error::{Error, Result};
pub use graph::{
    complete_extension, fix_spanning_tree, ExtendedWeighting, Graph, SpanningTree, Weighting,
};
pub use machine::{Machine, OpCounts};
pub use minmax::{all_pairs_minmax, minmax_distance_bruteforce, zero_edge_update, DistanceMatrix};
pub use oracles::{bruteforce_mst, hu_minmax_via_mst, kruskal_mst, maggs_plotkin_mst};
pub use puredp::{mst_decomposition, mst_puredp, mst_puredp_naive, Decomposition};
pub use weight::Weight;
