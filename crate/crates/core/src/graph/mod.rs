//! Graph containers, the text file format and counting primitives.

mod bitset;
mod count;
mod general;
mod io;
mod packing;
mod peel;
mod tripartite;

pub use bitset::BitSet;
pub use count::{
    are_isomorphic, automorphism_count, count_copies, count_homomorphisms, per_vertex_triangles, triangles,
    tripartite_triangles, HomSearch,
};
pub use general::{blowup, complete_graph, cycle_graph, grotzsch_graph, path_graph, GeneralGraph};
pub use io::{parse_graph, serialize_general, serialize_graph, serialize_tripartite, GraphFile};
pub use packing::{greedy_edge_disjoint_packing, greedy_packing_up_to, residual_cycle, CyclePacking};
pub use peel::{shortest_odd_cycle, shortest_odd_cycle_peel, PeelOutcome};
pub use tripartite::{Part, PartPair, TripartiteGraph, Vertex};
