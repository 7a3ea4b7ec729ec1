//! Random tripartite graphs, triangle deletion and pseudorandomness checks.

mod pipeline;
mod properties;

pub use pipeline::{default_density, delete_one_edge_per_triangle, run_pipeline, sample_tripartite, DeletionRule, PipelineRecord};
pub use properties::{
    common_neighborhood_size, property_check, BigSetBound, CheckMode, EdgeFraction, ExpansionFactor, Property,
    verify_witness, PropertyVerdict, Witness, DEFAULT_TRIALS,
};
