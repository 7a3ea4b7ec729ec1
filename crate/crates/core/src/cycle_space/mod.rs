//! Weighted cycle equations, tagged cycles and colouring checks.

mod certify;
mod coloring;
mod system;
mod tagged;

pub use certify::{certify_strongly_genus_one, falsify_strongly_genus_one, CertifyOptions, SgoOutcome, EXACT_EDGE_CAP};
pub use coloring::{
    chromatic_number, count_proper_3_colorings, count_proper_colorings, find_increasing_cycle,
    for_each_proper_coloring, increasing_cycle_unavoidable, is_uniquely_3_colorable, IncreasingCycleVerdict,
};
pub use system::{
    all_six_systems, cycle_equation, cycle_equation_system, cycle_space_system, cycle_system_for, roles_of, weight,
    Labeling,
};
pub use tagged::{find_tagged_cycle, EdgeColoring, TaggedCycleWitness, TaggedKind, TaggedSearcher};
