//! Vertex-sampling testers for odd cycles: packing refinement, the cleaning
//! structure, single trials, success estimates and the family harness.

mod family;
mod search;
mod structure;
mod trial;

pub use family::{family_test, FamilyDetection, FamilyReport, Growth, LevelCertificate};
pub use search::{find_cycle_of_length, CycleSearch};
pub use structure::{
    blowup_cycle_packing, build_cleaning_structure, parse_epsilon, path_homomorphism, refine_packing, Cleaning,
    CleaningStructure, Epsilon, RefinedPacking,
};
pub use trial::{
    estimate_success_probability, run_sampler_trial, wilson_interval, Estimate, SampleSize, Sampler, SamplerConfig,
    SamplerMode, TrialRecord, TrialStage, DEFAULT_NODE_CAP,
};
