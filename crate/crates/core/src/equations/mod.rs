//! Integer linear equations, genus-one checks and solution-free sets.

mod behrend;
mod combine;
mod equation;
mod genus;
mod solutions;

pub use behrend::behrend_set;
pub use combine::{
    combine, random_genus_one_combination, random_shift_intersection, shift_intersection, shift_modulus,
    Combination, ShiftIntersection, DEFAULT_RETRY_CAP,
};
pub use equation::{three_ap, EquationSystem, LinearEquation};
pub use genus::{falsify_genus_one, is_genus_one, subset_vanishes, GenusVerdict, DEFAULT_GENUS_CAP};
pub use solutions::{
    find_nontrivial_solution, has_nontrivial_solution, max_solution_free_subset, SolutionFreeSet, SubsetSearch,
    DEFAULT_SUBSET_CAP,
};
