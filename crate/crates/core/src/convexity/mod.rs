//! Exact rational feasibility LPs and the search for convex equations in
//! the span of a cycle system.

mod lp;
mod search;

pub use lp::{lp_feasible, Constraint, LpOutcome, RationalLP, Relation};
pub use search::{
    convex_span_search, verify_convex_equation, CandidateReport, ConvexEquation, ConvexOptions, ConvexSearchReport,
};
