//! Computational workbench for asymmetric graph removal experiments.
//!
//! The crate is organised by subsystem:
//!
//! * [`graph`]: graph containers, file format, counting primitives, blowups,
//!   greedy cycle packings and the shortest-odd-cycle peel.
//! * [`equations`]: translation-invariant linear equations, genus-one checks,
//!   Behrend sets and exact solution-free subset search.
//! * [`rs_graphs`]: Ruzsa-Szemeredi graphs built from difference sets.
//! * [`cycle_space`]: weighted cycle equations, tagged cycles, the
//!   strongly-genus-one certifier and colouring checks.
//! * [`pseudorandom`]: sparse random tripartite graphs, triangle deletion and
//!   pseudorandomness property checks.
//! * [`convexity`]: exact rational LP feasibility and convex-equation search.
//! * [`sampler`]: vertex-sampling odd-cycle testers and their harness.
//!
//! Randomised routines take explicit seeds; see [`rng`] for the stream rule.
//! Data-parallel loops go through [`par::Exec`], which falls back to plain
//! iteration when the `parallel` feature is disabled.

pub mod convexity;
pub mod cycle_space;
pub mod equations;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod par;
pub mod pseudorandom;
pub mod rng;
pub mod rs_graphs;
pub mod sampler;

pub use error::{Error, Result};
