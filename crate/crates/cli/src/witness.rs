//! Self-contained witness files. Each one embeds the graph or system it
//! refers to, so `verify` can re-check it without the original inputs.

use anyhow::{bail, Context};
use serde::{Deserialize, Serialize};

use removal_core::convexity::verify_convex_equation;
use removal_core::cycle_space::{find_increasing_cycle, find_tagged_cycle, EdgeColoring};
use removal_core::equations::{EquationSystem, LinearEquation};
use removal_core::graph::{parse_graph, GeneralGraph, TripartiteGraph};
use removal_core::pseudorandom::{verify_witness, Property, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WitnessFile {
    /// A proper non-empty subset of variables on which every row sums to 0.
    NotGenusOne { system: String, subset: Vec<usize> },
    /// An edge colouring using both colours with no tagged cycle.
    SgoCounterexample { graph: String, black_edges: Vec<usize> },
    /// A failing instance of a pseudorandomness property.
    Property { graph: String, property: String, witness: Witness },
    /// A cycle of the stated length.
    Cycle { graph: String, length: usize, cycle: Vec<usize> },
    /// A convex equation in the row span of the system.
    ConvexEquation { system: String, equation: Vec<i64> },
    /// A proper colouring with colours `1..=t` and no increasing cycle.
    IncreasingCycleFree { graph: String, t: usize, coloring: Vec<usize> },
}

impl WitnessFile {
    pub fn kind(&self) -> &'static str {
        match self {
            WitnessFile::NotGenusOne { .. } => "not-genus-one",
            WitnessFile::SgoCounterexample { .. } => "sgo-counterexample",
            WitnessFile::Property { .. } => "property",
            WitnessFile::Cycle { .. } => "cycle",
            WitnessFile::ConvexEquation { .. } => "convex-equation",
            WitnessFile::IncreasingCycleFree { .. } => "increasing-cycle-free",
        }
    }

    /// `Ok(Err(reason))` when the witness is well-formed but wrong.
    pub fn verify(&self) -> anyhow::Result<Result<(), String>> {
        let ok = |b: bool, reason: &str| if b { Ok(()) } else { Err(reason.to_string()) };
        Ok(match self {
            WitnessFile::NotGenusOne { system, subset } => {
                let s = EquationSystem::parse(system)?;
                let mut sorted = subset.clone();
                sorted.sort_unstable();
                sorted.dedup();
                let proper = !sorted.is_empty() && sorted.len() == subset.len() && sorted.len() < s.k() && sorted.iter().all(|&v| v < s.k());
                let vanishes = s.rows().iter().all(|r| sorted.iter().map(|&v| r.coeff(v)).sum::<i64>() == 0);
                ok(proper, "subset is not a proper non-empty set of variables")
                    .and_then(|_| ok(vanishes, "some row does not vanish on the subset"))
            }
            WitnessFile::SgoCounterexample { graph, black_edges } => {
                let h = tripartite(graph)?;
                if black_edges.iter().any(|&e| e >= h.edge_count()) {
                    return Ok(Err("edge index out of range".into()));
                }
                let c = EdgeColoring::from_black(h.edge_count(), black_edges);
                ok(c.both_colors_present(), "colouring uses one colour")
                    .and_then(|_| ok(find_tagged_cycle(&h, &c).is_none(), "a tagged cycle exists"))
            }
            WitnessFile::Property { graph, property, witness } => {
                let h = tripartite(graph)?;
                let p: Property = property.parse()?;
                ok(verify_witness(&h, p, witness), "witness does not show the property failing")
            }
            WitnessFile::Cycle { graph, length, cycle } => {
                let g = general(graph)?;
                ok(cycle.len() == *length && g.is_cycle(cycle), "not a cycle of the stated length")
            }
            WitnessFile::ConvexEquation { system, equation } => {
                let s = EquationSystem::parse(system)?;
                let eq = LinearEquation::new(equation.clone());
                ok(verify_convex_equation(&s, &eq), "not a convex equation in the row span")
            }
            WitnessFile::IncreasingCycleFree { graph, t, coloring } => {
                let g = general(graph)?;
                let proper = coloring.len() == g.vertex_count()
                    && coloring.iter().all(|&c| (1..=*t).contains(&c))
                    && g.edges().iter().all(|&(u, v)| coloring[u] != coloring[v]);
                ok(proper, "not a proper colouring with colours 1..=t")
                    .and_then(|_| ok(find_increasing_cycle(&g, coloring).is_none(), "an increasing cycle exists"))
            }
        })
    }
}

fn general(text: &str) -> anyhow::Result<GeneralGraph> {
    Ok(parse_graph(text).context("embedded graph")?.graph().clone())
}

fn tripartite(text: &str) -> anyhow::Result<TripartiteGraph> {
    let g = parse_graph(text).context("embedded graph")?;
    match g.into_tripartite() {
        Ok(t) => Ok(t),
        Err(e) => bail!("embedded graph is not tripartite: {e}"),
    }
}
