use serde::{Deserialize, Serialize};

use super::coloring::is_uniquely_3_colorable;
use super::tagged::{EdgeColoring, TaggedSearcher};
use crate::graph::TripartiteGraph;
use crate::par::Exec;
use crate::rng::Rng;

/// Largest edge count handled by exhaustive colouring enumeration.
pub const EXACT_EDGE_CAP: usize = 30;

/// Colourings per parallel work unit.
const CHUNK: u64 = 1 << 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SgoOutcome {
    Certified { colorings_checked: u64 },
    /// A colouring with both colours and no tagged cycle.
    Counterexample { coloring: EdgeColoring },
    NotUniquely3Colorable,
    Inconclusive { colorings_checked: u64, colorings_total: Option<u64>, reason: String },
}

impl SgoOutcome {
    pub fn is_certified(&self) -> bool {
        matches!(self, SgoOutcome::Certified { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifyOptions {
    /// Maximum number of colourings examined.
    pub budget: u64,
    pub exec: Exec,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            budget: 1 << 24,
            exec: Exec::default(),
        }
    }
}

/// Decides whether `h` is strongly genus-one, exhaustively when
/// `|E(h)| <= 30` and the budget covers every colouring.
///
/// Colour swaps preserve tagged cycles, so the first edge is fixed white.
/// Colourings with a single edge of one colour are tried first since they
/// fail fastest; the full enumeration then runs over the remaining edges in
/// chunks, and the lowest-numbered counterexample is reported.
pub fn certify_strongly_genus_one(h: &TripartiteGraph, options: CertifyOptions) -> SgoOutcome {
    if !is_uniquely_3_colorable(h.graph()) {
        return SgoOutcome::NotUniquely3Colorable;
    }
    let e = h.edge_count();
    if e < 2 {
        // no colouring has both colours
        return SgoOutcome::Certified { colorings_checked: 0 };
    }
    if e > EXACT_EDGE_CAP {
        return SgoOutcome::Inconclusive {
            colorings_checked: 0,
            colorings_total: None,
            reason: format!("{e} edges exceed the exact cap {EXACT_EDGE_CAP}; use falsification"),
        };
    }
    let searcher = TaggedSearcher::new(h);
    // single black edge, and single white edge (up to swap: black edge 0)
    let mut checked = 0u64;
    for i in 0..e {
        for c in [EdgeColoring::from_black(e, &[i]), EdgeColoring::from_black(e, &[i]).swapped()] {
            checked += 1;
            if searcher.find(&c).is_none() {
                return SgoOutcome::Counterexample { coloring: c };
            }
        }
    }
    // bit i of a mask colours edge i + 1 black; edge 0 stays white
    let total = (1u64 << (e - 1)) - 1;
    let limit = total.min(options.budget);
    let chunks = limit.div_ceil(CHUNK);
    let hit = options.exec.find_first(chunks as usize, |chunk| {
        let lo = 1 + chunk as u64 * CHUNK;
        let hi = (lo + CHUNK).min(limit + 1);
        (lo..hi).find_map(|mask| {
            let c = EdgeColoring::from_mask(e, mask << 1);
            searcher.find(&c).is_none().then_some(c)
        })
    });
    if let Some((_, coloring)) = hit {
        return SgoOutcome::Counterexample { coloring };
    }
    checked += limit;
    if limit < total {
        return SgoOutcome::Inconclusive {
            colorings_checked: checked,
            colorings_total: Some(total),
            reason: format!("budget of {} colourings reached", options.budget),
        };
    }
    SgoOutcome::Certified { colorings_checked: checked }
}

/// Random colourings with both colours; returns the first without a
/// tagged cycle. Finding none is not a certificate.
pub fn falsify_strongly_genus_one(h: &TripartiteGraph, trials: u64, rng: &mut Rng) -> SgoOutcome {
    use rand::Rng as _;
    if !is_uniquely_3_colorable(h.graph()) {
        return SgoOutcome::NotUniquely3Colorable;
    }
    let e = h.edge_count();
    let searcher = TaggedSearcher::new(h);
    let mut checked = 0;
    for _ in 0..trials {
        let c = EdgeColoring::from_flags((0..e).map(|_| rng.gen_bool(0.5)).collect());
        if !c.both_colors_present() {
            continue;
        }
        checked += 1;
        if searcher.find(&c).is_none() {
            return SgoOutcome::Counterexample { coloring: c };
        }
    }
    SgoOutcome::Inconclusive {
        colorings_checked: checked,
        colorings_total: None,
        reason: "not falsified by random colourings".into(),
    }
}
