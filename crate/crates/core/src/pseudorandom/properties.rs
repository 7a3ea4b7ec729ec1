use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::Rng as _;
use serde::{Deserialize, Serialize};

use crate::cycle_space::count_proper_3_colorings;
use crate::graph::{tripartite_triangles, BitSet, GeneralGraph, Part, PartPair, TripartiteGraph};
use crate::par::Exec;
use crate::rng::{trial_stream, Rng};
use crate::{Error, Result};

/// Default number of random instances in falsification mode.
pub const DEFAULT_TRIALS: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EdgeFraction {
    Half,
    Third,
}

impl EdgeFraction {
    fn of(self, edges: usize) -> usize {
        match self {
            EdgeFraction::Half => edges.div_ceil(2),
            EdgeFraction::Third => edges.div_ceil(3),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExpansionFactor {
    /// `|N(Z)| > 2|Z|`, for the graph after deletion.
    Two,
    /// `|N(W)| > 6|W|`, for the sampled graph before deletion.
    Six,
}

impl ExpansionFactor {
    fn value(self) -> usize {
        match self {
            ExpansionFactor::Two => 2,
            ExpansionFactor::Six => 6,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BigSetBound {
    /// `e(X, Y) >= n`, for the sampled graph before deletion.
    N,
    /// At least one edge, for the graph after deletion.
    One,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Property {
    HalfSubgraphConnectivity(EdgeFraction),
    CommonNeighborhood,
    Expansion(ExpansionFactor),
    BigSets(BigSetBound),
    TriangleFree,
    UniqueThreeColoring,
}

impl Property {
    /// The conditions expected of the graph after deletion.
    pub fn after_deletion() -> Vec<Property> {
        vec![
            Property::HalfSubgraphConnectivity(EdgeFraction::Half),
            Property::CommonNeighborhood,
            Property::Expansion(ExpansionFactor::Two),
            Property::BigSets(BigSetBound::One),
            Property::TriangleFree,
            Property::UniqueThreeColoring,
        ]
    }

    /// The conditions expected of the sampled graph before deletion.
    pub fn before_deletion() -> Vec<Property> {
        vec![
            Property::HalfSubgraphConnectivity(EdgeFraction::Third),
            Property::CommonNeighborhood,
            Property::Expansion(ExpansionFactor::Six),
            Property::BigSets(BigSetBound::N),
        ]
    }

    pub fn supports_exact(self) -> bool {
        matches!(self, Property::TriangleFree | Property::UniqueThreeColoring)
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Property::HalfSubgraphConnectivity(EdgeFraction::Half) => "half-subgraph-connectivity",
            Property::HalfSubgraphConnectivity(EdgeFraction::Third) => "third-subgraph-connectivity",
            Property::CommonNeighborhood => "common-neighborhood",
            Property::Expansion(ExpansionFactor::Two) => "expansion",
            Property::Expansion(ExpansionFactor::Six) => "expansion-6",
            Property::BigSets(BigSetBound::One) => "big-sets",
            Property::BigSets(BigSetBound::N) => "big-sets-n",
            Property::TriangleFree => "triangle-free",
            Property::UniqueThreeColoring => "unique-3-coloring",
        };
        f.write_str(s)
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::after_deletion()
            .into_iter()
            .chain(Property::before_deletion())
            .find(|p| p.to_string() == s)
            .ok_or_else(|| Error::invalid(format!("unknown property '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CheckMode {
    Exact,
    Falsify { trials: u64, seed: u64 },
}

/// Evidence that a property fails. Vertex ids are global.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Witness {
    /// A spanning subgraph of `H[A ∪ B]` with no component meeting both
    /// sides in at least `n/10` vertices.
    Subgraph { edges: Vec<(usize, usize)>, best_component: (usize, usize) },
    CommonNeighborhood { first: Vec<usize>, second: Vec<usize>, common: usize },
    Expansion { set: Vec<usize>, target: Part, neighborhood: usize },
    BigSets { first: Vec<usize>, second: Vec<usize>, edges: usize },
    Triangle { vertices: [usize; 3] },
    /// A proper 3-colouring whose partition differs from the parts.
    Coloring { colors: Vec<u8> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum PropertyVerdict {
    /// With `exact == false` this only means no instance failed.
    Pass { exact: bool, instances: u64 },
    Fail { witness: Witness },
    Inconclusive { reason: String },
}

impl PropertyVerdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, PropertyVerdict::Pass { .. })
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, PropertyVerdict::Fail { .. })
    }
}

/// Checks `property` on `h`, whose three parts must have equal size.
pub fn property_check(h: &TripartiteGraph, property: Property, mode: CheckMode, exec: Exec) -> Result<PropertyVerdict> {
    let [na, nb, nc] = h.sizes();
    if na != nb || nb != nc {
        return Err(Error::invalid("property checks need equal part sizes"));
    }
    if mode == CheckMode::Exact && !property.supports_exact() {
        return Err(Error::invalid(format!("{property} has no exact check; use falsification")));
    }
    let (trials, seed) = match mode {
        CheckMode::Exact => (0, 0),
        CheckMode::Falsify { trials, seed } => (trials, seed),
    };
    let ctx = Ctx::new(h);
    Ok(match property {
        Property::TriangleFree => triangle_free(h),
        Property::UniqueThreeColoring => unique_coloring(h),
        Property::HalfSubgraphConnectivity(frac) => ctx.half_subgraph(frac, trials, seed, exec),
        Property::CommonNeighborhood => ctx.common_neighborhood(trials, seed, exec),
        Property::Expansion(factor) => ctx.expansion(factor, trials, seed, exec),
        Property::BigSets(bound) => ctx.big_sets(bound, trials, seed, exec),
    })
}

fn triangle_free(h: &TripartiteGraph) -> PropertyVerdict {
    match tripartite_triangles(h).first() {
        Some(&(a, b, c)) => PropertyVerdict::Fail {
            witness: Witness::Triangle {
                vertices: [a, h.offset(Part::B) + b, h.offset(Part::C) + c],
            },
        },
        None => PropertyVerdict::Pass { exact: true, instances: 1 },
    }
}

/// Relabels colours in order of first appearance, so equal partitions get
/// equal vectors.
fn canonical_partition(colors: &[u8]) -> Vec<u8> {
    let mut map = [u8::MAX; 3];
    let mut next = 0;
    colors
        .iter()
        .map(|&c| {
            if map[c as usize] == u8::MAX {
                map[c as usize] = next;
                next += 1;
            }
            map[c as usize]
        })
        .collect()
}

fn is_proper(h: &TripartiteGraph, colors: &[u8]) -> bool {
    h.graph().edges().iter().all(|&(u, v)| colors[u] != colors[v])
}

/// Cheap alternatives first: moving one vertex whose neighbours avoid a
/// part, or rotating the colours of one component.
fn alternative_coloring(h: &TripartiteGraph) -> Option<Vec<u8>> {
    let g = h.graph();
    let base: Vec<u8> = (0..h.vertex_count()).map(|v| h.vertex(v).part.index() as u8).collect();
    let canon = canonical_partition(&base);
    let differs = |c: &[u8]| is_proper(h, c) && canonical_partition(c) != canon;
    for v in 0..h.vertex_count() {
        let own = base[v];
        for target in 0..3u8 {
            if target != own && g.neighbors(v).iter().all(|&w| base[w] != target) {
                let mut c = base.clone();
                c[v] = target;
                if differs(&c) {
                    return Some(c);
                }
            }
        }
    }
    let comps = g.components();
    if comps.len() > 1 {
        for comp in &comps {
            for shift in 1..3u8 {
                let mut c = base.clone();
                for &v in comp {
                    c[v] = (c[v] + shift) % 3;
                }
                if differs(&c) {
                    return Some(c);
                }
            }
        }
    }
    None
}

fn unique_coloring(h: &TripartiteGraph) -> PropertyVerdict {
    if let Some(colors) = alternative_coloring(h) {
        return PropertyVerdict::Fail {
            witness: Witness::Coloring { colors },
        };
    }
    let g = h.graph();
    if g.is_connected() && count_proper_3_colorings(g, 7) == 6 {
        return PropertyVerdict::Pass { exact: true, instances: 1 };
    }
    // some other colouring exists; recover it by enumeration
    let base: Vec<u8> = (0..h.vertex_count()).map(|v| h.vertex(v).part.index() as u8).collect();
    let canon = canonical_partition(&base);
    let mut found = None;
    crate::cycle_space::for_each_proper_coloring(g, 3, |c| {
        let c: Vec<u8> = c.iter().map(|&x| x as u8).collect();
        if canonical_partition(&c) != canon {
            found = Some(c);
            false
        } else {
            true
        }
    });
    match found {
        Some(colors) => PropertyVerdict::Fail {
            witness: Witness::Coloring { colors },
        },
        // the parts themselves do not form a proper colouring only if the
        // graph is empty of vertices
        None => PropertyVerdict::Inconclusive {
            reason: "no alternative colouring recovered".into(),
        },
    }
}

/// Per-part neighbourhood masks: `nbr[v][q]` is the set of global
/// neighbours of `v` in part `q`.
struct Ctx<'a> {
    h: &'a TripartiteGraph,
    n: usize,
    nbr: Vec<[BitSet; 3]>,
}

const PAIRS: [(Part, Part, Part); 3] = [(Part::A, Part::B, Part::C), (Part::A, Part::C, Part::B), (Part::B, Part::C, Part::A)];

const ORDERED: [(Part, Part); 6] = [
    (Part::A, Part::B),
    (Part::A, Part::C),
    (Part::B, Part::A),
    (Part::B, Part::C),
    (Part::C, Part::A),
    (Part::C, Part::B),
];

impl<'a> Ctx<'a> {
    fn new(h: &'a TripartiteGraph) -> Self {
        let total = h.vertex_count();
        let nbr = (0..total)
            .map(|v| {
                let row = h.graph().row(v);
                [Part::A, Part::B, Part::C].map(|q| {
                    let mut m = row.clone();
                    m.intersect_with(&h.part_mask(q));
                    m
                })
            })
            .collect();
        Ctx { h, n: h.part_size(Part::A), nbr }
    }

    fn random_subset(&self, part: Part, size: usize, rng: &mut Rng) -> Vec<usize> {
        let off = self.h.offset(part);
        let mut s: Vec<usize> = sample(rng, self.n, size.min(self.n)).into_iter().map(|i| off + i).collect();
        s.sort_unstable();
        s
    }

    fn union_nbr(&self, set: &[usize], target: Part) -> BitSet {
        let mut m = BitSet::new(self.h.vertex_count());
        for &v in set {
            m.union_with(&self.nbr[v][target.index()]);
        }
        m
    }

    /// Vertices of `part` sorted by degree into `target`, smallest first.
    fn by_degree(&self, part: Part, target: Part) -> Vec<usize> {
        let mut vs: Vec<usize> = self.h.part_vertices(part).collect();
        vs.sort_by_key(|&v| (self.nbr[v][target.index()].count(), v));
        vs
    }

    fn half_subgraph(&self, frac: EdgeFraction, trials: u64, seed: u64, exec: Exec) -> PropertyVerdict {
        let edges: Vec<(usize, usize)> = self.h.oriented_edges().into_iter().filter(|&(u, v)| {
            self.h.vertex(u).part == Part::A && self.h.vertex(v).part == Part::B
        }).collect();
        let keep = frac.of(edges.len());
        let need = self.n.div_ceil(10);
        let ob = self.h.offset(Part::B);
        let check = |chosen: Vec<(usize, usize)>| -> Option<Witness> {
            let mut parent: Vec<usize> = (0..2 * self.n).collect();
            fn find(p: &mut [usize], mut x: usize) -> usize {
                while p[x] != x {
                    p[x] = p[p[x]];
                    x = p[x];
                }
                x
            }
            for &(a, b) in &chosen {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b - ob + self.n));
                parent[ra] = rb;
            }
            let mut counts = vec![(0usize, 0usize); 2 * self.n];
            for v in 0..2 * self.n {
                let r = find(&mut parent, v);
                if v < self.n {
                    counts[r].0 += 1;
                } else {
                    counts[r].1 += 1;
                }
            }
            if counts.iter().any(|&(x, y)| x >= need && y >= need) {
                return None;
            }
            let best = counts.iter().copied().max_by_key(|&(x, y)| x.min(y)).unwrap_or((0, 0));
            Some(Witness::Subgraph { edges: chosen, best_component: best })
        };
        let hit = exec.find_first(trials as usize, |t| {
            let mut rng = trial_stream(seed, t as u64);
            let mut idx: Vec<usize> = sample(&mut rng, edges.len(), keep).into_vec();
            idx.sort_unstable();
            check(idx.into_iter().map(|i| edges[i]).collect())
        });
        match hit {
            Some((_, witness)) => PropertyVerdict::Fail { witness },
            None => PropertyVerdict::Pass { exact: false, instances: trials },
        }
    }

    fn common_neighborhood(&self, trials: u64, seed: u64, exec: Exec) -> PropertyVerdict {
        let size = self.n.div_ceil(10);
        let check = |x: &[usize], y: &[usize], third: Part| -> Option<Witness> {
            let mut m = self.union_nbr(x, third);
            m.intersect_with(&self.union_nbr(y, third));
            let common = m.count();
            (100 * common < 99 * self.n).then(|| Witness::CommonNeighborhood {
                first: x.to_vec(),
                second: y.to_vec(),
                common,
            })
        };
        // adversarial start: the lowest-degree vertices towards the third part
        for (p, q, r) in PAIRS {
            let x: Vec<usize> = self.by_degree(p, r).into_iter().take(size).collect();
            let y: Vec<usize> = self.by_degree(q, r).into_iter().take(size).collect();
            if let Some(witness) = check(&x, &y, r) {
                return PropertyVerdict::Fail { witness };
            }
        }
        let hit = exec.find_first(trials as usize, |t| {
            let mut rng = trial_stream(seed, t as u64);
            PAIRS.iter().find_map(|&(p, q, r)| {
                let x = self.random_subset(p, size, &mut rng);
                let y = self.random_subset(q, size, &mut rng);
                check(&x, &y, r)
            })
        });
        match hit {
            Some((_, witness)) => PropertyVerdict::Fail { witness },
            None => PropertyVerdict::Pass { exact: false, instances: 3 * (trials + 1) },
        }
    }

    fn expansion(&self, factor: ExpansionFactor, trials: u64, seed: u64, exec: Exec) -> PropertyVerdict {
        let k = factor.value();
        let max = self.n / 12;
        let check = |set: &[usize], target: Part| -> Option<Witness> {
            let neighborhood = self.union_nbr(set, target).count();
            (neighborhood <= k * set.len()).then(|| Witness::Expansion {
                set: set.to_vec(),
                target,
                neighborhood,
            })
        };
        let mut instances = 0u64;
        // every set of size one or two
        for (p, q) in ORDERED {
            let vs: Vec<usize> = self.h.part_vertices(p).collect();
            for (i, &u) in vs.iter().enumerate() {
                if let Some(witness) = check(&[u], q) {
                    return PropertyVerdict::Fail { witness };
                }
                if max >= 2 {
                    for &v in &vs[i + 1..] {
                        if let Some(witness) = check(&[u, v], q) {
                            return PropertyVerdict::Fail { witness };
                        }
                    }
                }
            }
            instances += (vs.len() * (vs.len() + 1) / 2) as u64;
        }
        // greedy growth from the weakest vertices
        for (p, q) in ORDERED {
            for &start in self.by_degree(p, q).iter().take(8) {
                let mut set = vec![start];
                let mut nb = self.nbr[start][q.index()].clone();
                while set.len() < max {
                    let best = self
                        .h
                        .part_vertices(p)
                        .filter(|v| !set.contains(v))
                        .min_by_key(|&v| (self.nbr[v][q.index()].count() - self.nbr[v][q.index()].intersection_count(&nb), v));
                    let Some(v) = best else { break };
                    set.push(v);
                    nb.union_with(&self.nbr[v][q.index()]);
                    instances += 1;
                    if nb.count() <= k * set.len() {
                        set.sort_unstable();
                        return PropertyVerdict::Fail {
                            witness: Witness::Expansion { set, target: q, neighborhood: nb.count() },
                        };
                    }
                }
            }
        }
        if max == 0 {
            return PropertyVerdict::Pass { exact: true, instances: 0 };
        }
        let hit = exec.find_first(trials as usize, |t| {
            let mut rng = trial_stream(seed, t as u64);
            let (p, q) = ORDERED[rng.gen_range(0..6)];
            let size = rng.gen_range(1..=max);
            check(&self.random_subset(p, size, &mut rng), q)
        });
        match hit {
            Some((_, witness)) => PropertyVerdict::Fail { witness },
            None => PropertyVerdict::Pass { exact: max <= 2, instances: instances + trials },
        }
    }

    fn big_sets(&self, bound: BigSetBound, trials: u64, seed: u64, exec: Exec) -> PropertyVerdict {
        let size = self.n.div_ceil(100);
        let need = match bound {
            BigSetBound::N => self.n,
            BigSetBound::One => 1,
        };
        let check = |x: &[usize], y: &[usize], q: Part| -> Option<Witness> {
            let ymask = BitSet::from_indices(self.h.vertex_count(), y.iter().copied());
            let edges: usize = x.iter().map(|&v| self.nbr[v][q.index()].intersection_count(&ymask)).sum();
            (edges < need).then(|| Witness::BigSets {
                first: x.to_vec(),
                second: y.to_vec(),
                edges,
            })
        };
        for (p, q, _) in PAIRS {
            let x: Vec<usize> = self.by_degree(p, q).into_iter().take(size).collect();
            let y: Vec<usize> = self.by_degree(q, p).into_iter().take(size).collect();
            if let Some(witness) = check(&x, &y, q) {
                return PropertyVerdict::Fail { witness };
            }
        }
        let hit = exec.find_first(trials as usize, |t| {
            let mut rng = trial_stream(seed, t as u64);
            PAIRS.iter().find_map(|&(p, q, _)| {
                let x = self.random_subset(p, size, &mut rng);
                let y = self.random_subset(q, size, &mut rng);
                check(&x, &y, q)
            })
        });
        match hit {
            Some((_, witness)) => PropertyVerdict::Fail { witness },
            None => PropertyVerdict::Pass { exact: false, instances: 3 * (trials + 1) },
        }
    }
}

/// `|N(X, Y)|`: vertices of the third part with a neighbour in `x` and one
/// in `y`.
pub fn common_neighborhood_size(h: &TripartiteGraph, x: &[usize], y: &[usize]) -> Result<usize> {
    let part_of = |s: &[usize]| -> Result<Option<Part>> {
        let mut parts = s.iter().map(|&v| h.vertex(v).part);
        let first = parts.next();
        if parts.any(|p| Some(p) != first) {
            return Err(Error::invalid("set spans several parts"));
        }
        Ok(first)
    };
    let (Some(p), Some(q)) = (part_of(x)?, part_of(y)?) else {
        return Ok(0);
    };
    if p == q {
        return Err(Error::invalid("sets must lie in different parts"));
    }
    let r = Part::from_index(3 - p.index() - q.index());
    let ctx = Ctx::new(h);
    let mut m = ctx.union_nbr(x, r);
    m.intersect_with(&ctx.union_nbr(y, r));
    Ok(m.count())
}

/// Re-checks that `witness` shows `property` failing on `h`, recomputing
/// every quantity from plain adjacency queries.
pub fn verify_witness(h: &TripartiteGraph, property: Property, witness: &Witness) -> bool {
    let [na, nb, nc] = h.sizes();
    if na != nb || nb != nc {
        return false;
    }
    let n = na;
    let total = h.vertex_count();
    let g = h.graph();
    let part = |v: usize| h.vertex(v).part;
    let in_one_part = |s: &[usize]| -> Option<Part> {
        let first = part(*s.first()?);
        let mut sorted = s.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        (sorted.len() == s.len() && s.iter().all(|&v| v < total && part(v) == first)).then_some(first)
    };
    match (property, witness) {
        (Property::HalfSubgraphConnectivity(frac), Witness::Subgraph { edges, .. }) => {
            let ab: Vec<(usize, usize)> = h.pair_edges(PartPair::AB).iter().map(|&(a, b)| (a, h.offset(Part::B) + b)).collect();
            let mut chosen = edges.clone();
            chosen.sort_unstable();
            chosen.dedup();
            if chosen.len() != edges.len() || chosen.len() < frac.of(ab.len()) || !chosen.iter().all(|e| ab.contains(e)) {
                return false;
            }
            let sub = GeneralGraph::from_edges(total, chosen).expect("edges of h");
            let need = n.div_ceil(10);
            sub.components().iter().all(|comp| {
                let a = comp.iter().filter(|&&v| part(v) == Part::A).count();
                let b = comp.iter().filter(|&&v| part(v) == Part::B).count();
                a < need || b < need
            })
        }
        (Property::CommonNeighborhood, Witness::CommonNeighborhood { first, second, common }) => {
            let (Some(p), Some(q)) = (in_one_part(first), in_one_part(second)) else { return false };
            let size = n.div_ceil(10);
            if p == q || first.len() < size || second.len() < size {
                return false;
            }
            let r = Part::from_index(3 - p.index() - q.index());
            let actual = h
                .part_vertices(r)
                .filter(|&z| first.iter().any(|&x| g.has_edge(x, z)) && second.iter().any(|&y| g.has_edge(y, z)))
                .count();
            actual == *common && 100 * actual < 99 * n
        }
        (Property::Expansion(factor), Witness::Expansion { set, target, neighborhood }) => {
            let Some(p) = in_one_part(set) else { return false };
            if p == *target || set.len() > n / 12 {
                return false;
            }
            let actual = h.part_vertices(*target).filter(|&z| set.iter().any(|&x| g.has_edge(x, z))).count();
            actual == *neighborhood && actual <= factor.value() * set.len()
        }
        (Property::BigSets(bound), Witness::BigSets { first, second, edges }) => {
            let (Some(p), Some(q)) = (in_one_part(first), in_one_part(second)) else { return false };
            let size = n.div_ceil(100);
            if p == q || first.len() < size || second.len() < size {
                return false;
            }
            let need = match bound {
                BigSetBound::N => n,
                BigSetBound::One => 1,
            };
            let actual = first.iter().map(|&x| second.iter().filter(|&&y| g.has_edge(x, y)).count()).sum::<usize>();
            actual == *edges && actual < need
        }
        (Property::TriangleFree, Witness::Triangle { vertices: [a, b, c] }) => {
            g.has_edge(*a, *b) && g.has_edge(*b, *c) && g.has_edge(*a, *c)
        }
        (Property::UniqueThreeColoring, Witness::Coloring { colors }) => {
            let base: Vec<u8> = (0..total).map(|v| part(v).index() as u8).collect();
            colors.len() == total
                && colors.iter().all(|&c| c < 3)
                && is_proper(h, colors)
                && canonical_partition(colors) != canonical_partition(&base)
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pseudorandom::{default_density, run_pipeline, DeletionRule};

    const FAST: CheckMode = CheckMode::Falsify { trials: 200, seed: 5 };

    #[test]
    fn names_round_trip() {
        for p in Property::after_deletion().into_iter().chain(Property::before_deletion()) {
            assert_eq!(p.to_string().parse::<Property>().unwrap(), p);
        }
        assert!("bogus".parse::<Property>().is_err());
    }

    #[test]
    fn exact_mode_is_rejected_for_sampled_properties() {
        let h = TripartiteGraph::complete([2, 2, 2]);
        assert!(property_check(&h, Property::CommonNeighborhood, CheckMode::Exact, Exec::Sequential).is_err());
        assert!(property_check(&h, Property::TriangleFree, CheckMode::Exact, Exec::Sequential).is_ok());
    }

    #[test]
    fn pipeline_output_is_triangle_free() {
        let (_, h, _) = run_pipeline(40, 0.2, 3, DeletionRule::Lexicographic);
        let v = property_check(&h, Property::TriangleFree, CheckMode::Exact, Exec::Sequential).unwrap();
        assert_eq!(v, PropertyVerdict::Pass { exact: true, instances: 1 });
    }

    #[test]
    fn triangle_is_reported() {
        let h = TripartiteGraph::complete([1, 1, 1]);
        let v = property_check(&h, Property::TriangleFree, CheckMode::Exact, Exec::Sequential).unwrap();
        assert_eq!(v, PropertyVerdict::Fail { witness: Witness::Triangle { vertices: [0, 1, 2] } });
    }

    #[test]
    fn isolated_c_vertex_breaks_expansion() {
        // K_{n,n,n} with every edge at c_0 removed
        let mut h = TripartiteGraph::complete([12, 12, 12]);
        let c0 = h.offset(Part::C);
        let cut: Vec<_> = h.oriented_edges().into_iter().filter(|&(u, v)| u == c0 || v == c0).collect();
        h = h.without_edges(&cut);
        match property_check(&h, Property::Expansion(ExpansionFactor::Two), FAST, Exec::Sequential).unwrap() {
            PropertyVerdict::Fail { witness: Witness::Expansion { set, neighborhood, .. } } => {
                assert_eq!(set, vec![c0]);
                assert_eq!(neighborhood, 0);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn empty_graph_fails_common_neighborhood() {
        let h = TripartiteGraph::empty([10, 10, 10]);
        let v = property_check(&h, Property::CommonNeighborhood, FAST, Exec::Sequential).unwrap();
        assert!(v.is_fail());
    }

    #[test]
    fn complete_graph_passes_set_properties() {
        let h = TripartiteGraph::complete([20, 20, 20]);
        for p in [
            Property::CommonNeighborhood,
            Property::Expansion(ExpansionFactor::Six),
            Property::BigSets(BigSetBound::One),
            Property::HalfSubgraphConnectivity(EdgeFraction::Half),
        ] {
            let v = property_check(&h, p, FAST, Exec::Sequential).unwrap();
            assert!(v.is_pass(), "{p}: {v:?}");
        }
        // x_0 alone sees only 1 < 20 edges into a singleton
        let v = property_check(&h, Property::BigSets(BigSetBound::N), FAST, Exec::Sequential).unwrap();
        assert!(v.is_fail());
    }

    #[test]
    fn unique_coloring_verdicts() {
        let tri = TripartiteGraph::complete([1, 1, 1]);
        assert!(property_check(&tri, Property::UniqueThreeColoring, CheckMode::Exact, Exec::Sequential).unwrap().is_pass());
        let k222 = TripartiteGraph::complete([2, 2, 2]);
        assert!(property_check(&k222, Property::UniqueThreeColoring, CheckMode::Exact, Exec::Sequential).unwrap().is_pass());
        // a C6 through all three parts has other 3-colourings
        let c6 = TripartiteGraph::new([2, 2, 2], vec![(0, 0), (1, 1)], vec![(0, 0), (1, 1)], vec![(0, 1), (1, 0)]).unwrap();
        match property_check(&c6, Property::UniqueThreeColoring, CheckMode::Exact, Exec::Sequential).unwrap() {
            PropertyVerdict::Fail { witness: Witness::Coloring { colors } } => {
                assert!(is_proper(&c6, &colors));
                assert_ne!(canonical_partition(&colors), canonical_partition(&[0, 0, 1, 1, 2, 2]));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn adding_a_vertex_never_shrinks_common_neighborhood() {
        let (_, h, _) = run_pipeline(60, 0.15, 11, DeletionRule::Lexicographic);
        let mut rng = trial_stream(1, 0);
        for _ in 0..50 {
            let x: Vec<usize> = sample(&mut rng, 60, 6).into_iter().collect();
            let y: Vec<usize> = sample(&mut rng, 60, 6).into_iter().map(|i| 60 + i).collect();
            let before = common_neighborhood_size(&h, &x, &y).unwrap();
            let extra = rng.gen_range(0..60);
            let mut x2 = x.clone();
            if !x2.contains(&extra) {
                x2.push(extra);
            }
            assert!(common_neighborhood_size(&h, &x2, &y).unwrap() >= before);
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let (_, h, _) = run_pipeline(50, 0.1, 2, DeletionRule::Lexicographic);
        for p in Property::after_deletion() {
            let mode = if p.supports_exact() { CheckMode::Exact } else { FAST };
            assert_eq!(
                property_check(&h, p, mode, Exec::Sequential).unwrap(),
                property_check(&h, p, mode, Exec::Parallel).unwrap()
            );
        }
    }

    #[test]
    fn every_failure_witness_re_verifies() {
        let (h0, h, _) = run_pipeline(60, default_density(60), 11, DeletionRule::Lexicographic);
        let mut failures = 0;
        for (g, props) in [(&h, Property::after_deletion()), (&h0, Property::before_deletion())] {
            for p in props {
                let mode = if p.supports_exact() { CheckMode::Exact } else { FAST };
                if let PropertyVerdict::Fail { witness } = property_check(g, p, mode, Exec::Sequential).unwrap() {
                    failures += 1;
                    assert!(verify_witness(g, p, &witness), "{p}: {witness:?}");
                    let other = if p == Property::TriangleFree { Property::CommonNeighborhood } else { Property::TriangleFree };
                    assert!(!verify_witness(g, other, &witness));
                }
            }
        }
        assert!(failures > 0);
    }

    #[test]
    fn tampered_witnesses_are_rejected() {
        let h = TripartiteGraph::empty([10, 10, 10]);
        let PropertyVerdict::Fail { witness } = property_check(&h, Property::CommonNeighborhood, FAST, Exec::Sequential).unwrap() else {
            panic!("empty graph has no common neighbours");
        };
        assert!(verify_witness(&h, Property::CommonNeighborhood, &witness));
        let Witness::CommonNeighborhood { first, second, .. } = witness else { unreachable!() };
        let lied = Witness::CommonNeighborhood { first, second, common: 3 };
        assert!(!verify_witness(&h, Property::CommonNeighborhood, &lied));
        let tri = TripartiteGraph::complete([1, 1, 1]);
        assert!(!verify_witness(&tri, Property::TriangleFree, &Witness::Triangle { vertices: [0, 1, 1] }));
        assert!(!verify_witness(&tri, Property::UniqueThreeColoring, &Witness::Coloring { colors: vec![1, 2, 0] }));
    }
}
