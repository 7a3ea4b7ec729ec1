//! Ruzsa-Szemeredi graphs `RS(m, R)` and the correspondence between
//! homomorphisms into them and solutions in `R`.
//!
//! Each part is identified with `[3m]`: the vertex with index `i` carries the
//! label `i + 1`. Edges are `(a, b)` with `b - a ∈ R`, `(b, c)` with
//! `c - b ∈ R` and `(c, a)` with `c - a ∈ 2R`. Every edge carries the element
//! of `R` it was built from; for C–A edges that is `(c - a) / 2`.

use serde::{Deserialize, Serialize};

use crate::graph::{CyclePacking, GeneralGraph, Part, PartPair, TripartiteGraph};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RsParameters {
    pub m: usize,
    pub r: Vec<i64>,
}

impl RsParameters {
    /// Sorts and deduplicates `r`, rejecting elements outside `[1, m]`.
    pub fn new(m: usize, mut r: Vec<i64>) -> Result<Self> {
        r.sort_unstable();
        r.dedup();
        if let Some(&x) = r.iter().find(|&&x| x < 1 || x > m as i64) {
            return Err(Error::invalid(format!("element {x} of R outside [1, {m}]")));
        }
        Ok(RsParameters { m, r })
    }

    pub fn part_size(&self) -> usize {
        3 * self.m
    }

    /// Parses one integer per line (blank lines and `#` comments skipped).
    pub fn parse_r_file(m: usize, text: &str) -> Result<Self> {
        let mut r = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            r.push(
                line.parse()
                    .map_err(|_| Error::parse(i + 1, format!("expected an integer, found {line:?}")))?,
            );
        }
        RsParameters::new(m, r)
    }
}

/// Label (in `[3m]`) of the vertex with part index `i`.
pub fn label(index: usize) -> i64 {
    index as i64 + 1
}

pub fn build_rs_graph(params: &RsParameters) -> TripartiteGraph {
    let n = params.part_size() as i64;
    let mut ab = Vec::new();
    let mut ca = Vec::new();
    for a in 1..=n {
        for &r in &params.r {
            if a + r <= n {
                ab.push(((a - 1) as usize, (a + r - 1) as usize));
            }
            if a + 2 * r <= n {
                ca.push(((a + 2 * r - 1) as usize, (a - 1) as usize));
            }
        }
    }
    // the B–C rule has the same shape as A–B
    let bc = ab.clone();
    TripartiteGraph::new([n as usize; 3], ab, bc, ca).expect("RS edges are in range")
}

/// The `m|R|` triangles `(a, a+r, a+2r)` for `a ∈ [m]`, `r ∈ R`, as global
/// vertex ids of [`build_rs_graph`].
pub fn canonical_triangle_family(params: &RsParameters) -> CyclePacking {
    let n = params.part_size();
    let mut packing = CyclePacking::new(3);
    for a in 1..=params.m as i64 {
        for &r in &params.r {
            let ia = (a - 1) as usize;
            let ib = (a + r - 1) as usize;
            let ic = (a + 2 * r - 1) as usize;
            packing.cycles.push(vec![ia, n + ib, 2 * n + ic]);
        }
    }
    packing
}

/// The element of `R` carried by the edge between global vertices `x` and
/// `y` of an RS graph, if they are adjacent.
pub fn edge_value(rs: &TripartiteGraph, x: usize, y: usize) -> Option<i64> {
    if !rs.graph().has_edge(x, y) {
        return None;
    }
    let (vx, vy) = (rs.vertex(x), rs.vertex(y));
    let (pair, forward) = PartPair::between(vx.part, vy.part)?;
    let (tail, head) = if forward { (vx, vy) } else { (vy, vx) };
    let diff = label(head.index) - label(tail.index);
    Some(match pair {
        PartPair::AB | PartPair::BC => diff,
        // stored as (c, a): label(a) - label(c) = -(c - a)
        PartPair::CA => -diff / 2,
    })
}

/// Edge values of a homomorphism `H → RS(m, R)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assignment {
    /// Role of each vertex of `H`: the RS part of its image.
    pub roles: Vec<Part>,
    /// One value per edge of `H`, in the order of the edge list used.
    pub values: Vec<i64>,
}

impl Assignment {
    pub fn constant_value(&self) -> Option<i64> {
        let first = *self.values.first()?;
        self.values.iter().all(|&v| v == first).then_some(first)
    }
}

/// Reads off the edge values of `hom` (global image of each vertex of `h`)
/// for the edges in `edge_order`.
pub fn assignment_for_edges(h: &GeneralGraph, edge_order: &[(usize, usize)], rs: &TripartiteGraph, hom: &[usize]) -> Result<Assignment> {
    if hom.len() != h.vertex_count() {
        return Err(Error::invalid(format!("map has {} images for {} vertices", hom.len(), h.vertex_count())));
    }
    let roles = hom.iter().map(|&x| rs.vertex(x).part).collect();
    let mut values = Vec::with_capacity(edge_order.len());
    for &(u, v) in edge_order {
        values.push(edge_value(rs, hom[u], hom[v]).ok_or(Error::NotHomomorphism(u, v))?);
    }
    Ok(Assignment { roles, values })
}

/// Edge values of a homomorphism from a tripartite `H` that sends part `p`
/// of `H` into part `part_map[p]` of the RS graph. Values follow the
/// canonical edge order of `H`.
pub fn hom_to_assignment(h: &TripartiteGraph, part_map: [Part; 3], rs: &TripartiteGraph, hom: &[usize]) -> Result<Assignment> {
    for (v, &x) in hom.iter().enumerate() {
        let want = part_map[h.vertex(v).part.index()];
        if x >= rs.vertex_count() || rs.vertex(x).part != want {
            return Err(Error::invalid(format!("vertex {v} is not mapped into part {want:?}")));
        }
    }
    assignment_for_edges(h.graph(), &h.oriented_edges(), rs, hom)
}

/// Position value of each role: A = 0, B = 1, C = 2.
pub fn role_potential(p: Part) -> i64 {
    p.index() as i64
}

/// The translate homomorphism with every edge value `r`: vertex `v` goes to
/// the vertex of part `roles[v]` with label
/// `anchor_label + (f(roles[v]) - f(roles[0])) * r`, where `f` is
/// [`role_potential`]. Returns global RS ids, or `None` if a label leaves
/// `[3m]`.
pub fn translate_images(roles: &[Part], r: i64, anchor_label: i64, rs: &TripartiteGraph) -> Option<Vec<usize>> {
    let base = roles.first().map(|&p| role_potential(p))?;
    roles
        .iter()
        .map(|&p| {
            let l = anchor_label + (role_potential(p) - base) * r;
            (l >= 1 && l <= rs.part_size(p) as i64).then(|| rs.offset(p) + (l - 1) as usize)
        })
        .collect()
}
