use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::equations::{EquationSystem, LinearEquation};
use crate::graph::{GeneralGraph, Part, TripartiteGraph};
use crate::{Error, Result};

/// Which weight role each part of `H` plays: part `i` of `H` is treated as
/// part `self.0[i]` when weights are assigned.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Labeling(pub [Part; 3]);

impl Labeling {
    pub const IDENTITY: Labeling = Labeling([Part::A, Part::B, Part::C]);

    /// All six labelings in lexicographic order of their names.
    pub fn all() -> [Labeling; 6] {
        use Part::*;
        [
            Labeling([A, B, C]),
            Labeling([A, C, B]),
            Labeling([B, A, C]),
            Labeling([B, C, A]),
            Labeling([C, A, B]),
            Labeling([C, B, A]),
        ]
    }

    pub fn role(&self, part: Part) -> Part {
        self.0[part.index()]
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in self.0 {
            write!(f, "{}", p.letter().to_ascii_uppercase())?;
        }
        Ok(())
    }
}

impl FromStr for Labeling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<Part> = s
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'A' => Ok(Part::A),
                'B' => Ok(Part::B),
                'C' => Ok(Part::C),
                _ => Err(Error::invalid(format!("bad part letter {c:?} in labeling {s:?}"))),
            })
            .collect::<Result<_>>()?;
        match parts[..] {
            [x, y, z] if x != y && y != z && x != z => Ok(Labeling([x, y, z])),
            _ => Err(Error::invalid(format!("labeling {s:?} is not a permutation of ABC"))),
        }
    }
}

/// Signed weight of traversing an edge from role `from` to role `to`:
/// the difference of the potentials A = 0, B = 1, C = 2. This gives +1 for
/// A→B and B→C and -2 for C→A, negated on reverse traversal.
pub fn weight(from: Part, to: Part) -> i64 {
    to.index() as i64 - from.index() as i64
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Edge positions keyed by unordered endpoint pair.
pub(crate) fn edge_positions(edge_order: &[(usize, usize)]) -> HashMap<(usize, usize), usize> {
    edge_order
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| (key(u, v), i))
        .collect()
}

/// Weight equation of an explicit closed walk `cycle` (consecutive vertices
/// adjacent, last joined to first) over the variables in `edge_order`.
pub fn cycle_equation(roles: &[Part], edge_order: &[(usize, usize)], cycle: &[usize]) -> Result<LinearEquation> {
    let pos = edge_positions(edge_order);
    let mut coeffs = vec![0i64; edge_order.len()];
    for i in 0..cycle.len() {
        let (x, y) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        let e = pos
            .get(&key(x, y))
            .ok_or_else(|| Error::invalid(format!("({x}, {y}) is not an edge")))?;
        coeffs[*e] += weight(roles[x], roles[y]);
    }
    Ok(LinearEquation::new(coeffs))
}

/// Fundamental-cycle equations of `g` for the vertex roles `roles`, with one
/// variable per entry of `edge_order`.
///
/// The spanning tree is grown breadth-first from vertex 0 with neighbours in
/// increasing order. Each non-tree edge `(u, v)`, in `edge_order` order,
/// yields the cycle that crosses it from `u` to `v` and returns through the
/// tree.
pub fn cycle_system_for(g: &GeneralGraph, roles: &[Part], edge_order: &[(usize, usize)]) -> Result<EquationSystem> {
    validate(g, roles, edge_order)?;
    if g.vertex_count() > 0 && !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(forest_cycles(g, roles, edge_order))
}

/// Like [`cycle_system_for`], but accepts disconnected graphs: each
/// component contributes the fundamental cycles of a breadth-first tree
/// grown from its smallest vertex.
pub fn cycle_space_system(g: &GeneralGraph, roles: &[Part], edge_order: &[(usize, usize)]) -> Result<EquationSystem> {
    validate(g, roles, edge_order)?;
    Ok(forest_cycles(g, roles, edge_order))
}

fn validate(g: &GeneralGraph, roles: &[Part], edge_order: &[(usize, usize)]) -> Result<()> {
    let n = g.vertex_count();
    if roles.len() != n {
        return Err(Error::invalid("one role per vertex required"));
    }
    if edge_order.len() != g.edge_count() || edge_order.iter().any(|&(u, v)| !g.has_edge(u, v)) {
        return Err(Error::invalid("edge order must list every edge exactly once"));
    }
    if let Some(&(u, v)) = edge_order.iter().find(|&&(u, v)| roles[u] == roles[v]) {
        return Err(Error::invalid(format!("edge ({u}, {v}) joins two vertices of one part")));
    }
    Ok(())
}

fn forest_cycles(g: &GeneralGraph, roles: &[Part], edge_order: &[(usize, usize)]) -> EquationSystem {
    let n = g.vertex_count();
    let k = edge_order.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if parent[root] != usize::MAX {
            continue;
        }
        parent[root] = root;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let mut nbrs = g.neighbors(u).to_vec();
            nbrs.sort_unstable();
            for w in nbrs {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    let is_tree = |u: usize, v: usize| (parent[v] == u && v != u) || (parent[u] == v && u != v);
    let pos = edge_positions(edge_order);
    let mut rows = Vec::new();
    for &(u, v) in edge_order {
        if is_tree(u, v) {
            continue;
        }
        let mut coeffs = vec![0i64; k];
        let mut step = |x: usize, y: usize| coeffs[pos[&key(x, y)]] += weight(roles[x], roles[y]);
        step(u, v);
        // v up to the common ancestor, then down to u
        let (mut a, mut b) = (v, u);
        let mut down = Vec::new();
        while a != b {
            if depth[a] >= depth[b] {
                step(a, parent[a]);
                a = parent[a];
            } else {
                down.push((parent[b], b));
                b = parent[b];
            }
        }
        for &(x, y) in down.iter().rev() {
            step(x, y);
        }
        rows.push(LinearEquation::new(coeffs));
    }
    EquationSystem::new(k, rows).expect("rows have k coefficients")
}

/// Roles of the global vertices of `h` under `labeling`.
pub fn roles_of(h: &TripartiteGraph, labeling: Labeling) -> Vec<Part> {
    (0..h.vertex_count())
        .map(|v| labeling.role(h.vertex(v).part))
        .collect()
}

/// The weighted fundamental-cycle system of `h` under `labeling`, with
/// variables in the canonical edge order of `h`.
pub fn cycle_equation_system(h: &TripartiteGraph, labeling: Labeling) -> Result<EquationSystem> {
    cycle_system_for(h.graph(), &roles_of(h, labeling), &h.oriented_edges())
}

/// One system per labeling, in the order of [`Labeling::all`].
pub fn all_six_systems(h: &TripartiteGraph) -> Result<Vec<(Labeling, EquationSystem)>> {
    Labeling::all()
        .into_iter()
        .map(|l| cycle_equation_system(h, l).map(|s| (l, s)))
        .collect()
}
