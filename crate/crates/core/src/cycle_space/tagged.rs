use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::system::edge_positions;
use crate::graph::{Part, TripartiteGraph};

/// Black/white colouring of the edges of a tripartite graph, indexed by the
/// canonical edge order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeColoring {
    black: Vec<bool>,
}

impl EdgeColoring {
    pub fn all_white(edges: usize) -> Self {
        EdgeColoring { black: vec![false; edges] }
    }

    pub fn from_black(edges: usize, black_edges: &[usize]) -> Self {
        let mut c = EdgeColoring::all_white(edges);
        for &e in black_edges {
            c.black[e] = true;
        }
        c
    }

    pub fn from_flags(black: Vec<bool>) -> Self {
        EdgeColoring { black }
    }

    /// Bit `i` of `mask` colours edge `i` black.
    pub fn from_mask(edges: usize, mask: u64) -> Self {
        EdgeColoring {
            black: (0..edges).map(|i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.black.len()
    }

    pub fn is_empty(&self) -> bool {
        self.black.is_empty()
    }

    pub fn is_black(&self, edge: usize) -> bool {
        self.black[edge]
    }

    pub fn flags(&self) -> &[bool] {
        &self.black
    }

    pub fn black_edges(&self) -> Vec<usize> {
        (0..self.len()).filter(|&e| self.black[e]).collect()
    }

    pub fn both_colors_present(&self) -> bool {
        self.black.iter().any(|&b| b) && self.black.iter().any(|&b| !b)
    }

    pub fn swapped(&self) -> Self {
        EdgeColoring {
            black: self.black.iter().map(|b| !b).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TaggedKind {
    /// Exactly one edge of the off colour.
    OneOffEdge,
    /// Exactly two off-colour edges, consecutive, with their three endpoints
    /// in three different parts.
    TwoConsecutiveOffEdges,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaggedCycleWitness {
    /// Global vertex ids in cycle order.
    pub cycle: Vec<usize>,
    pub kind: TaggedKind,
    /// `false`: the off colour is black; `true`: the colours were swapped
    /// and the off colour is white.
    pub swap_applied: bool,
}

impl TaggedCycleWitness {
    /// Re-checks the witness against the graph, the colouring and the
    /// definition.
    pub fn verify(&self, h: &TripartiteGraph, coloring: &EdgeColoring) -> bool {
        let c = &self.cycle;
        if c.len() < 3 || !h.graph().is_cycle(c) || coloring.len() != h.edge_count() {
            return false;
        }
        let pos = edge_positions(&h.oriented_edges());
        let off: Vec<usize> = (0..c.len())
            .filter(|&i| {
                let (x, y) = (c[i], c[(i + 1) % c.len()]);
                let e = pos[&(x.min(y), x.max(y))];
                coloring.is_black(e) != self.swap_applied
            })
            .collect();
        match self.kind {
            TaggedKind::OneOffEdge => off.len() == 1,
            TaggedKind::TwoConsecutiveOffEdges => {
                if off.len() != 2 {
                    return false;
                }
                let len = c.len();
                // edge i joins c[i] and c[i+1]; find the shared middle vertex
                let (i, j) = (off[0], off[1]);
                let mid = if (i + 1) % len == j {
                    (i + 1) % len
                } else if (j + 1) % len == i {
                    (j + 1) % len
                } else {
                    return false;
                };
                let p = |v: usize| h.vertex(v).part;
                let (a, b, d) = (p(c[(mid + len - 1) % len]), p(c[mid]), p(c[(mid + 1) % len]));
                a != b && b != d && a != d
            }
        }
    }
}

/// Reusable adjacency with edge ids for repeated tagged-cycle searches on
/// one graph.
#[derive(Debug, Clone)]
pub struct TaggedSearcher {
    adj: Vec<Vec<(usize, usize)>>,
    edges: Vec<(usize, usize)>,
    parts: Vec<Part>,
}

impl TaggedSearcher {
    pub fn new(h: &TripartiteGraph) -> Self {
        let n = h.vertex_count();
        let edges = h.oriented_edges();
        let mut adj = vec![Vec::new(); n];
        for (e, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let parts = (0..n).map(|v| h.vertex(v).part).collect();
        TaggedSearcher { adj, edges, parts }
    }

    /// Shortest path from `s` to `t` using only edges with `on[e]`, never
    /// entering `avoid`.
    fn on_path(&self, on: &dyn Fn(usize) -> bool, s: usize, t: usize, avoid: Option<usize>) -> Option<Vec<usize>> {
        let n = self.adj.len();
        let mut parent = vec![usize::MAX; n];
        parent[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                let mut path = vec![t];
                let mut x = t;
                while x != s {
                    x = parent[x];
                    path.push(x);
                }
                path.reverse();
                return Some(path);
            }
            for &(w, e) in &self.adj[u] {
                if on(e) && parent[w] == usize::MAX && Some(w) != avoid {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    fn search_polarity(&self, coloring: &EdgeColoring, swap: bool) -> Option<TaggedCycleWitness> {
        let off = |e: usize| coloring.is_black(e) != swap;
        let on = |e: usize| !off(e);
        for (e, &(x, y)) in self.edges.iter().enumerate() {
            if off(e) {
                if let Some(path) = self.on_path(&on, x, y, None) {
                    return Some(TaggedCycleWitness {
                        cycle: path,
                        kind: TaggedKind::OneOffEdge,
                        swap_applied: swap,
                    });
                }
            }
        }
        for v in 0..self.adj.len() {
            let offs: Vec<usize> = self.adj[v].iter().filter(|&&(_, e)| off(e)).map(|&(w, _)| w).collect();
            for (i, &x) in offs.iter().enumerate() {
                for &y in &offs[i + 1..] {
                    if self.parts[x] == self.parts[y] {
                        continue;
                    }
                    if let Some(mut path) = self.on_path(&on, x, y, Some(v)) {
                        path.push(v);
                        return Some(TaggedCycleWitness {
                            cycle: path,
                            kind: TaggedKind::TwoConsecutiveOffEdges,
                            swap_applied: swap,
                        });
                    }
                }
            }
        }
        None
    }

    /// Searches both kinds under both polarities.
    pub fn find(&self, coloring: &EdgeColoring) -> Option<TaggedCycleWitness> {
        self.search_polarity(coloring, false)
            .or_else(|| self.search_polarity(coloring, true))
    }
}

/// A tagged cycle of `h` under `coloring`, or `None` if there is none.
pub fn find_tagged_cycle(h: &TripartiteGraph, coloring: &EdgeColoring) -> Option<TaggedCycleWitness> {
    TaggedSearcher::new(h).find(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> TripartiteGraph {
        TripartiteGraph::new([2, 2, 0], vec![(0, 0), (0, 1), (1, 0), (1, 1)], vec![], vec![]).unwrap()
    }

    fn c6() -> TripartiteGraph {
        TripartiteGraph::new([2, 2, 2], vec![(0, 0), (1, 1)], vec![(0, 0), (1, 1)], vec![(0, 1), (1, 0)]).unwrap()
    }

    #[test]
    fn one_black_edge_on_c4() {
        let h = c4();
        let c = EdgeColoring::from_black(4, &[2]);
        let w = find_tagged_cycle(&h, &c).unwrap();
        assert_eq!(w.kind, TaggedKind::OneOffEdge);
        assert!(w.verify(&h, &c));
    }

    #[test]
    fn all_white_has_none() {
        assert!(find_tagged_cycle(&c6(), &EdgeColoring::all_white(6)).is_none());
    }

    #[test]
    fn two_consecutive_black_across_three_parts() {
        let h = c6();
        // canonical order: a0b0, a1b1, b0c0, b1c1, c0a1, c1a0
        let c = EdgeColoring::from_black(6, &[0, 2]);
        let w = find_tagged_cycle(&h, &c).unwrap();
        assert_eq!(w.kind, TaggedKind::TwoConsecutiveOffEdges);
        assert!(w.verify(&h, &c));
    }

    #[test]
    fn two_black_edges_in_two_parts_is_not_tagged() {
        // black a0b0 and b0a1 on an A–B 4-cycle: both polarities need a
        // pair of off edges, but they span only two parts
        let h = c4();
        let c = EdgeColoring::from_black(4, &[0, 2]);
        assert!(find_tagged_cycle(&h, &c).is_none());
    }

    #[test]
    fn swap_invariance() {
        let h = c6();
        for mask in 0..64u64 {
            let c = EdgeColoring::from_mask(6, mask);
            assert_eq!(find_tagged_cycle(&h, &c).is_some(), find_tagged_cycle(&h, &c.swapped()).is_some());
        }
    }

    #[test]
    fn tampered_witness_fails_verification() {
        let h = c4();
        let c = EdgeColoring::from_black(4, &[2]);
        let mut w = find_tagged_cycle(&h, &c).unwrap();
        w.kind = TaggedKind::TwoConsecutiveOffEdges;
        assert!(!w.verify(&h, &c));
        w.kind = TaggedKind::OneOffEdge;
        w.swap_applied = !w.swap_applied;
        assert!(!w.verify(&h, &c));
    }
}
