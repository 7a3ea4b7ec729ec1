use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{BitSet, GeneralGraph};
use crate::{Error, Result};

/// Pairwise edge-disjoint cycles of one odd length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclePacking {
    pub cycle_length: usize,
    pub cycles: Vec<Vec<usize>>,
}

fn edge_key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

impl CyclePacking {
    pub fn new(cycle_length: usize) -> Self {
        CyclePacking {
            cycle_length,
            cycles: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn cycle_edges(cycle: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..cycle.len()).map(move |i| edge_key(cycle[i], cycle[(i + 1) % cycle.len()]))
    }

    /// Checks every invariant against `g`: each entry is a cycle of the
    /// declared length in `g`, and no edge is used twice.
    pub fn validate(&self, g: &GeneralGraph) -> Result<()> {
        if self.cycle_length < 3 || self.cycle_length.is_multiple_of(2) {
            return Err(Error::invalid(format!("cycle length {} is not odd and >= 3", self.cycle_length)));
        }
        let mut used = HashSet::new();
        for (i, c) in self.cycles.iter().enumerate() {
            if c.len() != self.cycle_length || !g.is_cycle(c) {
                return Err(Error::invalid(format!("entry {i} is not a {}-cycle of the graph", self.cycle_length)));
            }
            for e in Self::cycle_edges(c) {
                if !used.insert(e) {
                    return Err(Error::invalid(format!("edge {e:?} used by two cycles")));
                }
            }
        }
        Ok(())
    }

    /// Number of packed cycles through each vertex.
    pub fn vertex_loads(&self, n: usize) -> Vec<usize> {
        let mut load = vec![0; n];
        for c in &self.cycles {
            for &v in c {
                load[v] += 1;
            }
        }
        load
    }
}

/// Mutable residual adjacency used by the packing scan.
struct Residual {
    rows: Vec<BitSet>,
}

impl Residual {
    fn new(g: &GeneralGraph) -> Self {
        Residual {
            rows: (0..g.vertex_count()).map(|v| g.row(v).clone()).collect(),
        }
    }

    fn remove_cycle(&mut self, cycle: &[usize]) {
        for (u, v) in CyclePacking::cycle_edges(cycle) {
            self.rows[u].remove(v);
            self.rows[v].remove(u);
        }
    }

    /// Lexicographically first cycle of length `len` whose least vertex is
    /// `start`, using only residual edges.
    fn first_cycle_from(&self, start: usize, len: usize) -> Option<Vec<usize>> {
        let n = self.rows.len();
        let mut allowed = BitSet::new(n);
        for v in start + 1..n {
            allowed.insert(v);
        }
        // distance back to `start` inside the allowed vertices prunes paths
        // that cannot close in time
        let mut dist = vec![usize::MAX; n];
        dist[start] = 0;
        let mut frontier = vec![start];
        let mut d = 0;
        while !frontier.is_empty() && d < len {
            d += 1;
            let mut next = Vec::new();
            for &u in &frontier {
                for w in self.rows[u].iter() {
                    if allowed.contains(w) && dist[w] == usize::MAX {
                        dist[w] = d;
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        let mut path = vec![start];
        let mut on_path = BitSet::new(n);
        on_path.insert(start);
        if self.extend(&mut path, &mut on_path, &allowed, &dist, len) {
            Some(path)
        } else {
            None
        }
    }

    fn extend(&self, path: &mut Vec<usize>, on_path: &mut BitSet, allowed: &BitSet, dist: &[usize], len: usize) -> bool {
        let last = *path.last().expect("non-empty path");
        let start = path[0];
        if path.len() == len {
            return self.rows[last].contains(start);
        }
        let remaining = len - path.len();
        for w in self.rows[last].iter() {
            if !allowed.contains(w) || on_path.contains(w) || dist[w] > remaining {
                continue;
            }
            path.push(w);
            on_path.insert(w);
            if self.extend(path, on_path, allowed, dist, len) {
                return true;
            }
            path.pop();
            on_path.remove(w);
        }
        false
    }
}

/// Greedy maximal packing of edge-disjoint `cycle_length`-cycles.
///
/// Start vertices are scanned in increasing order; from each, the
/// lexicographically first residual cycle having that start as its least
/// vertex is packed until none remains. The result is deterministic and
/// maximal: no cycle of the residual graph is edge-disjoint from the packing.
pub fn greedy_edge_disjoint_packing(g: &GeneralGraph, cycle_length: usize) -> CyclePacking {
    greedy_packing_up_to(g, cycle_length, None)
}

/// As [`greedy_edge_disjoint_packing`], stopping once `target` cycles are
/// packed (the result is then not necessarily maximal).
pub fn greedy_packing_up_to(g: &GeneralGraph, cycle_length: usize, target: Option<usize>) -> CyclePacking {
    assert!(cycle_length >= 3 && cycle_length % 2 == 1, "cycle length must be odd and >= 3");
    let mut residual = Residual::new(g);
    let mut packing = CyclePacking::new(cycle_length);
    for start in 0..g.vertex_count() {
        while let Some(c) = residual.first_cycle_from(start, cycle_length) {
            residual.remove_cycle(&c);
            packing.cycles.push(c);
            if target.is_some_and(|t| packing.len() >= t) {
                return packing;
            }
        }
    }
    packing
}

/// One residual search pass: a cycle of the packing's length in `g` that is
/// edge-disjoint from every packed cycle, if any.
pub fn residual_cycle(g: &GeneralGraph, packing: &CyclePacking) -> Option<Vec<usize>> {
    let mut residual = Residual::new(g);
    for c in &packing.cycles {
        residual.remove_cycle(c);
    }
    (0..g.vertex_count()).find_map(|s| residual.first_cycle_from(s, packing.cycle_length))
}
