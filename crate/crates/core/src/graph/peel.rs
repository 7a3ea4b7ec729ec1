use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::GeneralGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum PeelOutcome {
    /// A shortest odd cycle of the peeled remainder (original vertex ids).
    OddCycle { cycle: Vec<usize>, remaining: Vec<usize> },
    /// The remainder is bipartite (possibly empty).
    RemainderBipartite { remaining: Vec<usize> },
}

impl PeelOutcome {
    pub fn cycle(&self) -> Option<&[usize]> {
        match self {
            PeelOutcome::OddCycle { cycle, .. } => Some(cycle),
            PeelOutcome::RemainderBipartite { .. } => None,
        }
    }
}

/// Repeatedly deletes vertices whose remaining degree is below
/// `epsilon * n` (with `n` the original order), then returns a shortest odd
/// cycle of what is left, or reports that the remainder is bipartite.
pub fn shortest_odd_cycle_peel(g: &GeneralGraph, epsilon: f64) -> PeelOutcome {
    let n = g.vertex_count();
    let threshold = epsilon * n as f64;
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| (degree[v] as f64) < threshold).collect();
    let mut queued: Vec<bool> = (0..n).map(|v| (degree[v] as f64) < threshold).collect();
    while let Some(v) = queue.pop_front() {
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                degree[w] -= 1;
                if !queued[w] && (degree[w] as f64) < threshold {
                    queued[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let remaining: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let sub = g.induced(&remaining);
    match shortest_odd_cycle(&sub) {
        Some(c) => PeelOutcome::OddCycle {
            cycle: c.into_iter().map(|v| remaining[v]).collect(),
            remaining,
        },
        None => PeelOutcome::RemainderBipartite { remaining },
    }
}

/// A shortest odd cycle, found by breadth-first parity layers from every
/// vertex. `None` iff the graph is bipartite.
pub fn shortest_odd_cycle(g: &GeneralGraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut best: Option<Vec<usize>> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        parent[s] = s;
        let mut order = vec![s];
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            if best.as_ref().is_some_and(|b| 2 * dist[u] + 1 >= b.len()) {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    order.push(w);
                } else if dist[w] == dist[u] && u < w {
                    let c = close_cycle(&parent, &dist, u, w);
                    if best.as_ref().is_none_or(|b| c.len() < b.len()) {
                        best = Some(c);
                    }
                }
            }
        }
    }
    best
}

/// Joins the tree paths from `x` and `y` (same BFS level) at their deepest
/// common ancestor; the result is a simple odd cycle.
fn close_cycle(parent: &[usize], dist: &[usize], x: usize, y: usize) -> Vec<usize> {
    let (mut a, mut b) = (x, y);
    let mut left = vec![a];
    let mut right = vec![b];
    while a != b {
        debug_assert_eq!(dist[a], dist[b]);
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    // ancestor .. x, then y .. (child of ancestor)
    right.pop();
    left.reverse();
    left.extend(right);
    left
}
