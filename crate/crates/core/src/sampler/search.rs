use serde::{Deserialize, Serialize};

use crate::graph::GeneralGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSearch {
    pub cycle: Option<Vec<usize>>,
    /// Path extensions tried.
    pub nodes: u64,
    /// `false` when the node cap stopped the search early.
    pub exhausted: bool,
}

/// Depth-first search for a cycle of exactly `len` vertices inside the
/// subgraph induced by `within` (all vertices when `None`).
///
/// Each cycle is rooted at its least vertex `s`; paths only use vertices
/// above `s`, and a branch is cut when its endpoint is too far from `s` to
/// close in the remaining steps.
pub fn find_cycle_of_length(g: &GeneralGraph, len: usize, within: Option<&[usize]>, node_cap: u64) -> CycleSearch {
    let n = g.vertex_count();
    let mut allowed = vec![within.is_none(); n];
    if let Some(w) = within {
        for &v in w {
            allowed[v] = true;
        }
    }
    let mut search = CycleSearch { cycle: None, nodes: 0, exhausted: true };
    if len < 3 {
        return search;
    }
    let mut dist = vec![usize::MAX; n];
    let mut on_path = vec![false; n];
    for s in (0..n).filter(|&s| allowed[s]) {
        // distances from s among allowed vertices >= s
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if w > s && allowed[w] && dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        let mut path = vec![s];
        on_path[s] = true;
        let mut cursor = vec![0usize];
        while let Some(&x) = path.last() {
            let depth = path.len();
            if depth == len {
                if g.has_edge(x, s) {
                    search.cycle = Some(path);
                    return search;
                }
                on_path[x] = false;
                path.pop();
                cursor.pop();
                continue;
            }
            let nbrs = g.neighbors(x);
            let c = cursor.last_mut().expect("parallel to path");
            let mut next = None;
            while *c < nbrs.len() {
                let w = nbrs[*c];
                *c += 1;
                // after w, len - depth - 1 more vertices then the closing edge
                if w > s && allowed[w] && !on_path[w] && dist[w] <= len - depth {
                    next = Some(w);
                    break;
                }
            }
            match next {
                Some(w) => {
                    search.nodes += 1;
                    if search.nodes > node_cap {
                        search.exhausted = false;
                        for &v in &path {
                            on_path[v] = false;
                        }
                        return search;
                    }
                    on_path[w] = true;
                    path.push(w);
                    cursor.push(0);
                }
                None => {
                    on_path[x] = false;
                    path.pop();
                    cursor.pop();
                }
            }
        }
    }
    search
}
