use serde::{Deserialize, Serialize};

use crate::graph::GeneralGraph;
use crate::{Error, Result};

/// Vertices in breadth-first order per component, so most vertices have a
/// coloured neighbour when they are reached.
fn search_order(g: &GeneralGraph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.vertex_count());
    for comp in g.components() {
        let start = comp[0];
        let mut seen = vec![false; g.vertex_count()];
        seen[start] = true;
        let mut head = order.len();
        order.push(start);
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

/// Visits every proper colouring with colours `0..k`; `visit` returns
/// `false` to stop. Returns the number of colourings visited.
pub fn for_each_proper_coloring(g: &GeneralGraph, k: usize, mut visit: impl FnMut(&[usize]) -> bool) -> u64 {
    let n = g.vertex_count();
    if n == 0 {
        visit(&[]);
        return 1;
    }
    if k == 0 {
        return 0;
    }
    let order = search_order(g);
    let mut color = vec![usize::MAX; n];
    let mut next = vec![0usize; n];
    let mut depth = 0usize;
    let mut visited = 0u64;
    loop {
        let v = order[depth];
        let mut placed = false;
        while next[depth] < k {
            let c = next[depth];
            next[depth] += 1;
            if g.neighbors(v).iter().all(|&w| color[w] != c) {
                color[v] = c;
                placed = true;
                break;
            }
        }
        if !placed {
            color[v] = usize::MAX;
            next[depth] = 0;
            if depth == 0 {
                return visited;
            }
            depth -= 1;
            continue;
        }
        if depth + 1 == n {
            visited += 1;
            if !visit(&color) {
                return visited;
            }
        } else {
            depth += 1;
        }
    }
}

/// Number of proper colourings with `k` colours, counting stops once it
/// passes `cutoff`.
pub fn count_proper_colorings(g: &GeneralGraph, k: usize, cutoff: Option<u64>) -> u64 {
    let mut count = 0u64;
    for_each_proper_coloring(g, k, |_| {
        count += 1;
        cutoff.is_none_or(|c| count <= c)
    });
    count
}

/// Proper 3-colourings (labelled), exact up to `cutoff`.
pub fn count_proper_3_colorings(g: &GeneralGraph, cutoff: u64) -> u64 {
    count_proper_colorings(g, 3, Some(cutoff))
}

/// Connected with exactly one partition into three independent sets, i.e.
/// exactly six labelled proper 3-colourings.
pub fn is_uniquely_3_colorable(g: &GeneralGraph) -> bool {
    g.vertex_count() > 0 && g.is_connected() && count_proper_3_colorings(g, 7) == 6
}

pub fn chromatic_number(g: &GeneralGraph) -> usize {
    if g.vertex_count() == 0 {
        return 0;
    }
    (1..=g.vertex_count())
        .find(|&k| count_proper_colorings(g, k, Some(1)) > 0)
        .expect("n colours always suffice")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum IncreasingCycleVerdict {
    Unavoidable { colorings_checked: u64 },
    /// A proper colouring (colours `1..=t`) with no increasing cycle.
    Avoidable { coloring: Vec<usize> },
}

/// A cycle `v_1, ..., v_s` (s ≥ 3) with strictly increasing colours, if any.
pub fn find_increasing_cycle(g: &GeneralGraph, color: &[usize]) -> Option<Vec<usize>> {
    fn extend(g: &GeneralGraph, color: &[usize], path: &mut Vec<usize>) -> bool {
        let last = *path.last().unwrap();
        if path.len() >= 3 && g.has_edge(last, path[0]) {
            return true;
        }
        for &w in g.neighbors(last) {
            if color[w] > color[last] {
                path.push(w);
                if extend(g, color, path) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    for v in 0..g.vertex_count() {
        let mut path = vec![v];
        if extend(g, color, &mut path) {
            return Some(path);
        }
    }
    None
}

/// Whether every proper `t`-colouring of `h` has an increasing cycle.
/// Fails if the chromatic number of `h` is not `t`.
pub fn increasing_cycle_unavoidable(h: &GeneralGraph, t: usize) -> Result<IncreasingCycleVerdict> {
    let chi = chromatic_number(h);
    if chi != t {
        return Err(Error::ChromaticMismatch { expected: t, actual: chi });
    }
    let mut witness = None;
    let checked = for_each_proper_coloring(h, t, |c| {
        if find_increasing_cycle(h, c).is_none() {
            witness = Some(c.iter().map(|x| x + 1).collect());
            false
        } else {
            true
        }
    });
    Ok(match witness {
        Some(coloring) => IncreasingCycleVerdict::Avoidable { coloring },
        None => IncreasingCycleVerdict::Unavoidable { colorings_checked: checked },
    })
}
