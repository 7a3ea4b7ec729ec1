//! Brute-force reference implementations. Nothing here calls the library
//! routine it is used to check.

use std::collections::HashMap;

use removal_core::graph::{are_isomorphic, GeneralGraph, Part, TripartiteGraph};

/// First proper non-empty variable subset (as a bit mask) on which every
/// row sums to zero, by walking all `2^k` subsets.
pub fn vanishing_subset(rows: &[Vec<i64>], k: usize) -> Option<u32> {
    let full = (1u32 << k) - 1;
    let mut vanish = vec![true; 1 << k];
    let mut sums = vec![0i64; 1 << k];
    for row in rows {
        for mask in 1..=full as usize {
            let low = mask.trailing_zeros() as usize;
            sums[mask] = sums[mask & (mask - 1)] + row[low];
            if sums[mask] != 0 {
                vanish[mask] = false;
            }
        }
    }
    (1..full).find(|&m| vanish[m as usize])
}

/// Every cycle of `g` exactly once, as a vertex sequence starting at its
/// smallest vertex and oriented so the second vertex is below the last.
pub fn all_cycles(g: &GeneralGraph) -> Vec<Vec<usize>> {
    fn extend(g: &GeneralGraph, path: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let start = path[0];
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if w == start && path.len() >= 3 && path[1] < last {
                out.push(path.clone());
            }
            if w > start && !used[w] {
                used[w] = true;
                path.push(w);
                extend(g, path, used, out);
                path.pop();
                used[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut used = vec![false; g.vertex_count()];
    for s in 0..g.vertex_count() {
        used[s] = true;
        extend(g, &mut vec![s], &mut used, &mut out);
        used[s] = false;
    }
    out
}

/// Edge bits of a cycle plus the two-edge masks whose middle vertex sees
/// endpoints in different parts.
pub struct CycleMasks {
    pub edges: u64,
    pub spanning_pairs: Vec<u64>,
}

pub fn cycle_masks(cycle: &[usize], edge_id: &HashMap<(usize, usize), usize>, part: &[Part]) -> CycleMasks {
    let s = cycle.len();
    let id = |i: usize| {
        let (x, y) = (cycle[i % s], cycle[(i + 1) % s]);
        edge_id[&(x.min(y), x.max(y))]
    };
    let mut edges = 0u64;
    let mut spanning_pairs = Vec::new();
    for i in 0..s {
        edges |= 1 << id(i);
        let (prev, next) = (cycle[(i + s - 1) % s], cycle[(i + 1) % s]);
        if part[prev] != part[next] {
            spanning_pairs.push((1 << id(i + s - 1)) | (1 << id(i)));
        }
    }
    CycleMasks { edges, spanning_pairs }
}

impl CycleMasks {
    /// Tagged with `off` as the set of off-colour edges.
    pub fn tagged(&self, off: u64) -> bool {
        let hit = self.edges & off;
        match hit.count_ones() {
            1 => true,
            2 => self.spanning_pairs.contains(&hit),
            _ => false,
        }
    }

    pub fn tagged_either(&self, black: u64, all: u64) -> bool {
        self.tagged(black) || self.tagged(all & !black)
    }
}

/// Canonical undirected edge ids of a tripartite graph, matching its
/// oriented edge order.
pub fn edge_ids(h: &TripartiteGraph) -> HashMap<(usize, usize), usize> {
    h.oriented_edges()
        .into_iter()
        .enumerate()
        .map(|(i, (u, v))| ((u.min(v), u.max(v)), i))
        .collect()
}

pub fn parts_of(h: &TripartiteGraph) -> Vec<Part> {
    (0..h.vertex_count()).map(|v| h.vertex(v).part).collect()
}

/// Proper `k`-colourings by walking all `k^n` assignments.
pub fn count_colorings(g: &GeneralGraph, k: usize) -> u64 {
    let n = g.vertex_count();
    let edges = g.edges();
    let mut col = vec![0usize; n];
    let mut count = 0;
    loop {
        if edges.iter().all(|&(u, v)| col[u] != col[v]) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            col[i] += 1;
            if col[i] < k {
                break;
            }
            col[i] = 0;
            i += 1;
        }
    }
}

/// Calls `visit` on every proper colouring with colours `1..=t`.
pub fn each_coloring(g: &GeneralGraph, t: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn go(g: &GeneralGraph, t: usize, col: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let v = col.len();
        if v == g.vertex_count() {
            return visit(col);
        }
        for c in 1..=t {
            if g.neighbors(v).iter().all(|&w| w >= v || col[w] != c) {
                col.push(c);
                let go_on = go(g, t, col, visit);
                col.pop();
                if !go_on {
                    return false;
                }
            }
        }
        true
    }
    go(g, t, &mut Vec::new(), visit)
}

/// A path with strictly increasing colours whose ends are adjacent.
pub fn has_increasing_cycle(g: &GeneralGraph, col: &[usize]) -> bool {
    fn climb(g: &GeneralGraph, col: &[usize], path: &mut Vec<usize>) -> bool {
        let last = *path.last().unwrap();
        if path.len() >= 3 && g.has_edge(last, path[0]) {
            return true;
        }
        for &w in g.neighbors(last) {
            if col[w] > col[last] {
                path.push(w);
                if climb(g, col, path) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    (0..g.vertex_count()).any(|v| climb(g, col, &mut vec![v]))
}

/// Triangles through each vertex, from neighbour lists and `has_edge` only.
pub fn triangles_per_vertex(g: &GeneralGraph) -> Vec<usize> {
    let mut load = vec![0; g.vertex_count()];
    for u in 0..g.vertex_count() {
        for &v in g.neighbors(u).iter().filter(|&&v| v > u) {
            for &w in g.neighbors(v).iter().filter(|&&w| w > v) {
                if g.has_edge(u, w) {
                    load[u] += 1;
                    load[v] += 1;
                    load[w] += 1;
                }
            }
        }
    }
    load
}

pub fn is_odd_cycle(g: &GeneralGraph, c: &[usize]) -> bool {
    let mut seen = c.to_vec();
    seen.sort_unstable();
    seen.dedup();
    c.len() >= 3
        && c.len() % 2 == 1
        && seen.len() == c.len()
        && (0..c.len()).all(|i| g.has_edge(c[i], c[(i + 1) % c.len()]))
}

fn invariant(g: &GeneralGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let tri = triangles_per_vertex(g);
    let mut per_vertex: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            nd.sort_unstable();
            let mut key = vec![g.degree(v), tri[v]];
            key.extend(nd);
            key
        })
        .collect();
    per_vertex.sort();
    let mut key = vec![n, g.edge_count()];
    for k in per_vertex {
        key.push(usize::MAX);
        key.extend(k);
    }
    key
}

/// One representative of every isomorphism class of graphs on `0..=max_n`
/// vertices, grouped by order. Classes on `n` vertices are grown from those
/// on `n - 1` by adding a vertex with every possible neighbourhood.
pub fn graphs_up_to(max_n: usize) -> Vec<Vec<GeneralGraph>> {
    let mut levels = vec![vec![GeneralGraph::empty(0)]];
    for n in 1..=max_n {
        let mut buckets: HashMap<Vec<usize>, Vec<GeneralGraph>> = HashMap::new();
        let mut level = Vec::new();
        for base in &levels[n - 1] {
            let old = base.edges();
            for nb in 0u32..(1 << (n - 1)) {
                let edges = old.iter().copied().chain((0..n - 1).filter(|&i| nb >> i & 1 == 1).map(|i| (i, n - 1)));
                let g = GeneralGraph::from_edges(n, edges).expect("simple graph");
                let bucket = buckets.entry(invariant(&g)).or_default();
                if !bucket.iter().any(|h| are_isomorphic(h, &g)) {
                    bucket.push(g.clone());
                    level.push(g);
                }
            }
        }
        levels.push(level);
    }
    levels
}
