use std::collections::VecDeque;

use super::BitSet;
use crate::{Error, Result};

/// Simple undirected graph on vertices `0..n` with optional per-vertex part
/// labels.
///
/// Adjacency is held twice: sorted neighbour lists for traversal and bit rows
/// for constant-time membership and fast neighbourhood intersection. The
/// graph is immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct GeneralGraph {
    adj: Vec<Vec<usize>>,
    rows: Vec<BitSet>,
    parts: Option<Vec<u8>>,
    edge_count: usize,
}

impl std::fmt::Debug for GeneralGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GeneralGraph")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges())
            .field("parts", &self.parts)
            .finish()
    }
}

impl GeneralGraph {
    pub fn empty(n: usize) -> Self {
        GeneralGraph {
            adj: vec![Vec::new(); n],
            rows: vec![BitSet::new(n); n],
            parts: None,
            edge_count: 0,
        }
    }

    /// Builds a graph, rejecting loops, repeated edges and out-of-range ends.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = GeneralGraph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u}")));
            }
            if !g.rows[u].insert(v) {
                return Err(Error::invalid(format!("duplicate edge ({u}, {v})")));
            }
            g.rows[v].insert(u);
            g.adj[u].push(v);
            g.adj[v].push(u);
            g.edge_count += 1;
        }
        for list in g.adj.iter_mut() {
            list.sort_unstable();
        }
        Ok(g)
    }

    /// Like [`from_edges`](Self::from_edges) but silently drops duplicates.
    pub fn from_edges_dedup(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        list.sort_unstable();
        list.dedup();
        GeneralGraph::from_edges(n, list)
    }

    pub fn with_parts(mut self, parts: Vec<u8>) -> Result<Self> {
        if parts.len() != self.vertex_count() {
            return Err(Error::invalid(format!(
                "{} part labels for {} vertices",
                parts.len(),
                self.vertex_count()
            )));
        }
        self.parts = Some(parts);
        Ok(self)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn row(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn parts(&self) -> Option<&[u8]> {
        self.parts.as_deref()
    }

    pub fn part(&self, v: usize) -> Option<u8> {
        self.parts.as_ref().map(|p| p[v])
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Graph with the listed edges removed (orientation ignored).
    pub fn without_edges(&self, removed: &[(usize, usize)]) -> Self {
        let mut drop: Vec<BitSet> = vec![BitSet::new(self.vertex_count()); self.vertex_count()];
        for &(u, v) in removed {
            drop[u].insert(v);
            drop[v].insert(u);
        }
        let kept = self.edges().into_iter().filter(|&(u, v)| !drop[u].contains(v));
        let mut g = GeneralGraph::from_edges(self.vertex_count(), kept).expect("subgraph of a simple graph");
        g.parts = self.parts.clone();
        g
    }

    /// Subgraph induced by `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        let mut g = GeneralGraph::from_edges(vertices.len(), edges).expect("induced subgraph");
        if let Some(p) = &self.parts {
            g.parts = Some(vertices.iter().map(|&v| p[v]).collect());
        }
        g
    }

    /// Breadth-first distances from `source` (`usize::MAX` if unreachable).
    pub fn bfs_distances(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True for the empty graph and for any graph with one component.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// A proper 2-colouring if one exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.vertex_count();
        let mut side = vec![u8::MAX; n];
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// Checks that `cycle` lists distinct vertices with consecutive (and
    /// closing) adjacency.
    pub fn is_cycle(&self, cycle: &[usize]) -> bool {
        let len = cycle.len();
        if len < 3 || cycle.iter().any(|&v| v >= self.vertex_count()) {
            return false;
        }
        let mut seen = BitSet::new(self.vertex_count());
        if !cycle.iter().all(|&v| seen.insert(v)) {
            return false;
        }
        (0..len).all(|i| self.has_edge(cycle[i], cycle[(i + 1) % len]))
    }
}

/// Cycle graph on `0..n` with edges `i ~ i+1 mod n`.
pub fn cycle_graph(n: usize) -> GeneralGraph {
    GeneralGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("n >= 3")
}

/// Complete graph on `0..n`.
pub fn complete_graph(n: usize) -> GeneralGraph {
    GeneralGraph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("simple")
}

/// Path on `0..n`.
pub fn path_graph(n: usize) -> GeneralGraph {
    GeneralGraph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("simple")
}

/// The Grötzsch graph: the Mycielskian of the 5-cycle (11 vertices, 20 edges).
///
/// Vertices `0..5` form the outer cycle, `5..10` are the shadow vertices and
/// `10` is the apex.
pub fn grotzsch_graph() -> GeneralGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, (i + 1) % 5));
        edges.push((5 + i, (i + 4) % 5));
        edges.push((5 + i, 10));
    }
    GeneralGraph::from_edges(11, edges).expect("simple")
}

/// Balanced blowup: vertex `v` becomes clones `v*t .. v*t + t`, clones of
/// adjacent vertices are adjacent, and clone classes are independent. Part
/// labels are inherited.
pub fn blowup(g: &GeneralGraph, t: usize) -> GeneralGraph {
    assert!(t >= 1, "blowup factor must be positive");
    let mut edges = Vec::with_capacity(g.edge_count() * t * t);
    for (u, v) in g.edges() {
        for i in 0..t {
            for j in 0..t {
                edges.push((u * t + i, v * t + j));
            }
        }
    }
    let mut out = GeneralGraph::from_edges(g.vertex_count() * t, edges).expect("blowup of a simple graph");
    if let Some(p) = g.parts() {
        out.parts = Some(p.iter().flat_map(|&x| std::iter::repeat_n(x, t)).collect());
    }
    out
}
