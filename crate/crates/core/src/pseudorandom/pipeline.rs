use rand::Rng as _;
use serde::{Deserialize, Serialize};

use crate::graph::{tripartite_triangles, Part, TripartiteGraph};
use crate::rng::seeded;

/// The sparse density `n^{-3/4}`.
pub fn default_density(n: usize) -> f64 {
    (n as f64).powf(-0.75)
}

/// Each of the `3n²` cross-part pairs is an edge independently with
/// probability `p`, drawn in the order AB, BC, CA (each row-major) from
/// the base stream of `seed`.
pub fn sample_tripartite(n: usize, p: f64, seed: u64) -> TripartiteGraph {
    let p = p.clamp(0.0, 1.0);
    let mut rng = seeded(seed);
    let mut lists: [Vec<(usize, usize)>; 3] = Default::default();
    for list in &mut lists {
        for i in 0..n {
            for j in 0..n {
                if rng.gen_bool(p) {
                    list.push((i, j));
                }
            }
        }
    }
    let [ab, bc, ca] = lists;
    TripartiteGraph::new([n; 3], ab, bc, ca).expect("sampled edges are in range")
}

/// Which edge of an intact triangle is removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum DeletionRule {
    /// The lexicographically smallest edge under AB < BC < CA, which is
    /// always the A–B edge.
    #[default]
    Lexicographic,
    /// The C–A edge.
    CaFirst,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PipelineRecord {
    pub n: usize,
    pub p: f64,
    pub seed: Option<u64>,
    pub rule: DeletionRule,
    pub edges_before: usize,
    pub edges_after: usize,
    pub triangle_count_before: usize,
    /// Oriented global `(tail, head)` pairs, in deletion order.
    pub deleted_edges: Vec<(usize, usize)>,
    /// Triangles through each global vertex before deletion.
    pub per_vertex_triangles: Vec<usize>,
    pub max_vertex_triangles: usize,
    /// Deleted edges incident to each global vertex.
    pub per_vertex_deletions: Vec<usize>,
}

/// Walks the triangles of `g` in lexicographic `(a, b, c)` order and, for
/// each one still intact, deletes one edge chosen by `rule`.
pub fn delete_one_edge_per_triangle(g: &TripartiteGraph, rule: DeletionRule) -> (TripartiteGraph, PipelineRecord) {
    let tris = tripartite_triangles(g);
    let n_vertices = g.vertex_count();
    let (ob, oc) = (g.offset(Part::B), g.offset(Part::C));
    let mut per_vertex_triangles = vec![0usize; n_vertices];
    for &(a, b, c) in &tris {
        per_vertex_triangles[a] += 1;
        per_vertex_triangles[ob + b] += 1;
        per_vertex_triangles[oc + c] += 1;
    }
    let mut removed = std::collections::HashSet::new();
    let mut deleted = Vec::new();
    for &(a, b, c) in &tris {
        let edges = [(a, ob + b), (ob + b, oc + c), (oc + c, a)];
        if edges.iter().any(|e| removed.contains(e)) {
            continue;
        }
        let victim = match rule {
            DeletionRule::Lexicographic => edges[0],
            DeletionRule::CaFirst => edges[2],
        };
        removed.insert(victim);
        deleted.push(victim);
    }
    let out = g.without_edges(&deleted);
    let mut per_vertex_deletions = vec![0usize; n_vertices];
    for &(u, v) in &deleted {
        per_vertex_deletions[u] += 1;
        per_vertex_deletions[v] += 1;
    }
    let record = PipelineRecord {
        n: g.part_size(Part::A),
        p: f64::NAN,
        seed: None,
        rule,
        edges_before: g.edge_count(),
        edges_after: out.edge_count(),
        triangle_count_before: tris.len(),
        max_vertex_triangles: per_vertex_triangles.iter().copied().max().unwrap_or(0),
        deleted_edges: deleted,
        per_vertex_triangles,
        per_vertex_deletions,
    };
    (out, record)
}

/// Samples `H_0` and deletes one edge per triangle.
pub fn run_pipeline(n: usize, p: f64, seed: u64, rule: DeletionRule) -> (TripartiteGraph, TripartiteGraph, PipelineRecord) {
    let h0 = sample_tripartite(n, p, seed);
    let (h, mut record) = delete_one_edge_per_triangle(&h0, rule);
    record.p = p;
    record.seed = Some(seed);
    (h0, h, record)
}
