use serde::{Deserialize, Serialize};

use super::{BitSet, GeneralGraph};
use crate::{Error, Result};

/// One of the three vertex classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Part {
    A,
    B,
    C,
}

impl Part {
    pub const ALL: [Part; 3] = [Part::A, Part::B, Part::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Part {
        Part::ALL[i]
    }

    pub fn letter(self) -> char {
        ['a', 'b', 'c'][self.index()]
    }
}

/// An unordered pair of distinct parts, stored in cyclic orientation
/// A→B, B→C, C→A.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PartPair {
    AB,
    BC,
    CA,
}

impl PartPair {
    pub const ALL: [PartPair; 3] = [PartPair::AB, PartPair::BC, PartPair::CA];

    pub fn index(self) -> usize {
        self as usize
    }

    /// `(first, second)` part in cyclic orientation.
    pub fn parts(self) -> (Part, Part) {
        match self {
            PartPair::AB => (Part::A, Part::B),
            PartPair::BC => (Part::B, Part::C),
            PartPair::CA => (Part::C, Part::A),
        }
    }

    /// The pair joining `x` and `y`, and whether `(x, y)` is already in
    /// cyclic orientation.
    pub fn between(x: Part, y: Part) -> Option<(PartPair, bool)> {
        use Part::*;
        match (x, y) {
            (A, B) => Some((PartPair::AB, true)),
            (B, A) => Some((PartPair::AB, false)),
            (B, C) => Some((PartPair::BC, true)),
            (C, B) => Some((PartPair::BC, false)),
            (C, A) => Some((PartPair::CA, true)),
            (A, C) => Some((PartPair::CA, false)),
            _ => None,
        }
    }
}

/// A vertex addressed by part and index within that part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub part: Part,
    pub index: usize,
}

impl Vertex {
    pub fn new(part: Part, index: usize) -> Self {
        Vertex { part, index }
    }
}

impl std::fmt::Display for Vertex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.part.letter(), self.index)
    }
}

/// Tripartite graph with parts A, B, C.
///
/// Edges are stored per part pair as `(index in first part, index in second
/// part)` using the cyclic orientation of [`PartPair`], so C–A edges are
/// `(c, a)`. Each pair list is sorted and duplicate-free. A global
/// [`GeneralGraph`] view numbers A first, then B, then C.
#[derive(Clone, PartialEq, Eq)]
pub struct TripartiteGraph {
    sizes: [usize; 3],
    edges: [Vec<(usize, usize)>; 3],
    global: GeneralGraph,
}

impl std::fmt::Debug for TripartiteGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TripartiteGraph")
            .field("sizes", &self.sizes)
            .field("ab", &self.edges[0])
            .field("bc", &self.edges[1])
            .field("ca", &self.edges[2])
            .finish()
    }
}

impl TripartiteGraph {
    pub fn new(sizes: [usize; 3], ab: Vec<(usize, usize)>, bc: Vec<(usize, usize)>, ca: Vec<(usize, usize)>) -> Result<Self> {
        let mut edges = [ab, bc, ca];
        for pair in PartPair::ALL {
            let (p, q) = pair.parts();
            let list = &mut edges[pair.index()];
            for &(i, j) in list.iter() {
                if i >= sizes[p.index()] || j >= sizes[q.index()] {
                    return Err(Error::invalid(format!(
                        "{pair:?} edge ({i}, {j}) out of range for part sizes {sizes:?}"
                    )));
                }
            }
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::invalid(format!("duplicate {pair:?} edge {:?}", w[0])));
            }
        }
        let offsets = [0, sizes[0], sizes[0] + sizes[1]];
        let n = sizes.iter().sum();
        let mut global_edges = Vec::new();
        for pair in PartPair::ALL {
            let (p, q) = pair.parts();
            for &(i, j) in &edges[pair.index()] {
                global_edges.push((offsets[p.index()] + i, offsets[q.index()] + j));
            }
        }
        let parts = (0..3u8)
            .flat_map(|p| std::iter::repeat_n(p, sizes[p as usize]))
            .collect();
        let global = GeneralGraph::from_edges(n, global_edges)?.with_parts(parts)?;
        Ok(TripartiteGraph { sizes, edges, global })
    }

    pub fn empty(sizes: [usize; 3]) -> Self {
        TripartiteGraph::new(sizes, vec![], vec![], vec![]).expect("empty graph")
    }

    /// Complete tripartite graph K_{a,b,c}.
    pub fn complete(sizes: [usize; 3]) -> Self {
        let all = |x: usize, y: usize| (0..x).flat_map(move |i| (0..y).map(move |j| (i, j))).collect::<Vec<_>>();
        TripartiteGraph::new(
            sizes,
            all(sizes[0], sizes[1]),
            all(sizes[1], sizes[2]),
            all(sizes[2], sizes[0]),
        )
        .expect("complete tripartite")
    }

    /// Builds a tripartite graph from a general graph whose part labels are
    /// all in `0..3` and whose edges join different parts.
    pub fn from_general(g: &GeneralGraph) -> Result<Self> {
        let parts = g
            .parts()
            .ok_or_else(|| Error::invalid("graph has no part labels"))?;
        let mut sizes = [0usize; 3];
        let mut local = vec![0usize; g.vertex_count()];
        for (v, &p) in parts.iter().enumerate() {
            if p > 2 {
                return Err(Error::invalid(format!("vertex {v} has part label {p} outside 0..3")));
            }
            local[v] = sizes[p as usize];
            sizes[p as usize] += 1;
        }
        let mut lists: [Vec<(usize, usize)>; 3] = Default::default();
        for (u, v) in g.edges() {
            let (pu, pv) = (Part::from_index(parts[u] as usize), Part::from_index(parts[v] as usize));
            let (pair, forward) = PartPair::between(pu, pv)
                .ok_or_else(|| Error::invalid(format!("edge ({u}, {v}) inside part {pu:?}")))?;
            let e = if forward { (local[u], local[v]) } else { (local[v], local[u]) };
            lists[pair.index()].push(e);
        }
        let [ab, bc, ca] = lists;
        TripartiteGraph::new(sizes, ab, bc, ca)
    }

    pub fn sizes(&self) -> [usize; 3] {
        self.sizes
    }

    pub fn part_size(&self, part: Part) -> usize {
        self.sizes[part.index()]
    }

    pub fn pair_edges(&self, pair: PartPair) -> &[(usize, usize)] {
        &self.edges[pair.index()]
    }

    pub fn vertex_count(&self) -> usize {
        self.global.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.global.edge_count()
    }

    /// The global view: A vertices first, then B, then C, with part labels.
    pub fn graph(&self) -> &GeneralGraph {
        &self.global
    }

    pub fn offset(&self, part: Part) -> usize {
        match part {
            Part::A => 0,
            Part::B => self.sizes[0],
            Part::C => self.sizes[0] + self.sizes[1],
        }
    }

    pub fn global_id(&self, v: Vertex) -> usize {
        self.offset(v.part) + v.index
    }

    pub fn vertex(&self, global: usize) -> Vertex {
        let part = Part::from_index(self.global.part(global).expect("labelled") as usize);
        Vertex::new(part, global - self.offset(part))
    }

    /// Global ids of every vertex in `part`.
    pub fn part_vertices(&self, part: Part) -> std::ops::Range<usize> {
        let o = self.offset(part);
        o..o + self.sizes[part.index()]
    }

    /// Bit set (over global ids) of the vertices in `part`.
    pub fn part_mask(&self, part: Part) -> BitSet {
        BitSet::from_indices(self.vertex_count(), self.part_vertices(part))
    }

    /// Edges in canonical global order (AB, then BC, then CA; each sorted),
    /// as global `(tail, head)` in cyclic orientation. The position in this
    /// list is the edge's variable index.
    pub fn oriented_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for pair in PartPair::ALL {
            let (p, q) = pair.parts();
            let (op, oq) = (self.offset(p), self.offset(q));
            out.extend(self.edges[pair.index()].iter().map(|&(i, j)| (op + i, oq + j)));
        }
        out
    }

    /// Copy with the given oriented global edges removed.
    pub fn without_edges(&self, removed: &[(usize, usize)]) -> Self {
        let mut lists = self.edges.clone();
        for &(u, v) in removed {
            let (x, y) = (self.vertex(u), self.vertex(v));
            if let Some((pair, forward)) = PartPair::between(x.part, y.part) {
                let e = if forward { (x.index, y.index) } else { (y.index, x.index) };
                let list = &mut lists[pair.index()];
                if let Ok(pos) = list.binary_search(&e) {
                    list.remove(pos);
                }
            }
        }
        let [ab, bc, ca] = lists;
        TripartiteGraph::new(self.sizes, ab, bc, ca).expect("subgraph")
    }

    /// Blowup with each part multiplied by `t`; clone `k` of vertex `i` has
    /// index `i * t + k` within its part.
    pub fn blowup(&self, t: usize) -> Self {
        assert!(t >= 1, "blowup factor must be positive");
        let mut lists: [Vec<(usize, usize)>; 3] = Default::default();
        for pair in PartPair::ALL {
            for &(i, j) in &self.edges[pair.index()] {
                for x in 0..t {
                    for y in 0..t {
                        lists[pair.index()].push((i * t + x, j * t + y));
                    }
                }
            }
        }
        let [ab, bc, ca] = lists;
        TripartiteGraph::new(self.sizes.map(|s| s * t), ab, bc, ca).expect("blowup")
    }

    /// Relabels the parts: vertices of part `p` move to part `perm[p]`.
    pub fn permute_parts(&self, perm: [Part; 3]) -> Self {
        let mut sizes = [0; 3];
        for p in Part::ALL {
            sizes[perm[p.index()].index()] = self.sizes[p.index()];
        }
        let mut lists: [Vec<(usize, usize)>; 3] = Default::default();
        for pair in PartPair::ALL {
            let (p, q) = pair.parts();
            let (np, nq) = (perm[p.index()], perm[q.index()]);
            let (new_pair, forward) = PartPair::between(np, nq).expect("distinct parts");
            for &(i, j) in &self.edges[pair.index()] {
                lists[new_pair.index()].push(if forward { (i, j) } else { (j, i) });
            }
        }
        let [ab, bc, ca] = lists;
        TripartiteGraph::new(sizes, ab, bc, ca).expect("relabelled graph")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_k111() {
        let g = TripartiteGraph::complete([1, 1, 1]);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.oriented_edges(), vec![(0, 1), (1, 2), (2, 0)]);
    }

    #[test]
    fn rejects_out_of_range_and_duplicates() {
        assert!(TripartiteGraph::new([1, 1, 1], vec![(0, 1)], vec![], vec![]).is_err());
        assert!(TripartiteGraph::new([1, 1, 1], vec![(0, 0), (0, 0)], vec![], vec![]).is_err());
    }

    #[test]
    fn general_round_trip() {
        let g = TripartiteGraph::new([2, 1, 2], vec![(1, 0)], vec![(0, 1)], vec![(0, 0), (1, 1)]).unwrap();
        let back = TripartiteGraph::from_general(g.graph()).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn blowup_sizes() {
        let g = TripartiteGraph::complete([1, 1, 1]).blowup(3);
        assert_eq!(g.sizes(), [3, 3, 3]);
        assert_eq!(g.edge_count(), 27);
    }

    #[test]
    fn permuting_parts_preserves_edges() {
        let g = TripartiteGraph::new([2, 1, 1], vec![(0, 0), (1, 0)], vec![(0, 0)], vec![]).unwrap();
        let h = g.permute_parts([Part::B, Part::A, Part::C]);
        assert_eq!(h.sizes(), [1, 2, 1]);
        assert_eq!(h.pair_edges(PartPair::AB), &[(0, 0), (0, 1)]);
        assert_eq!(h.pair_edges(PartPair::CA), &[(0, 0)]);
    }
}
