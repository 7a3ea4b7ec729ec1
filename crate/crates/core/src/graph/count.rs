use super::{BitSet, GeneralGraph, Part, PartPair, TripartiteGraph};
use crate::{Error, Result};

/// Triangles of a tripartite graph as `(a, b, c)` part indices, sorted.
pub fn tripartite_triangles(g: &TripartiteGraph) -> Vec<(usize, usize, usize)> {
    let ob = g.offset(Part::B);
    let oc = g.offset(Part::C);
    let gg = g.graph();
    let mut out = Vec::new();
    for &(a, b) in g.pair_edges(PartPair::AB) {
        let mut common = gg.row(a).clone();
        common.intersect_with(gg.row(ob + b));
        // common neighbours of an A and a B vertex lie in C
        out.extend(common.iter().map(|c| (a, b, c - oc)));
    }
    out
}

/// Triangles of a general graph as `u < v < w`, sorted.
pub fn triangles(g: &GeneralGraph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        let mut common = g.row(u).clone();
        common.intersect_with(g.row(v));
        out.extend(common.iter().filter(|&w| w > v).map(|w| [u, v, w]));
    }
    out
}

/// Number of triangles through each vertex.
pub fn per_vertex_triangles(g: &GeneralGraph) -> Vec<usize> {
    let mut counts = vec![0; g.vertex_count()];
    for t in triangles(g) {
        for v in t {
            counts[v] += 1;
        }
    }
    counts
}

/// Backtracking search for adjacency-preserving maps `pattern → target`.
///
/// Pattern vertices are placed in breadth-first order, so every vertex after
/// the first of its component has an already-placed neighbour and its
/// candidates are the intersection of the placed neighbours' bit rows.
#[derive(Debug, Clone)]
pub struct HomSearch<'a> {
    pattern: &'a GeneralGraph,
    target: &'a GeneralGraph,
    injective: bool,
    node_cap: Option<u64>,
    domains: Option<Vec<BitSet>>,
}

impl<'a> HomSearch<'a> {
    pub fn new(pattern: &'a GeneralGraph, target: &'a GeneralGraph) -> Self {
        HomSearch {
            pattern,
            target,
            injective: false,
            node_cap: None,
            domains: None,
        }
    }

    pub fn injective(mut self, injective: bool) -> Self {
        self.injective = injective;
        self
    }

    pub fn node_cap(mut self, cap: u64) -> Self {
        self.node_cap = Some(cap);
        self
    }

    /// Restricts the image of pattern vertex `i` to `domains[i]`.
    pub fn domains(mut self, domains: Vec<BitSet>) -> Self {
        assert_eq!(domains.len(), self.pattern.vertex_count());
        self.domains = Some(domains);
        self
    }

    fn order(&self) -> (Vec<usize>, Vec<Vec<usize>>) {
        let n = self.pattern.vertex_count();
        let mut pos = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        for s in 0..n {
            if pos[s] != usize::MAX {
                continue;
            }
            pos[s] = order.len();
            order.push(s);
            let mut head = order.len() - 1;
            while head < order.len() {
                let u = order[head];
                head += 1;
                for &w in self.pattern.neighbors(u) {
                    if pos[w] == usize::MAX {
                        pos[w] = order.len();
                        order.push(w);
                    }
                }
            }
        }
        let back: Vec<Vec<usize>> = order
            .iter()
            .map(|&u| {
                self.pattern
                    .neighbors(u)
                    .iter()
                    .filter(|&&w| pos[w] < pos[u])
                    .copied()
                    .collect()
            })
            .collect();
        (order, back)
    }

    /// Visits every homomorphism; `visit` receives the image of each pattern
    /// vertex and returns `false` to stop early. Returns the number of search
    /// nodes expanded.
    pub fn for_each(&self, mut visit: impl FnMut(&[usize]) -> bool) -> Result<u64> {
        let n = self.pattern.vertex_count();
        let m = self.target.vertex_count();
        if n == 0 {
            visit(&[]);
            return Ok(0);
        }
        let (order, back) = self.order();
        let mut image = vec![usize::MAX; n];
        let mut used = BitSet::new(m);
        let mut nodes = 0u64;
        let mut stack: Vec<Vec<usize>> = Vec::with_capacity(n);

        let candidates = |depth: usize, image: &[usize], used: &BitSet| -> Vec<usize> {
            let u = order[depth];
            let mut set = match back[depth].first() {
                Some(&w) => self.target.row(image[w]).clone(),
                None => BitSet::full(m),
            };
            for &w in back[depth].iter().skip(1) {
                set.intersect_with(self.target.row(image[w]));
            }
            if let Some(d) = &self.domains {
                set.intersect_with(&d[u]);
            }
            if self.injective {
                set.difference_with(used);
            }
            let mut c: Vec<usize> = set.iter().collect();
            c.reverse();
            c
        };

        stack.push(candidates(0, &image, &used));
        while !stack.is_empty() {
            let depth = stack.len() - 1;
            let u = order[depth];
            if image[u] != usize::MAX {
                used.remove(image[u]);
                image[u] = usize::MAX;
            }
            let Some(x) = stack[depth].pop() else {
                stack.pop();
                continue;
            };
            nodes += 1;
            if let Some(cap) = self.node_cap {
                if nodes > cap {
                    return Err(Error::BudgetExceeded { budget: cap });
                }
            }
            image[u] = x;
            used.insert(x);
            if depth + 1 == n {
                if !visit(&image) {
                    return Ok(nodes);
                }
            } else {
                let next = candidates(depth + 1, &image, &used);
                stack.push(next);
            }
        }
        Ok(nodes)
    }

    pub fn count(&self) -> Result<u64> {
        let mut count = 0u64;
        self.for_each(|_| {
            count += 1;
            true
        })?;
        Ok(count)
    }

    pub fn exists(&self) -> Result<bool> {
        let mut found = false;
        self.for_each(|_| {
            found = true;
            false
        })?;
        Ok(found)
    }
}

/// Number of (injective, if flagged) homomorphisms `pattern → target`.
pub fn count_homomorphisms(pattern: &GeneralGraph, target: &GeneralGraph, injective: bool, node_cap: Option<u64>) -> Result<u64> {
    let mut s = HomSearch::new(pattern, target).injective(injective);
    if let Some(cap) = node_cap {
        s = s.node_cap(cap);
    }
    s.count()
}

pub fn automorphism_count(g: &GeneralGraph) -> Result<u64> {
    count_homomorphisms(g, g, true, None)
}

/// Unlabelled copies of `pattern` in `target`: injective homomorphisms
/// divided by the automorphisms of `pattern`.
pub fn count_copies(pattern: &GeneralGraph, target: &GeneralGraph, node_cap: Option<u64>) -> Result<u64> {
    let inj = count_homomorphisms(pattern, target, true, node_cap)?;
    let aut = automorphism_count(pattern)?;
    debug_assert_eq!(inj % aut, 0);
    Ok(inj / aut)
}

pub fn are_isomorphic(g: &GeneralGraph, h: &GeneralGraph) -> bool {
    g.vertex_count() == h.vertex_count()
        && g.edge_count() == h.edge_count()
        && HomSearch::new(g, h).injective(true).exists().unwrap_or(false)
}
