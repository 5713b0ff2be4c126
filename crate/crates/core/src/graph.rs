//! Simple undirected graphs, per-vertex degree bounds, generators for paths,
//! cycles and caterpillars, and canonical codes for labeled forests.
//!
//! Vertex and edge identity is positional. Edge `i` of a [`Graph`] is the
//! ground-set element `i` of every complex built from it, so generators
//! document the exact order in which they emit edges.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..num_vertices`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
    // (neighbor, edge index), in edge order
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("num_vertices", &self.num_vertices)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Validates an edge list and builds the graph. Edge order is preserved.
    pub fn new(num_vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= num_vertices {
                    return Err(Error::IndexOutOfRange {
                        vertex: w,
                        num_vertices,
                    });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge(u, v));
            }
        }
        Ok(Self::from_validated(num_vertices, edges))
    }

    fn from_validated(num_vertices: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); num_vertices];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adjacency[u].push((v, i));
            adjacency[v].push((u, i));
        }
        Graph {
            num_vertices,
            edges,
            adjacency,
        }
    }

    pub fn empty(num_vertices: usize) -> Self {
        Self::from_validated(num_vertices, Vec::new())
    }

    /// The path `P_n`: vertices `0..n`, edge `i` joins `i` and `i + 1`.
    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSize {
                what: "path",
                value: n,
            });
        }
        Ok(Self::from_validated(
            n,
            (1..n).map(|i| (i - 1, i)).collect(),
        ))
    }

    /// The cycle `C_n`: the path edges `(i, i + 1)` followed by the closing
    /// edge `(0, n - 1)`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidSize {
                what: "cycle",
                value: n,
            });
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        Ok(Self::from_validated(n, edges))
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    /// `(neighbor, edge index)` pairs of `v`, in edge order.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.degree(v) == 1
    }

    pub fn is_forest(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.num_vertices).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(u, v) in &self.edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return false;
            }
            parent[ru] = rv;
        }
        true
    }

    /// The graph with edge `e` removed. Later edges shift down by one.
    pub fn without_edge(&self, e: usize) -> Graph {
        let mut edges = self.edges.clone();
        edges.remove(e);
        Self::from_validated(self.num_vertices, edges)
    }

    /// Vertices of `other` are shifted past ours; edges of `other` follow ours.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.num_vertices;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + offset, v + offset)))
            .collect();
        Self::from_validated(self.num_vertices + other.num_vertices, edges)
    }

    /// Relabels vertex `v` as `perm[v]`; edge order is kept.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.num_vertices);
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Self::from_validated(self.num_vertices, edges)
    }
}

/// Per-vertex degree caps `λ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeBounds(Vec<u32>);

impl DegreeBounds {
    pub fn new(bounds: Vec<u32>) -> Self {
        DegreeBounds(bounds)
    }

    /// Bounds that must match `g` vertex for vertex.
    pub fn for_graph(g: &Graph, bounds: Vec<u32>) -> Result<Self> {
        if bounds.len() != g.num_vertices() {
            return Err(Error::BoundsLength {
                expected: g.num_vertices(),
                got: bounds.len(),
            });
        }
        Ok(DegreeBounds(bounds))
    }

    pub fn uniform(n: usize, k: u32) -> Self {
        DegreeBounds(vec![k; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> u32 {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    pub fn concat(&self, other: &DegreeBounds) -> DegreeBounds {
        DegreeBounds(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn relabel(&self, perm: &[usize]) -> DegreeBounds {
        let mut out = vec![0; self.0.len()];
        for (v, &b) in self.0.iter().enumerate() {
            out[perm[v]] = b;
        }
        DegreeBounds(out)
    }

    pub(crate) fn check(&self, g: &Graph) -> Result<()> {
        if self.len() != g.num_vertices() {
            return Err(Error::BoundsLength {
                expected: g.num_vertices(),
                got: self.len(),
            });
        }
        Ok(())
    }
}

/// Caterpillar `G_n(m_1, ..., m_n)` with spine bounds `λ_1, ..., λ_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CaterpillarSpec {
    pub leaves: Vec<usize>,
    pub spine_bounds: Vec<u32>,
}

impl CaterpillarSpec {
    pub fn new(leaves: Vec<usize>, spine_bounds: Vec<u32>) -> Result<Self> {
        if leaves.is_empty() {
            return Err(Error::InvalidSize {
                what: "caterpillar spine",
                value: 0,
            });
        }
        if leaves.len() != spine_bounds.len() {
            return Err(Error::BoundsLength {
                expected: leaves.len(),
                got: spine_bounds.len(),
            });
        }
        Ok(CaterpillarSpec {
            leaves,
            spine_bounds,
        })
    }

    pub fn spine_len(&self) -> usize {
        self.leaves.len()
    }

    /// Builds the graph and bounds. Vertices: spine `0..n`, then the leaves
    /// of spine vertex 0, then those of spine vertex 1, and so on. Edges: the
    /// `n - 1` spine edges, then leaf edges in the same block order. Every
    /// leaf gets bound 1.
    pub fn build(&self) -> (Graph, DegreeBounds) {
        let n = self.spine_len();
        let total_leaves: usize = self.leaves.iter().sum();
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        let mut next = n;
        for (i, &m) in self.leaves.iter().enumerate() {
            for _ in 0..m {
                edges.push((i, next));
                next += 1;
            }
        }
        let mut bounds = self.spine_bounds.clone();
        bounds.resize(n + total_leaves, 1);
        (
            Graph::from_validated(n + total_leaves, edges),
            DegreeBounds(bounds),
        )
    }
}

/// A connected piece of a graph with its bounds and the maps back to the
/// parent's vertex and edge indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub graph: Graph,
    pub bounds: DegreeBounds,
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
}

/// Connected components that carry at least one edge, ordered by their
/// smallest vertex. Isolated vertices are dropped.
pub fn components(g: &Graph, b: &DegreeBounds) -> Vec<Component> {
    let n = g.num_vertices();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX || g.degree(start) == 0 {
            continue;
        }
        let id = out.len();
        let mut vertices = vec![start];
        comp[start] = id;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &(w, _) in g.neighbors(v) {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    vertices.push(w);
                    stack.push(w);
                }
            }
        }
        vertices.sort_unstable();
        out.push(vertices);
    }

    let mut local = vec![0; n];
    out.into_iter()
        .enumerate()
        .map(|(id, vertex_map)| {
            for (i, &v) in vertex_map.iter().enumerate() {
                local[v] = i;
            }
            let mut edge_map = Vec::new();
            let mut edges = Vec::new();
            for (e, &(u, v)) in g.edges().iter().enumerate() {
                if comp[u] == id {
                    edge_map.push(e);
                    edges.push((local[u], local[v]));
                }
            }
            let bounds = DegreeBounds(vertex_map.iter().map(|&v| b.get(v)).collect());
            Component {
                graph: Graph::from_validated(vertex_map.len(), edges),
                bounds,
                vertex_map,
                edge_map,
            }
        })
        .collect()
}

/// Canonical code of a vertex-labeled forest. Two labeled forests share a key
/// iff some isomorphism between them preserves labels.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn from_bytes(bytes: Vec<u8>) -> Self {
        CanonicalKey(bytes)
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", String::from_utf8_lossy(&self.0))
    }
}

/// AHU encoding: each tree is rooted at its center (the smaller of the two
/// encodings when there are two centers), child codes are sorted, and each
/// vertex code carries its bound. Tree codes are then sorted and
/// concatenated.
pub fn canonical_code(g: &Graph, b: &DegreeBounds) -> Result<CanonicalKey> {
    b.check(g)?;
    if !g.is_forest() {
        return Err(Error::NotAForest);
    }
    let n = g.num_vertices();
    let mut seen = vec![false; n];
    let mut tree_codes = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut tree = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < tree.len() {
            for &(w, _) in g.neighbors(tree[i]) {
                if !seen[w] {
                    seen[w] = true;
                    tree.push(w);
                }
            }
            i += 1;
        }
        let code = tree_centers(g, &tree)
            .into_iter()
            .map(|c| encode_rooted(g, b, c))
            .min()
            .expect("a tree has at least one center");
        tree_codes.push(code);
    }
    tree_codes.sort_unstable();
    Ok(CanonicalKey(tree_codes.concat()))
}

fn tree_centers(g: &Graph, tree: &[usize]) -> Vec<usize> {
    if tree.len() <= 2 {
        return tree.to_vec();
    }
    let mut degree: Vec<usize> = vec![0; g.num_vertices()];
    let mut layer = Vec::new();
    for &v in tree {
        degree[v] = g.degree(v);
        if degree[v] == 1 {
            layer.push(v);
        }
    }
    let mut remaining = tree.len();
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &(w, _) in g.neighbors(v) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn encode_rooted(g: &Graph, b: &DegreeBounds, root: usize) -> Vec<u8> {
    // iterative post-order so long paths do not overflow the stack
    let mut order = Vec::new();
    let mut parent = vec![usize::MAX; g.num_vertices()];
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &(w, _) in g.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut codes: Vec<Option<Vec<u8>>> = vec![None; g.num_vertices()];
    for &v in order.iter().rev() {
        let mut children: Vec<Vec<u8>> = g
            .neighbors(v)
            .iter()
            .filter(|&&(w, _)| parent[w] == v && w != root)
            .map(|&(w, _)| codes[w].take().expect("child encoded before parent"))
            .collect();
        children.sort_unstable();
        let mut code = Vec::with_capacity(8 + children.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        code.extend_from_slice(b.get(v).to_string().as_bytes());
        for c in children {
            code.extend(c);
        }
        code.push(b')');
        codes[v] = Some(code);
    }
    codes[root].take().unwrap()
}
