//! Instance families for sweeps: all forests up to isomorphism, bound
//! vectors, caterpillars, cycles and seeded random forests.

use std::collections::BTreeMap;

use rand::Rng;

use crate::graph::{canonical_code, CanonicalKey, CaterpillarSpec, DegreeBounds, Graph};

/// One representative per isomorphism class of trees with `edges` edges.
pub fn trees_with_edges(edges: usize) -> Vec<Graph> {
    let mut layer: BTreeMap<CanonicalKey, Graph> = BTreeMap::new();
    let point = Graph::empty(1);
    layer.insert(key_of(&point), point);
    for _ in 0..edges {
        let mut next = BTreeMap::new();
        for tree in layer.values() {
            let n = tree.num_vertices();
            for v in 0..n {
                let mut e = tree.edges().to_vec();
                e.push((v, n));
                let grown = Graph::new(n + 1, e).expect("adding a leaf keeps the graph simple");
                next.entry(key_of(&grown)).or_insert(grown);
            }
        }
        layer = next;
    }
    layer.into_values().collect()
}

fn key_of(g: &Graph) -> CanonicalKey {
    canonical_code(g, &DegreeBounds::uniform(g.num_vertices(), 0)).expect("trees are forests")
}

/// One representative per isomorphism class of forests without isolated
/// vertices and with at most `max_edges` edges, the empty forest included.
/// Ordered by edge count, then by component sizes.
pub fn forests_up_to(max_edges: usize) -> Vec<Graph> {
    let trees: Vec<Vec<Graph>> = (0..=max_edges).map(trees_with_edges).collect();
    // (edge count, index) of every tree with at least one edge
    let catalog: Vec<(usize, usize)> = (1..=max_edges)
        .flat_map(|m| (0..trees[m].len()).map(move |i| (m, i)))
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn walk(
        catalog: &[(usize, usize)],
        trees: &[Vec<Graph>],
        from: usize,
        budget: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Graph>,
    ) {
        let forest = chosen.iter().fold(Graph::empty(0), |acc, &c| {
            let (m, i) = catalog[c];
            acc.disjoint_union(&trees[m][i])
        });
        out.push(forest);
        for c in from..catalog.len() {
            let (m, _) = catalog[c];
            if m > budget {
                break;
            }
            chosen.push(c);
            walk(catalog, trees, c, budget - m, chosen, out);
            chosen.pop();
        }
    }
    walk(&catalog, &trees, 0, max_edges, &mut chosen, &mut out);
    out.sort_by_key(Graph::num_edges);
    out
}

/// Every bound vector with `λ(v) ≤ min(deg v, max_bound)`. A bound at or
/// above a vertex's degree never binds, so these cover every vector with
/// entries up to `max_bound` without changing any complex.
pub fn clamped_bound_vectors(g: &Graph, max_bound: u32) -> Vec<DegreeBounds> {
    let caps: Vec<u32> = (0..g.num_vertices())
        .map(|v| (g.degree(v) as u32).min(max_bound))
        .collect();
    let mut out = Vec::new();
    let mut current = vec![0u32; caps.len()];
    loop {
        out.push(DegreeBounds::new(current.clone()));
        let mut i = 0;
        loop {
            if i == caps.len() {
                return out;
            }
            if current[i] < caps[i] {
                current[i] += 1;
                break;
            }
            current[i] = 0;
            i += 1;
        }
    }
}

/// `b` with every entry lowered to the vertex degree.
pub fn clamp_to_degree(g: &Graph, b: &DegreeBounds) -> DegreeBounds {
    DegreeBounds::new(
        (0..g.num_vertices())
            .map(|v| b.get(v).min(g.degree(v) as u32))
            .collect(),
    )
}

/// Every vector of length `len` with entries in `lo..=hi`, in lexicographic
/// order.
pub fn vectors_in_range<T: Copy + PartialOrd + std::ops::AddAssign + From<u8>>(
    len: usize,
    lo: T,
    hi: T,
) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    if lo > hi {
        return out;
    }
    let mut current = vec![lo; len];
    loop {
        out.push(current.clone());
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] < hi {
                current[i] += T::from(1);
                break;
            }
            current[i] = lo;
        }
    }
}

/// Caterpillars with spine length `1..=max_spine`, leaf counts in
/// `min_leaves..=max_leaves` and spine bounds in `0..=max_bound`.
pub fn caterpillar_specs(
    max_spine: usize,
    min_leaves: usize,
    max_leaves: usize,
    max_bound: u32,
) -> Vec<CaterpillarSpec> {
    let mut out = Vec::new();
    for n in 1..=max_spine {
        for leaves in vectors_in_range(n, min_leaves, max_leaves) {
            for bounds in vectors_in_range(n, 0u32, max_bound) {
                out.push(CaterpillarSpec::new(leaves.clone(), bounds).expect("lengths agree"));
            }
        }
    }
    out
}

/// A random labeled forest with at most `max_edges` edges and bounds in
/// `0..=max_bound`. Vertex `v > 0` attaches to a uniformly chosen earlier
/// vertex with probability 3/4.
pub fn random_forest<R: Rng>(
    rng: &mut R,
    max_edges: usize,
    max_bound: u32,
) -> (Graph, DegreeBounds) {
    let n = rng.gen_range(1..=max_edges + 1);
    let mut edges = Vec::new();
    for v in 1..n {
        if edges.len() < max_edges && rng.gen_bool(0.75) {
            edges.push((rng.gen_range(0..v), v));
        }
    }
    let bounds = (0..n).map(|_| rng.gen_range(0..=max_bound)).collect();
    (
        Graph::new(n, edges).expect("attachments to earlier vertices form a forest"),
        DegreeBounds::new(bounds),
    )
}
