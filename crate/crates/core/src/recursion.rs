//! Sphere counts of `BD^λ(F)` for a forest `F`, computed without building
//! the complex.
//!
//! For an edge `e = {v, w}` with a leaf `ℓ ∉ e` adjacent to `v` or `w`,
//! the link of `e` sits inside the cone with apex `{ℓ, v}` (or `{ℓ, w}`), so
//!
//! ```text
//! BD^λ(F) ≃ BD^λ(F∖e) ∨ Σ BD^{λ_e}(F∖e)
//! ```
//!
//! where `λ_e` lowers the bounds of both endpoints by one. Disjoint unions
//! become joins, single edges are cones, and the complex of an edgeless
//! forest is `{∅}`.

use std::sync::atomic::{AtomicU64, Ordering};

use dashmap::DashMap;

use crate::error::{Error, Result};
use crate::graph::{canonical_code, components, CanonicalKey, DegreeBounds, Graph};
use crate::spheres::SphereCountVector;

/// `λ_e`: the bounds of both endpoints of edge `e` lowered by one.
pub fn decrement_bounds(g: &Graph, b: &DegreeBounds, e: usize) -> Result<DegreeBounds> {
    b.check(g)?;
    let (u, v) = g.edge(e);
    let mut out = b.as_slice().to_vec();
    for w in [u, v] {
        out[w] = out[w].checked_sub(1).ok_or(Error::WouldGoNegative(w))?;
    }
    Ok(DegreeBounds::new(out))
}

/// Drops every edge touching a zero-bound vertex, then every isolated
/// vertex. The complex is unchanged: surviving edges keep their relative
/// order and the dropped edges were never faces.
pub fn simplify(f: &Graph, b: &DegreeBounds) -> Result<(Graph, DegreeBounds)> {
    b.check(f)?;
    if !f.is_forest() {
        return Err(Error::NotAForest);
    }
    Ok(simplify_unchecked(f, b))
}

fn simplify_unchecked(f: &Graph, b: &DegreeBounds) -> (Graph, DegreeBounds) {
    let kept: Vec<(usize, usize)> = f
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| b.get(u) > 0 && b.get(v) > 0)
        .collect();
    let mut index = vec![usize::MAX; f.num_vertices()];
    let mut bounds = Vec::new();
    for &(u, v) in &kept {
        for w in [u, v] {
            if index[w] == usize::MAX {
                index[w] = 0;
            }
        }
    }
    for (v, slot) in index.iter_mut().enumerate() {
        if *slot == 0 {
            *slot = bounds.len();
            bounds.push(b.get(v));
        }
    }
    let edges = kept
        .into_iter()
        .map(|(u, v)| (index[u], index[v]))
        .collect();
    (
        Graph::new(bounds.len(), edges).expect("subgraph of a simple graph"),
        DegreeBounds::new(bounds),
    )
}

/// Whether `e = {v, w}` has a leaf `u ∉ e` adjacent to `v` or `w`.
pub fn is_recursion_edge(f: &Graph, e: usize) -> bool {
    let (v, w) = f.edge(e);
    [v, w].into_iter().any(|x| {
        f.neighbors(x)
            .iter()
            .any(|&(u, _)| u != v && u != w && f.is_leaf(u))
    })
}

/// Smallest edge index satisfying [`is_recursion_edge`]. `None` exactly when
/// every component is a single edge.
pub fn pick_recursion_edge(f: &Graph) -> Option<usize> {
    (0..f.num_edges()).find(|&e| is_recursion_edge(f, e))
}

/// Concurrent memo table keyed by the canonical code of a simplified,
/// connected forest with bounds clamped to vertex degrees.
#[derive(Debug, Default)]
pub struct SphereCache {
    map: DashMap<CanonicalKey, SphereCountVector>,
    hits: AtomicU64,
    misses: AtomicU64,
}

impl SphereCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn hits(&self) -> u64 {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> u64 {
        self.misses.load(Ordering::Relaxed)
    }

    pub fn get(&self, key: &CanonicalKey) -> Option<SphereCountVector> {
        let found = self.map.get(key).map(|v| v.clone());
        let counter = if found.is_some() {
            &self.hits
        } else {
            &self.misses
        };
        counter.fetch_add(1, Ordering::Relaxed);
        found
    }

    /// Equal keys always carry equal values, so racing writers are harmless.
    pub fn insert(&self, key: CanonicalKey, value: SphereCountVector) {
        self.map.insert(key, value);
    }

    /// Snapshot of all entries, sorted by key.
    pub fn entries(&self) -> Vec<(CanonicalKey, SphereCountVector)> {
        let mut out: Vec<_> = self
            .map
            .iter()
            .map(|e| (e.key().clone(), e.value().clone()))
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }
}

/// Whether and where the recursion memoizes.
#[derive(Debug, Clone, Copy)]
pub enum Memo<'a> {
    Off,
    Shared(&'a SphereCache),
}

/// Sphere counts of `BD^λ(F)` with a private memo table.
pub fn sphere_counts(f: &Graph, b: &DegreeBounds) -> Result<SphereCountVector> {
    let cache = SphereCache::new();
    sphere_counts_with(f, b, Memo::Shared(&cache))
}

pub fn sphere_counts_with(
    f: &Graph,
    b: &DegreeBounds,
    memo: Memo<'_>,
) -> Result<SphereCountVector> {
    b.check(f)?;
    if !f.is_forest() {
        return Err(Error::NotAForest);
    }
    Ok(forest_counts(f, b, memo))
}

/// One recursion step on a caller-chosen edge `e`, which must satisfy
/// [`is_recursion_edge`] and have both endpoint bounds at least one. Any
/// such edge gives the same answer as [`sphere_counts`].
pub fn split_on_edge(
    f: &Graph,
    b: &DegreeBounds,
    e: usize,
    memo: Memo<'_>,
) -> Result<SphereCountVector> {
    b.check(f)?;
    if !f.is_forest() {
        return Err(Error::NotAForest);
    }
    if e >= f.num_edges() || !is_recursion_edge(f, e) {
        return Err(Error::InvalidRecursionEdge(e));
    }
    let (u, v) = f.edge(e);
    let leaf_ok = [u, v].into_iter().any(|x| {
        f.neighbors(x)
            .iter()
            .any(|&(l, _)| l != u && l != v && f.is_leaf(l) && b.get(l) > 0)
    });
    if !leaf_ok {
        return Err(Error::InvalidRecursionEdge(e));
    }
    let lowered = decrement_bounds(f, b, e)?;
    let rest = f.without_edge(e);
    Ok(forest_counts(&rest, b, memo).wedge(&forest_counts(&rest, &lowered, memo).suspend()))
}

fn forest_counts(f: &Graph, b: &DegreeBounds, memo: Memo<'_>) -> SphereCountVector {
    let (g, b) = simplify_unchecked(f, b);
    components(&g, &b)
        .iter()
        .map(|c| tree_counts(&c.graph, &c.bounds, memo))
        .fold(SphereCountVector::void(), |acc, v| acc.join(&v))
}

// `g` is a simplified tree with at least one edge.
fn tree_counts(g: &Graph, b: &DegreeBounds, memo: Memo<'_>) -> SphereCountVector {
    if g.num_edges() == 1 {
        return SphereCountVector::contractible();
    }
    let key = match memo {
        Memo::Off => None,
        Memo::Shared(cache) => {
            let clamped = DegreeBounds::new(
                (0..g.num_vertices())
                    .map(|v| b.get(v).min(g.degree(v) as u32))
                    .collect(),
            );
            let key = canonical_code(g, &clamped).expect("components of a forest are trees");
            if let Some(hit) = cache.get(&key) {
                return hit;
            }
            Some((cache, key))
        }
    };
    let e = pick_recursion_edge(g).expect("a tree with two edges has a recursion edge");
    let lowered = decrement_bounds(g, b, e).expect("simplified bounds are positive");
    let rest = g.without_edge(e);
    let result =
        forest_counts(&rest, b, memo).wedge(&forest_counts(&rest, &lowered, memo).suspend());
    if let Some((cache, key)) = key {
        cache.insert(key, result.clone());
    }
    result
}
