//! Closed forms for stars and for caterpillars whose spine vertices all carry
//! leaves, and the reduction of cycle complexes to path complexes.

use crate::error::{Error, Result};
use crate::graph::{CaterpillarSpec, DegreeBounds, Graph};
use crate::spheres::SphereCountVector;

/// `C(a, b)`, zero when `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> u64 {
    if b < 0 || a < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b) as u128;
    let a = a as u128;
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc * (a - i) / (i + 1);
    }
    u64::try_from(acc).expect("binomial overflows u64")
}

/// A set `T` of spine edges of `P_n`, edge `i` joining spine vertices `i`
/// and `i + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpineSubset {
    spine_len: usize,
    mask: u64,
}

impl SpineSubset {
    pub fn new(spine_len: usize, mask: u64) -> Self {
        assert!((1..=64).contains(&spine_len));
        assert!(spine_len == 64 || mask >> (spine_len - 1) == 0);
        SpineSubset { spine_len, mask }
    }

    /// All `2^{n-1}` subsets in mask order.
    pub fn all(spine_len: usize) -> impl Iterator<Item = SpineSubset> {
        (0..1u64 << (spine_len - 1)).map(move |mask| SpineSubset::new(spine_len, mask))
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.mask >> edge & 1 == 1
    }

    pub fn size(&self) -> u32 {
        self.mask.count_ones()
    }

    /// `T_i`: number of edges of `T` at spine vertex `i`.
    pub fn degrees(&self) -> Vec<u32> {
        (0..self.spine_len)
            .map(|i| {
                u32::from(i > 0 && self.contains(i - 1))
                    + u32::from(i + 1 < self.spine_len && self.contains(i))
            })
            .collect()
    }

    /// `δ_{T,i}`: 1 when the spine edge to the left of vertex `i` is in `T`.
    pub fn suspension_flags(&self) -> Vec<u32> {
        (0..self.spine_len)
            .map(|i| u32::from(i > 0 && self.contains(i - 1)))
            .collect()
    }
}

/// `BD^k(G_1(r))` is the `(k-1)`-skeleton of an `(r-1)`-simplex.
pub fn star_profile(k: u32, r: usize) -> Result<SphereCountVector> {
    if r == 0 {
        return Err(Error::InvalidStar);
    }
    Ok(match k {
        0 => SphereCountVector::void(),
        k if (k as usize) < r => {
            SphereCountVector::single(i64::from(k) - 1, binomial(r as i64 - 1, i64::from(k)))
        }
        _ => SphereCountVector::contractible(),
    })
}

/// Sphere counts of `BD^λ(G_n(m))` when every `m_i ≥ 1`: each spine subset
/// `T` contributes `Π_i C(m_i - 1, λ_i - T_i)` spheres of dimension
/// `|λ| - #T - 1`.
pub fn caterpillar_closed_form(spec: &CaterpillarSpec) -> Result<SphereCountVector> {
    if let Some(i) = spec.leaves.iter().position(|&m| m == 0) {
        return Err(Error::HypothesisViolated(i));
    }
    let n = spec.spine_len();
    if n > 64 {
        return Err(Error::InvalidSize {
            what: "closed-form spine",
            value: n,
        });
    }
    let total: i64 = spec.spine_bounds.iter().map(|&l| i64::from(l)).sum();
    let mut out = SphereCountVector::contractible();
    for t in SpineSubset::all(n) {
        let mut product: u64 = 1;
        for (i, ti) in t.degrees().into_iter().enumerate() {
            let c = binomial(
                spec.leaves[i] as i64 - 1,
                i64::from(spec.spine_bounds[i]) - i64::from(ti),
            );
            product = product.checked_mul(c).expect("sphere count overflow");
            if product == 0 {
                break;
            }
        }
        if product > 0 {
            out.add_count(total - i64::from(t.size()) - 1, product);
        }
    }
    Ok(out)
}

/// A path instance whose complex equals `BD^λ(C_n)` face for face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleReduction {
    pub path: Graph,
    pub bounds: DegreeBounds,
    /// Cycle vertex moved to the last position.
    pub rotated_to_end: usize,
    /// `edge_map[j]` is the cycle edge matching path edge `j`.
    pub edge_map: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycleOutcome {
    Reduced(CycleReduction),
    /// All bounds equal one.
    NotReducible,
}

/// Reduces `BD^λ(C_n)` (edges in [`Graph::cycle`] order) to a path complex.
///
/// The smallest-index vertex `s` with `λ_s ≠ 1` is rotated to the end. If
/// `λ_s = 0` its two edges are never faces and `C_n - s` is a path. If
/// `λ_s ≥ 2` the bound at `s` never binds, so `s` splits into two path ends
/// with bounds `1` and `λ_s - 1`.
pub fn cycle_reduce(n: usize, b: &DegreeBounds) -> Result<CycleOutcome> {
    if n < 3 {
        return Err(Error::InvalidSize {
            what: "cycle",
            value: n,
        });
    }
    if b.len() != n {
        return Err(Error::BoundsLength {
            expected: n,
            got: b.len(),
        });
    }
    let Some(s) = (0..n).find(|&i| b.get(i) != 1) else {
        return Ok(CycleOutcome::NotReducible);
    };
    let cycle = Graph::cycle(n)?;
    let edge_of = |u: usize, v: usize| -> usize {
        cycle
            .neighbors(u)
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .expect("consecutive cycle vertices are adjacent")
    };
    // rotated order: position j holds cycle vertex (s + 1 + j) mod n
    let w = |j: usize| (s + 1 + j) % n;
    let reduction = if b.get(s) == 0 {
        let path = Graph::path(n - 1)?;
        let bounds = DegreeBounds::new((0..n - 1).map(|j| b.get(w(j))).collect());
        let edge_map = (0..n - 2).map(|j| edge_of(w(j), w(j + 1))).collect();
        CycleReduction {
            path,
            bounds,
            rotated_to_end: s,
            edge_map,
        }
    } else {
        let path = Graph::path(n + 1)?;
        let mut bounds = vec![1];
        bounds.extend((0..n - 1).map(|j| b.get(w(j))));
        bounds.push(b.get(s) - 1);
        let mut edge_map = vec![edge_of(s, w(0))];
        edge_map.extend((0..n - 1).map(|j| edge_of(w(j), w(j + 1))));
        CycleReduction {
            path,
            bounds: DegreeBounds::new(bounds),
            rotated_to_end: s,
            edge_map,
        }
    };
    Ok(CycleOutcome::Reduced(reduction))
}
