//! Wedge-of-spheres bookkeeping.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Multiplicity of `S^d` for each dimension `d >= -1` in a wedge of spheres.
///
/// Only nonzero entries are stored. The empty vector is a contractible
/// space and `{-1: 1}` is the complex `{∅}` (the sphere `S^{-1}`).
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SphereCountVector(BTreeMap<i64, u64>);

impl SphereCountVector {
    pub fn contractible() -> Self {
        Self::default()
    }

    /// `{∅}`; the identity for [`join`](Self::join).
    pub fn void() -> Self {
        Self::single(-1, 1)
    }

    pub fn single(dim: i64, count: u64) -> Self {
        Self::from_counts([(dim, count)])
    }

    /// Zero counts are dropped; repeated dimensions are summed.
    pub fn from_counts(counts: impl IntoIterator<Item = (i64, u64)>) -> Self {
        let mut v = Self::default();
        for (d, c) in counts {
            v.add_count(d, c);
        }
        v
    }

    pub fn add_count(&mut self, dim: i64, count: u64) {
        assert!(dim >= -1, "sphere dimension {dim} below -1");
        if count == 0 {
            return;
        }
        let slot = self.0.entry(dim).or_insert(0);
        *slot = slot.checked_add(count).expect("sphere count overflow");
    }

    pub fn get(&self, dim: i64) -> u64 {
        self.0.get(&dim).copied().unwrap_or(0)
    }

    pub fn is_contractible(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_void(&self) -> bool {
        self.get(-1) > 0
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.0.iter().map(|(&d, &c)| (d, c))
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    /// `Σ_d (-1)^d counts[d]`, which equals the reduced Euler characteristic.
    pub fn reduced_euler(&self) -> i64 {
        self.iter()
            .map(|(d, c)| {
                if d.rem_euclid(2) == 0 {
                    c as i64
                } else {
                    -(c as i64)
                }
            })
            .sum()
    }

    /// Wedge sum: counts add.
    pub fn wedge(&self, other: &Self) -> Self {
        Self::from_counts(self.iter().chain(other.iter()))
    }

    /// Suspension: every sphere moves up one dimension.
    pub fn suspend(&self) -> Self {
        Self(self.0.iter().map(|(&d, &c)| (d + 1, c)).collect())
    }

    /// Join: `S^p * S^q ≃ S^{p+q+1}`, distributed over both wedges.
    pub fn join(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (p, a) in self.iter() {
            for (q, b) in other.iter() {
                out.add_count(p + q + 1, a.checked_mul(b).expect("sphere count overflow"));
            }
        }
        out
    }
}

/// Free-function form of [`SphereCountVector::join`].
pub fn join_convolve(a: &SphereCountVector, b: &SphereCountVector) -> SphereCountVector {
    a.join(b)
}

impl fmt::Debug for SphereCountVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SphereCountVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_contractible() {
            return write!(f, "contractible");
        }
        let parts: Vec<String> = self.iter().map(|(d, c)| format!("{d}: {c}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}
