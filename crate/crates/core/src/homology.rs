//! Reduced integral simplicial homology through the Smith normal form of the
//! augmented boundary operators.
//!
//! Elimination first runs on checked `i64` entries. If any operation would
//! overflow, the whole reduction is redone with arbitrary-precision integers,
//! so overflow never reaches a result.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::complex::{Face, SimplicialComplex};
use crate::spheres::SphereCountVector;

/// Sparse integer matrix; only nonzero entries are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged dense matrix");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn set(&mut self, row: usize, col: usize, value: BigInt) {
        assert!(row < self.rows && col < self.cols);
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    pub fn get(&self, row: usize, col: usize) -> BigInt {
        self.entries.get(&(row, col)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sparse product `self * rhs`.
    pub fn mul(&self, rhs: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut by_row: HashMap<usize, Vec<(usize, &BigInt)>> = HashMap::new();
        for (r, c, v) in rhs.entries() {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut acc: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
        for (i, k, a) in self.entries() {
            for &(j, b) in by_row.get(&k).into_iter().flatten() {
                *acc.entry((i, j)).or_default() += a * b;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        IntegerMatrix {
            rows: self.rows,
            cols: rhs.cols,
            entries: acc,
        }
    }
}

/// The augmented boundary map `∂_d`: rows are the `(d-1)`-faces (the single
/// empty face when `d = 0`), columns the `d`-faces. Removing the `j`-th
/// smallest vertex contributes `(-1)^j`.
pub fn boundary_matrix(k: &SimplicialComplex, d: usize) -> IntegerMatrix {
    let cols = k.faces(d);
    if d == 0 {
        let mut m = IntegerMatrix::zeros(1, cols.len());
        for j in 0..cols.len() {
            m.set(0, j, BigInt::one());
        }
        return m;
    }
    let lower = k.faces(d - 1);
    let index: HashMap<&[usize], usize> = lower
        .iter()
        .enumerate()
        .map(|(i, f)| (f.as_slice(), i))
        .collect();
    let mut m = IntegerMatrix::zeros(lower.len(), cols.len());
    let mut facet: Face = Vec::with_capacity(d);
    for (c, face) in cols.iter().enumerate() {
        for j in 0..face.len() {
            facet.clear();
            facet.extend(
                face.iter()
                    .enumerate()
                    .filter(|&(i, _)| i != j)
                    .map(|(_, &x)| x),
            );
            let r = index[facet.as_slice()];
            let sign = if j % 2 == 0 { 1 } else { -1 };
            m.set(r, c, BigInt::from(sign));
        }
    }
    m
}

/// Rank and invariant factors `d_1 | d_2 | ... | d_rank` of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub rank: usize,
    pub invariant_factors: Vec<BigUint>,
}

impl SmithForm {
    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigUint> {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }
}

/// Smith normal form by sparse unimodular elimination. Each pivot is the
/// entry of smallest absolute value, ties broken by lowest row and then
/// lowest column.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let small = m
        .entries()
        .map(|(r, c, v)| v.to_i64().map(|v| (r, c, v)))
        .collect::<Option<Vec<_>>>();
    let diagonal: Vec<BigUint> = small
        .and_then(|entries| Elimination::new(m.rows, entries).run())
        .map(|d| {
            d.into_iter()
                .map(|x| BigUint::from(x.unsigned_abs()))
                .collect()
        })
        .unwrap_or_else(|| {
            let entries = m.entries().map(|(r, c, v)| (r, c, v.clone())).collect();
            Elimination::new(m.rows, entries)
                .run()
                .expect("big integer elimination cannot overflow")
                .into_iter()
                .map(|x| x.magnitude().clone())
                .collect()
        });
    SmithForm {
        rank: diagonal.len(),
        invariant_factors: divisibility_chain(diagonal),
    }
}

/// Turns a diagonal into the equivalent chain `d_1 | d_2 | ...` by replacing
/// pairs with their gcd and lcm.
fn divisibility_chain(diagonal: Vec<BigUint>) -> Vec<BigUint> {
    let ones = diagonal.iter().filter(|d| d.is_one()).count();
    let mut rest: Vec<BigUint> = diagonal.into_iter().filter(|d| !d.is_one()).collect();
    for i in 0..rest.len() {
        for j in i + 1..rest.len() {
            let g = rest[i].gcd(&rest[j]);
            let l = &rest[i] / &g * &rest[j];
            rest[i] = g;
            rest[j] = l;
        }
    }
    let mut out = vec![BigUint::one(); ones];
    out.extend(rest);
    out
}

trait Scalar: Clone + PartialEq {
    fn is_nil(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn abs_lt(&self, other: &Self) -> bool;
    /// Truncated quotient, or `None` on overflow.
    fn quot(&self, by: &Self) -> Option<Self>;
    /// `self - q * x`, or `None` on overflow.
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self>;
    fn neg_mul(q: &Self, x: &Self) -> Option<Self>;
}

impl Scalar for i64 {
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn quot(&self, by: &Self) -> Option<Self> {
        self.checked_div(*by)
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        q.checked_mul(*x).and_then(|p| self.checked_sub(p))
    }
    fn neg_mul(q: &Self, x: &Self) -> Option<Self> {
        q.checked_mul(*x).and_then(i64::checked_neg)
    }
}

impl Scalar for BigInt {
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn quot(&self, by: &Self) -> Option<Self> {
        Some(self / by)
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        Some(self - q * x)
    }
    fn neg_mul(q: &Self, x: &Self) -> Option<Self> {
        Some(-(q * x))
    }
}

struct Elimination<T> {
    rows: Vec<BTreeMap<usize, T>>,
    cols: HashMap<usize, BTreeSet<usize>>,
    active: BTreeSet<usize>,
}

impl<T: Scalar> Elimination<T> {
    fn new(num_rows: usize, entries: Vec<(usize, usize, T)>) -> Self {
        let mut rows = vec![BTreeMap::new(); num_rows];
        let mut cols: HashMap<usize, BTreeSet<usize>> = HashMap::new();
        let mut active = BTreeSet::new();
        for (r, c, v) in entries {
            if v.is_nil() {
                continue;
            }
            rows[r].insert(c, v);
            cols.entry(c).or_default().insert(r);
            active.insert(r);
        }
        Elimination { rows, cols, active }
    }

    fn pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, &T)> = None;
        for &r in &self.active {
            for (&c, v) in &self.rows[r] {
                if v.is_unit() {
                    return Some((r, c));
                }
                if best.is_none_or(|(_, _, b)| v.abs_lt(b)) {
                    best = Some((r, c, v));
                }
            }
        }
        best.map(|(r, c, _)| (r, c))
    }

    fn write(&mut self, r: usize, c: usize, v: T) {
        if v.is_nil() {
            self.rows[r].remove(&c);
            if let Some(set) = self.cols.get_mut(&c) {
                set.remove(&r);
            }
        } else {
            self.rows[r].insert(c, v);
            self.cols.entry(c).or_default().insert(r);
        }
    }

    /// `row[target] -= q * row[source]`.
    fn row_op(&mut self, target: usize, source: usize, q: &T) -> Option<()> {
        let src: Vec<(usize, T)> = self.rows[source]
            .iter()
            .map(|(&c, v)| (c, v.clone()))
            .collect();
        for (c, x) in src {
            let updated = match self.rows[target].get(&c) {
                Some(a) => a.sub_mul(q, &x)?,
                None => T::neg_mul(q, &x)?,
            };
            self.write(target, c, updated);
        }
        if self.rows[target].is_empty() {
            self.active.remove(&target);
        }
        Some(())
    }

    /// Diagonal entries (unnormalized), or `None` on overflow.
    fn run(mut self) -> Option<Vec<T>> {
        let mut diagonal = Vec::new();
        'pivots: while let Some((r, c)) = self.pivot() {
            let p = self.rows[r][&c].clone();

            let others: Vec<usize> = self.cols[&c].iter().copied().filter(|&i| i != r).collect();
            let mut dirty = false;
            for i in others {
                let q = self.rows[i][&c].quot(&p)?;
                self.row_op(i, r, &q)?;
                dirty |= self.rows[i].contains_key(&c);
            }
            if dirty {
                continue 'pivots;
            }

            // column c now holds only the pivot, so column operations touch
            // row r alone
            let rest: Vec<(usize, T)> = self.rows[r]
                .iter()
                .filter(|&(&j, _)| j != c)
                .map(|(&j, v)| (j, v.clone()))
                .collect();
            for (j, b) in rest {
                let q = b.quot(&p)?;
                let rem = b.sub_mul(&q, &p)?;
                self.write(r, j, rem);
                dirty |= self.rows[r].contains_key(&j);
            }
            if dirty {
                continue 'pivots;
            }

            self.rows[r].clear();
            self.active.remove(&r);
            self.cols.remove(&c);
            diagonal.push(p);
        }
        Some(diagonal)
    }
}

/// Reduced Betti numbers and torsion coefficients, dimension `-1` upward.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    /// Nonzero reduced Betti numbers.
    pub betti: BTreeMap<i64, u64>,
    /// Invariant factors greater than one, for dimensions that have any.
    #[serde(serialize_with = "torsion_as_strings")]
    pub torsion: BTreeMap<i64, Vec<BigUint>>,
}

fn torsion_as_strings<S: Serializer>(
    torsion: &BTreeMap<i64, Vec<BigUint>>,
    s: S,
) -> Result<S::Ok, S::Error> {
    let as_strings: BTreeMap<i64, Vec<String>> = torsion
        .iter()
        .map(|(&d, fs)| (d, fs.iter().map(BigUint::to_string).collect()))
        .collect();
    as_strings.serialize(s)
}

impl HomologyProfile {
    pub fn betti(&self, d: i64) -> u64 {
        self.betti.get(&d).copied().unwrap_or(0)
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// `Σ_{d ≥ -1} (-1)^d betti[d]`.
    pub fn reduced_euler(&self) -> i64 {
        self.betti
            .iter()
            .map(|(&d, &b)| {
                if d.rem_euclid(2) == 0 {
                    b as i64
                } else {
                    -(b as i64)
                }
            })
            .sum()
    }
}

/// `H̃_d = Z^{betti[d]} ⊕ torsion[d]` for the augmented chain complex of `k`.
pub fn reduced_homology(k: &SimplicialComplex) -> HomologyProfile {
    let top = k.dim();
    let forms: Vec<SmithForm> = (0..=top.max(-1))
        .map(|d| smith_normal_form(&boundary_matrix(k, d as usize)))
        .collect();
    let rank = |d: i64| -> usize {
        if d < 0 || d > top {
            0
        } else {
            forms[d as usize].rank
        }
    };
    let mut profile = HomologyProfile::default();
    for d in -1..=top {
        let chains = if d < 0 { 1 } else { k.faces(d as usize).len() };
        let betti = chains - rank(d) - rank(d + 1);
        if betti > 0 {
            profile.betti.insert(d, betti as u64);
        }
        if d < top {
            let torsion = forms[(d + 1) as usize].torsion();
            if !torsion.is_empty() {
                profile.torsion.insert(d, torsion);
            }
        }
    }
    profile
}

/// Outcome of reading a homology profile as a wedge of spheres.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WedgeProfile {
    Wedge(SphereCountVector),
    /// Torsion is present, so the complex is not a wedge of spheres.
    NotWedgeConsistent,
}

impl WedgeProfile {
    pub fn spheres(&self) -> Option<&SphereCountVector> {
        match self {
            WedgeProfile::Wedge(v) => Some(v),
            WedgeProfile::NotWedgeConsistent => None,
        }
    }
}

/// The sphere counts a wedge of spheres with this homology would have.
pub fn wedge_profile(h: &HomologyProfile) -> WedgeProfile {
    if !h.is_torsion_free() {
        return WedgeProfile::NotWedgeConsistent;
    }
    WedgeProfile::Wedge(SphereCountVector::from_counts(
        h.betti.iter().map(|(&d, &b)| (d, b)),
    ))
}
