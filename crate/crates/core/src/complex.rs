//! Explicit simplicial complexes, the bounded degree complex construction,
//! vertex links and deletions, and the combinatorial grape search.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{DegreeBounds, Graph};

/// Default upper bound on the number of faces (empty face included).
pub const DEFAULT_FACE_CAP: usize = 5_000_000;

/// A face is a strictly increasing list of ground-set indices.
pub type Face = Vec<usize>;

/// A finite simplicial complex stored face by face.
///
/// `faces[d]` holds the `d`-dimensional faces in lexicographic order. The
/// empty face is always present and is not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground_set: usize,
    faces: Vec<Vec<Face>>,
}

impl SimplicialComplex {
    /// The complex `{∅}`.
    pub fn void(ground_set: usize) -> Self {
        SimplicialComplex {
            ground_set,
            faces: Vec::new(),
        }
    }

    /// Downward closure of the given faces.
    pub fn from_facets(ground_set: usize, facets: &[Face]) -> Self {
        let mut all: Vec<Face> = Vec::new();
        for facet in facets {
            let mut facet = facet.clone();
            facet.sort_unstable();
            facet.dedup();
            assert!(facet.iter().all(|&v| v < ground_set));
            let k = facet.len();
            for mask in 1u64..(1u64 << k) {
                all.push(
                    (0..k)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| facet[i])
                        .collect(),
                );
            }
        }
        Self::from_face_list(ground_set, all)
    }

    fn from_face_list(ground_set: usize, mut all: Vec<Face>) -> Self {
        all.retain(|f| !f.is_empty());
        all.sort_unstable();
        all.dedup();
        let top = all.iter().map(Vec::len).max().unwrap_or(0);
        let mut faces = vec![Vec::new(); top];
        for f in all {
            faces[f.len() - 1].push(f);
        }
        SimplicialComplex { ground_set, faces }
    }

    pub fn ground_set(&self) -> usize {
        self.ground_set
    }

    /// Dimension; `-1` for `{∅}`.
    pub fn dim(&self) -> i64 {
        self.faces.len() as i64 - 1
    }

    /// Faces of dimension `d` (`d >= 0`), sorted.
    pub fn faces(&self, d: usize) -> &[Face] {
        self.faces.get(d).map_or(&[], Vec::as_slice)
    }

    /// Nonempty faces, by increasing dimension.
    pub fn iter_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().flatten()
    }

    /// `f_0, f_1, ...` up to the top dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// Total face count including the empty face.
    pub fn num_faces(&self) -> usize {
        1 + self.faces.iter().map(Vec::len).sum::<usize>()
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.faces(0).iter().map(|f| f[0]).collect()
    }

    pub fn is_vertex(&self, v: usize) -> bool {
        self.contains(&[v])
    }

    /// Whether the sorted set `face` is a face; the empty set always is.
    pub fn contains(&self, face: &[usize]) -> bool {
        if face.is_empty() {
            return true;
        }
        self.faces(face.len() - 1)
            .binary_search_by(|f| f.as_slice().cmp(face))
            .is_ok()
    }

    /// `(K : v)`, the faces `τ` with `v ∉ τ` and `τ ∪ {v} ∈ K`.
    pub fn link(&self, v: usize) -> Result<SimplicialComplex> {
        if !self.is_vertex(v) {
            return Err(Error::NotAVertex(v));
        }
        let mut faces: Vec<Vec<Face>> = Vec::new();
        for level in self.faces.iter().skip(1) {
            let reduced: Vec<Face> = level
                .iter()
                .filter(|f| f.binary_search(&v).is_ok())
                .map(|f| f.iter().copied().filter(|&x| x != v).collect())
                .collect();
            if reduced.is_empty() {
                break;
            }
            // removing a common element keeps lexicographic order
            faces.push(reduced);
        }
        Ok(SimplicialComplex {
            ground_set: self.ground_set,
            faces,
        })
    }

    /// `(K, v)`, the faces not containing `v`.
    pub fn deletion(&self, v: usize) -> SimplicialComplex {
        let mut faces: Vec<Vec<Face>> = self
            .faces
            .iter()
            .map(|level| {
                level
                    .iter()
                    .filter(|f| f.binary_search(&v).is_err())
                    .cloned()
                    .collect()
            })
            .collect();
        while faces.last().is_some_and(Vec::is_empty) {
            faces.pop();
        }
        SimplicialComplex {
            ground_set: self.ground_set,
            faces,
        }
    }

    /// `Σ_{d≥0} (-1)^d f_d - 1`.
    pub fn reduced_euler(&self) -> i64 {
        self.faces
            .iter()
            .enumerate()
            .map(|(d, level)| {
                if d % 2 == 0 {
                    level.len() as i64
                } else {
                    -(level.len() as i64)
                }
            })
            .sum::<i64>()
            - 1
    }

    /// Renames ground element `x` to `map[x]`. `map` must be injective on the
    /// vertices of the complex.
    pub fn relabel(&self, map: &[usize], ground_set: usize) -> SimplicialComplex {
        let all = self
            .iter_faces()
            .map(|f| {
                let mut g: Face = f.iter().map(|&x| map[x]).collect();
                g.sort_unstable();
                g
            })
            .collect();
        Self::from_face_list(ground_set, all)
    }

    /// One face per line, dimensions increasing, `-` for the empty face.
    pub fn to_dump(&self) -> String {
        let mut out = String::from("-\n");
        for f in self.iter_faces() {
            let line: Vec<String> = f.iter().map(usize::to_string).collect();
            writeln!(out, "{}", line.join(",")).unwrap();
        }
        out
    }

    /// Parses the dump format. The ground set is one past the largest index
    /// seen, and the face set must be downward closed.
    pub fn from_dump(text: &str) -> Result<SimplicialComplex> {
        let mut all = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            if line == "-" {
                continue;
            }
            let face = line
                .split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<std::result::Result<Face, _>>()
                .map_err(|e| Error::Parse(format!("bad face {line:?}: {e}")))?;
            if face.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Parse(format!(
                    "face {line:?} is not strictly increasing"
                )));
            }
            all.push(face);
        }
        let ground = all.iter().flatten().max().map_or(0, |&m| m + 1);
        let k = Self::from_face_list(ground, all);
        if !k.is_downward_closed() {
            return Err(Error::Parse("face set is not downward closed".into()));
        }
        Ok(k)
    }

    pub fn is_downward_closed(&self) -> bool {
        self.iter_faces().all(|f| {
            (0..f.len()).all(|skip| {
                let sub: Face = f
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &x)| x)
                    .collect();
                self.contains(&sub)
            })
        })
    }
}

/// Builds `BD^λ(G)`: all edge sets `H` in which every vertex `v` has degree
/// at most `λ(v)`. Faces are enumerated depth first over edge indices, which
/// emits every dimension already in lexicographic order.
pub fn build_complex(g: &Graph, b: &DegreeBounds, face_cap: usize) -> Result<SimplicialComplex> {
    b.check(g)?;
    if face_cap == 0 {
        return Err(Error::InvalidParams("face cap must be positive".into()));
    }
    struct Walk<'a> {
        edges: &'a [(usize, usize)],
        budget: Vec<u32>,
        current: Face,
        faces: Vec<Vec<Face>>,
        count: usize,
        cap: usize,
    }
    impl Walk<'_> {
        fn extend(&mut self, from: usize) -> Result<()> {
            for e in from..self.edges.len() {
                let (u, v) = self.edges[e];
                if self.budget[u] == 0 || self.budget[v] == 0 {
                    continue;
                }
                self.count += 1;
                if self.count > self.cap {
                    return Err(Error::FaceCapExceeded(self.cap));
                }
                self.budget[u] -= 1;
                self.budget[v] -= 1;
                self.current.push(e);
                let d = self.current.len() - 1;
                if self.faces.len() <= d {
                    self.faces.push(Vec::new());
                }
                self.faces[d].push(self.current.clone());
                self.extend(e + 1)?;
                self.current.pop();
                self.budget[u] += 1;
                self.budget[v] += 1;
            }
            Ok(())
        }
    }
    let mut walk = Walk {
        edges: g.edges(),
        budget: b.as_slice().to_vec(),
        current: Vec::new(),
        faces: Vec::new(),
        count: 1,
        cap: face_cap,
    };
    walk.extend(0)?;
    Ok(SimplicialComplex {
        ground_set: g.num_edges(),
        faces: walk.faces,
    })
}

/// Certificate that a complex is a combinatorial grape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GrapeWitness {
    /// At most one vertex.
    Base,
    /// The link of `vertex` lies in the cone with apex `apex`, and that cone
    /// lies in the deletion of `vertex`.
    Split {
        vertex: usize,
        apex: usize,
        link: Box<GrapeWitness>,
        deletion: Box<GrapeWitness>,
    },
}

impl GrapeWitness {
    /// Independently re-checks the certificate against `k`.
    pub fn check(&self, k: &SimplicialComplex) -> bool {
        match self {
            GrapeWitness::Base => k.faces(0).len() <= 1,
            GrapeWitness::Split {
                vertex,
                apex,
                link,
                deletion,
            } => {
                let Ok(lk) = k.link(*vertex) else {
                    return false;
                };
                let del = k.deletion(*vertex);
                del.is_vertex(*apex)
                    && cone_fits(&lk, &del, *apex)
                    && link.check(&lk)
                    && deletion.check(&del)
            }
        }
    }

    /// Number of split nodes.
    pub fn splits(&self) -> usize {
        match self {
            GrapeWitness::Base => 0,
            GrapeWitness::Split { link, deletion, .. } => 1 + link.splits() + deletion.splits(),
        }
    }
}

fn cone_fits(link: &SimplicialComplex, deletion: &SimplicialComplex, apex: usize) -> bool {
    std::iter::once(&Vec::new())
        .chain(link.iter_faces())
        .all(|tau| match tau.binary_search(&apex) {
            Ok(_) => true,
            Err(pos) => {
                let mut with = tau.clone();
                with.insert(pos, apex);
                deletion.contains(&with)
            }
        })
}

/// Searches for a grape decomposition, trying split vertices and then cone
/// apexes in index order. Failing to find one does not prove `k` is not a
/// grape when the depth cap was hit.
pub fn grape_witness(k: &SimplicialComplex, depth_cap: usize) -> Result<GrapeWitness> {
    match search_grape(k, 0, depth_cap) {
        Ok(w) => Ok(w),
        Err(true) => Err(Error::DepthCapExceeded(depth_cap)),
        Err(false) => Err(Error::NotVerified),
    }
}

// Err(true) means some branch was cut by the depth cap.
fn search_grape(
    k: &SimplicialComplex,
    depth: usize,
    cap: usize,
) -> std::result::Result<GrapeWitness, bool> {
    let vertices = k.vertices();
    if vertices.len() <= 1 {
        return Ok(GrapeWitness::Base);
    }
    if depth >= cap {
        return Err(true);
    }
    let mut capped = false;
    for &a in &vertices {
        let link = k.link(a).expect("a is a vertex");
        let deletion = k.deletion(a);
        let Some(apex) = deletion
            .vertices()
            .into_iter()
            .find(|&b| cone_fits(&link, &deletion, b))
        else {
            continue;
        };
        let sub = search_grape(&link, depth + 1, cap)
            .and_then(|l| search_grape(&deletion, depth + 1, cap).map(|d| (l, d)));
        match sub {
            Ok((l, d)) => {
                return Ok(GrapeWitness::Split {
                    vertex: a,
                    apex,
                    link: Box::new(l),
                    deletion: Box::new(d),
                })
            }
            Err(c) => capped |= c,
        }
    }
    Err(capped)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::graph::CaterpillarSpec;

    fn fig2_complex() -> SimplicialComplex {
        let (g, b) = CaterpillarSpec::new(vec![2, 1], vec![2, 1])
            .unwrap()
            .build();
        build_complex(&g, &b, DEFAULT_FACE_CAP).unwrap()
    }

    fn maximal_faces(k: &SimplicialComplex) -> Vec<Face> {
        let all: Vec<&Face> = k.iter_faces().collect();
        let mut out: Vec<Face> = all
            .iter()
            .filter(|f| {
                !all.iter()
                    .any(|g| g.len() > f.len() && f.iter().all(|x| g.contains(x)))
            })
            .map(|f| (*f).clone())
            .collect();
        out.sort();
        out
    }

    #[test]
    fn fig2_faces() {
        let k = fig2_complex();
        // edges: 0 = e_1, 1 = l_1^1, 2 = l_1^2, 3 = l_2^1
        assert_eq!(
            maximal_faces(&k),
            vec![vec![0, 1], vec![0, 2], vec![1, 2, 3]]
        );
        assert_eq!(k.f_vector(), vec![4, 5, 1]);
        assert_eq!(k.reduced_euler(), -1);
        assert!(k.is_downward_closed());
    }

    #[test]
    fn zero_bounds_give_void() {
        let g = Graph::path(4).unwrap();
        let k = build_complex(&g, &DegreeBounds::uniform(4, 0), 10).unwrap();
        assert_eq!(k, SimplicialComplex::void(3));
        assert_eq!(k.dim(), -1);
        assert_eq!(k.reduced_euler(), -1);
    }

    #[test]
    fn single_edge_is_a_point() {
        let g = Graph::path(2).unwrap();
        let k = build_complex(&g, &DegreeBounds::uniform(2, 1), 10).unwrap();
        assert_eq!(k.faces(0), &[vec![0]]);
        assert_eq!(k.num_faces(), 2);
        assert_eq!(k.reduced_euler(), 0);
    }

    #[test]
    fn face_cap_is_enforced() {
        let g = Graph::path(2).unwrap();
        let b = DegreeBounds::uniform(2, 1);
        assert_eq!(build_complex(&g, &b, 1), Err(Error::FaceCapExceeded(1)));
        assert!(build_complex(&g, &b, 2).is_ok());
        assert!(build_complex(&g, &b, 0).is_err());
        let star = CaterpillarSpec::new(vec![10], vec![10]).unwrap().build();
        assert_eq!(
            build_complex(&star.0, &star.1, 1023),
            Err(Error::FaceCapExceeded(1023))
        );
        assert_eq!(
            build_complex(&star.0, &star.1, 1024).unwrap().num_faces(),
            1024
        );
    }

    #[test]
    fn links_and_deletions() {
        let k = fig2_complex();
        let lk = k.link(0).unwrap();
        assert_eq!(lk.faces(0), &[vec![1], vec![2]]);
        assert_eq!(lk.dim(), 0);
        let del = k.deletion(0);
        assert_eq!(del, SimplicialComplex::from_facets(4, &[vec![1, 2, 3]]));

        // cone over a hollow triangle: link of the apex is the base
        let base = [vec![0, 1], vec![1, 2], vec![0, 2]];
        let cone: Vec<Face> = base.iter().map(|f| [f.clone(), vec![3]].concat()).collect();
        let cone = SimplicialComplex::from_facets(4, &cone);
        assert_eq!(
            cone.link(3).unwrap(),
            SimplicialComplex::from_facets(4, &base)
        );

        let points = SimplicialComplex::from_facets(3, &[vec![0], vec![2]]);
        assert_eq!(points.link(0).unwrap(), SimplicialComplex::void(3));
        assert_eq!(points.link(1), Err(Error::NotAVertex(1)));
        assert_eq!(points.deletion(1), points);
        let one = SimplicialComplex::from_facets(1, &[vec![0]]);
        assert_eq!(one.deletion(0), SimplicialComplex::void(1));
    }

    #[test]
    fn link_deletion_decomposition() {
        // K = C_a(K:a) ∪ (K,a) and the intersection is (K:a)
        let k = fig2_complex();
        for a in k.vertices() {
            let lk = k.link(a).unwrap();
            let del = k.deletion(a);
            let mut union: Vec<Face> = del.iter_faces().cloned().collect();
            for tau in std::iter::once(&Vec::new()).chain(lk.iter_faces()) {
                let mut with = tau.clone();
                with.push(a);
                with.sort_unstable();
                union.push(with);
                if !tau.is_empty() {
                    union.push(tau.clone());
                    assert!(del.contains(tau));
                }
            }
            union.sort();
            union.dedup();
            let mut faces: Vec<Face> = k.iter_faces().cloned().collect();
            faces.sort();
            assert_eq!(union, faces);
        }
    }

    #[test]
    fn dump_format() {
        let k = SimplicialComplex::from_facets(3, &[vec![0, 1], vec![2]]);
        assert_eq!(k.to_dump(), "-\n0\n1\n2\n0,1\n");
        assert_eq!(SimplicialComplex::from_dump(&k.to_dump()).unwrap(), k);
        assert_eq!(SimplicialComplex::void(0).to_dump(), "-\n");
        assert!(SimplicialComplex::from_dump("-\n0,1\n").is_err());
        assert!(SimplicialComplex::from_dump("1,0\n").is_err());
    }

    #[test]
    fn grape_fig2() {
        let k = fig2_complex();
        let w = grape_witness(&k, 16).unwrap();
        assert!(w.check(&k));
        match w {
            GrapeWitness::Split { vertex, apex, .. } => {
                assert_eq!(vertex, 0);
                assert_eq!(apex, 1);
            }
            GrapeWitness::Base => panic!("four vertices"),
        }
        let single = SimplicialComplex::from_facets(1, &[vec![0]]);
        assert_eq!(grape_witness(&single, 0).unwrap(), GrapeWitness::Base);
        assert_eq!(grape_witness(&k, 0), Err(Error::DepthCapExceeded(0)));
    }

    #[test]
    fn hollow_triangle_is_a_grape() {
        let k = SimplicialComplex::from_facets(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]);
        assert!(grape_witness(&k, 16).unwrap().check(&k));
    }

    #[test]
    fn projective_plane_has_no_witness() {
        // connected with torsion, so it cannot be a grape
        let k = crate::complex::tests::rp2();
        assert_eq!(grape_witness(&k, 16), Err(Error::NotVerified));
    }

    /// Six-vertex triangulation of the real projective plane.
    pub(crate) fn rp2() -> SimplicialComplex {
        let facets: Vec<Face> = [
            [1, 2, 4],
            [1, 2, 6],
            [1, 3, 5],
            [1, 3, 6],
            [1, 4, 5],
            [2, 3, 4],
            [2, 3, 5],
            [2, 5, 6],
            [3, 4, 6],
            [4, 5, 6],
        ]
        .iter()
        .map(|f| f.iter().map(|v| v - 1).collect())
        .collect();
        SimplicialComplex::from_facets(6, &facets)
    }
}
