//! Bounded degree complexes `BD^λ(G)`: the complex on the edge set of a graph
//! whose faces are the edge subsets in which every vertex `v` has degree at
//! most `λ(v)`.
//!
//! The crate builds these complexes explicitly, computes their reduced
//! integral homology exactly, and computes their homotopy type as a wedge of
//! spheres without building them: by an edge-splitting recursion for forests
//! and by closed forms for stars and caterpillars. Cycles reduce to paths.
//!
//! ```
//! use bdcomplex::{caterpillar_closed_form, sphere_counts, CaterpillarSpec, SphereCountVector};
//!
//! let spec = CaterpillarSpec::new(vec![2, 1], vec![2, 1]).unwrap();
//! let (graph, bounds) = spec.build();
//! let circle = SphereCountVector::single(1, 1);
//! assert_eq!(sphere_counts(&graph, &bounds).unwrap(), circle);
//! assert_eq!(caterpillar_closed_form(&spec).unwrap(), circle);
//! ```

pub mod caterpillar;
pub mod cli;
pub mod complex;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod homology;
pub mod recursion;
pub mod spheres;

pub use caterpillar::{
    caterpillar_closed_form, cycle_reduce, star_profile, CycleOutcome, CycleReduction, SpineSubset,
};
pub use complex::{
    build_complex, grape_witness, GrapeWitness, SimplicialComplex, DEFAULT_FACE_CAP,
};
pub use error::{Error, Result};
pub use graph::{
    canonical_code, components, CanonicalKey, CaterpillarSpec, Component, DegreeBounds, Graph,
};
pub use homology::{
    boundary_matrix, reduced_homology, smith_normal_form, wedge_profile, HomologyProfile,
    IntegerMatrix, SmithForm, WedgeProfile,
};
pub use recursion::{sphere_counts, sphere_counts_with, Memo, SphereCache};
pub use spheres::{join_convolve, SphereCountVector};
