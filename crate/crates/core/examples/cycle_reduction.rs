//! Cycles whose bounds are not all one reduce to paths with the same
//! complex. The all-ones cycle has to go through homology.

use bdcomplex::{
    build_complex, cycle_reduce, reduced_homology, sphere_counts, CycleOutcome, DegreeBounds,
    Graph, DEFAULT_FACE_CAP,
};

fn main() -> bdcomplex::Result<()> {
    for bounds in [
        vec![1, 1, 2],
        vec![1, 1, 1, 0],
        vec![1, 2, 1, 3, 1, 1],
        vec![1, 1, 1, 1, 1],
    ] {
        let n = bounds.len();
        let lambda = DegreeBounds::new(bounds.clone());
        let cycle = build_complex(&Graph::cycle(n)?, &lambda, DEFAULT_FACE_CAP)?;
        match cycle_reduce(n, &lambda)? {
            CycleOutcome::Reduced(r) => {
                let path = build_complex(&r.path, &r.bounds, DEFAULT_FACE_CAP)?;
                println!(
                    "C_{n} {bounds:?} -> P_{} {:?}, same faces: {}, spheres {}",
                    r.path.num_vertices(),
                    r.bounds.as_slice(),
                    path.relabel(&r.edge_map, n) == cycle,
                    sphere_counts(&r.path, &r.bounds)?
                );
            }
            CycleOutcome::NotReducible => {
                println!(
                    "C_{n} {bounds:?} not reducible, betti {:?}",
                    reduced_homology(&cycle).betti
                );
            }
        }
    }
    Ok(())
}
