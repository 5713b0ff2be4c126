//! Sphere counts of a forest by the edge-splitting recursion, checked
//! against homology, with memo statistics.

use bdcomplex::recursion::{pick_recursion_edge, simplify};
use bdcomplex::{
    build_complex, reduced_homology, sphere_counts_with, wedge_profile, DegreeBounds, Graph, Memo,
    SphereCache, DEFAULT_FACE_CAP,
};

fn main() -> bdcomplex::Result<()> {
    // a double star next to a claw
    let graph = Graph::new(
        10,
        vec![
            (0, 1),
            (0, 2),
            (0, 3),
            (3, 4),
            (3, 5),
            (6, 7),
            (7, 8),
            (7, 9),
        ],
    )?;
    let bounds = DegreeBounds::uniform(10, 1);

    let (simple, _) = simplify(&graph, &bounds)?;
    println!(
        "first split edge: {:?}",
        pick_recursion_edge(&simple).map(|e| simple.edge(e))
    );

    let cache = SphereCache::new();
    let counts = sphere_counts_with(&graph, &bounds, Memo::Shared(&cache))?;
    println!("recursion: {counts}");
    println!(
        "memo: {} entries, {} hits, {} misses",
        cache.len(),
        cache.hits(),
        cache.misses()
    );

    let complex = build_complex(&graph, &bounds, DEFAULT_FACE_CAP)?;
    println!("complex: f-vector {:?}", complex.f_vector());
    println!("homology: {:?}", wedge_profile(&reduced_homology(&complex)));
    Ok(())
}
