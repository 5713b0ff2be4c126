//! Exact reduced homology of matching complexes of complete graphs. K_7
//! shows 3-torsion, so it is not a wedge of spheres.

use bdcomplex::{
    build_complex, reduced_homology, wedge_profile, DegreeBounds, Graph, DEFAULT_FACE_CAP,
};

fn main() -> bdcomplex::Result<()> {
    for n in 3..=7usize {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let g = Graph::new(n, edges)?;
        let k = build_complex(&g, &DegreeBounds::uniform(n, 1), DEFAULT_FACE_CAP)?;
        let h = reduced_homology(&k);
        println!(
            "K_{n}: f {:?}, homology {}, wedge {:?}",
            k.f_vector(),
            serde_json::to_string(&h).expect("profiles serialize"),
            wedge_profile(&h)
        );
    }
    Ok(())
}
