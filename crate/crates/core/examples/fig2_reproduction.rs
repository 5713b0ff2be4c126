//! The caterpillar G_2(2,1) with spine bounds (2,1): three maximal faces,
//! homotopy equivalent to a circle by every method.

use bdcomplex::{
    build_complex, caterpillar_closed_form, reduced_homology, sphere_counts, CaterpillarSpec,
    DEFAULT_FACE_CAP,
};

fn main() -> bdcomplex::Result<()> {
    let spec = CaterpillarSpec::new(vec![2, 1], vec![2, 1])?;
    let (graph, bounds) = spec.build();
    println!("edges  {:?}", graph.edges());
    println!("bounds {:?}", bounds.as_slice());

    let complex = build_complex(&graph, &bounds, DEFAULT_FACE_CAP)?;
    println!("f-vector {:?}", complex.f_vector());
    print!("faces:\n{}", complex.to_dump());

    let homology = reduced_homology(&complex);
    println!("betti       {:?}", homology.betti);
    println!("recursion   {}", sphere_counts(&graph, &bounds)?);
    println!("closed form {}", caterpillar_closed_form(&spec)?);
    Ok(())
}
