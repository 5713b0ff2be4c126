//! Grape certificates for forest complexes, and their absence for the
//! six-vertex projective plane.

use bdcomplex::{
    build_complex, grape_witness, CaterpillarSpec, GrapeWitness, SimplicialComplex,
    DEFAULT_FACE_CAP,
};

fn show(w: &GrapeWitness, depth: usize) {
    match w {
        GrapeWitness::Base => println!("{:indent$}base", "", indent = depth * 2),
        GrapeWitness::Split {
            vertex,
            apex,
            link,
            deletion,
        } => {
            println!(
                "{:indent$}split at {vertex}, apex {apex}",
                "",
                indent = depth * 2
            );
            show(link, depth + 1);
            show(deletion, depth + 1);
        }
    }
}

fn main() -> bdcomplex::Result<()> {
    let (g, b) = CaterpillarSpec::new(vec![2, 1], vec![2, 1])?.build();
    let k = build_complex(&g, &b, DEFAULT_FACE_CAP)?;
    let w = grape_witness(&k, 32)?;
    show(&w, 0);
    println!("checks: {}", w.check(&k));

    let rp2 = SimplicialComplex::from_facets(
        6,
        &[
            vec![0, 1, 2],
            vec![0, 2, 3],
            vec![0, 3, 4],
            vec![0, 4, 5],
            vec![0, 1, 5],
            vec![1, 2, 4],
            vec![2, 3, 5],
            vec![1, 3, 4],
            vec![1, 3, 5],
            vec![2, 4, 5],
        ],
    );
    println!("projective plane: {:?}", grape_witness(&rp2, 32));
    Ok(())
}
