//! The caterpillar closed form term by term: each set T of spine edges
//! contributes a product of binomials in dimension |λ| - #T - 1.

use bdcomplex::caterpillar::binomial;
use bdcomplex::{caterpillar_closed_form, sphere_counts, CaterpillarSpec, SpineSubset};

fn main() -> bdcomplex::Result<()> {
    let spec = CaterpillarSpec::new(vec![3, 2, 3], vec![2, 2, 1])?;
    let total: i64 = spec.spine_bounds.iter().map(|&l| i64::from(l)).sum();
    for t in SpineSubset::all(spec.spine_len()) {
        let factors: Vec<u64> = t
            .degrees()
            .iter()
            .enumerate()
            .map(|(i, &ti)| {
                binomial(
                    spec.leaves[i] as i64 - 1,
                    i64::from(spec.spine_bounds[i]) - i64::from(ti),
                )
            })
            .collect();
        let dim = total - i64::from(t.size()) - 1;
        println!(
            "T degrees {:?}: {:?} -> {} spheres of dim {dim}",
            t.degrees(),
            factors,
            factors.iter().product::<u64>()
        );
    }
    let (graph, bounds) = spec.build();
    println!("closed form {}", caterpillar_closed_form(&spec)?);
    println!("recursion   {}", sphere_counts(&graph, &bounds)?);
    Ok(())
}
