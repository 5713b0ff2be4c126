//! BD^k of the star with r leaves is the (k-1)-skeleton of an
//! (r-1)-simplex: a wedge of C(r-1, k) spheres of dimension k-1.

use bdcomplex::{
    build_complex, reduced_homology, star_profile, DegreeBounds, Graph, DEFAULT_FACE_CAP,
};

fn main() -> bdcomplex::Result<()> {
    println!("{:>2} {:>2}  {:<16} {:<16}", "r", "k", "formula", "betti");
    for r in 1..=6usize {
        let star = Graph::new(r + 1, (1..=r).map(|v| (0, v)).collect())?;
        for k in 0..=r as u32 {
            let mut b = vec![1; r + 1];
            b[0] = k;
            let complex = build_complex(&star, &DegreeBounds::new(b), DEFAULT_FACE_CAP)?;
            let betti = reduced_homology(&complex).betti;
            println!(
                "{r:>2} {k:>2}  {:<16} {:<16}",
                star_profile(k, r)?.to_string(),
                format!("{betti:?}")
            );
        }
    }
    Ok(())
}
