//! Exhaustive and seeded sweeps comparing every method with homology.

use bdcomplex::cli::verify::{cmd_verify, Sweep};
use bdcomplex::{SphereCache, DEFAULT_FACE_CAP};

fn main() -> bdcomplex::Result<()> {
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let cache = SphereCache::new();
    for sweep in [
        Sweep::Forests {
            max_edges: 6,
            max_bound: 3,
        },
        Sweep::Caterpillars {
            max_spine: 3,
            min_leaves: 1,
            max_leaves: 3,
            max_bound: 3,
        },
        Sweep::Cycles {
            min_n: 3,
            max_n: 6,
            max_bound: 3,
        },
        Sweep::Random {
            seed: 42,
            count: 200,
            max_edges: 9,
            max_bound: 3,
        },
    ] {
        let report = cmd_verify(&sweep, jobs, DEFAULT_FACE_CAP, &cache)?;
        println!("{}", report.render_table());
    }
    Ok(())
}
