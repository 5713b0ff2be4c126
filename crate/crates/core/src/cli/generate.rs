//! `bdc generate`: instance JSON for standard families.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::enumerate::random_forest;
use crate::error::{Error, Result};
use crate::graph::{CaterpillarSpec, DegreeBounds, Graph};

use super::instance::{Instance, InstanceSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `P_n`; bounds default to all ones.
    Path {
        n: usize,
        lambda: Option<Vec<u32>>,
    },
    /// `C_n` shorthand; bounds default to all ones.
    Cycle {
        n: usize,
        lambda: Option<Vec<u32>>,
    },
    Caterpillar {
        m: Vec<usize>,
        lambda: Vec<u32>,
    },
    /// `G_1(r)` with bound `k` at the center and one at every leaf.
    Star {
        r: usize,
        k: u32,
    },
    Random {
        seed: u64,
        max_edges: usize,
        max_bound: u32,
    },
}

fn bounds_or_ones(n: usize, lambda: &Option<Vec<u32>>) -> Result<Vec<u32>> {
    let b = lambda.clone().unwrap_or_else(|| vec![1; n]);
    if b.len() != n {
        return Err(Error::InvalidParams(format!(
            "expected {n} bounds, got {}",
            b.len()
        )));
    }
    Ok(b)
}

pub fn cmd_generate(family: &Family) -> Result<InstanceSpec> {
    let invalid = |e: Error| Error::InvalidParams(e.to_string());
    let spec = match family {
        Family::Path { n, lambda } => {
            let g = Graph::path(*n).map_err(invalid)?;
            InstanceSpec::explicit(&g, &DegreeBounds::new(bounds_or_ones(*n, lambda)?))
        }
        Family::Cycle { n, lambda } => InstanceSpec::cycle(*n, bounds_or_ones(*n, lambda)?),
        Family::Caterpillar { m, lambda } => InstanceSpec::caterpillar(
            &CaterpillarSpec::new(m.clone(), lambda.clone()).map_err(invalid)?,
        ),
        Family::Star { r, k } => {
            if *r == 0 {
                return Err(Error::InvalidParams(
                    "a star needs at least one leaf".into(),
                ));
            }
            let g = Graph::new(r + 1, (1..=*r).map(|v| (0, v)).collect()).map_err(invalid)?;
            let mut b = vec![1; r + 1];
            b[0] = *k;
            InstanceSpec::explicit(&g, &DegreeBounds::new(b))
        }
        Family::Random {
            seed,
            max_edges,
            max_bound,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let (g, b) = random_forest(&mut rng, *max_edges, *max_bound);
            InstanceSpec::explicit(&g, &b)
        }
    };
    Instance::from_spec(spec.clone()).map_err(invalid)?;
    Ok(spec)
}
