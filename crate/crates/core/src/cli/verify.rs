//! `bdc verify`: sweep an instance family and compare every applicable
//! method against the homology of the built complex.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::caterpillar::{caterpillar_closed_form, cycle_reduce, CycleOutcome};
use crate::complex::build_complex;
use crate::enumerate::{
    caterpillar_specs, clamped_bound_vectors, forests_up_to, random_forest, vectors_in_range,
};
use crate::error::{Error, Result};
use crate::graph::{DegreeBounds, Graph};
use crate::homology::{reduced_homology, wedge_profile, WedgeProfile};
use crate::recursion::{sphere_counts_with, Memo, SphereCache};

use super::instance::{Instance, InstanceSpec};

/// An instance family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sweep {
    /// Every forest up to isomorphism with at most `max_edges` edges, every
    /// bound vector with entries up to `max_bound`.
    Forests { max_edges: usize, max_bound: u32 },
    Caterpillars {
        max_spine: usize,
        min_leaves: usize,
        max_leaves: usize,
        max_bound: u32,
    },
    /// Cycles `C_n` for `n` in `min_n..=max_n`, all bounds up to `max_bound`.
    Cycles {
        min_n: usize,
        max_n: usize,
        max_bound: u32,
    },
    Random {
        seed: u64,
        count: usize,
        max_edges: usize,
        max_bound: u32,
    },
}

impl Sweep {
    pub fn instances(&self) -> Result<Vec<Instance>> {
        Ok(match *self {
            Sweep::Forests {
                max_edges,
                max_bound,
            } => forests_up_to(max_edges)
                .into_iter()
                .flat_map(|g| {
                    clamped_bound_vectors(&g, max_bound)
                        .into_iter()
                        .map(move |b| Instance::from_graph(g.clone(), b))
                })
                .collect(),
            Sweep::Caterpillars {
                max_spine,
                min_leaves,
                max_leaves,
                max_bound,
            } => {
                if max_spine == 0 || min_leaves > max_leaves {
                    return Err(Error::InvalidParams("empty caterpillar range".into()));
                }
                caterpillar_specs(max_spine, min_leaves, max_leaves, max_bound)
                    .into_iter()
                    .map(Instance::from_caterpillar)
                    .collect()
            }
            Sweep::Cycles {
                min_n,
                max_n,
                max_bound,
            } => {
                if min_n < 3 || min_n > max_n {
                    return Err(Error::InvalidParams(
                        "cycle lengths must satisfy 3 <= min <= max".into(),
                    ));
                }
                let mut out = Vec::new();
                for n in min_n..=max_n {
                    for b in vectors_in_range(n, 0u32, max_bound) {
                        out.push(Instance::from_cycle(DegreeBounds::new(b))?);
                    }
                }
                out
            }
            Sweep::Random {
                seed,
                count,
                max_edges,
                max_bound,
            } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..count)
                    .map(|_| {
                        let (g, b) = random_forest(&mut rng, max_edges, max_bound);
                        Instance::from_graph(g, b)
                    })
                    .collect()
            }
        })
    }

    pub fn describe(&self) -> String {
        match self {
            Sweep::Forests { max_edges, max_bound } => {
                format!("forests with <= {max_edges} edges, bounds <= {max_bound}")
            }
            Sweep::Caterpillars {
                max_spine,
                min_leaves,
                max_leaves,
                max_bound,
            } => format!(
                "caterpillars with spine <= {max_spine}, {min_leaves} <= m_i <= {max_leaves}, bounds <= {max_bound}"
            ),
            Sweep::Cycles { min_n, max_n, max_bound } => {
                format!("cycles with {min_n} <= n <= {max_n}, bounds <= {max_bound}")
            }
            Sweep::Random {
                seed,
                count,
                max_edges,
                max_bound,
            } => format!("{count} random forests, seed {seed}, <= {max_edges} edges, bounds <= {max_bound}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status", content = "detail")]
pub enum CheckStatus {
    Agree,
    Mismatch(String),
    Error(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceCheck {
    pub instance: InstanceSpec,
    pub status: CheckStatus,
    pub torsion: bool,
    /// Number of independent computations compared with homology.
    pub comparisons: usize,
}

/// Builds the complex, computes its homology and compares the wedge it
/// predicts, and its reduced Euler characteristic, with the recursion, the
/// closed form and the cycle reduction wherever they apply.
pub fn check_instance(inst: &Instance, face_cap: usize, cache: &SphereCache) -> InstanceCheck {
    let mut check = InstanceCheck {
        instance: inst.spec.clone(),
        status: CheckStatus::Agree,
        torsion: false,
        comparisons: 0,
    };
    match compare(inst, face_cap, cache, &mut check) {
        Ok(None) => {}
        Ok(Some(reason)) => check.status = CheckStatus::Mismatch(reason),
        Err(e) => check.status = CheckStatus::Error(e.to_string()),
    }
    check
}

fn compare(
    inst: &Instance,
    face_cap: usize,
    cache: &SphereCache,
    check: &mut InstanceCheck,
) -> Result<Option<String>> {
    let complex = build_complex(&inst.graph, &inst.bounds, face_cap)?;
    let h = reduced_homology(&complex);
    check.torsion = !h.is_torsion_free();
    let oracle = wedge_profile(&h);
    if h.reduced_euler() != complex.reduced_euler() {
        return Ok(Some(format!(
            "homology Euler {} but face count Euler {}",
            h.reduced_euler(),
            complex.reduced_euler()
        )));
    }
    let mut candidates = Vec::new();
    if inst.graph.is_forest() {
        candidates.push((
            "recursion",
            sphere_counts_with(&inst.graph, &inst.bounds, Memo::Shared(cache))?,
        ));
    }
    if let Some(spec) = inst.closed_form_spec() {
        candidates.push(("closed-form", caterpillar_closed_form(spec)?));
    }
    if let Some(reduction) = cycle_reduction(inst)? {
        let (path, bounds, edge_map) = reduction;
        let path_complex = build_complex(&path, &bounds, face_cap)?;
        if path_complex.relabel(&edge_map, inst.graph.num_edges()) != complex {
            return Ok(Some("reduced path complex has different faces".into()));
        }
        candidates.push((
            "cycle-reduction",
            sphere_counts_with(&path, &bounds, Memo::Shared(cache))?,
        ));
    }
    for (name, counts) in candidates {
        check.comparisons += 1;
        if counts.reduced_euler() != complex.reduced_euler() {
            return Ok(Some(format!(
                "{name} Euler {} disagrees",
                counts.reduced_euler()
            )));
        }
        match &oracle {
            WedgeProfile::Wedge(w) if *w == counts => {}
            WedgeProfile::Wedge(w) => {
                return Ok(Some(format!("{name} gives {counts}, homology gives {w}")))
            }
            WedgeProfile::NotWedgeConsistent => {
                return Ok(Some(format!("{name} gives {counts}, homology has torsion")));
            }
        }
    }
    Ok(None)
}

fn cycle_reduction(inst: &Instance) -> Result<Option<(Graph, DegreeBounds, Vec<usize>)>> {
    let super::instance::InstanceKind::Cycle(n) = inst.kind else {
        return Ok(None);
    };
    Ok(match cycle_reduce(n, &inst.bounds)? {
        CycleOutcome::Reduced(r) => Some((r.path, r.bounds, r.edge_map)),
        CycleOutcome::NotReducible => None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub index: usize,
    pub instance: InstanceSpec,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub sweep: String,
    pub instances: usize,
    pub agreements: usize,
    pub mismatches: usize,
    pub errors: usize,
    pub torsion: usize,
    pub comparisons: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_counterexample: Option<Counterexample>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0 && self.errors == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }

    pub fn render_table(&self) -> String {
        let mut rows = vec![
            ["sweep".to_string(), self.sweep.clone()],
            ["instances".to_string(), self.instances.to_string()],
            ["agreements".to_string(), self.agreements.to_string()],
            ["mismatches".to_string(), self.mismatches.to_string()],
            ["errors".to_string(), self.errors.to_string()],
            ["torsion".to_string(), self.torsion.to_string()],
            ["comparisons".to_string(), self.comparisons.to_string()],
        ];
        if let Some(c) = &self.first_counterexample {
            rows.push(["counterexample".to_string(), c.instance.to_json()]);
            rows.push(["reason".to_string(), c.reason.clone()]);
        }
        super::compute::table(&["field", "value"], &rows)
    }
}

/// Summarizes per-instance checks, which must be in input order.
pub fn summarize(sweep: &Sweep, checks: &[InstanceCheck]) -> VerifyReport {
    let first_counterexample = checks
        .iter()
        .enumerate()
        .find_map(|(index, c)| match &c.status {
            CheckStatus::Agree => None,
            CheckStatus::Mismatch(reason) | CheckStatus::Error(reason) => Some(Counterexample {
                index,
                instance: c.instance.clone(),
                reason: reason.clone(),
            }),
        });
    VerifyReport {
        sweep: sweep.describe(),
        instances: checks.len(),
        agreements: checks
            .iter()
            .filter(|c| c.status == CheckStatus::Agree)
            .count(),
        mismatches: checks
            .iter()
            .filter(|c| matches!(c.status, CheckStatus::Mismatch(_)))
            .count(),
        errors: checks
            .iter()
            .filter(|c| matches!(c.status, CheckStatus::Error(_)))
            .count(),
        torsion: checks.iter().filter(|c| c.torsion).count(),
        comparisons: checks.iter().map(|c| c.comparisons).sum(),
        first_counterexample,
    }
}

/// Checks every instance of `sweep` on `jobs` worker threads.
pub fn cmd_verify(
    sweep: &Sweep,
    jobs: usize,
    face_cap: usize,
    cache: &SphereCache,
) -> Result<VerifyReport> {
    let instances = sweep.instances()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidParams(e.to_string()))?;
    let checks: Vec<InstanceCheck> = pool.install(|| {
        instances
            .par_iter()
            .map(|i| check_instance(i, face_cap, cache))
            .collect()
    });
    Ok(summarize(sweep, &checks))
}
