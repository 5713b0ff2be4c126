//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test --release --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use bdcomplex::caterpillar::binomial;
use bdcomplex::cli::verify::{cmd_verify, Sweep};
use bdcomplex::enumerate::{
    caterpillar_specs, clamped_bound_vectors, forests_up_to, random_forest, vectors_in_range,
};
use bdcomplex::{
    build_complex, caterpillar_closed_form, cycle_reduce, grape_witness, join_convolve,
    reduced_homology, sphere_counts, sphere_counts_with, wedge_profile, CaterpillarSpec,
    CycleOutcome, DegreeBounds, Graph, Memo, SimplicialComplex, SphereCache, SphereCountVector,
    WedgeProfile, DEFAULT_FACE_CAP,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(failures: &[String], checked: usize, what: &str) -> Verdict {
    Verdict {
        pass: failures.is_empty() && checked > 0,
        detail: match failures.first() {
            None => format!("{checked} {what}"),
            Some(first) => format!(
                "{} of {checked} {what} failed, first: {first}",
                failures.len()
            ),
        },
    }
}

fn within(v: Verdict, elapsed: Duration, limit: Duration) -> Verdict {
    let detail = format!(
        "{}; {:.2}s (limit {}s)",
        v.detail,
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    Verdict {
        pass: v.pass && elapsed < limit,
        detail,
    }
}

fn complex(g: &Graph, b: &DegreeBounds) -> SimplicialComplex {
    build_complex(g, b, DEFAULT_FACE_CAP).expect("desk-scale complexes fit the default cap")
}

fn homology_spheres(k: &SimplicialComplex) -> WedgeProfile {
    wedge_profile(&reduced_homology(k))
}

/// Euler characteristics collected by criteria 3 to 5 for criterion 8.
#[derive(Default)]
struct EulerLog {
    checked: usize,
    failures: Vec<String>,
}

impl EulerLog {
    fn record(&mut self, label: String, counts: &SphereCountVector, k: &SimplicialComplex) {
        self.checked += 1;
        if counts.reduced_euler() != k.reduced_euler() {
            self.failures.push(format!(
                "{label}: spheres give {}, faces give {}",
                counts.reduced_euler(),
                k.reduced_euler()
            ));
        }
    }

    fn extend(&mut self, other: EulerLog) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
}

fn criterion_1() -> Verdict {
    let spec = CaterpillarSpec::new(vec![2, 1], vec![2, 1]).unwrap();
    let (g, b) = spec.build();
    let k = complex(&g, &b);
    let all: Vec<&Vec<usize>> = k.iter_faces().collect();
    let mut maximal: Vec<Vec<usize>> = all
        .iter()
        .filter(|f| {
            !all.iter()
                .any(|h| h.len() > f.len() && f.iter().all(|x| h.contains(x)))
        })
        .map(|f| (*f).clone())
        .collect();
    maximal.sort();
    // e_1 = 0, leaves of v_1 = 1 and 2, leaf of v_2 = 3
    let expected_faces = vec![vec![0, 1], vec![0, 2], vec![1, 2, 3]];
    let h = reduced_homology(&k);
    let circle = SphereCountVector::single(1, 1);
    let cf = caterpillar_closed_form(&spec).unwrap();
    let rec = sphere_counts(&g, &b).unwrap();
    let pass = maximal == expected_faces
        && h.betti == [(1, 1)].into_iter().collect()
        && h.is_torsion_free()
        && cf == circle
        && rec == circle;
    Verdict {
        pass,
        detail: format!(
            "maximal faces {maximal:?}, betti {:?}, closed form {cf}, recursion {rec}",
            h.betti
        ),
    }
}

fn star(r: usize, k: u32) -> (Graph, DegreeBounds) {
    let g = Graph::new(r + 1, (1..=r).map(|v| (0, v)).collect()).unwrap();
    let mut b = vec![1; r + 1];
    b[0] = k;
    (g, DegreeBounds::new(b))
}

fn criterion_2() -> Verdict {
    let mut failures = Vec::new();
    let mut checked = 0;
    for r in 1..=8usize {
        for k in 1..=8u32 {
            let (g, b) = star(r, k);
            let h = reduced_homology(&complex(&g, &b));
            checked += 1;
            let expected: std::collections::BTreeMap<i64, u64> = if (k as usize) < r {
                [(i64::from(k) - 1, binomial(r as i64 - 1, i64::from(k)))]
                    .into_iter()
                    .collect()
            } else {
                Default::default()
            };
            if h.betti != expected || !h.is_torsion_free() {
                failures.push(format!(
                    "r={r} k={k}: betti {:?}, expected {expected:?}",
                    h.betti
                ));
            }
        }
    }
    verdict(&failures, checked, "stars")
}

fn forest_instances(max_edges: usize, max_bound: u32) -> Vec<(Graph, DegreeBounds)> {
    forests_up_to(max_edges)
        .into_iter()
        .flat_map(|g| {
            clamped_bound_vectors(&g, max_bound)
                .into_iter()
                .map(move |b| (g.clone(), b))
        })
        .collect()
}

fn criterion_3(euler: &mut EulerLog) -> Verdict {
    let cache = SphereCache::new();
    let mut failures = Vec::new();
    let instances = forest_instances(7, 3);
    for (g, b) in &instances {
        let k = complex(g, b);
        let rec = sphere_counts_with(g, b, Memo::Shared(&cache)).unwrap();
        euler.record(
            format!("forest {:?} {:?}", g.edges(), b.as_slice()),
            &rec,
            &k,
        );
        match homology_spheres(&k) {
            WedgeProfile::Wedge(w) if w == rec => {}
            WedgeProfile::Wedge(w) => failures.push(format!(
                "{:?} {:?}: recursion {rec}, homology {w}",
                g.edges(),
                b.as_slice()
            )),
            WedgeProfile::NotWedgeConsistent => {
                failures.push(format!("{:?} {:?}: torsion", g.edges(), b.as_slice()))
            }
        }
    }
    verdict(
        &failures,
        instances.len(),
        "forest instances, single-threaded",
    )
}

fn criterion_3_parallel() -> Verdict {
    let report = cmd_verify(
        &Sweep::Forests {
            max_edges: 7,
            max_bound: 3,
        },
        8,
        DEFAULT_FACE_CAP,
        &SphereCache::new(),
    )
    .unwrap();
    Verdict {
        pass: report.passed() && report.torsion == 0 && report.agreements == report.instances,
        detail: format!(
            "{} forest instances at 8 jobs, {} agreements, {} torsion",
            report.instances, report.agreements, report.torsion
        ),
    }
}

fn criterion_4(euler: &mut EulerLog) -> Verdict {
    let specs = caterpillar_specs(4, 1, 3, 3);
    let results: Vec<(Option<String>, EulerLog)> = specs
        .par_iter()
        .map(|spec| {
            let (g, b) = spec.build();
            let k = complex(&g, &b);
            let cf = caterpillar_closed_form(spec).unwrap();
            let rec = sphere_counts(&g, &b).unwrap();
            let mut log = EulerLog::default();
            log.record(format!("caterpillar {spec:?}"), &rec, &k);
            let hom = homology_spheres(&k);
            let failure = (cf != rec || hom.spheres() != Some(&cf))
                .then(|| format!("{spec:?}: closed form {cf}, recursion {rec}, homology {hom:?}"));
            (failure, log)
        })
        .collect();
    let mut failures = Vec::new();
    for (f, log) in results {
        failures.extend(f);
        euler.extend(log);
    }
    verdict(&failures, specs.len(), "caterpillars")
}

fn criterion_5(euler: &mut EulerLog) -> Verdict {
    let mut instances = Vec::new();
    for n in 3..=7usize {
        for head in vectors_in_range(n - 1, 0u32, 3) {
            for last in [0, 2, 3] {
                let mut b = head.clone();
                b.push(last);
                instances.push(DegreeBounds::new(b));
            }
        }
    }
    let results: Vec<(Option<String>, EulerLog)> = instances
        .par_iter()
        .map(|b| {
            let n = b.len();
            let cycle = Graph::cycle(n).unwrap();
            let k = complex(&cycle, b);
            let mut log = EulerLog::default();
            let CycleOutcome::Reduced(r) = cycle_reduce(n, b).unwrap() else {
                return (Some(format!("{:?}: not reducible", b.as_slice())), log);
            };
            let path = complex(&r.path, &r.bounds);
            if path.relabel(&r.edge_map, n) != k {
                return (Some(format!("{:?}: face sets differ", b.as_slice())), log);
            }
            let rec = sphere_counts(&r.path, &r.bounds).unwrap();
            log.record(format!("cycle {:?}", b.as_slice()), &rec, &k);
            let cycle_h = reduced_homology(&k);
            let path_h = reduced_homology(&path);
            let failure = (cycle_h != path_h || wedge_profile(&cycle_h).spheres() != Some(&rec))
                .then(|| {
                    format!(
                        "{:?}: cycle {cycle_h:?}, path {path_h:?}, recursion {rec}",
                        b.as_slice()
                    )
                });
            (failure, log)
        })
        .collect();
    let mut failures = Vec::new();
    for (f, log) in results {
        failures.extend(f);
        euler.extend(log);
    }
    verdict(
        &failures,
        instances.len(),
        "cycles, face sets equal and homology matching",
    )
}

fn criterion_6() -> Verdict {
    let mut failures = Vec::new();
    let mut checked = 0;
    for k in 1..=3u32 {
        for n in 1..=3usize {
            for m in vectors_in_range(n, 0usize, 3) {
                let spec = CaterpillarSpec::new(m, vec![k; n]).unwrap();
                let (g, _) = spec.build();
                // M_k(G): every vertex bounded by k
                let b = DegreeBounds::uniform(g.num_vertices(), k);
                let h = reduced_homology(&complex(&g, &b));
                checked += 1;
                let rec = sphere_counts(&g, &b).unwrap();
                if !h.is_torsion_free() {
                    failures.push(format!("k={k} {spec:?}: torsion {:?}", h.torsion));
                } else if wedge_profile(&h).spheres() != Some(&rec) {
                    failures.push(format!(
                        "k={k} {spec:?}: betti {:?}, recursion {rec}",
                        h.betti
                    ));
                }
            }
        }
    }
    verdict(
        &failures,
        checked,
        "k-matching complexes of caterpillars, all torsion free",
    )
}

fn criterion_7() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_607);
    let mut failures = Vec::new();
    for i in 0..100 {
        let (g, b) = random_forest(&mut rng, 7, 3);
        let (h, c) = random_forest(&mut rng, 7, 3);
        let union = sphere_counts(&g.disjoint_union(&h), &b.concat(&c)).unwrap();
        let joined = join_convolve(
            &sphere_counts(&g, &b).unwrap(),
            &sphere_counts(&h, &c).unwrap(),
        );
        if union != joined {
            failures.push(format!("pair {i}: union {union}, join {joined}"));
        }
    }
    verdict(&failures, 100, "seeded random pairs")
}

fn criterion_9() -> Verdict {
    let instances = forest_instances(5, 2);
    let failures: Vec<String> = instances
        .par_iter()
        .filter_map(|(g, b)| {
            let k = complex(g, b);
            match grape_witness(&k, 64) {
                Ok(w) if w.check(&k) => None,
                Ok(_) => Some(format!(
                    "{:?} {:?}: witness does not check",
                    g.edges(),
                    b.as_slice()
                )),
                Err(e) => Some(format!("{:?} {:?}: {e}", g.edges(), b.as_slice())),
            }
        })
        .collect();
    verdict(
        &failures,
        instances.len(),
        "forest complexes with a checked grape witness",
    )
}

fn timed(f: impl FnOnce() -> Verdict, limit_secs: u64) -> Verdict {
    let start = Instant::now();
    let v = f();
    within(v, start.elapsed(), Duration::from_secs(limit_secs))
}

fn main() -> ExitCode {
    let mut euler = EulerLog::default();
    let c3_single = timed(|| criterion_3(&mut euler), 600);
    let c3_parallel = timed(criterion_3_parallel, 120);
    let c3 = Verdict {
        pass: c3_single.pass && c3_parallel.pass,
        detail: format!("{}; {}", c3_single.detail, c3_parallel.detail),
    };
    let c4 = timed(|| criterion_4(&mut euler), 300);
    let c5 = timed(|| criterion_5(&mut euler), 120);
    let c8 = verdict(
        &euler.failures,
        euler.checked,
        "instances from criteria 3 to 5",
    );

    let verdicts = [
        (1, timed(criterion_1, 1)),
        (2, timed(criterion_2, 10)),
        (3, c3),
        (4, c4),
        (5, c5),
        (6, timed(criterion_6, 300)),
        (7, timed(criterion_7, 60)),
        (8, c8),
        (9, timed(criterion_9, 300)),
    ];
    let mut all = true;
    for (n, v) in &verdicts {
        println!(
            "criterion {n}: {} ({})",
            if v.pass { "PASS" } else { "FAIL" },
            v.detail
        );
        all &= v.pass;
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
