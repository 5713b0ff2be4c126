//! `bdc compute`: one instance in, one result out.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::caterpillar::{caterpillar_closed_form, cycle_reduce, CycleOutcome};
use crate::complex::build_complex;
use crate::error::{Error, Result};
use crate::graph::{DegreeBounds, Graph};
use crate::homology::{reduced_homology, wedge_profile, HomologyProfile, WedgeProfile};
use crate::recursion::{sphere_counts_with, Memo, SphereCache};
use crate::spheres::SphereCountVector;

use super::instance::{Instance, InstanceSpec};

/// Requested method.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    Recursion,
    ClosedForm,
    Homology,
    #[default]
    Auto,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "recursion" => Ok(Method::Recursion),
            "closed-form" => Ok(Method::ClosedForm),
            "homology" => Ok(Method::Homology),
            "auto" => Ok(Method::Auto),
            other => Err(Error::InvalidParams(format!("unknown method {other:?}"))),
        }
    }
}

/// The method that actually produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MethodUsed {
    ClosedForm,
    Recursion,
    /// Cycle reduced to a path, then the forest recursion.
    CycleReduction,
    Homology,
}

impl MethodUsed {
    pub fn as_str(self) -> &'static str {
        match self {
            MethodUsed::ClosedForm => "closed-form",
            MethodUsed::Recursion => "recursion",
            MethodUsed::CycleReduction => "cycle-reduction",
            MethodUsed::Homology => "homology",
        }
    }
}

impl fmt::Display for MethodUsed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone)]
pub struct ComputeRequest {
    pub instance: Instance,
    pub method: Method,
    pub face_cap: usize,
    /// Also run every other applicable method and compare.
    pub cross_check: bool,
    pub timings: bool,
}

impl ComputeRequest {
    pub fn new(instance: Instance) -> Self {
        ComputeRequest {
            instance,
            method: Method::Auto,
            face_cap: crate::complex::DEFAULT_FACE_CAP,
            cross_check: false,
            timings: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Agreement {
    pub methods: Vec<MethodUsed>,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComputeResult {
    pub instance: InstanceSpec,
    pub method: MethodUsed,
    pub contractible: bool,
    /// Absent when the homology has torsion.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spheres: Option<SphereCountVector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homology: Option<HomologyProfile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<Agreement>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<BTreeMap<String, f64>>,
}

impl ComputeResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("results always serialize")
    }

    /// False only when a cross-check ran and found a disagreement.
    pub fn is_consistent(&self) -> bool {
        self.agreement.as_ref().is_none_or(|a| a.agree)
    }
}

/// Vertex order around `g` if it is a single cycle, starting at 0 and
/// stepping to the smaller neighbor first.
pub fn cycle_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.num_vertices();
    if n < 3 || g.num_edges() != n || (0..n).any(|v| g.degree(v) != 2) {
        return None;
    }
    let mut order = vec![0];
    let mut prev = 0;
    let mut cur = g.neighbors(0).iter().map(|&(w, _)| w).min()?;
    while cur != 0 {
        order.push(cur);
        let next = g
            .neighbors(cur)
            .iter()
            .map(|&(w, _)| w)
            .find(|&w| w != prev)?;
        prev = cur;
        cur = next;
    }
    (order.len() == n).then_some(order)
}

/// Path instance for a cycle whose bounds are not all one.
fn reduced_cycle(inst: &Instance) -> Option<(Graph, DegreeBounds)> {
    let order = cycle_order(&inst.graph)?;
    let bounds = DegreeBounds::new(order.iter().map(|&v| inst.bounds.get(v)).collect());
    match cycle_reduce(order.len(), &bounds).ok()? {
        CycleOutcome::Reduced(r) => Some((r.path, r.bounds)),
        CycleOutcome::NotReducible => None,
    }
}

/// Methods that apply to `inst`, cheapest first. Homology always applies.
pub fn applicable_methods(inst: &Instance) -> Vec<MethodUsed> {
    let mut out = Vec::new();
    if inst.closed_form_spec().is_some() {
        out.push(MethodUsed::ClosedForm);
    }
    if inst.graph.is_forest() {
        out.push(MethodUsed::Recursion);
    } else if reduced_cycle(inst).is_some() {
        out.push(MethodUsed::CycleReduction);
    }
    out.push(MethodUsed::Homology);
    out
}

fn choose(method: Method, inst: &Instance) -> Result<MethodUsed> {
    match method {
        Method::Auto => Ok(applicable_methods(inst)[0]),
        Method::Homology => Ok(MethodUsed::Homology),
        Method::ClosedForm => {
            if inst.closed_form_spec().is_some() {
                Ok(MethodUsed::ClosedForm)
            } else {
                Err(Error::MethodMismatch(
                    "closed-form needs a caterpillar shorthand with every m_i >= 1".into(),
                ))
            }
        }
        Method::Recursion => {
            if inst.graph.is_forest() {
                Ok(MethodUsed::Recursion)
            } else {
                Err(Error::MethodMismatch("recursion needs a forest".into()))
            }
        }
    }
}

struct Outcome {
    profile: WedgeProfile,
    homology: Option<HomologyProfile>,
}

fn run(
    used: MethodUsed,
    req: &ComputeRequest,
    cache: &SphereCache,
    timing: &mut BTreeMap<String, f64>,
) -> Result<Outcome> {
    let inst = &req.instance;
    let start = Instant::now();
    let outcome = match used {
        MethodUsed::ClosedForm => {
            let spec = inst.closed_form_spec().expect("checked by the caller");
            Outcome {
                profile: WedgeProfile::Wedge(caterpillar_closed_form(spec)?),
                homology: None,
            }
        }
        MethodUsed::Recursion => Outcome {
            profile: WedgeProfile::Wedge(sphere_counts_with(
                &inst.graph,
                &inst.bounds,
                Memo::Shared(cache),
            )?),
            homology: None,
        },
        MethodUsed::CycleReduction => {
            let (path, bounds) = reduced_cycle(inst).expect("checked by the caller");
            Outcome {
                profile: WedgeProfile::Wedge(sphere_counts_with(
                    &path,
                    &bounds,
                    Memo::Shared(cache),
                )?),
                homology: None,
            }
        }
        MethodUsed::Homology => {
            let complex = build_complex(&inst.graph, &inst.bounds, req.face_cap)?;
            timing.insert("build".into(), millis(start));
            let h = reduced_homology(&complex);
            Outcome {
                profile: wedge_profile(&h),
                homology: Some(h),
            }
        }
    };
    timing.insert(used.as_str().into(), millis(start));
    Ok(outcome)
}

fn millis(since: Instant) -> f64 {
    (since.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

/// Runs a request against a shared memo table.
pub fn compute(req: &ComputeRequest, cache: &SphereCache) -> Result<ComputeResult> {
    let total = Instant::now();
    let mut timing = BTreeMap::new();
    let used = choose(req.method, &req.instance)?;
    let primary = run(used, req, cache, &mut timing)?;
    let mut homology = primary.homology;
    let agreement = if req.cross_check {
        let mut methods = vec![used];
        let mut agree = true;
        for other in applicable_methods(&req.instance) {
            if other == used {
                continue;
            }
            let o = run(other, req, cache, &mut timing)?;
            agree &= o.profile == primary.profile;
            methods.push(other);
            if homology.is_none() {
                homology = o.homology;
            }
        }
        methods.sort();
        Some(Agreement { methods, agree })
    } else {
        None
    };
    timing.insert("total".into(), millis(total));
    let spheres = primary.profile.spheres().cloned();
    Ok(ComputeResult {
        instance: req.instance.spec.clone(),
        method: used,
        contractible: spheres
            .as_ref()
            .is_some_and(SphereCountVector::is_contractible),
        spheres,
        homology,
        agreement,
        timing_ms: req.timings.then_some(timing),
    })
}

/// Runs a request with a private memo table.
pub fn cmd_compute(req: &ComputeRequest) -> Result<ComputeResult> {
    compute(req, &SphereCache::new())
}

/// Plain-text table, one row per result.
pub fn render_table(results: &[ComputeResult]) -> String {
    let rows: Vec<[String; 4]> = results
        .iter()
        .map(|r| {
            let spheres = match &r.spheres {
                Some(s) => s.to_string(),
                None => "torsion".to_string(),
            };
            let check = match &r.agreement {
                Some(a) if a.agree => "agree".to_string(),
                Some(_) => "MISMATCH".to_string(),
                None => "-".to_string(),
            };
            [r.instance.to_json(), r.method.to_string(), spheres, check]
        })
        .collect();
    table(&["instance", "method", "spheres", "check"], &rows)
}

pub(crate) fn table<const N: usize>(header: &[&str; N], rows: &[[String; N]]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out += &line(row.iter().map(String::as_str).collect());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn request(json: &str, method: Method) -> ComputeRequest {
        ComputeRequest {
            method,
            ..ComputeRequest::new(Instance::parse(json).unwrap())
        }
    }

    const FIG2: &str = r#"{"caterpillar":{"m":[2,1],"lambda":[2,1]}}"#;

    #[test]
    fn auto_prefers_closed_form() {
        let r = cmd_compute(&request(FIG2, Method::Auto)).unwrap();
        assert_eq!(r.method, MethodUsed::ClosedForm);
        assert_eq!(r.spheres, Some(SphereCountVector::single(1, 1)));
        assert_eq!(
            r.to_json(),
            r#"{"instance":{"caterpillar":{"m":[2,1],"lambda":[2,1]}},"method":"closed-form","contractible":false,"spheres":{"1":1}}"#
        );
    }

    #[test]
    fn auto_dispatch_order() {
        let forest = r#"{"n":3,"edges":[[0,1],[1,2]],"lambda":[1,1,1]}"#;
        assert_eq!(
            cmd_compute(&request(forest, Method::Auto)).unwrap().method,
            MethodUsed::Recursion
        );
        let reducible = r#"{"cycle":{"n":3,"lambda":[1,1,2]}}"#;
        let r = cmd_compute(&request(reducible, Method::Auto)).unwrap();
        assert_eq!(r.method, MethodUsed::CycleReduction);
        assert_eq!(r.spheres, Some(SphereCountVector::single(0, 1)));
        let kozlov = r#"{"cycle":{"n":5,"lambda":[1,1,1,1,1]}}"#;
        assert_eq!(
            cmd_compute(&request(kozlov, Method::Auto)).unwrap().method,
            MethodUsed::Homology
        );
    }

    #[test]
    fn explicit_cycles_are_recognized() {
        let g = r#"{"n":4,"edges":[[0,2],[2,1],[1,3],[3,0]],"lambda":[2,1,1,1]}"#;
        let inst = Instance::parse(g).unwrap();
        assert_eq!(cycle_order(&inst.graph), Some(vec![0, 2, 1, 3]));
        let mut req = request(g, Method::Auto);
        req.cross_check = true;
        let r = cmd_compute(&req).unwrap();
        assert_eq!(r.method, MethodUsed::CycleReduction);
        assert!(r.is_consistent());
        assert!(cycle_order(&Graph::path(4).unwrap()).is_none());
        let two_triangles =
            Graph::new(6, vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(cycle_order(&two_triangles).is_none());
    }

    #[test]
    fn method_mismatches() {
        let forest = r#"{"n":2,"edges":[[0,1]],"lambda":[1,1]}"#;
        assert!(matches!(
            cmd_compute(&request(forest, Method::ClosedForm)),
            Err(Error::MethodMismatch(_))
        ));
        let cycle = r#"{"cycle":{"n":4,"lambda":[1,1,1,1]}}"#;
        assert!(matches!(
            cmd_compute(&request(cycle, Method::Recursion)),
            Err(Error::MethodMismatch(_))
        ));
        let no_leaf = r#"{"caterpillar":{"m":[1,0],"lambda":[1,1]}}"#;
        assert!(matches!(
            cmd_compute(&request(no_leaf, Method::ClosedForm)),
            Err(Error::MethodMismatch(_))
        ));
        assert_eq!(
            cmd_compute(&request(no_leaf, Method::Auto)).unwrap().method,
            MethodUsed::Recursion
        );
    }

    #[test]
    fn face_cap_surfaces() {
        let mut req = request(
            r#"{"cycle":{"n":6,"lambda":[2,2,2,2,2,2]}}"#,
            Method::Homology,
        );
        req.face_cap = 10;
        assert_eq!(cmd_compute(&req), Err(Error::FaceCapExceeded(10)));
    }

    #[test]
    fn cross_check_reports_all_methods() {
        let mut req = request(FIG2, Method::Auto);
        req.cross_check = true;
        let r = cmd_compute(&req).unwrap();
        let a = r.agreement.as_ref().unwrap();
        assert_eq!(
            a.methods,
            vec![
                MethodUsed::ClosedForm,
                MethodUsed::Recursion,
                MethodUsed::Homology
            ]
        );
        assert!(a.agree);
        assert_eq!(r.homology.as_ref().unwrap().betti, BTreeMap::from([(1, 1)]));
    }

    #[test]
    fn contractible_and_torsion_outputs() {
        let star = r#"{"n":3,"edges":[[0,1],[0,2]],"lambda":[2,1,1]}"#;
        let r = cmd_compute(&request(star, Method::Homology)).unwrap();
        assert!(r.contractible);
        assert_eq!(r.spheres, Some(SphereCountVector::contractible()));
        assert!(r.to_json().contains(r#""spheres":{}"#));
        assert!(render_table(&[r]).contains("contractible"));
    }

    #[test]
    fn methods_parse() {
        assert_eq!("closed-form".parse::<Method>().unwrap(), Method::ClosedForm);
        assert!("fast".parse::<Method>().is_err());
    }
}
