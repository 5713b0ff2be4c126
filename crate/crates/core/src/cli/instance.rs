//! Instance JSON: an explicit graph with bounds, or a caterpillar or cycle
//! shorthand.
//!
//! ```text
//! {"n": 5, "edges": [[0,1],[0,2],[0,3],[1,4]], "lambda": [2,1,1,1,1]}
//! {"caterpillar": {"m": [2,1], "lambda": [2,1]}}
//! {"cycle": {"n": 5, "lambda": [1,1,1,1,1]}}
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{CaterpillarSpec, DegreeBounds, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitInstance {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub lambda: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaterpillarShorthand {
    pub m: Vec<usize>,
    pub lambda: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CycleShorthand {
    pub n: usize,
    pub lambda: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaterpillarWrapper {
    pub caterpillar: CaterpillarShorthand,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CycleWrapper {
    pub cycle: CycleShorthand,
}

/// The wire form of an instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InstanceSpec {
    Caterpillar(CaterpillarWrapper),
    Cycle(CycleWrapper),
    Explicit(ExplicitInstance),
}

impl InstanceSpec {
    pub fn explicit(g: &Graph, b: &DegreeBounds) -> Self {
        InstanceSpec::Explicit(ExplicitInstance {
            n: g.num_vertices(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            lambda: b.as_slice().to_vec(),
        })
    }

    pub fn caterpillar(spec: &CaterpillarSpec) -> Self {
        InstanceSpec::Caterpillar(CaterpillarWrapper {
            caterpillar: CaterpillarShorthand {
                m: spec.leaves.clone(),
                lambda: spec.spine_bounds.clone(),
            },
        })
    }

    pub fn cycle(n: usize, lambda: Vec<u32>) -> Self {
        InstanceSpec::Cycle(CycleWrapper {
            cycle: CycleShorthand { n, lambda },
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("instances always serialize")
    }
}

/// How an instance was described, which decides the methods open to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceKind {
    Explicit,
    Caterpillar(CaterpillarSpec),
    Cycle(usize),
}

/// A parsed and validated instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub spec: InstanceSpec,
    pub kind: InstanceKind,
    pub graph: Graph,
    pub bounds: DegreeBounds,
}

impl Instance {
    pub fn parse(json: &str) -> Result<Self> {
        let spec: InstanceSpec = serde_json::from_str(json)
            .map_err(|e| Error::Parse(format!("not a valid instance: {e}")))?;
        Self::from_spec(spec)
    }

    pub fn from_spec(spec: InstanceSpec) -> Result<Self> {
        let (kind, graph, bounds) = match &spec {
            InstanceSpec::Explicit(e) => {
                let g = Graph::new(e.n, e.edges.iter().map(|&[u, v]| (u, v)).collect())?;
                let b = DegreeBounds::for_graph(&g, e.lambda.clone())?;
                (InstanceKind::Explicit, g, b)
            }
            InstanceSpec::Caterpillar(c) => {
                let cs =
                    CaterpillarSpec::new(c.caterpillar.m.clone(), c.caterpillar.lambda.clone())?;
                let (g, b) = cs.build();
                (InstanceKind::Caterpillar(cs), g, b)
            }
            InstanceSpec::Cycle(c) => {
                let g = Graph::cycle(c.cycle.n)?;
                let b = DegreeBounds::for_graph(&g, c.cycle.lambda.clone())?;
                (InstanceKind::Cycle(c.cycle.n), g, b)
            }
        };
        Ok(Instance {
            spec,
            kind,
            graph,
            bounds,
        })
    }

    pub fn from_graph(graph: Graph, bounds: DegreeBounds) -> Self {
        Instance {
            spec: InstanceSpec::explicit(&graph, &bounds),
            kind: InstanceKind::Explicit,
            graph,
            bounds,
        }
    }

    pub fn from_caterpillar(spec: CaterpillarSpec) -> Self {
        let (graph, bounds) = spec.build();
        Instance {
            spec: InstanceSpec::caterpillar(&spec),
            kind: InstanceKind::Caterpillar(spec),
            graph,
            bounds,
        }
    }

    pub fn from_cycle(bounds: DegreeBounds) -> Result<Self> {
        Self::from_spec(InstanceSpec::cycle(bounds.len(), bounds.into_vec()))
    }

    /// Caterpillar shorthand with a leaf on every spine vertex.
    pub fn closed_form_spec(&self) -> Option<&CaterpillarSpec> {
        match &self.kind {
            InstanceKind::Caterpillar(c) if c.leaves.iter().all(|&m| m >= 1) => Some(c),
            _ => None,
        }
    }
}
