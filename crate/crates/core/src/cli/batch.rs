//! `bdc batch`: one instance JSON per input line, one result JSON per output
//! line, in input order.

use std::io::{BufRead, Write};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::recursion::SphereCache;

use super::compute::{compute, ComputeRequest, ComputeResult, Method};
use super::instance::Instance;

/// Lines handed to the worker pool at a time.
pub const CHUNK: usize = 256;

#[derive(Debug, Clone, Copy)]
pub struct BatchOptions {
    pub method: Method,
    pub face_cap: usize,
    pub cross_check: bool,
    pub timings: bool,
    pub jobs: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LineError {
    pub line: usize,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq)]
pub enum BatchLine {
    Result(ComputeResult),
    Error(LineError),
}

impl BatchLine {
    pub fn to_json(&self) -> String {
        match self {
            BatchLine::Result(r) => r.to_json(),
            BatchLine::Error(e) => serde_json::to_string(e).expect("errors always serialize"),
        }
    }

    pub fn is_failure(&self) -> bool {
        match self {
            BatchLine::Result(r) => !r.is_consistent(),
            BatchLine::Error(_) => true,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BatchSummary {
    pub lines: usize,
    pub failures: usize,
}

/// Computes one input line. `line` is 1-based.
pub fn process_line(
    text: &str,
    line: usize,
    opts: &BatchOptions,
    cache: &SphereCache,
) -> BatchLine {
    let outcome = Instance::parse(text).and_then(|instance| {
        let req = ComputeRequest {
            instance,
            method: opts.method,
            face_cap: opts.face_cap,
            cross_check: opts.cross_check,
            timings: opts.timings,
        };
        compute(&req, cache)
    });
    match outcome {
        Ok(r) => BatchLine::Result(r),
        Err(e) => BatchLine::Error(LineError {
            line,
            error: e.to_string(),
        }),
    }
}

/// Streams `input` to `output` chunk by chunk. Blank lines are skipped;
/// error objects carry physical line numbers.
pub fn cmd_batch<R: BufRead, W: Write>(
    input: R,
    mut output: W,
    opts: &BatchOptions,
    cache: &SphereCache,
) -> Result<BatchSummary> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidParams(e.to_string()))?;
    let mut summary = BatchSummary::default();
    let mut lines = input.lines().enumerate();
    loop {
        let mut chunk = Vec::with_capacity(CHUNK);
        for (i, text) in lines.by_ref() {
            let text = text?;
            if !text.trim().is_empty() {
                chunk.push((i + 1, text));
            }
            if chunk.len() == CHUNK {
                break;
            }
        }
        if chunk.is_empty() {
            break;
        }
        let results: Vec<BatchLine> = pool.install(|| {
            chunk
                .par_iter()
                .map(|(line, text)| process_line(text, *line, opts, cache))
                .collect()
        });
        for r in &results {
            writeln!(output, "{}", r.to_json())?;
            summary.lines += 1;
            summary.failures += usize::from(r.is_failure());
        }
    }
    output.flush()?;
    Ok(summary)
}
