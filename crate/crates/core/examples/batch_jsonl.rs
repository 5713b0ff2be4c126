//! JSON-lines in, JSON-lines out, in input order. Malformed lines become
//! error objects.

use bdcomplex::cli::batch::{cmd_batch, BatchOptions};
use bdcomplex::cli::compute::Method;
use bdcomplex::{SphereCache, DEFAULT_FACE_CAP};

const INPUT: &str = r#"{"caterpillar":{"m":[2,1],"lambda":[2,1]}}
{"n":4,"edges":[[0,1],[1,2],[2,3]],"lambda":[1,1,1,1]}
{"cycle":{"n":5,"lambda":[1,1,1,1,1]}}
{"cycle":{"n":3,"lambda":[1,1,2]}}
{"n":2,"edges":[[0,0]],"lambda":[1,1]}
"#;

fn main() -> bdcomplex::Result<()> {
    let opts = BatchOptions {
        method: Method::Auto,
        face_cap: DEFAULT_FACE_CAP,
        cross_check: true,
        timings: false,
        jobs: 4,
    };
    let summary = cmd_batch(
        INPUT.as_bytes(),
        std::io::stdout().lock(),
        &opts,
        &SphereCache::new(),
    )?;
    eprintln!("{} lines, {} failures", summary.lines, summary.failures);
    Ok(())
}
