use std::fs::File;
use std::io::{self, BufReader, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use bdcomplex::cli::batch::{cmd_batch, BatchOptions};
use bdcomplex::cli::cache::{PersistentCache, CACHE_ENV};
use bdcomplex::cli::compute::{compute, render_table, ComputeRequest, Method};
use bdcomplex::cli::generate::{cmd_generate, Family};
use bdcomplex::cli::instance::Instance;
use bdcomplex::cli::verify::{cmd_verify, Sweep};
use bdcomplex::{SphereCache, DEFAULT_FACE_CAP};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Bounded degree complexes of graphs.
#[derive(Parser)]
#[command(name = "bdc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Recursion,
    ClosedForm,
    Homology,
    Auto,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Recursion => Method::Recursion,
            MethodArg::ClosedForm => Method::ClosedForm,
            MethodArg::Homology => Method::Homology,
            MethodArg::Auto => Method::Auto,
        }
    }
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = DEFAULT_FACE_CAP, global = true)]
    face_cap: usize,
    #[arg(long, value_enum, default_value = "json", global = true)]
    output: Output,
}

#[derive(Args)]
struct MethodOpts {
    #[arg(long, value_enum, default_value = "auto")]
    method: MethodArg,
    /// Run every applicable method and report whether they agree
    #[arg(long)]
    check: bool,
    /// Include per-phase timings (output is then not reproducible)
    #[arg(long)]
    timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the homotopy type of one instance
    Compute {
        /// Instance JSON file; standard input if omitted or "-"
        file: Option<PathBuf>,
        #[command(flatten)]
        method: MethodOpts,
        #[command(flatten)]
        common: Common,
    },
    /// Compute every instance of a JSON-lines file
    Batch {
        /// JSON-lines file; standard input if "-"
        file: PathBuf,
        #[command(flatten)]
        method: MethodOpts,
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Check all methods against homology over an instance family
    Verify {
        #[command(subcommand)]
        sweep: SweepArg,
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1, global = true)]
        jobs: usize,
    },
    /// Print instance JSON for a standard family
    Generate {
        #[command(subcommand)]
        family: FamilyArg,
    },
}

#[derive(Subcommand)]
enum SweepArg {
    /// All forests up to isomorphism
    Forests {
        #[arg(long, default_value_t = 5)]
        max_edges: usize,
        #[arg(long, default_value_t = 2)]
        max_bound: u32,
    },
    /// Caterpillars, also through the closed form
    Caterpillars {
        #[arg(long, default_value_t = 3)]
        max_spine: usize,
        #[arg(long, default_value_t = 1)]
        min_leaves: usize,
        #[arg(long, default_value_t = 3)]
        max_leaves: usize,
        #[arg(long, default_value_t = 3)]
        max_bound: u32,
    },
    /// Cycles, also through the path reduction
    Cycles {
        #[arg(long, default_value_t = 3)]
        min_n: usize,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_bound: u32,
    },
    /// Seeded random forests
    Random {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 9)]
        max_edges: usize,
        #[arg(long, default_value_t = 3)]
        max_bound: u32,
    },
}

#[derive(Subcommand)]
enum FamilyArg {
    /// Path on n vertices, all bounds 1 unless given
    Path {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        lambda: Option<Vec<u32>>,
    },
    /// Cycle on n vertices, all bounds 1 unless given
    Cycle {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        lambda: Option<Vec<u32>>,
    },
    /// Caterpillar with m_i leaves on spine vertex i; leaves get bound 1
    Caterpillar {
        /// Leaf counts, comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        m: Vec<usize>,
        /// Spine bounds, comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        lambda: Vec<u32>,
    },
    /// Star with r leaves and center bound k
    Star {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: u32,
    },
    /// One seeded random forest with random bounds
    Random {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 9)]
        max_edges: usize,
        #[arg(long, default_value_t = 3)]
        max_bound: u32,
    },
}

enum Failure {
    Instance(String),
    Usage(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// The memo cache named by `BDC_CACHE`, if set.
fn open_cache() -> Option<PersistentCache> {
    let path = std::env::var_os(CACHE_ENV).map(PathBuf::from)?;
    let cache = PersistentCache::open(path);
    for w in &cache.warnings {
        eprintln!("warning: {w}");
    }
    Some(cache)
}

fn save_cache(cache: Option<PersistentCache>) {
    if let Some(mut c) = cache {
        if let Err(e) = c.save() {
            eprintln!("warning: cannot write cache {}: {e}", c.path().display());
        }
    }
}

fn input(file: Option<&PathBuf>) -> io::Result<Box<dyn io::BufRead>> {
    Ok(match file {
        Some(p) if p.as_os_str() != "-" => Box::new(BufReader::new(File::open(p)?)),
        _ => Box::new(BufReader::new(io::stdin())),
    })
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let mut stdout = io::stdout().lock();
    match cli.command {
        Command::Compute {
            file,
            method,
            common,
        } => {
            let mut text = String::new();
            input(file.as_ref())?.read_to_string(&mut text)?;
            let instance = Instance::parse(&text).map_err(|e| Failure::Instance(e.to_string()))?;
            let req = ComputeRequest {
                instance,
                method: method.method.into(),
                face_cap: common.face_cap,
                cross_check: method.check,
                timings: method.timings,
            };
            let cache = open_cache();
            let fallback = SphereCache::new();
            let memo = cache.as_ref().map_or(&fallback, |c| &c.cache);
            let result = compute(&req, memo).map_err(|e| Failure::Instance(e.to_string()));
            save_cache(cache);
            let result = result?;
            match common.output {
                Output::Json => writeln!(stdout, "{}", result.to_json())?,
                Output::Table => write!(stdout, "{}", render_table(std::slice::from_ref(&result)))?,
            }
            Ok(result.is_consistent())
        }
        Command::Batch {
            file,
            method,
            common,
            jobs,
        } => {
            if let Output::Table = common.output {
                return Err(Failure::Usage("batch writes JSON lines only".into()));
            }
            let opts = BatchOptions {
                method: method.method.into(),
                face_cap: common.face_cap,
                cross_check: method.check,
                timings: method.timings,
                jobs,
            };
            let reader = input(Some(&file))?;
            let cache = open_cache();
            let fallback = SphereCache::new();
            let memo = cache.as_ref().map_or(&fallback, |c| &c.cache);
            let summary = cmd_batch(reader, &mut stdout, &opts, memo)
                .map_err(|e| Failure::Usage(e.to_string()));
            save_cache(cache);
            Ok(summary?.failures == 0)
        }
        Command::Verify {
            sweep,
            common,
            jobs,
        } => {
            let sweep = match sweep {
                SweepArg::Forests {
                    max_edges,
                    max_bound,
                } => Sweep::Forests {
                    max_edges,
                    max_bound,
                },
                SweepArg::Caterpillars {
                    max_spine,
                    min_leaves,
                    max_leaves,
                    max_bound,
                } => Sweep::Caterpillars {
                    max_spine,
                    min_leaves,
                    max_leaves,
                    max_bound,
                },
                SweepArg::Cycles {
                    min_n,
                    max_n,
                    max_bound,
                } => Sweep::Cycles {
                    min_n,
                    max_n,
                    max_bound,
                },
                SweepArg::Random {
                    seed,
                    count,
                    max_edges,
                    max_bound,
                } => Sweep::Random {
                    seed,
                    count,
                    max_edges,
                    max_bound,
                },
            };
            let cache = open_cache();
            let fallback = SphereCache::new();
            let memo = cache.as_ref().map_or(&fallback, |c| &c.cache);
            let report = cmd_verify(&sweep, jobs, common.face_cap, memo)
                .map_err(|e| Failure::Usage(e.to_string()));
            save_cache(cache);
            let report = report?;
            match common.output {
                Output::Json => writeln!(stdout, "{}", report.to_json())?,
                Output::Table => write!(stdout, "{}", report.render_table())?,
            }
            Ok(report.passed())
        }
        Command::Generate { family } => {
            let family = match family {
                FamilyArg::Path { n, lambda } => Family::Path { n, lambda },
                FamilyArg::Cycle { n, lambda } => Family::Cycle { n, lambda },
                FamilyArg::Caterpillar { m, lambda } => Family::Caterpillar { m, lambda },
                FamilyArg::Star { r, k } => Family::Star { r, k },
                FamilyArg::Random {
                    seed,
                    max_edges,
                    max_bound,
                } => Family::Random {
                    seed,
                    max_edges,
                    max_bound,
                },
            };
            let spec = cmd_generate(&family).map_err(|e| Failure::Usage(e.to_string()))?;
            writeln!(stdout, "{}", spec.to_json())?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Instance(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
