//! Commands behind the `bdc` binary: compute, verify, generate and batch,
//! plus the instance format and the on-disk memo cache.

pub mod batch;
pub mod cache;
pub mod compute;
pub mod generate;
pub mod instance;
pub mod verify;

pub use batch::{cmd_batch, BatchOptions, BatchSummary};
pub use cache::PersistentCache;
pub use compute::{cmd_compute, compute, ComputeRequest, ComputeResult, Method, MethodUsed};
pub use generate::{cmd_generate, Family};
pub use instance::{Instance, InstanceSpec};
pub use verify::{cmd_verify, Sweep, VerifyReport};
