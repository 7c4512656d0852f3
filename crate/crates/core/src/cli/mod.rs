//! Batch harness behind the `cqt` binary.
//!
//! Each `cmd_*` function takes a validated config and returns a [`RunFile`]:
//! a deterministic, schema-versioned JSON document holding a config echo,
//! a summary and per-trial records. Identical configs (seed included) give
//! byte-identical files; trials run on a worker pool with per-trial seeds
//! derived from the run seed, and records are always written in trial order.

mod commands;
mod config;
mod output;
mod seeds;
mod stats;

pub use commands::{
    cmd_sdc, cmd_table, cmd_teleport, cmd_verify, haar_random_qubit, BranchCount, SdcSummary,
    TeleportRecord, TeleportSummary, VerifyRecord, VerifySummary, FIDELITY_FAILURE_TOL,
};
pub use config::{parse_adversary, RunConfig, SdcRunConfig, TeleportConfig, VerifyConfig};
pub use output::{write_run_file, RunFile, SCHEMA_VERSION};
pub use seeds::{derive_seed, splitmix64};
pub use stats::{binomial_sigma, wilson_interval, DEFAULT_SIGMAS};
