//! `cqt`: run teleportation trials, secure-direct-communication sessions and
//! channel verification experiments.
//!
//! Exit codes: 0 on success (including protocol aborts), 1 when a teleport
//! trial loses fidelity or a run fails, 2 on an invalid configuration.

use std::fs::File;
use std::io::{self, BufWriter};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use cqt::cli::{
    cmd_sdc, cmd_table, cmd_teleport, cmd_verify, parse_adversary, write_run_file, RunFile,
    SdcRunConfig, TeleportConfig, VerifyConfig,
};
use cqt::sdc::{MessageBits, SessionConfig, SessionMode, VerificationPolicy};
use cqt::SimError;

#[derive(Parser)]
#[command(name = "cqt", version, about = "Controlled teleportation and secure direct communication simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Teleport Haar-random qubits and report fidelity and outcome counts.
    Teleport {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Run one permission-gated secure direct communication session.
    Sdc {
        /// Message bits, e.g. 101001.
        #[arg(long)]
        message: String,
        #[arg(long, action = clap::ArgAction::Set)]
        permission: bool,
        /// Skip Bob's correction as if Charlie's broadcast never reached him.
        #[arg(long)]
        withhold_control: bool,
        #[command(flatten)]
        adversary: AdversaryArgs,
        #[command(flatten)]
        policy: PolicyArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Prepare triplets under an adversary and test every one of them.
    Verify {
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[command(flatten)]
        adversary: AdversaryArgs,
        #[command(flatten)]
        policy: PolicyArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Print Bob's correction table.
    Table,
}

#[derive(Args)]
struct Common {
    /// Run seed; falls back to $SIM_SEED, then 0.
    #[arg(long, env = "SIM_SEED", default_value_t = 0)]
    seed: u64,
    /// Write the JSON run file here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AdversaryArgs {
    /// none, ir-z, ir-x or depol
    #[arg(long, default_value = "none")]
    adversary: String,
    /// Depolarizing probability (depol only).
    #[arg(long)]
    p: Option<f64>,
    /// Attacked particle: A or B.
    #[arg(long, default_value = "B")]
    target: String,
}

#[derive(Args)]
struct PolicyArgs {
    /// Fraction of triplets sacrificed to verification [default: 0.25]
    #[arg(long)]
    sacrifice_fraction: Option<f64>,
    /// Fewest triplets sacrificed, whatever the fraction [default: 20]
    #[arg(long)]
    min_sacrifice: Option<usize>,
    /// Probability that a sacrificed triplet gets the Z-parity check [default: 0.5]
    #[arg(long)]
    z_weight: Option<f64>,
    /// Largest failure rate that still passes [default: 0]
    #[arg(long)]
    threshold: Option<f64>,
}

impl PolicyArgs {
    fn resolve(&self) -> VerificationPolicy {
        let d = VerificationPolicy::default();
        VerificationPolicy {
            sacrifice_fraction: self.sacrifice_fraction.unwrap_or(d.sacrifice_fraction),
            min_sacrifice: self.min_sacrifice.unwrap_or(d.min_sacrifice),
            z_test_weight: self.z_weight.unwrap_or(d.z_test_weight),
            failure_threshold: self.threshold.unwrap_or(d.failure_threshold),
        }
    }
}

enum Failure {
    Config(SimError),
    Run(String),
}

impl From<SimError> for Failure {
    fn from(e: SimError) -> Self {
        match e {
            SimError::InvalidParameter(_) | SimError::InvalidCount(_) | SimError::BatchTooSmall { .. } => {
                Failure::Config(e)
            }
            other => Failure::Run(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Run(e.to_string())
    }
}

fn write_out<C: Serialize, S: Serialize, R: Serialize>(path: Option<&Path>, file: &RunFile<C, S, R>) -> Result<(), Failure> {
    if let Some(path) = path {
        write_run_file(BufWriter::new(File::create(path)?), file)?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Table => {
            print!("{}", cmd_table());
            Ok(ExitCode::SUCCESS)
        }
        Command::Teleport { trials, common } => {
            let file = cmd_teleport(&TeleportConfig { trials, seed: common.seed })?;
            write_out(common.out.as_deref(), &file)?;
            let s = &file.summary;
            println!("trials        {}", s.trials);
            println!("min fidelity  {:.17}", s.min_fidelity);
            println!("mean fidelity {:.17}", s.mean_fidelity);
            for c in &s.counts {
                println!("  C={} {:<9} {}", c.charlie, format!("{:?}", c.bell), c.count);
            }
            if s.failures > 0 {
                eprintln!("{} trial(s) below fidelity threshold", s.failures);
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Sdc { message, permission, withhold_control, adversary, policy, common } => {
            let message: MessageBits = message.parse()?;
            let mut session = SessionConfig::new(message, permission);
            session.adversary = parse_adversary(&adversary.adversary, adversary.p, &adversary.target)?;
            session.policy = policy.resolve();
            if withhold_control {
                session.mode = SessionMode::WithheldControlBroadcast;
            }
            let file = cmd_sdc(&SdcRunConfig { seed: common.seed, session })?;
            write_out(common.out.as_deref(), &file)?;
            let s = &file.summary;
            println!("message   {}", s.message);
            match (&s.decoded, s.accuracy) {
                (Some(d), Some(acc)) => {
                    println!("decoded   {d}");
                    println!("accuracy  {acc}");
                }
                _ => println!("aborted   {}", s.aborted_reason.as_deref().unwrap_or("unknown")),
            }
            if let Some(v) = &s.verification {
                println!(
                    "verification tested={} z_failures={} x_failures={} passed={}",
                    v.tested, v.z_failures, v.x_failures, v.passed
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { trials, adversary, policy, common } => {
            let config = VerifyConfig {
                trials,
                seed: common.seed,
                adversary: parse_adversary(&adversary.adversary, adversary.p, &adversary.target)?,
                policy: policy.resolve(),
            };
            let file = cmd_verify(&config)?;
            write_out(common.out.as_deref(), &file)?;
            let s = &file.summary;
            let show = |rate: Option<f64>| rate.map_or("n/a".to_string(), |r| format!("{r:.6}"));
            println!(
                "Z-test  {}/{} rate {} interval [{:.6}, {:.6}]",
                s.z_failures, s.z_tested, show(s.z_rate), s.z_interval.0, s.z_interval.1
            );
            println!(
                "X-test  {}/{} rate {} interval [{:.6}, {:.6}]",
                s.x_failures, s.x_tested, show(s.x_rate), s.x_interval.0, s.x_interval.1
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Config(e)) => {
            eprintln!("invalid configuration: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Run(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
