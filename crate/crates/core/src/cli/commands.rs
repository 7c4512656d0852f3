use std::f64::consts::TAU;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{derive_seed, wilson_interval, RunFile, SdcRunConfig, TeleportConfig, VerifyConfig, DEFAULT_SIGMAS};
use crate::sdc::{
    check_triplet, run_session, BitEntry, CheckKind, MessageBits, VerificationReport,
};
use crate::statevec::{fidelity, Amplitude, PureState};
use crate::teleport::{channel_state, correction_for, teleport, BellOutcome, CharlieBit, CorrectionOp};
use crate::Result;

/// A teleport trial whose fidelity falls below `1 − FIDELITY_FAILURE_TOL`
/// counts as a failure.
pub const FIDELITY_FAILURE_TOL: f64 = 1e-9;

/// Renders the correction table: one row per (Charlie, Bell) pair.
pub fn cmd_table() -> String {
    let mut out = String::from("charlie  bell      correction\n");
    for charlie in CharlieBit::ALL {
        for bell in BellOutcome::ALL {
            let op = correction_for(charlie, bell);
            let _ = writeln!(out, "{:<8} {:<9} {}", charlie.to_string(), format!("{bell:?}"), op);
        }
    }
    out
}

/// Haar-random qubit from two uniform samples: `cos θ` uniform in `[-1, 1]`
/// and a uniform relative phase.
pub fn haar_random_qubit<R: Rng + ?Sized>(rng: &mut R) -> PureState {
    let u: f64 = rng.gen();
    let phi = TAU * rng.gen::<f64>();
    // cos²(θ/2) = (1 + cos θ)/2 = 1 − u
    // libm keeps the trig bit-identical across targets and optimization levels
    let (sin, cos) = libm::sincos(phi);
    let a = Amplitude::new((1.0 - u).sqrt(), 0.0);
    let b = Amplitude::new(u.sqrt() * cos, u.sqrt() * sin);
    PureState::qubit(a, b).expect("unit norm by construction")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TeleportRecord {
    pub trial: usize,
    /// `[[re a, im a], [re b, im b]]` for the input `a|0⟩ + b|1⟩`.
    pub input: [[f64; 2]; 2],
    pub charlie: CharlieBit,
    pub bell: BellOutcome,
    pub correction: CorrectionOp,
    pub charlie_probability: f64,
    pub bell_probability: f64,
    pub fidelity: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchCount {
    pub charlie: CharlieBit,
    pub bell: BellOutcome,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TeleportSummary {
    pub trials: usize,
    pub counts: Vec<BranchCount>,
    pub mean_fidelity: f64,
    pub min_fidelity: f64,
    pub failures: usize,
}

pub fn cmd_teleport(config: &TeleportConfig) -> Result<RunFile<TeleportConfig, TeleportSummary, TeleportRecord>> {
    config.validate()?;
    let records = (0..config.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(config.seed, trial as u64));
            let input = haar_random_qubit(&mut rng);
            let r = teleport(&input, &mut rng)?;
            let amp = |i: usize| [input.amplitude(i).re, input.amplitude(i).im];
            Ok(TeleportRecord {
                trial,
                input: [amp(0), amp(1)],
                charlie: r.charlie,
                bell: r.bell,
                correction: r.correction,
                charlie_probability: r.records[0].probability,
                bell_probability: r.records[1].probability,
                fidelity: fidelity(&r.bob_state, &input)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut counts = [[0usize; 4]; 2];
    for r in &records {
        counts[r.charlie.index()][r.bell.index()] += 1;
    }
    let counts = CharlieBit::ALL
        .iter()
        .flat_map(|&c| BellOutcome::ALL.iter().map(move |&b| (c, b)))
        .map(|(charlie, bell)| BranchCount { charlie, bell, count: counts[charlie.index()][bell.index()] })
        .collect();
    let summary = TeleportSummary {
        trials: records.len(),
        counts,
        mean_fidelity: records.iter().map(|r| r.fidelity).sum::<f64>() / records.len() as f64,
        min_fidelity: records.iter().map(|r| r.fidelity).fold(f64::INFINITY, f64::min),
        failures: records.iter().filter(|r| r.fidelity < 1.0 - FIDELITY_FAILURE_TOL).count(),
    };
    Ok(RunFile::new("teleport", config.seed, *config, summary, records))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SdcSummary {
    pub message: MessageBits,
    pub decoded: Option<MessageBits>,
    pub accuracy: Option<f64>,
    pub bit_errors: Option<usize>,
    pub aborted: bool,
    pub aborted_reason: Option<String>,
    pub triplets_prepared: usize,
    pub verification: Option<VerificationReport>,
}

pub fn cmd_sdc(config: &SdcRunConfig) -> Result<RunFile<SdcRunConfig, SdcSummary, BitEntry>> {
    config.validate()?;
    let message = &config.session.message;
    let t = run_session(&config.session, config.seed)?;
    let summary = SdcSummary {
        message: message.clone(),
        accuracy: t.accuracy(message),
        bit_errors: t.decoded.as_ref().map(|d| d.bit_errors(message)),
        decoded: t.decoded,
        aborted: t.aborted_reason.is_some(),
        aborted_reason: t.aborted_reason,
        triplets_prepared: t.triplets_prepared,
        verification: t.verification,
    };
    Ok(RunFile::new("sdc", config.seed, config.clone(), summary, t.entries))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRecord {
    pub trial: usize,
    pub check: CheckKind,
    pub outcome: usize,
    pub failed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub trials: usize,
    pub z_tested: usize,
    pub z_failures: usize,
    pub z_rate: Option<f64>,
    pub z_interval: (f64, f64),
    pub x_tested: usize,
    pub x_failures: usize,
    pub x_rate: Option<f64>,
    pub x_interval: (f64, f64),
    pub failure_rate: f64,
    /// Width of the Wilson intervals, in standard deviations.
    pub sigmas: f64,
    pub passed: bool,
}

/// Prepares `trials` triplets under the adversary and tests every one.
pub fn cmd_verify(config: &VerifyConfig) -> Result<RunFile<VerifyConfig, VerifySummary, VerifyRecord>> {
    config.validate()?;
    let clean = channel_state();
    let checks = (0..config.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(config.seed, trial as u64));
            let triplet = config.adversary.tamper(clean.clone(), &mut rng)?;
            let kind = CheckKind::choose(config.policy.z_test_weight, &mut rng);
            check_triplet(&triplet, kind, &mut rng)
        })
        .collect::<Result<Vec<_>>>()?;
    let report = VerificationReport::from_checks(&checks, config.policy.failure_threshold);
    let summary = VerifySummary {
        trials: config.trials,
        z_tested: report.z_tested,
        z_failures: report.z_failures,
        z_rate: report.z_failure_rate(),
        z_interval: wilson_interval(report.z_failures, report.z_tested, DEFAULT_SIGMAS),
        x_tested: report.x_tested,
        x_failures: report.x_failures,
        x_rate: report.x_failure_rate(),
        x_interval: wilson_interval(report.x_failures, report.x_tested, DEFAULT_SIGMAS),
        failure_rate: report.failure_rate,
        sigmas: DEFAULT_SIGMAS,
        passed: report.passed,
    };
    let records = checks
        .into_iter()
        .enumerate()
        .map(|(trial, c)| VerifyRecord { trial, check: c.kind, outcome: c.outcome, failed: c.failed })
        .collect();
    Ok(RunFile::new("verify", config.seed, *config, summary, records))
}
