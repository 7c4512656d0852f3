use std::sync::OnceLock;

use rand::seq::index;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::statevec::{measure_with, MeasurementBasis, PureState};
use crate::{Result, SimError};

/// How a batch of triplets is sampled and judged before use.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VerificationPolicy {
    /// Fraction of the batch sacrificed to testing, in `(0, 1)`.
    pub sacrifice_fraction: f64,
    /// Lower bound on the number of sacrificed triplets.
    pub min_sacrifice: usize,
    /// Probability that a sacrificed triplet gets the Z-parity check rather
    /// than the X-agreement check.
    pub z_test_weight: f64,
    /// Largest failure rate that still passes, in `[0, 1)`.
    pub failure_threshold: f64,
}

impl Default for VerificationPolicy {
    fn default() -> Self {
        Self { sacrifice_fraction: 0.25, min_sacrifice: 20, z_test_weight: 0.5, failure_threshold: 0.0 }
    }
}

impl VerificationPolicy {
    pub fn validate(&self) -> Result<()> {
        let bad = |what: String| Err(SimError::InvalidParameter(what));
        if !(self.sacrifice_fraction > 0.0 && self.sacrifice_fraction < 1.0) {
            return bad(format!("sacrifice fraction {} outside (0, 1)", self.sacrifice_fraction));
        }
        if self.min_sacrifice == 0 {
            return bad("minimum sacrifice must be positive".into());
        }
        if !(0.0..=1.0).contains(&self.z_test_weight) {
            return bad(format!("Z-test weight {} outside [0, 1]", self.z_test_weight));
        }
        if !(0.0..1.0).contains(&self.failure_threshold) {
            return bad(format!("failure threshold {} outside [0, 1)", self.failure_threshold));
        }
        Ok(())
    }

    /// Triplets consumed when verifying a batch of `batch`:
    /// `max(⌈fraction · batch⌉, min_sacrifice)`.
    pub fn sacrifice_count(&self, batch: usize) -> usize {
        ((self.sacrifice_fraction * batch as f64).ceil() as usize).max(self.min_sacrifice)
    }

    /// Batch size that leaves at least `payload` triplets after verification.
    pub fn batch_for(&self, payload: usize) -> usize {
        (payload as f64 / (1.0 - self.sacrifice_fraction)).ceil() as usize + self.min_sacrifice
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CheckKind {
    /// All three qubits in `{|0⟩, |1⟩}`; the bits must have even parity.
    ZParity,
    /// All three qubits in `{|+⟩, |−⟩}`; the results must all agree.
    XAgreement,
}

impl CheckKind {
    fn basis(self) -> &'static MeasurementBasis {
        static Z: OnceLock<MeasurementBasis> = OnceLock::new();
        static X: OnceLock<MeasurementBasis> = OnceLock::new();
        let cell = match self {
            CheckKind::ZParity => &Z,
            CheckKind::XAgreement => &X,
        };
        cell.get_or_init(|| {
            let single = |slot| match self {
                CheckKind::ZParity => MeasurementBasis::computational(vec![slot]).expect("one target"),
                CheckKind::XAgreement => MeasurementBasis::plus_minus(slot),
            };
            MeasurementBasis::product(&[single(0), single(1), single(2)]).expect("distinct slots")
        })
    }

    /// Z-parity with probability `z_weight`, X-agreement otherwise.
    pub fn choose<R: Rng + ?Sized>(z_weight: f64, rng: &mut R) -> Self {
        if rng.gen::<f64>() < z_weight {
            CheckKind::ZParity
        } else {
            CheckKind::XAgreement
        }
    }

    /// Whether the `A, B, C` outcome bits (big-endian) fail this check. For
    /// the X check, bit 0 is `+` and bit 1 is `−`.
    pub fn fails(self, outcome: usize) -> bool {
        match self {
            CheckKind::ZParity => outcome.count_ones() % 2 == 1,
            CheckKind::XAgreement => outcome != 0b000 && outcome != 0b111,
        }
    }
}

/// One destructive test of a sacrificed triplet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripletCheck {
    pub kind: CheckKind,
    /// Outcome bits over `A, B, C`, big-endian.
    pub outcome: usize,
    pub failed: bool,
}

pub fn check_triplet<R: Rng + ?Sized>(triplet: &PureState, kind: CheckKind, rng: &mut R) -> Result<TripletCheck> {
    if triplet.num_qubits() != 3 {
        return Err(SimError::DimMismatch { expected: 3, got: triplet.num_qubits() });
    }
    let m = measure_with(triplet, kind.basis(), rng)?;
    Ok(TripletCheck { kind, outcome: m.outcome, failed: kind.fails(m.outcome) })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub tested: usize,
    pub z_tested: usize,
    pub x_tested: usize,
    pub z_failures: usize,
    pub x_failures: usize,
    pub failure_rate: f64,
    pub passed: bool,
}

impl VerificationReport {
    pub fn from_checks(checks: &[TripletCheck], threshold: f64) -> Self {
        let count = |kind, failed_only: bool| {
            checks.iter().filter(|c| c.kind == kind && (!failed_only || c.failed)).count()
        };
        let tested = checks.len();
        let z_failures = count(CheckKind::ZParity, true);
        let x_failures = count(CheckKind::XAgreement, true);
        let failure_rate = if tested == 0 { 0.0 } else { (z_failures + x_failures) as f64 / tested as f64 };
        Self {
            tested,
            z_tested: count(CheckKind::ZParity, false),
            x_tested: count(CheckKind::XAgreement, false),
            z_failures,
            x_failures,
            failure_rate,
            passed: failure_rate <= threshold,
        }
    }

    pub fn z_failure_rate(&self) -> Option<f64> {
        (self.z_tested > 0).then(|| self.z_failures as f64 / self.z_tested as f64)
    }

    pub fn x_failure_rate(&self) -> Option<f64> {
        (self.x_tested > 0).then(|| self.x_failures as f64 / self.x_tested as f64)
    }
}

/// Sacrifices a uniformly random subset of the batch, tests each sacrificed
/// triplet, and hands back the untouched survivors in batch order.
pub fn verify_channel<R: Rng + ?Sized>(
    triplets: Vec<PureState>,
    policy: &VerificationPolicy,
    rng: &mut R,
) -> Result<(VerificationReport, Vec<PureState>)> {
    policy.validate()?;
    let required = policy.sacrifice_count(triplets.len());
    if required > triplets.len() {
        return Err(SimError::BatchTooSmall { batch: triplets.len(), required });
    }
    let mut chosen = index::sample(rng, triplets.len(), required).into_vec();
    chosen.sort_unstable();

    let mut checks = Vec::with_capacity(required);
    let mut survivors = Vec::with_capacity(triplets.len() - required);
    let mut next = chosen.iter().peekable();
    for (i, t) in triplets.into_iter().enumerate() {
        if next.peek() == Some(&&i) {
            next.next();
            let kind = CheckKind::choose(policy.z_test_weight, rng);
            checks.push(check_triplet(&t, kind, rng)?);
        } else {
            survivors.push(t);
        }
    }
    Ok((VerificationReport::from_checks(&checks, policy.failure_threshold), survivors))
}

/// Tests every triplet in the batch (nothing survives). Used to measure
/// detection rates.
pub fn check_all<R: Rng + ?Sized>(
    triplets: &[PureState],
    policy: &VerificationPolicy,
    rng: &mut R,
) -> Result<(VerificationReport, Vec<TripletCheck>)> {
    policy.validate()?;
    let checks = triplets
        .iter()
        .map(|t| {
            let kind = CheckKind::choose(policy.z_test_weight, rng);
            check_triplet(t, kind, rng)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((VerificationReport::from_checks(&checks, policy.failure_threshold), checks))
}
