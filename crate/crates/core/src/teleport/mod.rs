//! Controlled teleportation of one qubit from Alice to Bob, gated by
//! Charlie.
//!
//! The channel triplet `|ξ⟩ = ½(|000⟩+|110⟩+|011⟩+|101⟩)` over `A, B, C` is
//! joined with Alice's input `|ψ⟩_M`. Charlie measures `C` in the
//! computational basis, which leaves `A, B` in `Φ⁺` (bit 0) or `Ψ⁺` (bit 1).
//! Alice then measures `M, A` in the Bell basis, and Bob applies one of
//! `I, X, Z, ZX` chosen from both broadcasts.

mod branches;
mod types;

pub use branches::{enumerate_branches, joint_outcome_probabilities, uncorrected_bob_ensemble, Branch};
pub use types::{
    BasisKind, BellOutcome, CharlieBit, CorrectionOp, MeasurementRecord, Party, QubitRegisterMap,
};

use std::f64::consts::FRAC_1_SQRT_2;
use std::sync::OnceLock;

use crate::statevec::{
    apply_gate, measure_with, tensor, Amplitude, MeasurementBasis, OutcomeSampler, PureState,
};
use crate::{Result, SimError};

/// `½(|000⟩ + |110⟩ + |011⟩ + |101⟩)` over `A, B, C`.
pub fn channel_state() -> PureState {
    let mut amps = vec![Amplitude::new(0.0, 0.0); 8];
    for idx in [0b000, 0b110, 0b011, 0b101] {
        amps[idx] = Amplitude::new(0.5, 0.0);
    }
    PureState::from_amplitudes(3, amps).expect("channel amplitudes are normalized")
}

/// Bell state for `outcome` over two qubits.
pub fn bell_state(outcome: BellOutcome) -> PureState {
    let h = FRAC_1_SQRT_2;
    let (idx, sign) = match outcome {
        BellOutcome::PhiPlus => ([0b00, 0b11], 1.0),
        BellOutcome::PsiPlus => ([0b01, 0b10], 1.0),
        BellOutcome::PhiMinus => ([0b00, 0b11], -1.0),
        BellOutcome::PsiMinus => ([0b01, 0b10], -1.0),
    };
    let mut amps = vec![Amplitude::new(0.0, 0.0); 4];
    amps[idx[0]] = Amplitude::new(h, 0.0);
    amps[idx[1]] = Amplitude::new(sign * h, 0.0);
    PureState::from_amplitudes(2, amps).expect("Bell amplitudes are normalized")
}

/// Bell basis on the `M, A` slots of the post-control state, enumerated as
/// `Φ⁺, Ψ⁺, Φ⁻, Ψ⁻`.
pub fn bell_basis() -> MeasurementBasis {
    bell_basis_ref().clone()
}

fn bell_basis_ref() -> &'static MeasurementBasis {
    static BASIS: OnceLock<MeasurementBasis> = OnceLock::new();
    BASIS.get_or_init(|| {
        let map = QubitRegisterMap::CANONICAL.without_control();
        let states = BellOutcome::ALL.iter().map(|&o| bell_state(o)).collect();
        MeasurementBasis::new(vec![map.m_slot, map.a_slot], states).expect("Bell states are orthonormal")
    })
}

fn control_basis() -> &'static MeasurementBasis {
    static BASIS: OnceLock<MeasurementBasis> = OnceLock::new();
    BASIS.get_or_init(|| {
        MeasurementBasis::computational(vec![QubitRegisterMap::CANONICAL.c_slot]).expect("one target")
    })
}

/// `|ψ⟩_M ⊗ |ξ⟩_ABC` in the canonical layout.
pub fn joint_state(input: &PureState) -> Result<PureState> {
    joint_state_with(input, &channel_state())
}

/// Like [`joint_state`], but over a caller-supplied (possibly tampered)
/// channel triplet.
pub fn joint_state_with(input: &PureState, channel: &PureState) -> Result<PureState> {
    if input.num_qubits() != 1 {
        return Err(SimError::DimMismatch { expected: 1, got: input.num_qubits() });
    }
    if channel.num_qubits() != 3 {
        return Err(SimError::DimMismatch { expected: 3, got: channel.num_qubits() });
    }
    Ok(tensor(input, channel))
}

/// Charlie's broadcast and the remaining `M, A, B` state.
#[derive(Debug, Clone, PartialEq)]
pub struct ControlMeasurement {
    pub bit: CharlieBit,
    pub probability: f64,
    pub mab: PureState,
}

/// Charlie measures `C` in `{|0⟩, |1⟩}`; the measured slot is dropped.
pub fn charlie_measure<S>(joint: &PureState, sampler: &mut S) -> Result<ControlMeasurement>
where
    S: OutcomeSampler + ?Sized,
{
    if joint.num_qubits() != 4 {
        return Err(SimError::DimMismatch { expected: 4, got: joint.num_qubits() });
    }
    let m = measure_with(joint, control_basis(), sampler)?;
    Ok(ControlMeasurement {
        bit: CharlieBit::from_index(m.outcome),
        probability: m.probability,
        mab: m.residual.expect("three qubits remain after measuring C"),
    })
}

/// Alice's broadcast and Bob's (uncorrected) qubit.
#[derive(Debug, Clone, PartialEq)]
pub struct BellMeasurement {
    pub outcome: BellOutcome,
    pub probability: f64,
    pub bob: PureState,
}

/// Alice measures `M, A` in the Bell basis; both slots are dropped.
pub fn alice_bell_measure<S>(mab: &PureState, sampler: &mut S) -> Result<BellMeasurement>
where
    S: OutcomeSampler + ?Sized,
{
    if mab.num_qubits() != 3 {
        return Err(SimError::DimMismatch { expected: 3, got: mab.num_qubits() });
    }
    let m = measure_with(mab, bell_basis_ref(), sampler)?;
    Ok(BellMeasurement {
        outcome: BellOutcome::from_index(m.outcome),
        probability: m.probability,
        bob: m.residual.expect("one qubit remains after the Bell measurement"),
    })
}

/// Bob's recovery operator for each pair of broadcasts.
pub fn correction_for(charlie: CharlieBit, bell: BellOutcome) -> CorrectionOp {
    use BellOutcome::*;
    use CharlieBit::*;
    use CorrectionOp as C;
    match (charlie, bell) {
        (Zero, PhiPlus) => C::I,
        (Zero, PsiPlus) => C::X,
        (Zero, PhiMinus) => C::Z,
        (Zero, PsiMinus) => C::ZX,
        (One, PhiPlus) => C::X,
        (One, PsiPlus) => C::I,
        (One, PhiMinus) => C::ZX,
        (One, PsiMinus) => C::Z,
    }
}

pub fn apply_correction(bob: &PureState, op: CorrectionOp) -> Result<PureState> {
    if bob.num_qubits() != 1 {
        return Err(SimError::DimMismatch { expected: 1, got: bob.num_qubits() });
    }
    apply_gate(bob, &op.matrix(), &[0])
}

/// Outcome of one controlled teleportation.
#[derive(Debug, Clone, PartialEq)]
pub struct TeleportResult {
    pub charlie: CharlieBit,
    pub bell: BellOutcome,
    pub correction: CorrectionOp,
    pub bob_state: PureState,
    /// Charlie's broadcast, then Alice's.
    pub records: Vec<MeasurementRecord>,
}

/// Teleports `input` through a fresh channel triplet.
pub fn teleport<S>(input: &PureState, sampler: &mut S) -> Result<TeleportResult>
where
    S: OutcomeSampler + ?Sized,
{
    teleport_through(input, &channel_state(), sampler)
}

/// Teleports `input` through the given channel triplet.
pub fn teleport_through<S>(input: &PureState, channel: &PureState, sampler: &mut S) -> Result<TeleportResult>
where
    S: OutcomeSampler + ?Sized,
{
    let joint = joint_state_with(input, channel)?;
    let control = charlie_measure(&joint, sampler)?;
    let bell = alice_bell_measure(&control.mab, sampler)?;
    let correction = correction_for(control.bit, bell.outcome);
    let bob_state = apply_correction(&bell.bob, correction)?;
    Ok(TeleportResult {
        charlie: control.bit,
        bell: bell.outcome,
        correction,
        bob_state,
        records: vec![
            MeasurementRecord::charlie(control.bit, control.probability),
            MeasurementRecord::alice(bell.outcome, bell.probability),
        ],
    })
}
