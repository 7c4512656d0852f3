//! Dense pure-state linear algebra for a handful of qubits.
//!
//! Qubit slot 0 is the leftmost ket label: basis index `i` is read as a
//! big-endian bitstring over slots, so `|q0 q1 … q(n-1)⟩` has index
//! `q0·2^(n-1) + … + q(n-1)`. States are compared with [`fidelity`] since
//! every protocol here is only defined up to global phase.

mod density;
mod gate;
mod measure;
mod sampler;
mod state;

pub use density::{reduced_density, trace_distance, DensityMatrix};
pub use gate::{apply_gate, GateMatrix};
pub use measure::{measure, measure_with, outcome_probabilities, project, Measurement, MeasurementBasis};
pub use sampler::{Draw, ForcedOutcomes, OutcomeSampler};
pub use state::{fidelity, tensor, PureState};

/// Complex amplitude of a basis state.
pub type Amplitude = num_complex::Complex64;

/// Tolerance for algebraic identities (unitarity, orthonormality, norms).
pub const ALGEBRA_TOL: f64 = 1e-12;

/// Admission tolerance for the norm of caller-supplied amplitude vectors.
pub const ADMISSION_TOL: f64 = 1e-9;

/// Probability below which a branch is treated as impossible.
pub const DEGENERATE_PROB: f64 = 1e-14;

/// Bit mask of `slot` inside a basis index of an `num_qubits`-qubit state.
#[inline]
pub(crate) fn slot_mask(slot: usize, num_qubits: usize) -> usize {
    1 << (num_qubits - 1 - slot)
}

/// Checks that `targets` are distinct and address qubits of an
/// `num_qubits`-qubit register.
pub(crate) fn check_targets(targets: &[usize], num_qubits: usize) -> crate::Result<()> {
    for (k, &t) in targets.iter().enumerate() {
        if t >= num_qubits {
            return Err(crate::SimError::TargetOutOfRange { index: t, num_qubits });
        }
        if targets[..k].contains(&t) {
            return Err(crate::SimError::DuplicateTarget { index: t });
        }
    }
    Ok(())
}

/// Splits basis indices into a target part and a remainder part.
///
/// `compose(t, r)` places the bits of `t` (big-endian over `targets`) and the
/// bits of `r` (big-endian over the remaining slots in ascending order) into a
/// full basis index.
#[derive(Debug, Clone)]
pub(crate) struct SlotSplit {
    target_masks: Vec<usize>,
    rest_masks: Vec<usize>,
}

impl SlotSplit {
    pub(crate) fn new(targets: &[usize], num_qubits: usize) -> Self {
        let target_masks = targets.iter().map(|&t| slot_mask(t, num_qubits)).collect();
        let rest_masks = (0..num_qubits)
            .filter(|s| !targets.contains(s))
            .map(|s| slot_mask(s, num_qubits))
            .collect();
        Self { target_masks, rest_masks }
    }

    pub(crate) fn target_dim(&self) -> usize {
        1 << self.target_masks.len()
    }

    pub(crate) fn rest_len(&self) -> usize {
        self.rest_masks.len()
    }

    pub(crate) fn rest_dim(&self) -> usize {
        1 << self.rest_masks.len()
    }

    pub(crate) fn compose(&self, target_bits: usize, rest_bits: usize) -> usize {
        scatter(target_bits, &self.target_masks) | scatter(rest_bits, &self.rest_masks)
    }
}

fn scatter(bits: usize, masks: &[usize]) -> usize {
    let k = masks.len();
    masks
        .iter()
        .enumerate()
        .filter(|(j, _)| bits & (1 << (k - 1 - j)) != 0)
        .fold(0, |acc, (_, &m)| acc | m)
}
