use super::{
    alice_bell_measure, apply_correction, bell_basis, charlie_measure, correction_for, joint_state,
    BellOutcome, CharlieBit, CorrectionOp, QubitRegisterMap,
};
use crate::statevec::{
    outcome_probabilities, DensityMatrix, ForcedOutcomes, MeasurementBasis, PureState,
};
use crate::Result;

/// One of the eight (Charlie, Alice) outcome pairs with its exact weight.
#[derive(Debug, Clone, PartialEq)]
pub struct Branch {
    pub charlie: CharlieBit,
    pub bell: BellOutcome,
    pub charlie_probability: f64,
    /// Probability of the Bell outcome given Charlie's result.
    pub bell_probability: f64,
    pub uncorrected_bob: PureState,
    pub correction: CorrectionOp,
    pub corrected_bob: PureState,
}

impl Branch {
    pub fn probability(&self) -> f64 {
        self.charlie_probability * self.bell_probability
    }
}

/// Walks all eight branches by projection, Charlie first.
pub fn enumerate_branches(input: &PureState) -> Result<Vec<Branch>> {
    let joint = joint_state(input)?;
    let mut out = Vec::with_capacity(8);
    for charlie in CharlieBit::ALL {
        let control = charlie_measure(&joint, &mut ForcedOutcomes::new([charlie.index()]))?;
        for bell in BellOutcome::ALL {
            let alice = alice_bell_measure(&control.mab, &mut ForcedOutcomes::new([bell.index()]))?;
            let correction = correction_for(charlie, bell);
            out.push(Branch {
                charlie,
                bell,
                charlie_probability: control.probability,
                bell_probability: alice.probability,
                corrected_bob: apply_correction(&alice.bob, correction)?,
                uncorrected_bob: alice.bob,
                correction,
            });
        }
    }
    Ok(out)
}

/// Born probabilities of the eight combined outcomes computed in one shot on
/// the four-qubit state, indexed `[charlie][bell]`.
pub fn joint_outcome_probabilities(input: &PureState) -> Result<[[f64; 4]; 2]> {
    let joint = joint_state(input)?;
    let map = QubitRegisterMap::CANONICAL;
    let bell_on_ma = MeasurementBasis::new(vec![map.m_slot, map.a_slot], bell_basis().states().to_vec())?;
    let basis = MeasurementBasis::product(&[bell_on_ma, MeasurementBasis::computational(vec![map.c_slot])?])?;
    let probs = outcome_probabilities(&joint, &basis)?;
    let mut table = [[0.0; 4]; 2];
    for (bell, p2) in probs.chunks(2).enumerate() {
        for (charlie, p) in p2.iter().enumerate() {
            table[charlie][bell] = *p;
        }
    }
    Ok(table)
}

/// Bob's qubit averaged over all branches without any correction: what he
/// holds before hearing either broadcast.
pub fn uncorrected_bob_ensemble(input: &PureState) -> Result<DensityMatrix> {
    let branches = enumerate_branches(input)?;
    let projectors: Vec<(f64, DensityMatrix)> = branches
        .iter()
        .map(|b| (b.probability(), DensityMatrix::from_pure(&b.uncorrected_bob)))
        .collect();
    DensityMatrix::mixture(projectors.iter().map(|(w, rho)| (*w, rho)))
}
