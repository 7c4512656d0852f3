use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::statevec::{apply_gate, measure_with, GateMatrix, MeasurementBasis, PureState};
use crate::teleport::channel_state;
use crate::{Result, SimError};

/// What happens to the attacked particle while the triplets are distributed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum AttackKind {
    None,
    /// Measure in `{|0⟩, |1⟩}` and resend the collapsed particle.
    InterceptResendZ,
    /// Measure in `{|+⟩, |−⟩}` and resend the collapsed particle.
    InterceptResendX,
    /// With probability `p`, apply one of `I, X, Y, Z` chosen uniformly.
    Depolarize { p: f64 },
}

/// Which in-transit particle the adversary touches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AttackTarget {
    #[serde(rename = "A")]
    QubitA,
    #[serde(rename = "B")]
    QubitB,
}

impl AttackTarget {
    /// Slot of the particle inside an `A, B, C` triplet.
    pub fn slot(self) -> usize {
        match self {
            AttackTarget::QubitA => 0,
            AttackTarget::QubitB => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AdversaryModel {
    #[serde(flatten)]
    pub kind: AttackKind,
    pub target: AttackTarget,
}

impl AdversaryModel {
    pub const NONE: Self = Self { kind: AttackKind::None, target: AttackTarget::QubitB };

    pub fn intercept_resend_z(target: AttackTarget) -> Self {
        Self { kind: AttackKind::InterceptResendZ, target }
    }

    pub fn intercept_resend_x(target: AttackTarget) -> Self {
        Self { kind: AttackKind::InterceptResendX, target }
    }

    pub fn depolarize(p: f64, target: AttackTarget) -> Result<Self> {
        let model = Self { kind: AttackKind::Depolarize { p }, target };
        model.validate()?;
        Ok(model)
    }

    pub fn validate(&self) -> Result<()> {
        match self.kind {
            AttackKind::Depolarize { p } if !(0.0..=1.0).contains(&p) => {
                Err(SimError::InvalidParameter(format!("depolarizing probability {p} outside [0, 1]")))
            }
            _ => Ok(()),
        }
    }

    /// Applies the attack to one triplet.
    pub fn tamper<R: Rng + ?Sized>(&self, triplet: PureState, rng: &mut R) -> Result<PureState> {
        let slot = self.target.slot();
        match self.kind {
            AttackKind::None => Ok(triplet),
            AttackKind::InterceptResendZ => {
                let basis = MeasurementBasis::computational(vec![slot])?;
                Ok(measure_with(&triplet, &basis, rng)?.collapsed)
            }
            AttackKind::InterceptResendX => {
                Ok(measure_with(&triplet, &MeasurementBasis::plus_minus(slot), rng)?.collapsed)
            }
            AttackKind::Depolarize { p } => {
                if rng.gen::<f64>() >= p {
                    return Ok(triplet);
                }
                let pauli = match rng.gen_range(0..4) {
                    0 => return Ok(triplet),
                    1 => GateMatrix::pauli_x(),
                    2 => GateMatrix::pauli_y(),
                    _ => GateMatrix::pauli_z(),
                };
                apply_gate(&triplet, &pauli, &[slot])
            }
        }
    }
}

impl Default for AdversaryModel {
    fn default() -> Self {
        Self::NONE
    }
}

/// Prepares `n` channel triplets and lets the adversary act on each one in
/// order.
pub fn prepare_channel<R: Rng + ?Sized>(n: usize, adversary: &AdversaryModel, rng: &mut R) -> Result<Vec<PureState>> {
    if n == 0 {
        return Err(SimError::InvalidCount(n));
    }
    adversary.validate()?;
    let clean = channel_state();
    (0..n).map(|_| adversary.tamper(clean.clone(), rng)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::statevec::{fidelity, outcome_probabilities, reduced_density, DensityMatrix};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn clean_channel_is_untouched() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for t in prepare_channel(50, &AdversaryModel::NONE, &mut rng).unwrap() {
            assert!(fidelity(&t, &channel_state()).unwrap() > 1.0 - 1e-12);
        }
    }

    #[test]
    fn intercept_resend_z_keeps_even_parity() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let z = MeasurementBasis::computational(vec![0, 1, 2]).unwrap();
        let batch = prepare_channel(200, &AdversaryModel::intercept_resend_z(AttackTarget::QubitB), &mut rng).unwrap();
        for t in batch {
            let probs = outcome_probabilities(&t, &z).unwrap();
            let odd: f64 = probs.iter().enumerate().filter(|(i, _)| i.count_ones() % 2 == 1).map(|(_, p)| p).sum();
            assert!(odd < 1e-12);
        }
    }

    #[test]
    fn full_depolarizing_leaves_b_maximally_mixed_on_average() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let n = 10_000;
        let adv = AdversaryModel::depolarize(1.0, AttackTarget::QubitB).unwrap();
        let batch = prepare_channel(n, &adv, &mut rng).unwrap();
        let marginals: Vec<DensityMatrix> = batch.iter().map(|t| reduced_density(t, &[1]).unwrap()).collect();
        let avg = DensityMatrix::mixture(marginals.iter().map(|m| (1.0 / n as f64, m))).unwrap();
        assert!(avg.max_abs_diff(&DensityMatrix::maximally_mixed(2)).unwrap() < 0.02);
    }

    #[test]
    fn invalid_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        assert_eq!(prepare_channel(0, &AdversaryModel::NONE, &mut rng), Err(SimError::InvalidCount(0)));
        assert!(AdversaryModel::depolarize(1.5, AttackTarget::QubitA).is_err());
    }

    #[test]
    fn serde_shape() {
        let adv = AdversaryModel::depolarize(0.2, AttackTarget::QubitB).unwrap();
        let json = serde_json::to_string(&adv).unwrap();
        assert_eq!(json, r#"{"kind":"depolarize","p":0.2,"target":"B"}"#);
        let back: AdversaryModel = serde_json::from_str(&json).unwrap();
        assert_eq!(back, adv);
        let none = serde_json::to_string(&AdversaryModel::NONE).unwrap();
        assert_eq!(none, r#"{"kind":"none","target":"B"}"#);
    }
}
