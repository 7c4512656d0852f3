use super::{
    check_targets, tensor, Amplitude, Draw, OutcomeSampler, PureState, SlotSplit, ALGEBRA_TOL,
    DEGENERATE_PROB,
};
use crate::{Result, SimError};

/// Orthonormal basis of `2^k` states over `k` target qubits.
///
/// The order of `states` is the sampling order used by [`measure`].
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementBasis {
    targets: Vec<usize>,
    states: Vec<PureState>,
}

impl MeasurementBasis {
    pub fn new(targets: Vec<usize>, states: Vec<PureState>) -> Result<Self> {
        let k = targets.len();
        if k == 0 {
            return Err(SimError::InvalidBasis { reason: "no target qubits".into() });
        }
        check_targets(&targets, usize::MAX >> 1)?;
        if states.len() != 1 << k {
            return Err(SimError::InvalidBasis {
                reason: format!("{} states given for {k} qubits", states.len()),
            });
        }
        if let Some(s) = states.iter().find(|s| s.num_qubits() != k) {
            return Err(SimError::InvalidBasis {
                reason: format!("basis state spans {} qubits, expected {k}", s.num_qubits()),
            });
        }
        for (i, si) in states.iter().enumerate() {
            for (j, sj) in states.iter().enumerate().skip(i) {
                let expected = if i == j { 1.0 } else { 0.0 };
                let overlap = si.inner(sj)?;
                if (overlap - Amplitude::new(expected, 0.0)).norm() > ALGEBRA_TOL {
                    return Err(SimError::InvalidBasis {
                        reason: format!("⟨{i}|{j}⟩ = {overlap}, expected {expected}"),
                    });
                }
            }
        }
        Ok(Self { targets, states })
    }

    /// `{|0…0⟩, …, |1…1⟩}` over `targets`, in index order.
    pub fn computational(targets: Vec<usize>) -> Result<Self> {
        let k = targets.len();
        let states = (0..1usize << k).map(|i| PureState::basis(k, i)).collect::<Result<_>>()?;
        Self::new(targets, states)
    }

    /// `{|+⟩, |−⟩}` on a single qubit.
    pub fn plus_minus(target: usize) -> Self {
        Self { targets: vec![target], states: vec![PureState::plus(), PureState::minus()] }
    }

    /// Product basis: targets are concatenated and outcome indices are
    /// big-endian over the factors (the first factor is most significant).
    pub fn product(factors: &[MeasurementBasis]) -> Result<Self> {
        let (first, rest) = factors
            .split_first()
            .ok_or_else(|| SimError::InvalidBasis { reason: "empty product".into() })?;
        let mut targets = first.targets.clone();
        let mut states = first.states.clone();
        for f in rest {
            targets.extend_from_slice(&f.targets);
            states = states.iter().flat_map(|l| f.states.iter().map(move |r| tensor(l, r))).collect();
        }
        Self::new(targets, states)
    }

    pub fn targets(&self) -> &[usize] {
        &self.targets
    }

    pub fn states(&self) -> &[PureState] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }
}

/// Result of a projective measurement.
#[derive(Debug, Clone, PartialEq)]
pub struct Measurement {
    pub outcome: usize,
    pub probability: f64,
    /// Full post-measurement state; the targets sit in the observed basis
    /// state.
    pub collapsed: PureState,
    /// Post-measurement state of the unmeasured qubits (ascending slot
    /// order), or `None` if every qubit was measured.
    pub residual: Option<PureState>,
}

/// Born probabilities of every outcome, in basis order.
pub fn outcome_probabilities(state: &PureState, basis: &MeasurementBasis) -> Result<Vec<f64>> {
    let split = prepare(state, basis)?;
    Ok((0..basis.len()).map(|j| branch_amplitudes(state, basis, &split, j).iter().map(|a| a.norm_sqr()).sum()).collect())
}

/// Projects onto a chosen outcome, regardless of how likely it is (as long
/// as it is not impossible).
pub fn project(state: &PureState, basis: &MeasurementBasis, outcome: usize) -> Result<Measurement> {
    if outcome >= basis.len() {
        return Err(SimError::OutcomeOutOfRange { outcome, size: basis.len() });
    }
    let split = prepare(state, basis)?;
    let residual = branch_amplitudes(state, basis, &split, outcome);
    let probability: f64 = residual.iter().map(|a| a.norm_sqr()).sum();
    if probability < DEGENERATE_PROB {
        return Err(SimError::DegenerateBranch { outcome, probability });
    }
    let scale = probability.sqrt();
    let residual: Vec<Amplitude> = residual.into_iter().map(|a| a / scale).collect();

    let chosen = basis.states[outcome].amplitudes();
    let mut collapsed = vec![Amplitude::new(0.0, 0.0); state.dim()];
    for (t, bt) in chosen.iter().enumerate() {
        for (r, rr) in residual.iter().enumerate() {
            collapsed[split.compose(t, r)] = bt * rr;
        }
    }
    let n = state.num_qubits();
    let residual = match split.rest_len() {
        0 => None,
        k => Some(PureState::normalized(k, residual)?),
    };
    Ok(Measurement {
        outcome,
        probability,
        collapsed: PureState::normalized(n, collapsed)?,
        residual,
    })
}

/// Samples an outcome with the Born rule: outcome `j` is chosen when
/// `cum[j-1] ≤ sample < cum[j]` over cumulative probabilities in basis order.
pub fn measure(state: &PureState, basis: &MeasurementBasis, sample: f64) -> Result<Measurement> {
    if !(0.0..1.0).contains(&sample) {
        return Err(SimError::InvalidSample(sample));
    }
    let probs = outcome_probabilities(state, basis)?;
    let mut cumulative = 0.0;
    let mut chosen = None;
    for (j, p) in probs.iter().enumerate() {
        cumulative += p;
        if sample < cumulative {
            chosen = Some(j);
            break;
        }
    }
    // rounding can leave the total a hair below 1
    let outcome = chosen
        .or_else(|| probs.iter().rposition(|&p| p >= DEGENERATE_PROB))
        .unwrap_or(probs.len() - 1);
    project(state, basis, outcome)
}

/// Measures using whatever the sampler provides: a uniform draw or a forced
/// outcome.
pub fn measure_with<S>(state: &PureState, basis: &MeasurementBasis, sampler: &mut S) -> Result<Measurement>
where
    S: OutcomeSampler + ?Sized,
{
    match sampler.next_draw() {
        Draw::Uniform(u) => measure(state, basis, u),
        Draw::Forced(outcome) => project(state, basis, outcome),
    }
}

fn prepare(state: &PureState, basis: &MeasurementBasis) -> Result<SlotSplit> {
    check_targets(&basis.targets, state.num_qubits())?;
    Ok(SlotSplit::new(&basis.targets, state.num_qubits()))
}

/// Unnormalized `(⟨b_j| ⊗ 1)|ψ⟩` over the remaining qubits.
fn branch_amplitudes(state: &PureState, basis: &MeasurementBasis, split: &SlotSplit, j: usize) -> Vec<Amplitude> {
    let bj = basis.states[j].amplitudes();
    let amps = state.amplitudes();
    (0..split.rest_dim())
        .map(|r| bj.iter().enumerate().map(|(t, b)| b.conj() * amps[split.compose(t, r)]).sum())
        .collect()
}
