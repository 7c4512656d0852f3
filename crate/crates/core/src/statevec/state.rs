use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use super::{Amplitude, ADMISSION_TOL};
use crate::{Result, SimError};

/// Normalized amplitude vector over `num_qubits` qubits.
///
/// Every constructor enforces `Σ|amp|² = 1`, so any `PureState` in hand is a
/// valid physical state.
#[derive(Clone, PartialEq)]
pub struct PureState {
    num_qubits: usize,
    amps: Vec<Amplitude>,
}

impl PureState {
    /// Builds a state from amplitudes whose norm is already within
    /// [`ADMISSION_TOL`] of one; the vector is then renormalized exactly.
    pub fn from_amplitudes(num_qubits: usize, amps: Vec<Amplitude>) -> Result<Self> {
        let norm = Self::checked_norm(num_qubits, &amps)?;
        if (norm - 1.0).abs() > ADMISSION_TOL {
            return Err(SimError::NotNormalized { norm, tolerance: ADMISSION_TOL });
        }
        Ok(Self::rescaled(num_qubits, amps, norm))
    }

    /// Builds a state from any nonzero amplitude vector by rescaling it.
    pub fn normalized(num_qubits: usize, amps: Vec<Amplitude>) -> Result<Self> {
        let norm = Self::checked_norm(num_qubits, &amps)?;
        Ok(Self::rescaled(num_qubits, amps, norm))
    }

    /// Single-qubit state `a|0⟩ + b|1⟩`.
    pub fn qubit(a: Amplitude, b: Amplitude) -> Result<Self> {
        Self::from_amplitudes(1, vec![a, b])
    }

    /// Computational basis state `|index⟩`.
    pub fn basis(num_qubits: usize, index: usize) -> Result<Self> {
        if num_qubits == 0 {
            return Err(SimError::NoQubits);
        }
        let dim = 1usize << num_qubits;
        if index >= dim {
            return Err(SimError::TargetOutOfRange { index, num_qubits });
        }
        let mut amps = vec![Amplitude::new(0.0, 0.0); dim];
        amps[index] = Amplitude::new(1.0, 0.0);
        Ok(Self { num_qubits, amps })
    }

    pub fn zero() -> Self {
        Self { num_qubits: 1, amps: vec![Amplitude::new(1.0, 0.0), Amplitude::new(0.0, 0.0)] }
    }

    pub fn one() -> Self {
        Self { num_qubits: 1, amps: vec![Amplitude::new(0.0, 0.0), Amplitude::new(1.0, 0.0)] }
    }

    /// `(|0⟩ + |1⟩)/√2`
    pub fn plus() -> Self {
        let h = Amplitude::new(FRAC_1_SQRT_2, 0.0);
        Self { num_qubits: 1, amps: vec![h, h] }
    }

    /// `(|0⟩ − |1⟩)/√2`
    pub fn minus() -> Self {
        let h = Amplitude::new(FRAC_1_SQRT_2, 0.0);
        Self { num_qubits: 1, amps: vec![h, -h] }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Amplitude] {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> Amplitude {
        self.amps[index]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Inner product `⟨self|other⟩`.
    pub fn inner(&self, other: &PureState) -> Result<Amplitude> {
        if self.num_qubits != other.num_qubits {
            return Err(SimError::DimMismatch { expected: self.num_qubits, got: other.num_qubits });
        }
        Ok(self.amps.iter().zip(&other.amps).map(|(x, y)| x.conj() * y).sum())
    }

    /// Multiplies every amplitude by `e^{iθ}`.
    pub fn with_global_phase(&self, theta: f64) -> PureState {
        let phase = Amplitude::from_polar(1.0, theta);
        Self { num_qubits: self.num_qubits, amps: self.amps.iter().map(|a| a * phase).collect() }
    }

    /// Wraps amplitudes produced by a norm-preserving map without rescaling.
    pub(crate) fn from_unitary_image(num_qubits: usize, amps: Vec<Amplitude>) -> Self {
        debug_assert_eq!(amps.len(), 1 << num_qubits);
        Self { num_qubits, amps }
    }

    fn checked_norm(num_qubits: usize, amps: &[Amplitude]) -> Result<f64> {
        if num_qubits == 0 {
            return Err(SimError::NoQubits);
        }
        let expected = 1usize
            .checked_shl(num_qubits as u32)
            .ok_or(SimError::LengthMismatch { expected: usize::MAX, got: amps.len() })?;
        if amps.len() != expected {
            return Err(SimError::LengthMismatch { expected, got: amps.len() });
        }
        if let Some(index) = amps.iter().position(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(SimError::NonFinite { index });
        }
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm < ADMISSION_TOL {
            return Err(SimError::ZeroVector { norm });
        }
        Ok(norm)
    }

    fn rescaled(num_qubits: usize, mut amps: Vec<Amplitude>, norm: f64) -> Self {
        if norm != 1.0 {
            amps.iter_mut().for_each(|a| *a /= norm);
        }
        Self { num_qubits, amps }
    }
}

impl fmt::Debug for PureState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PureState[")?;
        let mut first = true;
        for (i, a) in self.amps.iter().enumerate() {
            if a.norm_sqr() < 1e-24 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({:.6}{:+.6}i)|{:0width$b}⟩", a.re, a.im, i, width = self.num_qubits)?;
        }
        write!(f, "]")
    }
}

/// Tensor product `left ⊗ right`; `left` occupies the lower slot indices.
pub fn tensor(left: &PureState, right: &PureState) -> PureState {
    let amps = left
        .amps
        .iter()
        .flat_map(|l| right.amps.iter().map(move |r| l * r))
        .collect();
    PureState { num_qubits: left.num_qubits + right.num_qubits, amps }
}

/// `|⟨s1|s2⟩|²`, clamped into `[0, 1]`.
pub fn fidelity(s1: &PureState, s2: &PureState) -> Result<f64> {
    Ok(s1.inner(s2)?.norm_sqr().clamp(0.0, 1.0))
}
