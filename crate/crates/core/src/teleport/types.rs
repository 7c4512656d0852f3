use std::fmt;

use serde::{Deserialize, Serialize};

use crate::statevec::GateMatrix;
use crate::{Result, SimError};

/// Tensor slots of the four protocol qubits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QubitRegisterMap {
    pub m_slot: usize,
    pub a_slot: usize,
    pub b_slot: usize,
    pub c_slot: usize,
}

impl QubitRegisterMap {
    /// `M = 0, A = 1, B = 2, C = 3`: the input qubit followed by the channel
    /// triplet.
    pub const CANONICAL: Self = Self { m_slot: 0, a_slot: 1, b_slot: 2, c_slot: 3 };

    pub fn new(m_slot: usize, a_slot: usize, b_slot: usize, c_slot: usize) -> Result<Self> {
        let slots = [m_slot, a_slot, b_slot, c_slot];
        for (k, s) in slots.iter().enumerate() {
            if slots[..k].contains(s) {
                return Err(SimError::DuplicateTarget { index: *s });
            }
        }
        Ok(Self { m_slot, a_slot, b_slot, c_slot })
    }

    /// Slot layout once Charlie's qubit has been measured and removed. The
    /// returned `c_slot` is meaningless.
    pub fn without_control(&self) -> Self {
        let shift = |s: usize| if s > self.c_slot { s - 1 } else { s };
        Self {
            m_slot: shift(self.m_slot),
            a_slot: shift(self.a_slot),
            b_slot: shift(self.b_slot),
            c_slot: usize::MAX,
        }
    }
}

/// Charlie's computational-basis result on `C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CharlieBit {
    Zero,
    One,
}

impl CharlieBit {
    pub const ALL: [CharlieBit; 2] = [CharlieBit::Zero, CharlieBit::One];

    pub fn index(self) -> usize {
        self as usize
    }

    /// # Panics
    /// If `index > 1`.
    pub fn from_index(index: usize) -> Self {
        Self::ALL[index]
    }
}

impl fmt::Display for CharlieBit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CharlieBit::Zero => "0",
            CharlieBit::One => "1",
        })
    }
}

/// Alice's Bell-measurement result on `M, A`, in sampling order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BellOutcome {
    PhiPlus,
    PsiPlus,
    PhiMinus,
    PsiMinus,
}

impl BellOutcome {
    pub const ALL: [BellOutcome; 4] =
        [BellOutcome::PhiPlus, BellOutcome::PsiPlus, BellOutcome::PhiMinus, BellOutcome::PsiMinus];

    pub fn index(self) -> usize {
        self as usize
    }

    /// # Panics
    /// If `index > 3`.
    pub fn from_index(index: usize) -> Self {
        Self::ALL[index]
    }

    pub fn symbol(self) -> &'static str {
        match self {
            BellOutcome::PhiPlus => "Φ⁺",
            BellOutcome::PsiPlus => "Ψ⁺",
            BellOutcome::PhiMinus => "Φ⁻",
            BellOutcome::PsiMinus => "Ψ⁻",
        }
    }
}

impl fmt::Display for BellOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Bob's recovery operator. `ZX` is the matrix product `Z·X`: X acts first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CorrectionOp {
    I,
    X,
    Z,
    ZX,
}

impl CorrectionOp {
    pub fn matrix(self) -> GateMatrix {
        match self {
            CorrectionOp::I => GateMatrix::identity(2),
            CorrectionOp::X => GateMatrix::pauli_x(),
            CorrectionOp::Z => GateMatrix::pauli_z(),
            CorrectionOp::ZX => GateMatrix::pauli_z()
                .matmul(&GateMatrix::pauli_x())
                .expect("both factors are 2×2"),
        }
    }
}

impl fmt::Display for CorrectionOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CorrectionOp::I => "I",
            CorrectionOp::X => "X",
            CorrectionOp::Z => "Z",
            CorrectionOp::ZX => "ZX",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Party {
    Alice,
    Bob,
    Charlie,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BasisKind {
    Computational,
    Bell,
    PlusMinus,
}

/// A measurement result as it is announced on the public classical channel.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasurementRecord {
    pub party: Party,
    pub basis: BasisKind,
    pub outcome: usize,
    pub probability: f64,
}

impl MeasurementRecord {
    pub fn charlie(bit: CharlieBit, probability: f64) -> Self {
        Self { party: Party::Charlie, basis: BasisKind::Computational, outcome: bit.index(), probability }
    }

    pub fn alice(bell: BellOutcome, probability: f64) -> Self {
        Self { party: Party::Alice, basis: BasisKind::Bell, outcome: bell.index(), probability }
    }
}
