use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::statevec::{measure_with, MeasurementBasis, OutcomeSampler, PureState};
use crate::{Result, SimError};

/// Nonempty sequence of message bits, each 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MessageBits(Vec<u8>);

impl MessageBits {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if bits.is_empty() {
            return Err(SimError::InvalidParameter("message is empty".into()));
        }
        if let Some(b) = bits.iter().find(|&&b| b > 1) {
            return Err(SimError::InvalidParameter(format!("message bit {b} is not 0 or 1")));
        }
        Ok(Self(bits))
    }

    /// Uniformly random message of `len` bits.
    pub fn random<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Result<Self> {
        Self::new((0..len).map(|_| rng.gen_range(0..=1u8)).collect())
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of positions where `self` and `other` differ, plus any length
    /// difference.
    pub fn bit_errors(&self, other: &MessageBits) -> usize {
        let diff = self.0.iter().zip(&other.0).filter(|(a, b)| a != b).count();
        diff + self.0.len().abs_diff(other.0.len())
    }
}

impl FromStr for MessageBits {
    type Err = SimError;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(SimError::InvalidParameter(format!("'{other}' is not a message bit"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        Self::new(bits)
    }
}

impl fmt::Display for MessageBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|b| write!(f, "{b}"))
    }
}

impl Serialize for MessageBits {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for MessageBits {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `1 → |+⟩`, `0 → |−⟩`.
///
/// # Panics
/// If `bit > 1`.
pub fn encode_bit(bit: u8) -> PureState {
    match bit {
        1 => PureState::plus(),
        0 => PureState::minus(),
        _ => panic!("message bit must be 0 or 1, got {bit}"),
    }
}

/// Measures in `{|+⟩, |−⟩}`: `|+⟩ → 1`, `|−⟩ → 0`.
pub fn decode_bit<S>(bob: &PureState, sampler: &mut S) -> Result<u8>
where
    S: OutcomeSampler + ?Sized,
{
    if bob.num_qubits() != 1 {
        return Err(SimError::DimMismatch { expected: 1, got: bob.num_qubits() });
    }
    let m = measure_with(bob, &MeasurementBasis::plus_minus(0), sampler)?;
    Ok(if m.outcome == 0 { 1 } else { 0 })
}
