use thiserror::Error;

/// Errors raised by the simulator and the protocol layers built on it.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SimError {
    #[error("amplitude vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("state vector has norm {norm:e}, which is too small to normalize")]
    ZeroVector { norm: f64 },

    #[error("state vector norm {norm} is not within {tolerance:e} of 1")]
    NotNormalized { norm: f64, tolerance: f64 },

    #[error("amplitude at index {index} is not finite")]
    NonFinite { index: usize },

    #[error("qubit count must be positive")]
    NoQubits,

    #[error("qubit index {index} is out of range for a {num_qubits}-qubit state")]
    TargetOutOfRange { index: usize, num_qubits: usize },

    #[error("qubit index {index} appears more than once in the target list")]
    DuplicateTarget { index: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },

    #[error("matrix is not unitary (max deviation {deviation:e})")]
    NotUnitary { deviation: f64 },

    #[error("invalid density matrix: {reason}")]
    InvalidDensity { reason: String },

    #[error("invalid measurement basis: {reason}")]
    InvalidBasis { reason: String },

    #[error("outcome {outcome} has probability {probability:e}; the branch cannot be renormalized")]
    DegenerateBranch { outcome: usize, probability: f64 },

    #[error("outcome index {outcome} out of range for a basis with {size} outcomes")]
    OutcomeOutOfRange { outcome: usize, size: usize },

    #[error("uniform sample {0} is outside [0, 1)")]
    InvalidSample(f64),

    #[error("invalid triplet count {0}")]
    InvalidCount(usize),

    #[error("batch of {batch} triplets is too small to sacrifice {required}")]
    BatchTooSmall { batch: usize, required: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = SimError> = std::result::Result<T, E>;
