use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{decode_bit, encode_bit, prepare_channel, verify_channel, AdversaryModel, MessageBits, VerificationPolicy, VerificationReport};
use crate::teleport::{
    alice_bell_measure, charlie_measure, joint_state_with, teleport_through, BellOutcome, CharlieBit,
    CorrectionOp,
};
use crate::Result;

pub const ABORT_PERMISSION_DENIED: &str = "permission denied";
pub const ABORT_VERIFICATION_FAILED: &str = "channel verification failed";

/// How broadcasts reach Bob.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SessionMode {
    #[default]
    Normal,
    /// Out-of-protocol instrumentation: Charlie measures but Bob never hears
    /// the result, so he skips the correction and reads his qubit as is.
    WithheldControlBroadcast,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SessionConfig {
    pub message: MessageBits,
    pub permission: bool,
    pub policy: VerificationPolicy,
    pub adversary: AdversaryModel,
    #[serde(default)]
    pub mode: SessionMode,
}

impl SessionConfig {
    pub fn new(message: MessageBits, permission: bool) -> Self {
        Self {
            message,
            permission,
            policy: VerificationPolicy::default(),
            adversary: AdversaryModel::NONE,
            mode: SessionMode::Normal,
        }
    }
}

/// What happened to one message bit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BitEntry {
    pub index: usize,
    pub encoded: u8,
    pub charlie: CharlieBit,
    pub bell: BellOutcome,
    /// `None` when Bob never learned Charlie's result.
    pub correction: Option<CorrectionOp>,
    pub decoded: u8,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SessionTranscript {
    pub seed: u64,
    pub permission: bool,
    pub mode: SessionMode,
    pub triplets_prepared: usize,
    pub verification: Option<VerificationReport>,
    pub entries: Vec<BitEntry>,
    pub decoded: Option<MessageBits>,
    pub aborted_reason: Option<String>,
}

impl SessionTranscript {
    pub fn aborted(&self) -> bool {
        self.aborted_reason.is_some()
    }

    /// Fraction of bits decoded correctly, if the session ran.
    pub fn accuracy(&self, message: &MessageBits) -> Option<f64> {
        let decoded = self.decoded.as_ref()?;
        Some(1.0 - decoded.bit_errors(message) as f64 / message.len() as f64)
    }
}

/// Runs one session with a generator seeded from `seed`.
///
/// The channel batch is prepared (and possibly tampered with) and verified
/// first. The session aborts if verification fails or Charlie withholds
/// permission; otherwise each bit is teleported through its own surviving
/// triplet and decoded by Bob.
pub fn run_session(config: &SessionConfig, seed: u64) -> Result<SessionTranscript> {
    config.policy.validate()?;
    config.adversary.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let n = config.policy.batch_for(config.message.len());
    let batch = prepare_channel(n, &config.adversary, &mut rng)?;
    let (report, survivors) = verify_channel(batch, &config.policy, &mut rng)?;

    let mut transcript = SessionTranscript {
        seed,
        permission: config.permission,
        mode: config.mode,
        triplets_prepared: n,
        verification: Some(report),
        entries: Vec::new(),
        decoded: None,
        aborted_reason: None,
    };
    if !report.passed {
        transcript.aborted_reason = Some(ABORT_VERIFICATION_FAILED.into());
        return Ok(transcript);
    }
    if !config.permission {
        transcript.aborted_reason = Some(ABORT_PERMISSION_DENIED.into());
        return Ok(transcript);
    }

    let mut decoded = Vec::with_capacity(config.message.len());
    for (index, (&bit, channel)) in config.message.bits().iter().zip(&survivors).enumerate() {
        let input = encode_bit(bit);
        let entry = match config.mode {
            SessionMode::Normal => {
                let r = teleport_through(&input, channel, &mut rng)?;
                BitEntry {
                    index,
                    encoded: bit,
                    charlie: r.charlie,
                    bell: r.bell,
                    correction: Some(r.correction),
                    decoded: decode_bit(&r.bob_state, &mut rng)?,
                }
            }
            SessionMode::WithheldControlBroadcast => {
                let joint = joint_state_with(&input, channel)?;
                let control = charlie_measure(&joint, &mut rng)?;
                let alice = alice_bell_measure(&control.mab, &mut rng)?;
                BitEntry {
                    index,
                    encoded: bit,
                    charlie: control.bit,
                    bell: alice.outcome,
                    correction: None,
                    decoded: decode_bit(&alice.bob, &mut rng)?,
                }
            }
        };
        decoded.push(entry.decoded);
        transcript.entries.push(entry);
    }
    transcript.decoded = Some(MessageBits::new(decoded)?);
    Ok(transcript)
}
