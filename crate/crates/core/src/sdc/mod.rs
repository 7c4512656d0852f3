//! Controlled secure direct communication over teleportation.
//!
//! Alice encodes each message bit as `|+⟩` (1) or `|−⟩` (0) and teleports
//! it to Bob through one channel triplet, but only after Charlie has granted
//! permission and a random sample of the triplets has passed verification.
//! Bob reads each bit out in the `{|+⟩, |−⟩}` basis.

mod adversary;
mod message;
mod session;
mod verify;

pub use adversary::{prepare_channel, AdversaryModel, AttackKind, AttackTarget};
pub use message::{decode_bit, encode_bit, MessageBits};
pub use session::{
    run_session, BitEntry, SessionConfig, SessionMode, SessionTranscript, ABORT_PERMISSION_DENIED,
    ABORT_VERIFICATION_FAILED,
};
pub use verify::{check_all, check_triplet, verify_channel, CheckKind, TripletCheck, VerificationPolicy, VerificationReport};
