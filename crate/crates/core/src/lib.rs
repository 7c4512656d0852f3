//! Exact dense-state simulation of controlled quantum teleportation and the
//! controlled secure direct communication scheme built on top of it.
//!
//! Three parties share triplets in the state
//! `½(|000⟩ + |110⟩ + |011⟩ + |101⟩)` over qubits `A`, `B`, `C`.
//! The supervisor Charlie holds `C` and gates every transfer: Bob can only
//! undo Alice's Bell measurement once Charlie has measured `C` and broadcast
//! the result.
//!
//! * [`statevec`] is the linear-algebra engine (pure states, gates,
//!   projective measurement, reduced density matrices).
//! * [`teleport`] implements the three-party teleportation pipeline.
//! * [`sdc`] layers message encoding, channel verification, adversaries and
//!   permission-gated sessions on top.
//! * [`cli`] holds the batch harness behind the `cqt` binary and its JSON
//!   output files.

pub mod cli;
pub mod error;
pub mod sdc;
pub mod statevec;
pub mod teleport;

pub use error::{Result, SimError};
