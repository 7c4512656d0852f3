//! Charlie controls the session twice over: refusing permission stops it
//! before any message qubit is touched, and withholding his broadcast
//! leaves Bob guessing.

use cqt::sdc::{run_session, MessageBits, SessionConfig, SessionMode};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> cqt::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let message = MessageBits::random(10_000, &mut rng)?;

    let denied = run_session(&SessionConfig::new(message.clone(), false), 1)?;
    println!(
        "permission=false: aborted={:?}, teleported bits={}",
        denied.aborted_reason,
        denied.entries.len()
    );

    let granted = run_session(&SessionConfig::new(message.clone(), true), 1)?;
    println!("permission=true:  accuracy {:.4}", granted.accuracy(&message).unwrap_or(0.0));

    let mut cfg = SessionConfig::new(message.clone(), true);
    cfg.mode = SessionMode::WithheldControlBroadcast;
    let withheld = run_session(&cfg, 1)?;
    println!("broadcast withheld: accuracy {:.4}", withheld.accuracy(&message).unwrap_or(0.0));
    Ok(())
}
