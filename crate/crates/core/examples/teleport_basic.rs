//! Teleport one qubit through the controlled channel and check what Bob ends up with.
//!
//!     cargo run --example teleport_basic

use cqt::statevec::{fidelity, Amplitude, PureState};
use cqt::teleport::teleport;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> cqt::Result<()> {
    let input = PureState::qubit(Amplitude::new(0.6, 0.0), Amplitude::new(0.0, 0.8))?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);

    for round in 0..4 {
        let r = teleport(&input, &mut rng)?;
        println!(
            "round {round}: Charlie={} Alice={:<8} Bob applies {:<2} fidelity={:.15}",
            r.charlie,
            format!("{:?}", r.bell),
            r.correction,
            fidelity(&r.bob_state, &input)?
        );
        for rec in &r.records {
            println!("    {:?} measured {:?}, outcome {} (p = {:.3})", rec.party, rec.basis, rec.outcome, rec.probability);
        }
    }
    Ok(())
}
