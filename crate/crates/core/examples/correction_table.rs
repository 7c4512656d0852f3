//! Prints Bob's correction for every pair of broadcasts and confirms each
//! one by forcing that branch.

use cqt::cli::cmd_table;
use cqt::statevec::{fidelity, Amplitude, ForcedOutcomes, PureState};
use cqt::teleport::{teleport, BellOutcome, CharlieBit};

fn main() -> cqt::Result<()> {
    print!("{}", cmd_table());
    println!();

    let input = PureState::qubit(Amplitude::new(0.8, 0.1), Amplitude::from_polar(0.59160797830996, 2.0))?;
    for charlie in CharlieBit::ALL {
        for bell in BellOutcome::ALL {
            let mut forced = ForcedOutcomes::new([charlie.index(), bell.index()]);
            let r = teleport(&input, &mut forced)?;
            println!("C={charlie} {:<9} -> {:<2} fidelity {:.15}", format!("{bell:?}"), r.correction, fidelity(&r.bob_state, &input)?);
        }
    }
    Ok(())
}
