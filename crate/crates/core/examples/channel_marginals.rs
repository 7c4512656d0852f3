//! The shared triplet is a GHZ state in the Hadamard basis, and no single
//! party's qubit carries any information on its own.

use cqt::statevec::{fidelity, reduced_density, tensor, trace_distance, Amplitude, DensityMatrix, PureState};
use cqt::teleport::channel_state;

fn main() -> cqt::Result<()> {
    let xi = channel_state();
    println!("|xi> = {xi:?}");

    let ppp = tensor(&tensor(&PureState::plus(), &PureState::plus()), &PureState::plus());
    let mmm = tensor(&tensor(&PureState::minus(), &PureState::minus()), &PureState::minus());
    let ghz = PureState::normalized(
        3,
        ppp.amplitudes().iter().zip(mmm.amplitudes()).map(|(a, b)| a + b).collect::<Vec<Amplitude>>(),
    )?;
    println!("F(xi, (|+++> + |--->)/sqrt2) = {:.15}", fidelity(&xi, &ghz)?);

    let half = DensityMatrix::maximally_mixed(2);
    for (slot, name) in ["A", "B", "C"].iter().enumerate() {
        let rho = reduced_density(&xi, &[slot])?;
        println!("rho_{name}: purity {:.3}, distance from I/2 {:.1e}", rho.purity(), trace_distance(&rho, &half)?);
    }
    let ab = reduced_density(&xi, &[0, 1])?;
    println!("rho_AB eigenvalues {:?}", ab.eigenvalues());
    Ok(())
}
