//! Exact branch probabilities and Bob's states before and after correction,
//! without any sampling.

use cqt::statevec::{apply_gate, fidelity, trace_distance, DensityMatrix, GateMatrix, PureState};
use cqt::teleport::{enumerate_branches, uncorrected_bob_ensemble};

fn main() -> cqt::Result<()> {
    let input = apply_gate(&PureState::plus(), &GateMatrix::u3(1.1, 0.4, -0.7), &[0])?;

    println!("branch              p      F(uncorrected)  F(corrected)");
    for b in enumerate_branches(&input)? {
        println!(
            "C={} {:<9} {:<3} {:.4}  {:.6}        {:.15}",
            b.charlie,
            format!("{:?}", b.bell),
            b.correction.to_string(),
            b.probability(),
            fidelity(&b.uncorrected_bob, &input)?,
            fidelity(&b.corrected_bob, &input)?,
        );
    }

    // without the broadcasts Bob holds the average over all eight branches
    let rho = uncorrected_bob_ensemble(&input)?;
    let d = trace_distance(&rho, &DensityMatrix::maximally_mixed(2))?;
    println!("\nBob's state with no broadcasts: trace distance {d:.2e} from I/2");
    Ok(())
}
