//! The state-vector layer on its own: gates, measurement in arbitrary
//! orthonormal bases, and replaying a chosen branch.

use cqt::statevec::{
    apply_gate, measure, measure_with, outcome_probabilities, project, ForcedOutcomes, GateMatrix, MeasurementBasis,
    PureState,
};
use cqt::teleport::{bell_basis, channel_state};

fn main() -> cqt::Result<()> {
    // |00> -> H on slot 0 -> CNOT gives Phi+
    let s = PureState::basis(2, 0)?;
    let s = apply_gate(&s, &GateMatrix::hadamard(), &[0])?;
    let phi = apply_gate(&s, &GateMatrix::cnot(), &[0, 1])?;
    let bell = bell_basis();
    println!("Bell probabilities of H.CNOT|00>: {:?}", outcome_probabilities(&phi, &bell)?);

    // measuring slot 1 of the channel in X leaves A, C in a definite product
    let xi = channel_state();
    let x_on_b = MeasurementBasis::plus_minus(1);
    for k in 0..2 {
        let m = project(&xi, &x_on_b, k)?;
        println!("B = {}: p = {:.3}, A,C left in {:?}", ["+", "-"][k], m.probability, m.residual.unwrap());
    }

    // a uniform sample picks the outcome by cumulative probability
    let z = MeasurementBasis::computational(vec![0, 1, 2])?;
    for u in [0.1, 0.3, 0.6, 0.9] {
        println!("u = {u}: outcome {:03b}", measure(&xi, &z, u)?.outcome);
    }

    let mut forced = ForcedOutcomes::new([0b110]);
    println!("forced: {:03b}", measure_with(&xi, &z, &mut forced)?.outcome);
    Ok(())
}
