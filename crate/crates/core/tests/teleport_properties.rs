mod common;

use common::{bloch_grid, oracle, qubit};
use cqt::statevec::{
    apply_gate, fidelity, measure_with, trace_distance, DensityMatrix, ForcedOutcomes, GateMatrix,
    MeasurementBasis, PureState,
};
use cqt::teleport::{
    apply_correction, bell_basis, correction_for, enumerate_branches, joint_outcome_probabilities, joint_state, teleport,
    uncorrected_bob_ensemble, BellOutcome, CharlieBit,
};

const TOL: f64 = 1e-12;

fn to_oracle_mat(op: &GateMatrix) -> oracle::Mat {
    (0..2).map(|r| (0..2).map(|c| op.entry(r, c)).collect()).collect()
}

#[test]
fn every_forced_branch_recovers_every_grid_state() {
    let grid = bloch_grid();
    assert!(grid.len() >= 25);
    for &(a, b) in &grid {
        let input = qubit(a, b);
        for charlie in CharlieBit::ALL {
            for bell in BellOutcome::ALL {
                let mut forced = ForcedOutcomes::new([charlie.index(), bell.index()]);
                let r = teleport(&input, &mut forced).unwrap();
                assert_eq!((r.charlie, r.bell), (charlie, bell));
                let f = fidelity(&r.bob_state, &input).unwrap();
                assert!(f >= 1.0 - TOL, "{charlie} {bell:?} on ({a}, {b}): {f}");
            }
        }
    }
}

#[test]
fn branches_match_oracle_residuals() {
    for &(a, b) in &bloch_grid() {
        for branch in enumerate_branches(&qubit(a, b)).unwrap() {
            let raw = oracle::bob_branch(a, b, branch.charlie.index(), branch.bell.index());
            let p = oracle::norm_sqr2(raw);
            assert!((branch.probability() - p).abs() < TOL);
            // the oracle's uncorrected Bob, normalized, against the library's
            let s = p.sqrt();
            let oracle_bob = PureState::qubit(raw[0] / s, raw[1] / s).unwrap();
            assert!(fidelity(&oracle_bob, &branch.uncorrected_bob).unwrap() > 1.0 - TOL);
            // the library's correction, applied by the oracle
            let fixed = oracle::apply2(&to_oracle_mat(&branch.correction.matrix()), raw);
            let overlap = (a.conj() * fixed[0] + b.conj() * fixed[1]).norm_sqr() / p;
            assert!(overlap > 1.0 - TOL, "{:?}: {overlap}", (branch.charlie, branch.bell));
        }
    }
}

#[test]
fn outcome_distribution_is_input_independent() {
    for &(a, b) in &bloch_grid() {
        let probs = joint_outcome_probabilities(&qubit(a, b)).unwrap();
        for (c, row) in probs.iter().enumerate() {
            let charlie: f64 = row.iter().sum();
            assert!((charlie - 0.5).abs() < TOL);
            for (k, p) in row.iter().enumerate() {
                assert!((p - 0.125).abs() < TOL);
                assert!((p - oracle::norm_sqr2(oracle::bob_branch(a, b, c, k))).abs() < TOL);
            }
        }
    }
}

#[test]
fn uncorrected_ensemble_is_maximally_mixed() {
    let half = DensityMatrix::maximally_mixed(2);
    for &(a, b) in &bloch_grid() {
        let rho = uncorrected_bob_ensemble(&qubit(a, b)).unwrap();
        assert!(trace_distance(&rho, &half).unwrap() < TOL);
        let raw = oracle::uncorrected_ensemble(a, b);
        assert!(oracle::max_abs_diff(&raw, &half_mat()) < TOL);
    }
}

fn half_mat() -> oracle::Mat {
    let mut m = oracle::eye(2);
    for row in &mut m {
        for x in row.iter_mut() {
            *x *= 0.5;
        }
    }
    m
}

/// Alice measuring before Charlie gives the same joint statistics and the
/// same corrected state.
#[test]
fn measurement_order_commutes() {
    for &(a, b) in &bloch_grid() {
        let input = qubit(a, b);
        let joint = joint_state(&input).unwrap();
        let expected = joint_outcome_probabilities(&input).unwrap();
        for charlie in CharlieBit::ALL {
            for bell in BellOutcome::ALL {
                // Bell on M, A of the four-qubit state leaves B, C
                let alice = measure_with(&joint, &bell_basis(), &mut ForcedOutcomes::new([bell.index()])).unwrap();
                let bc = alice.residual.unwrap();
                let ctrl = MeasurementBasis::computational(vec![1]).unwrap();
                let m = measure_with(&bc, &ctrl, &mut ForcedOutcomes::new([charlie.index()])).unwrap();
                let p = alice.probability * m.probability;
                assert!((p - expected[charlie.index()][bell.index()]).abs() < TOL);
                let bob = m.residual.unwrap();
                let fixed = apply_correction(&bob, correction_for(charlie, bell)).unwrap();
                assert!(fidelity(&fixed, &input).unwrap() > 1.0 - TOL);
            }
        }
    }
}

#[test]
fn zx_and_xz_agree_up_to_phase() {
    let zx = GateMatrix::pauli_z().matmul(&GateMatrix::pauli_x()).unwrap();
    let xz = GateMatrix::pauli_x().matmul(&GateMatrix::pauli_z()).unwrap();
    for &(a, b) in &bloch_grid() {
        let s = qubit(a, b);
        let one = apply_gate(&s, &zx, &[0]).unwrap();
        let two = apply_gate(&s, &xz, &[0]).unwrap();
        assert!(fidelity(&one, &two).unwrap() > 1.0 - TOL);
    }
}
