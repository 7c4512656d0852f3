//! Generators and property bodies for the state-vector engine. The bodies
//! return `TestCaseError` so they run both under `proptest!` and under a
//! hand-driven `TestRunner`.

use std::f64::consts::PI;

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use cqt::statevec::{
    apply_gate, fidelity, outcome_probabilities, project, reduced_density, tensor, Amplitude, DensityMatrix,
    GateMatrix, MeasurementBasis, PureState,
};

const TOL: f64 = 1e-12;

fn angle() -> impl Strategy<Value = f64> {
    -2.0 * PI..2.0 * PI
}

pub fn state(n: usize) -> impl Strategy<Value = PureState> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 1 << n)
        .prop_filter("non-negligible norm", |v| v.iter().map(|(r, i)| r * r + i * i).sum::<f64>() > 1e-3)
        .prop_map(move |v| {
            let amps = v.into_iter().map(|(r, i)| Amplitude::new(r, i)).collect();
            PureState::normalized(n, amps).unwrap()
        })
}

pub fn any_state() -> impl Strategy<Value = PureState> {
    (1usize..=4).prop_flat_map(state)
}

pub fn u3() -> impl Strategy<Value = GateMatrix> {
    (angle(), angle(), angle()).prop_map(|(t, p, l)| GateMatrix::u3(t, p, l))
}

/// One- or two-qubit gate built from U3 rotations, CNOT and the fixed gates.
pub fn gate() -> impl Strategy<Value = GateMatrix> {
    let fixed = prop_oneof![
        Just(GateMatrix::pauli_x()),
        Just(GateMatrix::pauli_y()),
        Just(GateMatrix::pauli_z()),
        Just(GateMatrix::hadamard()),
        Just(GateMatrix::cnot()),
    ];
    let two = (u3(), u3(), u3(), u3()).prop_map(|(a, b, c, d)| {
        a.kron(&b).matmul(&GateMatrix::cnot()).unwrap().matmul(&c.kron(&d)).unwrap()
    });
    prop_oneof![fixed, u3(), two]
}

/// `n`-qubit state with a gate and distinct targets that fit on it.
pub fn state_and_gate() -> impl Strategy<Value = (PureState, GateMatrix, Vec<usize>)> {
    (2usize..=4).prop_flat_map(|n| {
        gate().prop_flat_map(move |g| {
            let k = g.num_qubits();
            let targets = prop::sample::subsequence((0..n).collect::<Vec<_>>(), k).prop_shuffle();
            (state(n), Just(g), targets)
        })
    })
}

/// Orthonormal basis on one or two targets: the columns of a random unitary.
pub fn state_and_basis() -> impl Strategy<Value = (PureState, MeasurementBasis)> {
    (2usize..=4).prop_flat_map(|n| {
        prop_oneof![
            u3().boxed(),
            (u3(), u3()).prop_map(|(a, b)| a.kron(&b).matmul(&GateMatrix::cnot()).unwrap()).boxed(),
        ]
        .prop_flat_map(move |u| {
            let k = u.num_qubits();
            let targets = prop::sample::subsequence((0..n).collect::<Vec<_>>(), k).prop_shuffle();
            (state(n), Just(u), targets)
        })
        .prop_map(|(s, u, targets)| {
            let k = u.num_qubits();
            let all: Vec<usize> = (0..k).collect();
            let states = (0..1 << k)
                .map(|i| apply_gate(&PureState::basis(k, i).unwrap(), &u, &all).unwrap())
                .collect();
            (s, MeasurementBasis::new(targets, states).unwrap())
        })
    })
}

pub fn unitarity(g: &GateMatrix) -> Result<(), TestCaseError> {
    prop_assert!(g.unitarity_deviation() < TOL, "deviation {}", g.unitarity_deviation());
    let round = g.matmul(&g.adjoint()).unwrap();
    prop_assert!(round.unitarity_deviation() < TOL);
    Ok(())
}

pub fn norm_preserved(s: &PureState, g: &GateMatrix, targets: &[usize]) -> Result<(), TestCaseError> {
    let out = apply_gate(s, g, targets).unwrap();
    prop_assert!((out.norm_sqr() - 1.0).abs() < TOL, "after gate: {}", out.norm_sqr());
    let back = apply_gate(&out, &g.adjoint(), targets).unwrap();
    prop_assert!(fidelity(&back, s).unwrap() > 1.0 - TOL);
    Ok(())
}

pub fn norm_preserved_by_collapse(s: &PureState, basis: &MeasurementBasis) -> Result<(), TestCaseError> {
    let probs = outcome_probabilities(s, basis).unwrap();
    for (k, p) in probs.iter().enumerate() {
        if *p < 1e-9 {
            continue;
        }
        let m = project(s, basis, k).unwrap();
        prop_assert!((m.collapsed.norm_sqr() - 1.0).abs() < TOL);
        if let Some(residual) = &m.residual {
            prop_assert!((residual.norm_sqr() - 1.0).abs() < TOL);
        }
    }
    Ok(())
}

pub fn born_complete(s: &PureState, basis: &MeasurementBasis) -> Result<(), TestCaseError> {
    let probs = outcome_probabilities(s, basis).unwrap();
    prop_assert_eq!(probs.len(), basis.len());
    prop_assert!(probs.iter().all(|p| *p >= 0.0));
    let total: f64 = probs.iter().sum();
    prop_assert!((total - 1.0).abs() < TOL, "total {}", total);
    Ok(())
}

pub fn projection_idempotent(s: &PureState, basis: &MeasurementBasis) -> Result<(), TestCaseError> {
    let probs = outcome_probabilities(s, basis).unwrap();
    let k = (0..probs.len()).max_by(|&a, &b| probs[a].total_cmp(&probs[b])).unwrap();
    let once = project(s, basis, k).unwrap();
    let twice = project(&once.collapsed, basis, k).unwrap();
    prop_assert!((twice.probability - 1.0).abs() < TOL, "repeat probability {}", twice.probability);
    prop_assert!(fidelity(&twice.collapsed, &once.collapsed).unwrap() > 1.0 - TOL);
    Ok(())
}

pub fn fidelity_phase_invariant(s: &PureState, t: &PureState, theta: f64) -> Result<(), TestCaseError> {
    let shifted = s.with_global_phase(theta);
    prop_assert!((fidelity(&shifted, s).unwrap() - 1.0).abs() < TOL);
    let f0 = fidelity(s, t).unwrap();
    let f1 = fidelity(&shifted, t).unwrap();
    prop_assert!((f0 - f1).abs() < TOL, "{} vs {}", f0, f1);
    prop_assert!((0.0..=1.0).contains(&f0));
    Ok(())
}

pub fn partial_trace_consistent(left: &PureState, right: &PureState) -> Result<(), TestCaseError> {
    let joint = tensor(left, right);
    let nl = left.num_qubits();
    let keep_left: Vec<usize> = (0..nl).collect();
    let keep_right: Vec<usize> = (nl..joint.num_qubits()).collect();
    let rl = reduced_density(&joint, &keep_left).unwrap();
    let rr = reduced_density(&joint, &keep_right).unwrap();
    prop_assert!(rl.max_abs_diff(&DensityMatrix::from_pure(left)).unwrap() < TOL);
    prop_assert!(rr.max_abs_diff(&DensityMatrix::from_pure(right)).unwrap() < TOL);
    prop_assert!((rl.trace().re - 1.0).abs() < TOL);
    Ok(())
}
