use std::f64::consts::FRAC_1_SQRT_2;

use super::{check_targets, Amplitude, PureState, SlotSplit, ALGEBRA_TOL};
use crate::{Result, SimError};

/// Square unitary acting on `log2(dim)` qubits, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct GateMatrix {
    dim: usize,
    entries: Vec<Amplitude>,
}

const ZERO: Amplitude = Amplitude::new(0.0, 0.0);
const ONE: Amplitude = Amplitude::new(1.0, 0.0);
const I: Amplitude = Amplitude::new(0.0, 1.0);

impl GateMatrix {
    /// Validates shape and unitarity (`U†U = 1` entrywise within
    /// [`ALGEBRA_TOL`]).
    pub fn new(dim: usize, entries: Vec<Amplitude>) -> Result<Self> {
        if dim < 2 || !dim.is_power_of_two() {
            return Err(SimError::InvalidParameter(format!("gate dimension {dim} is not a power of two ≥ 2")));
        }
        if entries.len() != dim * dim {
            return Err(SimError::LengthMismatch { expected: dim * dim, got: entries.len() });
        }
        let gate = Self { dim, entries };
        let deviation = gate.unitarity_deviation();
        if deviation.is_nan() || deviation > ALGEBRA_TOL {
            return Err(SimError::NotUnitary { deviation });
        }
        Ok(gate)
    }

    fn fixed(dim: usize, entries: Vec<Amplitude>) -> Self {
        debug_assert!(Self::new(dim, entries.clone()).is_ok());
        Self { dim, entries }
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![ZERO; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = ONE;
        }
        Self { dim, entries }
    }

    pub fn pauli_x() -> Self {
        Self::fixed(2, vec![ZERO, ONE, ONE, ZERO])
    }

    pub fn pauli_y() -> Self {
        Self::fixed(2, vec![ZERO, -I, I, ZERO])
    }

    pub fn pauli_z() -> Self {
        Self::fixed(2, vec![ONE, ZERO, ZERO, -ONE])
    }

    pub fn hadamard() -> Self {
        let h = Amplitude::new(FRAC_1_SQRT_2, 0.0);
        Self::fixed(2, vec![h, h, h, -h])
    }

    /// CNOT with the first target as control.
    pub fn cnot() -> Self {
        let mut entries = vec![ZERO; 16];
        for (row, col) in [(0, 0), (1, 1), (2, 3), (3, 2)] {
            entries[row * 4 + col] = ONE;
        }
        Self::fixed(4, entries)
    }

    /// General single-qubit rotation
    /// `[[cos θ/2, −e^{iλ} sin θ/2], [e^{iφ} sin θ/2, e^{i(φ+λ)} cos θ/2]]`.
    pub fn u3(theta: f64, phi: f64, lambda: f64) -> Self {
        let (s, c) = (theta / 2.0).sin_cos();
        Self {
            dim: 2,
            entries: vec![
                Amplitude::new(c, 0.0),
                -Amplitude::from_polar(s, lambda),
                Amplitude::from_polar(s, phi),
                Amplitude::from_polar(c, phi + lambda),
            ],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_qubits(&self) -> usize {
        self.dim.trailing_zeros() as usize
    }

    pub fn entry(&self, row: usize, col: usize) -> Amplitude {
        self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[Amplitude] {
        &self.entries
    }

    /// Matrix product `self · rhs` (apply `rhs` first).
    pub fn matmul(&self, rhs: &GateMatrix) -> Result<GateMatrix> {
        if self.dim != rhs.dim {
            return Err(SimError::DimMismatch { expected: self.dim, got: rhs.dim });
        }
        let n = self.dim;
        let mut entries = vec![ZERO; n * n];
        for r in 0..n {
            for c in 0..n {
                entries[r * n + c] = (0..n).map(|k| self.entry(r, k) * rhs.entry(k, c)).sum();
            }
        }
        Ok(Self { dim: n, entries })
    }

    /// Kronecker product `self ⊗ rhs`; `self` acts on the leading targets.
    pub fn kron(&self, rhs: &GateMatrix) -> GateMatrix {
        let n = self.dim * rhs.dim;
        let mut entries = vec![ZERO; n * n];
        for r in 0..n {
            for c in 0..n {
                entries[r * n + c] =
                    self.entry(r / rhs.dim, c / rhs.dim) * rhs.entry(r % rhs.dim, c % rhs.dim);
            }
        }
        Self { dim: n, entries }
    }

    pub fn adjoint(&self) -> GateMatrix {
        let n = self.dim;
        let mut entries = vec![ZERO; n * n];
        for r in 0..n {
            for c in 0..n {
                entries[c * n + r] = self.entry(r, c).conj();
            }
        }
        Self { dim: n, entries }
    }

    /// Largest entrywise deviation of `U†U` from the identity.
    pub fn unitarity_deviation(&self) -> f64 {
        let n = self.dim;
        let mut worst: f64 = 0.0;
        for r in 0..n {
            for c in 0..n {
                let v: Amplitude = (0..n).map(|k| self.entry(k, r).conj() * self.entry(k, c)).sum();
                let target = if r == c { ONE } else { ZERO };
                let d = (v - target).norm();
                if d.is_nan() {
                    return f64::INFINITY;
                }
                worst = worst.max(d);
            }
        }
        worst
    }
}

/// Applies `gate` to `targets` (the first target is the gate's most
/// significant qubit) and the identity elsewhere.
pub fn apply_gate(state: &PureState, gate: &GateMatrix, targets: &[usize]) -> Result<PureState> {
    let n = state.num_qubits();
    check_targets(targets, n)?;
    let expected = 1usize << targets.len();
    if gate.dim() != expected {
        return Err(SimError::DimMismatch { expected, got: gate.dim() });
    }
    let split = SlotSplit::new(targets, n);
    let input = state.amplitudes();
    let mut out = vec![ZERO; input.len()];
    let mut local = vec![ZERO; expected];
    for rest in 0..split.rest_dim() {
        for (t, slot) in local.iter_mut().enumerate() {
            *slot = input[split.compose(t, rest)];
        }
        for row in 0..expected {
            out[split.compose(row, rest)] =
                local.iter().enumerate().map(|(col, a)| gate.entry(row, col) * a).sum();
        }
    }
    Ok(PureState::from_unitary_image(n, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::statevec::{fidelity, tensor};

    fn close(a: &PureState, b: &PureState) -> bool {
        fidelity(a, b).unwrap() > 1.0 - 1e-12
    }

    #[test]
    fn standard_gates_are_unitary() {
        for g in [
            GateMatrix::pauli_x(),
            GateMatrix::pauli_y(),
            GateMatrix::pauli_z(),
            GateMatrix::hadamard(),
            GateMatrix::cnot(),
            GateMatrix::u3(0.3, 1.1, -2.0),
        ] {
            assert!(g.unitarity_deviation() < 1e-15, "{g:?}");
        }
    }

    #[test]
    fn rejects_non_unitary_and_bad_shape() {
        assert!(matches!(GateMatrix::new(2, vec![ONE, ONE, ZERO, ONE]), Err(SimError::NotUnitary { .. })));
        assert!(matches!(GateMatrix::new(3, vec![ONE; 9]), Err(SimError::InvalidParameter(_))));
        assert!(matches!(GateMatrix::new(2, vec![ONE; 3]), Err(SimError::LengthMismatch { .. })));
    }

    #[test]
    fn x_flips_zero() {
        let out = apply_gate(&PureState::zero(), &GateMatrix::pauli_x(), &[0]).unwrap();
        assert_eq!(out, PureState::one());
    }

    #[test]
    fn z_maps_plus_to_minus() {
        let out = apply_gate(&PureState::plus(), &GateMatrix::pauli_z(), &[0]).unwrap();
        assert!(close(&out, &PureState::minus()));
    }

    #[test]
    fn x_on_channel_b_matches_index_permutation() {
        // brute-force oracle: X on slot 1 of three qubits toggles bit 0b010
        let mut amps = vec![ZERO; 8];
        for idx in [0b000, 0b110, 0b011, 0b101] {
            amps[idx] = Amplitude::new(0.5, 0.0);
        }
        let xi = PureState::from_amplitudes(3, amps.clone()).unwrap();
        let permuted: Vec<_> = (0..8).map(|i| amps[i ^ 0b010]).collect();
        let expected = PureState::from_amplitudes(3, permuted).unwrap();
        let out = apply_gate(&xi, &GateMatrix::pauli_x(), &[1]).unwrap();
        assert_eq!(out, expected);
        // ½(|010⟩+|100⟩+|001⟩+|111⟩)
        for idx in [0b010, 0b100, 0b001, 0b111] {
            assert!((out.amplitude(idx).re - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn target_order_follows_gate_significance() {
        // CNOT with control on slot 1, target slot 0: |01⟩ -> |11⟩
        let s = PureState::basis(2, 0b01).unwrap();
        let out = apply_gate(&s, &GateMatrix::cnot(), &[1, 0]).unwrap();
        assert_eq!(out, PureState::basis(2, 0b11).unwrap());
    }

    #[test]
    fn kron_matches_sequential_application() {
        let a = GateMatrix::u3(0.7, 0.2, 1.3);
        let b = GateMatrix::hadamard();
        let s = tensor(&PureState::plus(), &PureState::qubit(Amplitude::new(0.6, 0.0), Amplitude::new(0.0, 0.8)).unwrap());
        let joint = apply_gate(&s, &a.kron(&b), &[0, 1]).unwrap();
        let seq = apply_gate(&apply_gate(&s, &a, &[0]).unwrap(), &b, &[1]).unwrap();
        assert!(close(&joint, &seq));
    }

    #[test]
    fn matmul_orders_right_factor_first() {
        // Z·X|0⟩ = Z|1⟩ = −|1⟩
        let zx = GateMatrix::pauli_z().matmul(&GateMatrix::pauli_x()).unwrap();
        let out = apply_gate(&PureState::zero(), &zx, &[0]).unwrap();
        assert!((out.amplitude(1) + ONE).norm() < 1e-15);
    }

    #[test]
    fn apply_gate_errors() {
        let s = PureState::basis(2, 0).unwrap();
        assert!(matches!(
            apply_gate(&s, &GateMatrix::pauli_x(), &[2]),
            Err(SimError::TargetOutOfRange { index: 2, .. })
        ));
        assert!(matches!(
            apply_gate(&s, &GateMatrix::cnot(), &[0]),
            Err(SimError::DimMismatch { expected: 2, got: 4 })
        ));
        assert!(matches!(
            apply_gate(&s, &GateMatrix::cnot(), &[0, 0]),
            Err(SimError::DuplicateTarget { index: 0 })
        ));
    }
}
