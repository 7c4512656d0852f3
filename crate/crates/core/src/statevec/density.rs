use nalgebra::DMatrix;

use super::{check_targets, Amplitude, PureState, SlotSplit, ALGEBRA_TOL};
use crate::{Result, SimError};

/// Most negative eigenvalue tolerated before a matrix is rejected as not
/// positive semidefinite.
pub const PSD_TOL: f64 = 1e-10;

/// Diagnostic density matrix (row-major). Only used to inspect marginals and
/// ensembles; the simulator itself evolves pure states.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    dim: usize,
    entries: Vec<Amplitude>,
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and positive semidefiniteness.
    pub fn new(dim: usize, entries: Vec<Amplitude>) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(SimError::LengthMismatch { expected: dim * dim, got: entries.len() });
        }
        let rho = Self { dim, entries };
        rho.validate()?;
        Ok(rho)
    }

    /// `|ψ⟩⟨ψ|`
    pub fn from_pure(state: &PureState) -> Self {
        let a = state.amplitudes();
        let dim = a.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for r in a {
            for c in a {
                entries.push(r * c.conj());
            }
        }
        Self { dim, entries }
    }

    /// `1/dim`
    pub fn maximally_mixed(dim: usize) -> Self {
        let mut entries = vec![Amplitude::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = Amplitude::new(1.0 / dim as f64, 0.0);
        }
        Self { dim, entries }
    }

    /// Convex combination `Σ w_k ρ_k`. Weights must be non-negative and sum
    /// to one.
    pub fn mixture<'a>(components: impl IntoIterator<Item = (f64, &'a DensityMatrix)>) -> Result<Self> {
        let mut dim = None;
        let mut total = 0.0;
        let mut entries: Vec<Amplitude> = Vec::new();
        for (w, rho) in components {
            if w.is_nan() || w < 0.0 {
                return Err(SimError::InvalidParameter(format!("mixture weight {w} is negative")));
            }
            match dim {
                None => {
                    dim = Some(rho.dim);
                    entries = vec![Amplitude::new(0.0, 0.0); rho.dim * rho.dim];
                }
                Some(d) if d != rho.dim => return Err(SimError::DimMismatch { expected: d, got: rho.dim }),
                Some(_) => {}
            }
            total += w;
            entries.iter_mut().zip(&rho.entries).for_each(|(acc, e)| *acc += e * w);
        }
        let dim = dim.ok_or_else(|| SimError::InvalidParameter("empty mixture".into()))?;
        if (total - 1.0).abs() > 1e-9 {
            return Err(SimError::InvalidParameter(format!("mixture weights sum to {total}")));
        }
        Self::new(dim, entries)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> Amplitude {
        self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[Amplitude] {
        &self.entries
    }

    pub fn trace(&self) -> Amplitude {
        (0..self.dim).map(|i| self.entry(i, i)).sum()
    }

    /// `Tr ρ²`
    pub fn purity(&self) -> f64 {
        // for Hermitian ρ, Tr ρ² = Σ |ρ_ij|²
        self.entries.iter().map(|e| e.norm_sqr()).sum()
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(self.dim, &self.entries)
    }

    /// Largest entrywise difference to `other`.
    pub fn max_abs_diff(&self, other: &DensityMatrix) -> Result<f64> {
        if self.dim != other.dim {
            return Err(SimError::DimMismatch { expected: self.dim, got: other.dim });
        }
        Ok(self.entries.iter().zip(&other.entries).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max))
    }

    fn validate(&self) -> Result<()> {
        if let Some(i) = self.entries.iter().position(|e| !e.re.is_finite() || !e.im.is_finite()) {
            return Err(SimError::NonFinite { index: i });
        }
        for r in 0..self.dim {
            for c in r..self.dim {
                if (self.entry(r, c) - self.entry(c, r).conj()).norm() > ALGEBRA_TOL {
                    return Err(SimError::InvalidDensity { reason: format!("not Hermitian at ({r}, {c})") });
                }
            }
        }
        let tr = self.trace();
        if (tr - Amplitude::new(1.0, 0.0)).norm() > ALGEBRA_TOL {
            return Err(SimError::InvalidDensity { reason: format!("trace is {tr}") });
        }
        let min = self.eigenvalues().first().copied().unwrap_or(0.0);
        if min < -PSD_TOL {
            return Err(SimError::InvalidDensity { reason: format!("negative eigenvalue {min:e}") });
        }
        Ok(())
    }
}

fn hermitian_eigenvalues(dim: usize, entries: &[Amplitude]) -> Vec<f64> {
    let m = DMatrix::from_row_slice(dim, dim, entries);
    let mut ev: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Partial trace of `|ψ⟩⟨ψ|` over every qubit not in `keep`. The kept
/// qubits are ordered as listed in `keep`.
pub fn reduced_density(state: &PureState, keep: &[usize]) -> Result<DensityMatrix> {
    if keep.is_empty() {
        return Err(SimError::InvalidParameter("no qubits to keep".into()));
    }
    check_targets(keep, state.num_qubits())?;
    let split = SlotSplit::new(keep, state.num_qubits());
    let dim = split.target_dim();
    let amps = state.amplitudes();
    let mut entries = vec![Amplitude::new(0.0, 0.0); dim * dim];
    for r in 0..dim {
        for c in 0..dim {
            entries[r * dim + c] = (0..split.rest_dim())
                .map(|k| amps[split.compose(r, k)] * amps[split.compose(c, k)].conj())
                .sum();
        }
    }
    DensityMatrix::new(dim, entries)
}

/// `½ Σ |λ_i|` over the eigenvalues of `d1 − d2`, clamped into `[0, 1]`.
pub fn trace_distance(d1: &DensityMatrix, d2: &DensityMatrix) -> Result<f64> {
    if d1.dim != d2.dim {
        return Err(SimError::DimMismatch { expected: d1.dim, got: d2.dim });
    }
    let diff: Vec<Amplitude> = d1.entries.iter().zip(&d2.entries).map(|(a, b)| a - b).collect();
    let sum: f64 = hermitian_eigenvalues(d1.dim, &diff).iter().map(|l| l.abs()).sum();
    Ok((0.5 * sum).clamp(0.0, 1.0))
}
