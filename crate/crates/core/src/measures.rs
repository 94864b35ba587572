//! Closed-form observables of a register state: single-qubit reduced density
//! matrices, the average bipartite entanglement Q, fidelity, and the
//! log-infidelity K.
//!
//! Q(ψ) = 2 − (2/n) Σᵢ Tr(ρᵢ²), where ρᵢ is the i-th qubit's marginal. It
//! vanishes exactly on product states and reaches 1 when every marginal is
//! maximally mixed. Marginals are accumulated by direct index iteration —
//! no 2ⁿ×2ⁿ density matrix is ever formed.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::statevector::StateVector;

/// 2×2 reduced density matrix of a single qubit: Hermitian, unit trace.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitDensityMatrix {
    entries: [[Complex64; 2]; 2],
}

impl QubitDensityMatrix {
    pub fn entries(&self) -> &[[Complex64; 2]; 2] {
        &self.entries
    }

    pub fn trace(&self) -> f64 {
        self.entries[0][0].re + self.entries[1][1].re
    }

    /// Tr(ρ²) = ρ₀₀² + ρ₁₁² + 2|ρ₀₁|², in [1/2, 1] for unit-trace marginals.
    pub fn purity(&self) -> f64 {
        let a = self.entries[0][0].re;
        let d = self.entries[1][1].re;
        a * a + d * d + 2.0 * self.entries[0][1].norm_sqr()
    }

    /// Largest eigenvalue by the closed-form quadratic formula; in [1/2, 1].
    pub fn largest_eigenvalue(&self) -> f64 {
        let a = self.entries[0][0].re;
        let d = self.entries[1][1].re;
        let half_diff = (a - d) / 2.0;
        (a + d) / 2.0 + (half_diff * half_diff + self.entries[0][1].norm_sqr()).sqrt()
    }
}

/// Partial trace over every qubit except `q`.
pub fn reduced_density_single(state: &StateVector, q: usize) -> Result<QubitDensityMatrix> {
    let n = state.n();
    if q >= n {
        return Err(Error::QubitOutOfRange { q, n });
    }
    let amps = state.amplitudes();
    let step = 1usize << q;
    let mut p00 = 0.0;
    let mut p11 = 0.0;
    let mut off = Complex64::new(0.0, 0.0);
    for block in (0..amps.len()).step_by(2 * step) {
        for offset in 0..step {
            let lo = block + offset;
            let hi = lo + step;
            p00 += amps[lo].norm_sqr();
            p11 += amps[hi].norm_sqr();
            off += amps[lo] * amps[hi].conj();
        }
    }
    Ok(QubitDensityMatrix {
        entries: [
            [Complex64::new(p00, 0.0), off],
            [off.conj(), Complex64::new(p11, 0.0)],
        ],
    })
}

/// Average bipartite entanglement Q(ψ) = 2 − (2/n) Σᵢ Tr(ρᵢ²).
pub fn average_bipartite_q(state: &StateVector) -> f64 {
    let n = state.n();
    let purity_sum: f64 = (0..n)
        .map(|q| {
            reduced_density_single(state, q)
                .expect("qubit index in range")
                .purity()
        })
        .sum();
    2.0 - 2.0 / n as f64 * purity_sum
}

/// Fidelity F(a, b) = |⟨a|b⟩|.
pub fn fidelity(a: &StateVector, b: &StateVector) -> Result<f64> {
    Ok(a.inner_product(b)?.norm())
}

/// Log-infidelity K(a, b) = −ln F(a, b); +∞ for orthogonal states. Fidelity
/// is clamped to 1 before the logarithm so round-off cannot produce a
/// negative K.
pub fn log_infidelity(a: &StateVector, b: &StateVector) -> Result<f64> {
    Ok(-fidelity(a, b)?.min(1.0).ln())
}
