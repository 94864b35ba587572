//! Dense statevector representation of an n-qubit register and in-place gate
//! application.
//!
//! Bit convention: qubit `q` is the q-th least significant bit of the basis
//! index, so for two qubits the basis order is |00⟩, |01⟩, |10⟩, |11⟩ with the
//! rightmost ket symbol being qubit 0. Gates act by strided pair updates over
//! the amplitude array; no 2ⁿ×2ⁿ matrix is ever materialized. Global phase is
//! left untouched — every measure built on top of this module is
//! phase-invariant.

use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

use crate::error::{Error, Result};

/// Tolerance for the U†U = 1 check on 2×2 unitaries.
const UNITARITY_TOL: f64 = 1e-12;

/// A 2×2 complex unitary acting on a single qubit.
///
/// `entries[r][c]` is the matrix element in row `r`, column `c`, with row/
/// column 0 corresponding to |0⟩.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingleQubitUnitary {
    entries: [[Complex64; 2]; 2],
}

impl SingleQubitUnitary {
    /// Builds a unitary from explicit entries, rejecting matrices that fail
    /// U†U = 1 entrywise within 1e-12.
    pub fn from_entries(entries: [[Complex64; 2]; 2]) -> Result<Self> {
        let mut deviation: f64 = 0.0;
        for r in 0..2 {
            for c in 0..2 {
                // (U†U)[r][c] = Σ_k conj(U[k][r]) U[k][c]
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..2 {
                    acc += entries[k][r].conj() * entries[k][c];
                }
                let target = if r == c { 1.0 } else { 0.0 };
                deviation = deviation.max((acc - target).norm());
            }
        }
        if deviation > UNITARITY_TOL {
            return Err(Error::NotUnitary { deviation });
        }
        Ok(Self { entries })
    }

    pub fn identity() -> Self {
        Self {
            entries: [
                [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
                [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
            ],
        }
    }

    /// The NOT (Pauli-X) gate.
    pub fn pauli_x() -> Self {
        Self {
            entries: [
                [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
                [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
            ],
        }
    }

    pub fn hadamard() -> Self {
        let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
        Self {
            entries: [[h, h], [h, -h]],
        }
    }

    /// The conjugate transpose U†.
    pub fn dagger(&self) -> Self {
        Self {
            entries: [
                [self.entries[0][0].conj(), self.entries[1][0].conj()],
                [self.entries[0][1].conj(), self.entries[1][1].conj()],
            ],
        }
    }

    pub fn entries(&self) -> &[[Complex64; 2]; 2] {
        &self.entries
    }

    pub fn determinant(&self) -> Complex64 {
        self.entries[0][0] * self.entries[1][1] - self.entries[0][1] * self.entries[1][0]
    }

    /// Largest entrywise deviation of U†U from the identity.
    pub fn unitarity_deviation(&self) -> f64 {
        let mut deviation: f64 = 0.0;
        for r in 0..2 {
            for c in 0..2 {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..2 {
                    acc += self.entries[k][r].conj() * self.entries[k][c];
                }
                let target = if r == c { 1.0 } else { 0.0 };
                deviation = deviation.max((acc - target).norm());
            }
        }
        deviation
    }
}

/// Pure state of an n-qubit register: 2ⁿ complex amplitudes, unit norm.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// Computational basis state |index⟩ of an n-qubit register.
    pub fn new_basis_state(n: usize, index: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::TooFewQubits { n, min: 1 });
        }
        let dim = 1usize << n;
        if index >= dim {
            return Err(Error::BasisIndexOutOfRange { index, n, dim });
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(Self { n, amps })
    }

    /// Builds a state from raw amplitudes. The length must be a power of two
    /// and the norm must be 1 within 1e-10.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        let dim = amps.len();
        if dim < 2 || !dim.is_power_of_two() {
            return Err(Error::InvalidParameter(format!(
                "amplitude array length {dim} is not a power of two ≥ 2"
            )));
        }
        let n = dim.trailing_zeros() as usize;
        let norm_sqr: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > 1e-10 {
            return Err(Error::InvalidParameter(format!(
                "amplitudes have squared norm {norm_sqr}, expected 1"
            )));
        }
        Ok(Self { n, amps })
    }

    /// Tensor product of n single-qubit states, one factor per qubit. Each
    /// factor must have unit norm within 1e-10.
    pub fn from_factors(factors: &[[Complex64; 2]]) -> Result<Self> {
        let n = factors.len();
        if n == 0 {
            return Err(Error::TooFewQubits { n: 0, min: 1 });
        }
        for f in factors {
            let norm_sqr = f[0].norm_sqr() + f[1].norm_sqr();
            if (norm_sqr - 1.0).abs() > 1e-10 {
                return Err(Error::InvalidParameter(format!(
                    "factor has squared norm {norm_sqr}, expected 1"
                )));
            }
        }
        let dim = 1usize << n;
        let mut amps = Vec::with_capacity(dim);
        for index in 0..dim {
            let mut a = Complex64::new(1.0, 0.0);
            for (q, f) in factors.iter().enumerate() {
                a *= f[(index >> q) & 1];
            }
            amps.push(a);
        }
        Ok(Self { n, amps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    /// Σ|amplitude|².
    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Applies a single-qubit gate to qubit `q` in place.
    pub fn apply_single_qubit_gate(&mut self, gate: &SingleQubitUnitary, q: usize) -> Result<()> {
        if q >= self.n {
            return Err(Error::QubitOutOfRange { q, n: self.n });
        }
        let u = gate.entries();
        let step = 1usize << q;
        for block in (0..self.amps.len()).step_by(2 * step) {
            for offset in 0..step {
                let lo = block + offset;
                let hi = lo + step;
                let a = self.amps[lo];
                let b = self.amps[hi];
                self.amps[lo] = u[0][0] * a + u[0][1] * b;
                self.amps[hi] = u[1][0] * a + u[1][1] * b;
            }
        }
        debug_assert!((self.norm_sqr() - 1.0).abs() < 1e-9);
        Ok(())
    }

    /// Applies the controlled-phase gate exp(iπ/4 σz⊗σz) to qubits `i`, `j`:
    /// amplitudes pick up e^{iπ/4} where bits i and j agree and e^{−iπ/4}
    /// where they differ. The gate is diagonal and symmetric in (i, j).
    pub fn apply_controlled_phase(&mut self, i: usize, j: usize) -> Result<()> {
        if i == j {
            return Err(Error::IdenticalQubits { i, j });
        }
        if i >= self.n {
            return Err(Error::QubitOutOfRange { q: i, n: self.n });
        }
        if j >= self.n {
            return Err(Error::QubitOutOfRange { q: j, n: self.n });
        }
        let phase_eq = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4);
        let phase_ne = phase_eq.conj();
        for (index, amp) in self.amps.iter_mut().enumerate() {
            let equal = ((index >> i) ^ (index >> j)) & 1 == 0;
            *amp *= if equal { phase_eq } else { phase_ne };
        }
        debug_assert!((self.norm_sqr() - 1.0).abs() < 1e-9);
        Ok(())
    }

    /// ⟨self|other⟩ with conjugation on `self`.
    pub fn inner_product(&self, other: &StateVector) -> Result<Complex64> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(self
            .amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| a.conj() * b)
            .sum())
    }
}
