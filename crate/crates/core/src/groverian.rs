//! The product-overlap entanglement measure: P_max(ψ), the maximal squared
//! overlap between ψ and any tensor-product state, and the logarithmic
//! Groverian measure G(ψ) = −ln P_max(ψ).
//!
//! P_max is computed by multi-restart alternating optimization. Fixing every
//! product factor except qubit q reduces the overlap to a linear function of
//! that factor, so the optimal factor is the normalized "environment vector"
//! and the new overlap magnitude is its norm. Sweeping qubits 0…n−1 is
//! therefore monotonically non-decreasing in the overlap, and each sweep
//! costs O(2ⁿ) thanks to running prefix/suffix contractions. Restarts from
//! Bloch-uniform random product states guard against local maxima; the
//! restart RNG is seeded from [`OptimizerOptions::seed`], making the whole
//! computation a pure function of (state, options).
//!
//! For n ≤ 3 an exhaustive grid oracle over product states is provided for
//! validation; it shares no code with the sweep engine.

use num_complex::Complex64;
use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::random::{sample_bloch_factor, SeededGenerator};
use crate::statevector::StateVector;

/// Environment norms below this are treated as the degenerate zero slice and
/// the factor is re-randomized.
const DEGENERATE_NORM: f64 = 1e-150;

/// Overlap ties within this margin keep the earlier restart's ansatz.
const TIE_MARGIN: f64 = 1e-12;

/// A candidate closest product state: one unit-norm factor per qubit.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductAnsatz {
    factors: Vec<[Complex64; 2]>,
}

impl ProductAnsatz {
    /// Builds an ansatz from explicit factors, each unit-norm within 1e-12.
    pub fn new(factors: Vec<[Complex64; 2]>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::TooFewQubits { n: 0, min: 1 });
        }
        for f in &factors {
            let norm_sqr = f[0].norm_sqr() + f[1].norm_sqr();
            if (norm_sqr - 1.0).abs() > 1e-12 {
                return Err(Error::InvalidParameter(format!(
                    "ansatz factor has squared norm {norm_sqr}, expected 1"
                )));
            }
        }
        Ok(Self { factors })
    }

    /// Bloch-uniform random ansatz (two uniform draws per qubit).
    pub fn random(rng: &mut SeededGenerator, n: usize) -> Self {
        Self {
            factors: (0..n).map(|_| sample_bloch_factor(rng)).collect(),
        }
    }

    pub fn factors(&self) -> &[[Complex64; 2]] {
        &self.factors
    }

    pub fn n(&self) -> usize {
        self.factors.len()
    }

    /// ⟨φ|ψ⟩ by direct summation over basis indices.
    pub fn overlap(&self, state: &StateVector) -> Result<Complex64> {
        if self.n() != state.n() {
            return Err(Error::DimensionMismatch {
                left: self.n(),
                right: state.n(),
            });
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (index, amp) in state.amplitudes().iter().enumerate() {
            let mut w = Complex64::new(1.0, 0.0);
            for (q, f) in self.factors.iter().enumerate() {
                w *= f[(index >> q) & 1].conj();
            }
            acc += w * amp;
        }
        Ok(acc)
    }
}

/// Settings for the alternating-optimization search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimizerOptions {
    /// Number of random restarts (≥ 1).
    pub restarts: usize,
    /// Sweep cap per restart (≥ 1).
    pub max_sweeps: usize,
    /// Per-sweep overlap-improvement threshold (> 0) below which a restart
    /// is converged.
    pub tolerance: f64,
    /// Seed of the restart-initialization stream; restart r draws from
    /// substream (seed, r).
    pub seed: u64,
}

impl Default for OptimizerOptions {
    fn default() -> Self {
        Self {
            restarts: 20,
            max_sweeps: 1000,
            tolerance: 1e-9,
            seed: 0x9e3779b97f4a7c15,
        }
    }
}

impl OptimizerOptions {
    fn validate(&self) -> Result<()> {
        if self.restarts < 1 {
            return Err(Error::InvalidParameter("restarts must be ≥ 1".into()));
        }
        if self.max_sweeps < 1 {
            return Err(Error::InvalidParameter("max_sweeps must be ≥ 1".into()));
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(Error::InvalidParameter("tolerance must be > 0".into()));
        }
        Ok(())
    }
}

/// Outcome of the P_max search.
#[derive(Debug, Clone)]
pub struct PMaxResult {
    /// Maximal squared overlap found, clamped to (0, 1].
    pub p_max: f64,
    /// The maximizing product state.
    pub best_ansatz: ProductAnsatz,
    /// Sweeps used by the restart that produced the maximum.
    pub sweeps_used: usize,
    /// Whether that restart met the improvement tolerance (or hit overlap 1)
    /// before the sweep cap.
    pub converged: bool,
}

/// Contracts ψ with the conjugate factors of every qubit except `q`. The
/// optimal factor for qubit q is this vector normalized and its norm is the
/// new overlap magnitude. A zero vector signals the degenerate slice where
/// every choice of factor q gives overlap 0.
pub fn environment_vector(
    state: &StateVector,
    ansatz: &ProductAnsatz,
    q: usize,
) -> Result<[Complex64; 2]> {
    let n = state.n();
    if ansatz.n() != n {
        return Err(Error::DimensionMismatch {
            left: ansatz.n(),
            right: n,
        });
    }
    if q >= n {
        return Err(Error::QubitOutOfRange { q, n });
    }
    let mut env = [Complex64::new(0.0, 0.0); 2];
    for (index, amp) in state.amplitudes().iter().enumerate() {
        let mut w = Complex64::new(1.0, 0.0);
        for (p, f) in ansatz.factors.iter().enumerate() {
            if p != q {
                w *= f[(index >> p) & 1].conj();
            }
        }
        env[(index >> q) & 1] += w * amp;
    }
    Ok(env)
}

/// One restart of the alternating optimization. Returns (overlap, sweeps,
/// converged) and leaves `factors` at the final ansatz.
fn optimize_restart(
    state: &StateVector,
    factors: &mut [[Complex64; 2]],
    options: &OptimizerOptions,
    rng: &mut SeededGenerator,
    scratch: &mut Vec<Complex64>,
    prefix: &mut Vec<Complex64>,
) -> (f64, usize, bool) {
    let n = state.n();
    let amps = state.amplitudes();

    let mut previous = {
        // Initial overlap, via the same prefix machinery (full contraction).
        prefix.clear();
        prefix.extend_from_slice(amps);
        for f in factors.iter() {
            contract_lowest(prefix, f);
        }
        prefix[0].norm()
    };

    let mut sweeps = 0;
    let mut converged = false;
    while sweeps < options.max_sweeps {
        sweeps += 1;
        prefix.clear();
        prefix.extend_from_slice(amps);
        let mut within_sweep = previous;
        for q in 0..n {
            // Suffix-fold the prefix (qubits q…n−1) down to the environment
            // of qubit q using the current factors of the higher qubits.
            scratch.clear();
            scratch.extend_from_slice(prefix);
            for p in ((q + 1)..n).rev() {
                contract_highest(scratch, &factors[p]);
            }
            let env = [scratch[0], scratch[1]];
            let norm = (env[0].norm_sqr() + env[1].norm_sqr()).sqrt();
            if norm < DEGENERATE_NORM {
                // Degenerate slice: any factor is optimal; re-randomize.
                factors[q] = sample_bloch_factor(rng);
            } else {
                factors[q] = [env[0] / norm, env[1] / norm];
                // Each single-factor update is exactly optimal given the
                // others, so the overlap never decreases.
                debug_assert!(norm >= within_sweep - 1e-12);
                within_sweep = norm;
            }
            contract_lowest(prefix, &factors[q]);
        }
        let overlap = prefix[0].norm();
        let improvement = overlap - previous;
        previous = overlap;
        if overlap >= 1.0 - TIE_MARGIN || improvement < options.tolerance {
            converged = true;
            break;
        }
    }
    (previous, sweeps, converged)
}

/// Removes the lowest remaining qubit of `buf` by contracting with `factor`.
fn contract_lowest(buf: &mut Vec<Complex64>, factor: &[Complex64; 2]) {
    let half = buf.len() / 2;
    let f0 = factor[0].conj();
    let f1 = factor[1].conj();
    for m in 0..half {
        buf[m] = f0 * buf[2 * m] + f1 * buf[2 * m + 1];
    }
    buf.truncate(half);
}

/// Removes the highest remaining qubit of `buf` by contracting with `factor`.
fn contract_highest(buf: &mut Vec<Complex64>, factor: &[Complex64; 2]) {
    let half = buf.len() / 2;
    let f0 = factor[0].conj();
    let f1 = factor[1].conj();
    for m in 0..half {
        buf[m] = f0 * buf[m] + f1 * buf[m + half];
    }
    buf.truncate(half);
}

/// Maximal squared overlap with a product state, by multi-restart alternating
/// optimization. Restart r initializes from substream (options.seed, r); the
/// best overlap is reduced in restart order, keeping the first ansatz that
/// attains the maximum within 1e-12.
pub fn p_max(state: &StateVector, options: &OptimizerOptions) -> Result<PMaxResult> {
    options.validate()?;
    let n = state.n();
    let dim = state.amplitudes().len();
    let mut scratch = Vec::with_capacity(dim);
    let mut prefix = Vec::with_capacity(dim);

    let mut best: Option<(f64, Vec<[Complex64; 2]>, usize, bool)> = None;
    for restart in 0..options.restarts {
        let mut rng = SeededGenerator::with_stream(options.seed, restart as u64);
        let mut factors: Vec<[Complex64; 2]> =
            (0..n).map(|_| sample_bloch_factor(&mut rng)).collect();
        let (overlap, sweeps, converged) = optimize_restart(
            state,
            &mut factors,
            options,
            &mut rng,
            &mut scratch,
            &mut prefix,
        );
        let better = match &best {
            None => true,
            Some((best_overlap, ..)) => overlap > best_overlap + TIE_MARGIN,
        };
        if better {
            best = Some((overlap, factors, sweeps, converged));
        }
        if best.as_ref().is_some_and(|(o, ..)| *o >= 1.0 - TIE_MARGIN) {
            // Overlap 1 cannot be beaten by more than the tie margin.
            break;
        }
    }

    let (overlap, factors, sweeps_used, converged) = best.expect("restarts ≥ 1");
    let best_ansatz = ProductAnsatz { factors };
    let p = (overlap * overlap).min(1.0);
    debug_assert!({
        let recomputed = best_ansatz.overlap(state).expect("same n").norm_sqr();
        (recomputed.min(1.0) - p).abs() < 1e-12
    });
    Ok(PMaxResult {
        p_max: p,
        best_ansatz,
        sweeps_used,
        converged,
    })
}

/// Logarithmic Groverian measure G(ψ) = −ln P_max(ψ); 0 for product states.
pub fn log_groverian(state: &StateVector, options: &OptimizerOptions) -> Result<f64> {
    Ok(-p_max(state, options)?.p_max.ln())
}

/// Exhaustive product-state grid maximization of |⟨φ|ψ⟩|² for n ≤ 3 qubits.
///
/// Each gridded factor runs over polar angle θ ∈ [0, π] and azimuth
/// φ ∈ [0, 2π) in steps of `angular_resolution` (one global phase fixed per
/// factor); the last factor is optimized in closed form, which dominates its
/// own grid. The result is a lower bound on the true P_max and lies within
/// O(resolution²) of it. Shares no code with the sweep optimizer.
pub fn p_max_oracle_grid(state: &StateVector, angular_resolution: f64) -> Result<f64> {
    let n = state.n();
    if n > 3 {
        return Err(Error::OracleTooLarge { n, max: 3 });
    }
    if angular_resolution.is_nan() || angular_resolution <= 0.0 {
        return Err(Error::InvalidParameter(
            "angular resolution must be > 0".into(),
        ));
    }
    let amps = state.amplitudes();
    if n == 1 {
        // The closed-form factor is the state itself.
        return Ok(amps[0].norm_sqr() + amps[1].norm_sqr());
    }

    let theta_steps = (PI / angular_resolution).ceil() as usize;
    let phi_steps = (TAU / angular_resolution).ceil() as usize;
    // Half-angle cos/sin per θ point and unit phasors per φ point.
    let half_angles: Vec<(f64, f64)> = (0..=theta_steps)
        .map(|i| {
            let theta = (i as f64 * angular_resolution).min(PI);
            ((theta / 2.0).cos(), (theta / 2.0).sin())
        })
        .collect();
    let phasors: Vec<(f64, f64)> = (0..phi_steps)
        .map(|j| {
            let phi = j as f64 * angular_resolution;
            (phi.cos(), phi.sin())
        })
        .collect();

    use rayon::prelude::*;
    let best = half_angles
        .par_iter()
        .map(|&(c0, s0)| {
            let mut local_best = 0.0_f64;
            let mut contracted = vec![Complex64::new(0.0, 0.0); amps.len() / 2];
            for &(cp, sp) in &phasors {
                // conj(factor 0) = (c0, s0·e^{−iφ0}).
                let f1 = Complex64::new(c0 * 1.0, 0.0);
                let f2 = Complex64::new(s0 * cp, -s0 * sp);
                for (m, slot) in contracted.iter_mut().enumerate() {
                    *slot = f1 * amps[2 * m] + f2 * amps[2 * m + 1];
                }
                let p = match n {
                    2 => contracted[0].norm_sqr() + contracted[1].norm_sqr(),
                    3 => best_over_middle_factor(&contracted, &half_angles, &phasors),
                    _ => unreachable!(),
                };
                local_best = local_best.max(p);
            }
            local_best
        })
        .reduce(|| 0.0, f64::max);
    Ok(best)
}

/// Given ψ contracted with factor 0 (a 4-vector over qubits 1, 2), maximizes
/// ‖env(qubit 2)‖² over the (θ, φ) grid of factor 1. The φ and θ scans
/// separate exactly because the cross term enters as 2·cos(θ/2)sin(θ/2)
/// times a φ-phase, and the half-angle prefactor is non-negative.
fn best_over_middle_factor(
    a: &[Complex64],
    half_angles: &[(f64, f64)],
    phasors: &[(f64, f64)],
) -> f64 {
    let alpha0 = a[0].norm_sqr() + a[2].norm_sqr();
    let alpha1 = a[1].norm_sqr() + a[3].norm_sqr();
    let w = a[1] * a[0].conj() + a[3] * a[2].conj();
    let mut cross = f64::NEG_INFINITY;
    for &(cp, sp) in phasors {
        cross = cross.max(w.re * cp + w.im * sp);
    }
    let mut best = f64::NEG_INFINITY;
    for &(c, s) in half_angles {
        best = best.max(c * c * alpha0 + s * s * alpha1 + 2.0 * c * s * cross);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::average_bipartite_q;
    use crate::random::{sample_haar_single_qubit, sample_random_product_state};
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn bell() -> StateVector {
        StateVector::from_amplitudes(vec![
            c(FRAC_1_SQRT_2, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(FRAC_1_SQRT_2, 0.0),
        ])
        .unwrap()
    }

    fn ghz(n: usize) -> StateVector {
        let dim = 1usize << n;
        let mut amps = vec![c(0.0, 0.0); dim];
        amps[0] = c(FRAC_1_SQRT_2, 0.0);
        amps[dim - 1] = c(FRAC_1_SQRT_2, 0.0);
        StateVector::from_amplitudes(amps).unwrap()
    }

    fn w3() -> StateVector {
        let a = 1.0 / 3.0_f64.sqrt();
        let mut amps = vec![c(0.0, 0.0); 8];
        amps[1] = c(a, 0.0);
        amps[2] = c(a, 0.0);
        amps[4] = c(a, 0.0);
        StateVector::from_amplitudes(amps).unwrap()
    }

    fn random_entangled(rng: &mut SeededGenerator, n: usize, steps: usize) -> StateVector {
        let mut s = sample_random_product_state(rng, n).unwrap();
        for _ in 0..steps {
            let (i, j) = crate::random::sample_pair(rng, n, crate::random::Geometry::NonLocal)
                .unwrap();
            s.apply_controlled_phase(i, j).unwrap();
            s.apply_single_qubit_gate(&sample_haar_single_qubit(rng), i)
                .unwrap();
            s.apply_single_qubit_gate(&sample_haar_single_qubit(rng), j)
                .unwrap();
        }
        s
    }

    #[test]
    fn environment_of_matching_product_ansatz_is_the_factor() {
        let mut rng = SeededGenerator::new(3);
        let factors: Vec<[Complex64; 2]> =
            (0..4).map(|_| crate::random::sample_bloch_factor(&mut rng)).collect();
        let state = StateVector::from_factors(&factors).unwrap();
        let ansatz = ProductAnsatz::new(factors.clone()).unwrap();
        for q in 0..4 {
            let env = environment_vector(&state, &ansatz, q).unwrap();
            assert!((env[0] - factors[q][0]).norm() < 1e-12);
            assert!((env[1] - factors[q][1]).norm() < 1e-12);
        }
    }

    #[test]
    fn environment_of_bell_with_zero_zero_ansatz() {
        let ansatz = ProductAnsatz::new(vec![
            [c(1.0, 0.0), c(0.0, 0.0)],
            [c(1.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap();
        let env = environment_vector(&bell(), &ansatz, 1).unwrap();
        assert!((env[0] - c(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
        assert!(env[1].norm() < 1e-15);
    }

    #[test]
    fn environment_update_overlap_matches_recontraction() {
        // Factor |0⟩ on qubit 0, |+⟩ on qubit 1; environment of qubit 0 is
        // (1/2, 1/2) and replacing the factor with its normalization must
        // reproduce the overlap as an explicit inner product.
        let plus = [c(FRAC_1_SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0)];
        let ansatz =
            ProductAnsatz::new(vec![[c(1.0, 0.0), c(0.0, 0.0)], plus]).unwrap();
        let state = bell();
        let env = environment_vector(&state, &ansatz, 0).unwrap();
        assert!((env[0] - c(0.5, 0.0)).norm() < 1e-15);
        assert!((env[1] - c(0.5, 0.0)).norm() < 1e-15);
        let norm = (env[0].norm_sqr() + env[1].norm_sqr()).sqrt();
        assert!((norm - FRAC_1_SQRT_2).abs() < 1e-15);

        let updated =
            ProductAnsatz::new(vec![[env[0] / norm, env[1] / norm], plus]).unwrap();
        assert!((updated.overlap(&state).unwrap().norm() - norm).abs() < 1e-12);
    }

    #[test]
    fn p_max_of_product_state_is_one_in_one_sweep() {
        let mut rng = SeededGenerator::new(8);
        let state = sample_random_product_state(&mut rng, 5).unwrap();
        let result = p_max(&state, &OptimizerOptions::default()).unwrap();
        assert!((result.p_max - 1.0).abs() < 1e-9);
        assert_eq!(result.sweeps_used, 1);
        assert!(result.converged);
    }

    #[test]
    fn p_max_of_bell_and_ghz_is_one_half() {
        let opts = OptimizerOptions::default();
        assert!((p_max(&bell(), &opts).unwrap().p_max - 0.5).abs() < 1e-6);
        assert!((p_max(&ghz(3), &opts).unwrap().p_max - 0.5).abs() < 1e-6);
    }

    #[test]
    fn p_max_of_w_state_is_four_ninths() {
        let result = p_max(&w3(), &OptimizerOptions::default()).unwrap();
        assert!((result.p_max - 4.0 / 9.0).abs() < 1e-6);
        // The reported maximum recomputes from the returned ansatz.
        let recomputed = result.best_ansatz.overlap(&w3()).unwrap().norm_sqr();
        assert!((recomputed - result.p_max).abs() < 1e-12);
    }

    #[test]
    fn oracle_near_one_on_product_states() {
        let mut rng = SeededGenerator::new(21);
        let state = sample_random_product_state(&mut rng, 2).unwrap();
        assert!(p_max_oracle_grid(&state, 0.05).unwrap() >= 0.999);
    }

    #[test]
    fn oracle_value_for_bell() {
        let value = p_max_oracle_grid(&bell(), 0.01).unwrap();
        assert!((value - 0.5).abs() < 1e-3);
        assert!(value <= 0.5 + 1e-12);
    }

    #[test]
    fn oracle_value_for_w_state() {
        let value = p_max_oracle_grid(&w3(), 0.02).unwrap();
        assert!((value - 4.0 / 9.0).abs() < 1e-3);
        assert!(value <= 4.0 / 9.0 + 1e-12);
    }

    #[test]
    fn oracle_rejects_large_registers() {
        let state = StateVector::new_basis_state(4, 0).unwrap();
        assert!(matches!(
            p_max_oracle_grid(&state, 0.05),
            Err(Error::OracleTooLarge { n: 4, max: 3 })
        ));
    }

    #[test]
    fn optimizer_dominates_oracle_on_random_states() {
        let mut rng = SeededGenerator::new(55);
        let opts = OptimizerOptions::default();
        let resolution = 0.02;
        for n in [2, 3] {
            for _ in 0..3 {
                let state = random_entangled(&mut rng, n, 8);
                let als = p_max(&state, &opts).unwrap().p_max;
                let grid = p_max_oracle_grid(&state, resolution).unwrap();
                assert!(als >= grid - 1e-9, "n={n}: als {als} < grid {grid}");
                assert!(
                    als <= grid + 2.0 * n as f64 * resolution * resolution,
                    "n={n}: als {als} too far above grid {grid}"
                );
            }
        }
    }

    #[test]
    fn groverian_of_product_state_vanishes() {
        let mut rng = SeededGenerator::new(2);
        let state = sample_random_product_state(&mut rng, 4).unwrap();
        let g = log_groverian(&state, &OptimizerOptions::default()).unwrap();
        assert!((0.0..1e-9).contains(&g));
    }

    #[test]
    fn groverian_of_bell_is_ln_two() {
        let g = log_groverian(&bell(), &OptimizerOptions::default()).unwrap();
        assert!((g - 2.0_f64.ln()).abs() < 1e-5);
    }

    #[test]
    fn groverian_additive_over_bell_pairs() {
        // Bell ⊗ Bell on qubits (0,1) and (2,3).
        let b = bell();
        let mut amps = vec![c(0.0, 0.0); 16];
        for hi in 0..4 {
            for lo in 0..4 {
                amps[(hi << 2) | lo] = b.amplitudes()[hi] * b.amplitudes()[lo];
            }
        }
        let state = StateVector::from_amplitudes(amps).unwrap();
        let g = log_groverian(&state, &OptimizerOptions::default()).unwrap();
        assert!((g - 2.0 * 2.0_f64.ln()).abs() < 1e-5);
    }

    #[test]
    fn groverian_invariant_under_local_unitaries() {
        let mut rng = SeededGenerator::new(77);
        let opts = OptimizerOptions::default();
        let state = random_entangled(&mut rng, 3, 10);
        let g0 = log_groverian(&state, &opts).unwrap();
        let mut rotated = state.clone();
        for q in 0..3 {
            rotated
                .apply_single_qubit_gate(&sample_haar_single_qubit(&mut rng), q)
                .unwrap();
        }
        let g1 = log_groverian(&rotated, &opts).unwrap();
        assert!((g0 - g1).abs() < 1e-6, "g0 {g0} g1 {g1}");
        assert!(average_bipartite_q(&state) > 0.01, "state should be entangled");
    }

    #[test]
    fn p_max_rejects_invalid_options() {
        let state = bell();
        let bad = OptimizerOptions {
            restarts: 0,
            ..OptimizerOptions::default()
        };
        assert!(p_max(&state, &bad).is_err());
        let bad = OptimizerOptions {
            tolerance: 0.0,
            ..OptimizerOptions::default()
        };
        assert!(p_max(&state, &bad).is_err());
    }

    #[test]
    fn p_max_is_deterministic() {
        let mut rng = SeededGenerator::new(13);
        let state = random_entangled(&mut rng, 4, 12);
        let opts = OptimizerOptions::default();
        let a = p_max(&state, &opts).unwrap();
        let b = p_max(&state, &opts).unwrap();
        assert_eq!(a.p_max.to_bits(), b.p_max.to_bits());
        assert_eq!(a.best_ansatz, b.best_ansatz);
    }
}
