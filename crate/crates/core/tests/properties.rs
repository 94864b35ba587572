//! Property tests for the simulator's structural invariants: norm
//! conservation, gate unitarity, commutation of disjoint controlled-phase
//! gates, and the local-unitary invariance of the entanglement measures.

use proptest::prelude::*;

use qent_core::experiment::histogram_density;
use qent_core::measures::{average_bipartite_q, fidelity};
use qent_core::random::{
    sample_haar_single_qubit, sample_pair, sample_random_product_state, Geometry, SeededGenerator,
};
use qent_core::statevector::StateVector;

fn random_circuit_state(seed: u64, n: usize, steps: usize) -> StateVector {
    let mut rng = SeededGenerator::new(seed);
    let mut state = sample_random_product_state(&mut rng, n).unwrap();
    for _ in 0..steps {
        let (i, j) = sample_pair(&mut rng, n, Geometry::NonLocal).unwrap();
        state.apply_controlled_phase(i, j).unwrap();
        state
            .apply_single_qubit_gate(&sample_haar_single_qubit(&mut rng), i)
            .unwrap();
        state
            .apply_single_qubit_gate(&sample_haar_single_qubit(&mut rng), j)
            .unwrap();
    }
    state
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn norm_is_conserved_by_any_gate_sequence(seed in any::<u64>(), n in 2usize..6, steps in 0usize..40) {
        let state = random_circuit_state(seed, n, steps);
        prop_assert!((state.norm_sqr().sqrt() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn gate_followed_by_its_dagger_is_identity(seed in any::<u64>(), n in 2usize..6, q_raw in 0usize..6) {
        let q = q_raw % n;
        let mut rng = SeededGenerator::new(seed);
        let original = random_circuit_state(seed, n, 10);
        let mut state = original.clone();
        let gate = sample_haar_single_qubit(&mut rng);
        state.apply_single_qubit_gate(&gate, q).unwrap();
        state.apply_single_qubit_gate(&gate.dagger(), q).unwrap();
        for (a, b) in state.amplitudes().iter().zip(original.amplitudes()) {
            prop_assert!((a - b).norm() < 1e-10);
        }
    }

    #[test]
    fn controlled_phase_on_disjoint_pairs_commutes(seed in any::<u64>()) {
        let original = random_circuit_state(seed, 4, 8);
        let mut ab = original.clone();
        ab.apply_controlled_phase(0, 1).unwrap();
        ab.apply_controlled_phase(2, 3).unwrap();
        let mut ba = original;
        ba.apply_controlled_phase(2, 3).unwrap();
        ba.apply_controlled_phase(0, 1).unwrap();
        for (a, b) in ab.amplitudes().iter().zip(ba.amplitudes()) {
            prop_assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn q_is_invariant_under_local_unitaries(seed in any::<u64>(), n in 2usize..6, q_raw in 0usize..6) {
        let q = q_raw % n;
        let state = random_circuit_state(seed, n, 12);
        let before = average_bipartite_q(&state);
        prop_assert!((-1e-12..=1.0 + 1e-12).contains(&before));
        let mut rng = SeededGenerator::new(seed.wrapping_add(1));
        let mut rotated = state;
        rotated
            .apply_single_qubit_gate(&sample_haar_single_qubit(&mut rng), q)
            .unwrap();
        let after = average_bipartite_q(&rotated);
        prop_assert!((before - after).abs() < 1e-10);
    }

    #[test]
    fn fidelity_is_symmetric_and_bounded(seed in any::<u64>(), n in 2usize..5) {
        let a = random_circuit_state(seed, n, 6);
        let b = random_circuit_state(seed.wrapping_add(7), n, 6);
        let fab = fidelity(&a, &b).unwrap();
        let fba = fidelity(&b, &a).unwrap();
        prop_assert!((fab - fba).abs() < 1e-12);
        prop_assert!((-1e-12..=1.0 + 1e-12).contains(&fab));
    }

    #[test]
    fn histogram_always_integrates_to_one(seed in any::<u64>(), bins in 1usize..40) {
        let mut rng = SeededGenerator::new(seed);
        let samples: Vec<f64> = (0..500).map(|_| rng.uniform() * 3.0 - 1.0).collect();
        let h = histogram_density(&samples, bins).unwrap();
        prop_assert!(!h.degenerate);
        prop_assert!((h.integral() - 1.0).abs() < 1e-9);
    }
}
