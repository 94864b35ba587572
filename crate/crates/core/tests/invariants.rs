//! Statistical invariants of the ensemble dynamics that need real Monte
//! Carlo rather than algebra: both geometries saturate Q and G at the same
//! value, and for two qubits the geometries are literally the same process.

use rayon::prelude::*;

use qent_core::groverian::OptimizerOptions;
use qent_core::random::Geometry;
use qent_core::scheme::{run_trajectory_stream, RecordSchedule, SchemeConfig};

fn mean_and_sem(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

/// Per-run tail averages of Q and G over a deep saturated window
/// (t ∈ [0.8T, T] with T = 8n², far past every measured saturation time).
fn tail_averages(
    geometry: Geometry,
    n: usize,
    runs: usize,
    seed: u64,
) -> (Vec<f64>, Vec<f64>) {
    let total_steps = 8 * n * n;
    let times: Vec<usize> = (total_steps * 8 / 10..=total_steps).step_by(10).collect();
    let schedule = RecordSchedule::all_g(times).unwrap();
    let config = SchemeConfig {
        n,
        geometry,
        total_steps,
        seed,
    };
    let opts = OptimizerOptions::default();
    let per_run: Vec<(f64, f64)> = (0..runs)
        .into_par_iter()
        .map(|r| {
            let trajectory =
                run_trajectory_stream(&config, r as u64, &schedule, &opts).unwrap();
            let count = trajectory.points.len() as f64;
            let q = trajectory.points.iter().map(|p| p.q).sum::<f64>() / count;
            let g = trajectory.points.iter().map(|p| p.g.unwrap()).sum::<f64>() / count;
            (q, g)
        })
        .collect();
    (
        per_run.iter().map(|p| p.0).collect(),
        per_run.iter().map(|p| p.1).collect(),
    )
}

#[test]
fn saturation_values_agree_across_geometries() {
    let runs = 1500;
    for n in [5usize, 6] {
        let (ql, gl) = tail_averages(Geometry::Local1DPeriodic, n, runs, 20_260_701);
        let (qn, gn) = tail_averages(Geometry::NonLocal, n, runs, 20_260_702);
        for (name, local, nonlocal) in [("Q", ql, qn), ("G", gl, gn)] {
            let (ml, sl) = mean_and_sem(&local);
            let (mn, sn) = mean_and_sem(&nonlocal);
            let combined = (sl * sl + sn * sn).sqrt();
            assert!(
                (ml - mn).abs() <= 3.0 * combined,
                "n={n} {name}: local {ml} vs nonlocal {mn} (3 combined SE {})",
                3.0 * combined
            );
        }
    }
}

#[test]
fn nonlocal_q_dominates_local_q_along_the_curve() {
    // Entanglement builds up at least as fast in the non-local scheme, at
    // every recorded time, up to twice the combined standard error. n = 8 is
    // exercised at acceptance scale; here the endpoints of the studied
    // range. The window ends at ~3× the local scheme's Q saturation time:
    // past full convergence both geometries sit on the same asymptote and a
    // pointwise one-sided 2σ check would degenerate into coin flips.
    use qent_core::experiment::monte_carlo;
    let runs = 2000;
    for (n, total_steps) in [(4usize, 30usize), (10, 125)] {
        let times: Vec<usize> = (0..=total_steps).collect();
        let schedule = RecordSchedule::with_g_stride(times, 0).unwrap();
        let opts = OptimizerOptions::default();
        let stats = |geometry| {
            let config = SchemeConfig {
                n,
                geometry,
                total_steps,
                seed: 20_260_710,
            };
            monte_carlo(&config, runs, &schedule, &opts).unwrap()
        };
        let local = stats(Geometry::Local1DPeriodic);
        let nonlocal = stats(Geometry::NonLocal);
        for (l, nl) in local.rows.iter().zip(nonlocal.rows.iter()).skip(1) {
            let combined = (l.sem_q * l.sem_q + nl.sem_q * nl.sem_q).sqrt();
            assert!(
                nl.mean_q >= l.mean_q - 2.0 * combined,
                "n={n} t={}: nonlocal Q {} vs local Q {}",
                l.t,
                nl.mean_q,
                l.mean_q
            );
        }
    }
}

#[test]
fn two_qubit_geometries_are_the_same_process() {
    // For n = 2 the candidate pair sets coincide, so identical seeds give
    // bit-identical trajectories under both geometries.
    let schedule = RecordSchedule::with_g_stride(vec![0, 25, 50], 0).unwrap();
    let opts = OptimizerOptions::default();
    for stream in 0..20u64 {
        let make = |geometry| SchemeConfig {
            n: 2,
            geometry,
            total_steps: 50,
            seed: 33,
        };
        let local =
            run_trajectory_stream(&make(Geometry::Local1DPeriodic), stream, &schedule, &opts)
                .unwrap();
        let nonlocal =
            run_trajectory_stream(&make(Geometry::NonLocal), stream, &schedule, &opts).unwrap();
        assert_eq!(local, nonlocal);
    }
}
