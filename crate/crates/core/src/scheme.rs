//! The entanglement-generating iteration: start from a Bloch-uniform random
//! product state, then per step draw a qubit pair (geometry-dependent), apply
//! the controlled-phase gate to it, and apply independent Haar-random
//! rotations to both chosen qubits — in that order, consuming randomness in a
//! fixed documented sequence (pair, rotation on i, rotation on j) so
//! trajectories are bit-reproducible from (seed, stream).

use crate::error::{Error, Result};
use crate::groverian::{log_groverian, OptimizerOptions};
use crate::measures::{average_bipartite_q, log_infidelity};
use crate::random::{
    sample_haar_single_qubit, sample_pair, sample_random_product_state, Geometry, SeededGenerator,
};
use crate::statevector::StateVector;

/// Parameters of one simulation run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchemeConfig {
    /// Register size (≥ 2).
    pub n: usize,
    pub geometry: Geometry,
    pub total_steps: usize,
    /// Master seed; realization r of an ensemble uses substream (seed, r).
    pub seed: u64,
}

impl SchemeConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::TooFewQubits { n: self.n, min: 2 });
        }
        Ok(())
    }
}

/// Count of gates applied so far, for instrumentation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GateCounts {
    pub two_qubit: u64,
    pub single_qubit: u64,
}

/// A scheme run in progress: |ψ₀⟩, |ψₜ⟩, and the step counter.
#[derive(Debug, Clone)]
pub struct SchemeRun {
    config: SchemeConfig,
    initial_state: StateVector,
    current_state: StateVector,
    t: usize,
    rng: SeededGenerator,
    counts: GateCounts,
}

/// Initializes a run on substream (config.seed, 0).
pub fn init_run(config: &SchemeConfig) -> Result<SchemeRun> {
    init_run_stream(config, 0)
}

/// Initializes realization `stream` of an ensemble: the initial state is a
/// random product state drawn from substream (config.seed, stream).
pub fn init_run_stream(config: &SchemeConfig, stream: u64) -> Result<SchemeRun> {
    config.validate()?;
    let mut rng = SeededGenerator::with_stream(config.seed, stream);
    let initial_state = sample_random_product_state(&mut rng, config.n)?;
    Ok(SchemeRun {
        config: *config,
        current_state: initial_state.clone(),
        initial_state,
        t: 0,
        rng,
        counts: GateCounts::default(),
    })
}

impl SchemeRun {
    pub fn config(&self) -> &SchemeConfig {
        &self.config
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn initial_state(&self) -> &StateVector {
        &self.initial_state
    }

    pub fn current_state(&self) -> &StateVector {
        &self.current_state
    }

    pub fn gate_counts(&self) -> GateCounts {
        self.counts
    }

    /// Performs one iteration and returns the pair it acted on.
    pub fn step(&mut self) -> Result<(usize, usize)> {
        if self.t >= self.config.total_steps {
            return Err(Error::RunCompleted {
                total: self.config.total_steps,
            });
        }
        let (i, j) = sample_pair(&mut self.rng, self.config.n, self.config.geometry)?;
        self.current_state.apply_controlled_phase(i, j)?;
        self.counts.two_qubit += 1;
        let u_i = sample_haar_single_qubit(&mut self.rng);
        self.current_state.apply_single_qubit_gate(&u_i, i)?;
        let u_j = sample_haar_single_qubit(&mut self.rng);
        self.current_state.apply_single_qubit_gate(&u_j, j)?;
        self.counts.single_qubit += 2;
        self.t += 1;
        Ok((i, j))
    }
}

/// One recorded time of a single run. `g` is present only where the schedule
/// asked for the (comparatively expensive) Groverian evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryPoint {
    pub t: usize,
    /// K(ψ₀, ψₜ) = −ln F; +∞ when the states are orthogonal.
    pub k: f64,
    /// Q(ψₜ).
    pub q: f64,
    /// G(ψₜ), when scheduled.
    pub g: Option<f64>,
}

/// Recorded (K, Q, G) values of one run.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub points: Vec<TrajectoryPoint>,
}

/// Which step counts to record, and at which of those to evaluate G.
///
/// The default records every step up to t = 50 and every 5th step after
/// (always including the final step), with G at every recorded time. The
/// Groverian optimizer dominates runtime, so ensemble harnesses typically
/// thin `g_times` with [`RecordSchedule::with_g_stride`].
#[derive(Debug, Clone, PartialEq)]
pub struct RecordSchedule {
    times: Vec<usize>,
    g_times: Vec<usize>,
}

impl RecordSchedule {
    /// Explicit times and G times; both must be strictly increasing and
    /// `g_times ⊆ times`.
    pub fn new(times: Vec<usize>, g_times: Vec<usize>) -> Result<Self> {
        if !times.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidRecordTimes {
                total: 0,
                reason: "record times not strictly increasing".into(),
            });
        }
        if !g_times.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidRecordTimes {
                total: 0,
                reason: "G times not strictly increasing".into(),
            });
        }
        for g in &g_times {
            if times.binary_search(g).is_err() {
                return Err(Error::InvalidRecordTimes {
                    total: 0,
                    reason: format!("G time {g} is not a record time"),
                });
            }
        }
        Ok(Self { times, g_times })
    }

    /// Records `times` and evaluates G at every recorded point.
    pub fn all_g(times: Vec<usize>) -> Result<Self> {
        let g_times = times.clone();
        Self::new(times, g_times)
    }

    /// Records `times` with G at every `stride`-th of them (stride 0 means
    /// no G at all).
    pub fn with_g_stride(times: Vec<usize>, stride: usize) -> Result<Self> {
        let g_times = if stride == 0 {
            Vec::new()
        } else {
            times.iter().copied().step_by(stride).collect()
        };
        Self::new(times, g_times)
    }

    /// Every step up to 50, every 5th after, final step always included.
    pub fn default_for(total_steps: usize) -> Self {
        Self::all_g(Self::default_times(total_steps)).expect("constructed times are sorted")
    }

    /// The default time grid: 0..=50 densely, then every 5th step, plus the
    /// final step.
    pub fn default_times(total_steps: usize) -> Vec<usize> {
        let mut times: Vec<usize> = (0..=total_steps.min(50)).collect();
        let mut t = 55;
        while t <= total_steps {
            times.push(t);
            t += 5;
        }
        if *times.last().expect("non-empty") != total_steps {
            times.push(total_steps);
        }
        times
    }

    /// Multiples of `every` in 0..=total, plus the final step.
    pub fn strided_times(total_steps: usize, every: usize) -> Vec<usize> {
        let every = every.max(1);
        let mut times: Vec<usize> = (0..=total_steps).step_by(every).collect();
        if *times.last().expect("non-empty") != total_steps {
            times.push(total_steps);
        }
        times
    }

    pub fn times(&self) -> &[usize] {
        &self.times
    }

    pub fn g_times(&self) -> &[usize] {
        &self.g_times
    }

    fn validate_against(&self, total_steps: usize) -> Result<()> {
        if let Some(&last) = self.times.last() {
            if last > total_steps {
                return Err(Error::InvalidRecordTimes {
                    total: total_steps,
                    reason: format!("record time {last} exceeds total steps"),
                });
            }
        }
        Ok(())
    }
}

/// Runs one realization on substream (config.seed, stream), recording
/// (t, K, Q) at every scheduled time and G where scheduled.
pub fn run_trajectory_stream(
    config: &SchemeConfig,
    stream: u64,
    schedule: &RecordSchedule,
    groverian_options: &OptimizerOptions,
) -> Result<Trajectory> {
    schedule.validate_against(config.total_steps)?;
    let mut run = init_run_stream(config, stream)?;
    let mut points = Vec::with_capacity(schedule.times.len());
    let mut g_cursor = 0usize;

    let record = |run: &SchemeRun, g_cursor: &mut usize| -> Result<TrajectoryPoint> {
        let t = run.t();
        let g = if schedule.g_times.get(*g_cursor) == Some(&t) {
            *g_cursor += 1;
            Some(log_groverian(run.current_state(), groverian_options)?)
        } else {
            None
        };
        Ok(TrajectoryPoint {
            t,
            k: log_infidelity(run.initial_state(), run.current_state())?,
            q: average_bipartite_q(run.current_state()),
            g,
        })
    };

    let mut time_cursor = 0usize;
    if schedule.times.first() == Some(&0) {
        points.push(record(&run, &mut g_cursor)?);
        time_cursor = 1;
    }
    while time_cursor < schedule.times.len() {
        run.step()?;
        if schedule.times[time_cursor] == run.t() {
            points.push(record(&run, &mut g_cursor)?);
            time_cursor += 1;
        }
    }
    Ok(Trajectory { points })
}

/// [`run_trajectory_stream`] on stream 0.
pub fn run_trajectory(
    config: &SchemeConfig,
    schedule: &RecordSchedule,
    groverian_options: &OptimizerOptions,
) -> Result<Trajectory> {
    run_trajectory_stream(config, 0, schedule, groverian_options)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::reduced_density_single;

    fn config(n: usize, geometry: Geometry, total_steps: usize, seed: u64) -> SchemeConfig {
        SchemeConfig {
            n,
            geometry,
            total_steps,
            seed,
        }
    }

    #[test]
    fn init_run_starts_from_a_product_state() {
        let run = init_run(&config(5, Geometry::NonLocal, 10, 42)).unwrap();
        assert!(average_bipartite_q(run.current_state()).abs() < 1e-9);
        assert!(
            log_infidelity(run.initial_state(), run.current_state())
                .unwrap()
                .abs()
                < 1e-12
        );
        assert_eq!(run.t(), 0);
    }

    #[test]
    fn init_run_rejects_single_qubit() {
        assert!(matches!(
            init_run(&config(1, Geometry::NonLocal, 10, 42)),
            Err(Error::TooFewQubits { n: 1, min: 2 })
        ));
    }

    #[test]
    fn equal_seeds_give_identical_runs() {
        let cfg = config(4, Geometry::Local1DPeriodic, 20, 7);
        let mut a = init_run(&cfg).unwrap();
        let mut b = init_run(&cfg).unwrap();
        assert_eq!(a.initial_state(), b.initial_state());
        for _ in 0..20 {
            let pa = a.step().unwrap();
            let pb = b.step().unwrap();
            assert_eq!(pa, pb);
            assert_eq!(a.current_state(), b.current_state());
        }
    }

    #[test]
    fn step_counts_gates_and_respects_geometry() {
        let cfg = config(6, Geometry::Local1DPeriodic, 200, 99);
        let ring = Geometry::Local1DPeriodic.candidate_pairs(6).unwrap();
        let mut run = init_run(&cfg).unwrap();
        for t in 1..=200 {
            let pair = run.step().unwrap();
            assert!(ring.contains(&pair), "pair {pair:?} not on the ring");
            assert_eq!(run.t(), t);
            assert_eq!(run.gate_counts().two_qubit, t as u64);
            assert_eq!(run.gate_counts().single_qubit, 2 * t as u64);
        }
        assert!(matches!(run.step(), Err(Error::RunCompleted { .. })));
    }

    #[test]
    fn first_step_entangles_only_the_chosen_pair() {
        let cfg = config(6, Geometry::NonLocal, 1, 3);
        let mut run = init_run(&cfg).unwrap();
        let (i, j) = run.step().unwrap();
        for q in 0..6 {
            let purity = reduced_density_single(run.current_state(), q)
                .unwrap()
                .purity();
            if q == i || q == j {
                assert!(purity <= 1.0 + 1e-12);
            } else {
                assert!(
                    (purity - 1.0).abs() < 1e-9,
                    "untouched qubit {q} lost purity: {purity}"
                );
            }
        }
        let q = average_bipartite_q(run.current_state());
        assert!(q <= 2.0 / 6.0 + 1e-9);
    }

    #[test]
    fn q_stays_in_range_for_two_qubits() {
        let cfg = config(2, Geometry::Local1DPeriodic, 200, 11);
        let mut run = init_run(&cfg).unwrap();
        for _ in 0..200 {
            run.step().unwrap();
            let q = average_bipartite_q(run.current_state());
            assert!((-1e-12..=1.0 + 1e-12).contains(&q));
        }
    }

    #[test]
    fn norm_is_conserved_over_long_trajectories() {
        let cfg = config(6, Geometry::NonLocal, 10_000, 5);
        let mut run = init_run(&cfg).unwrap();
        for _ in 0..10_000 {
            run.step().unwrap();
        }
        assert!((run.current_state().norm_sqr().sqrt() - 1.0).abs() < 1e-8);
    }

    #[test]
    fn trajectory_at_time_zero_is_unentangled() {
        let cfg = config(4, Geometry::NonLocal, 10, 21);
        let schedule = RecordSchedule::all_g(vec![0]).unwrap();
        let trajectory =
            run_trajectory(&cfg, &schedule, &OptimizerOptions::default()).unwrap();
        assert_eq!(trajectory.points.len(), 1);
        let p = &trajectory.points[0];
        assert_eq!(p.t, 0);
        assert!(p.k.abs() < 1e-12);
        assert!(p.q.abs() < 1e-9);
        assert!(p.g.unwrap() < 1e-6);
    }

    #[test]
    fn trajectory_g_subsampling() {
        let cfg = config(3, Geometry::NonLocal, 6, 2);
        let schedule =
            RecordSchedule::with_g_stride(vec![0, 2, 4, 6], 2).unwrap();
        let trajectory =
            run_trajectory(&cfg, &schedule, &OptimizerOptions::default()).unwrap();
        let has_g: Vec<bool> = trajectory.points.iter().map(|p| p.g.is_some()).collect();
        assert_eq!(has_g, vec![true, false, true, false]);
    }

    #[test]
    fn record_times_validation() {
        assert!(RecordSchedule::new(vec![0, 0, 1], vec![]).is_err());
        assert!(RecordSchedule::new(vec![0, 2], vec![1]).is_err());
        let cfg = config(3, Geometry::NonLocal, 5, 2);
        let beyond = RecordSchedule::all_g(vec![0, 6]).unwrap();
        assert!(matches!(
            run_trajectory(&cfg, &beyond, &OptimizerOptions::default()),
            Err(Error::InvalidRecordTimes { .. })
        ));
    }

    #[test]
    fn default_schedule_shape() {
        let s = RecordSchedule::default_for(63);
        let times = s.times();
        assert_eq!(&times[..51], &(0..=50).collect::<Vec<_>>()[..]);
        assert_eq!(&times[51..], &[55, 60, 63]);
        assert_eq!(s.g_times(), s.times());
    }

    #[test]
    fn relabeling_qubits_preserves_q_and_g() {
        // Apply a fixed gate list to a product state, and the same list with
        // permuted qubit labels to the matching permuted product state.
        let mut rng = SeededGenerator::new(31);
        let n = 3;
        let perm = [2usize, 0, 1];
        let factors: Vec<_> = (0..n)
            .map(|_| crate::random::sample_bloch_factor(&mut rng))
            .collect();
        let mut permuted_factors = factors.clone();
        for (q, &target) in perm.iter().enumerate() {
            permuted_factors[target] = factors[q];
        }
        let mut a = StateVector::from_factors(&factors).unwrap();
        let mut b = StateVector::from_factors(&permuted_factors).unwrap();

        for _ in 0..8 {
            let (i, j) = sample_pair(&mut rng, n, Geometry::NonLocal).unwrap();
            let u_i = sample_haar_single_qubit(&mut rng);
            let u_j = sample_haar_single_qubit(&mut rng);
            a.apply_controlled_phase(i, j).unwrap();
            a.apply_single_qubit_gate(&u_i, i).unwrap();
            a.apply_single_qubit_gate(&u_j, j).unwrap();
            b.apply_controlled_phase(perm[i], perm[j]).unwrap();
            b.apply_single_qubit_gate(&u_i, perm[i]).unwrap();
            b.apply_single_qubit_gate(&u_j, perm[j]).unwrap();
        }

        let opts = OptimizerOptions::default();
        assert!((average_bipartite_q(&a) - average_bipartite_q(&b)).abs() < 1e-10);
        let ga = log_groverian(&a, &opts).unwrap();
        let gb = log_groverian(&b, &opts).unwrap();
        assert!((ga - gb).abs() < 1e-6);
    }
}
