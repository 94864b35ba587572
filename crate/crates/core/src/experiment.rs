//! Monte Carlo harness over scheme trajectories: ensemble means with
//! standard errors, 90%-saturation detection, polynomial fits, histogram
//! densities, a Haar-random-state baseline, and Kolmogorov–Smirnov
//! statistics.
//!
//! Realizations are embarrassingly parallel. Run r always draws from
//! substream (master seed, r) and aggregation reduces in run-index order, so
//! ensemble statistics are bit-identical for any worker count.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::groverian::{log_groverian, OptimizerOptions};
use crate::measures::average_bipartite_q;
use crate::random::SeededGenerator;
use crate::scheme::{run_trajectory_stream, RecordSchedule, SchemeConfig, Trajectory};
use crate::statevector::StateVector;

/// Mean ± standard error of one measure at one recorded time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StatRow {
    pub t: usize,
    /// Mean of K over runs with finite K at this time.
    pub mean_k: f64,
    pub sem_k: f64,
    /// Runs whose K was +∞ here; excluded from the K mean, never silently.
    pub k_excluded: usize,
    pub mean_q: f64,
    pub sem_q: f64,
    /// Present at scheduled G times only.
    pub mean_g: Option<f64>,
    pub sem_g: Option<f64>,
}

/// Per-time ensemble statistics over R independent realizations.
#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleStats {
    pub realizations: usize,
    pub rows: Vec<StatRow>,
}

impl EnsembleStats {
    /// (t, mean K) series, skipping times where every run was excluded.
    pub fn series_k(&self) -> Vec<(usize, f64)> {
        self.rows
            .iter()
            .filter(|r| r.mean_k.is_finite())
            .map(|r| (r.t, r.mean_k))
            .collect()
    }

    pub fn series_q(&self) -> Vec<(usize, f64)> {
        self.rows.iter().map(|r| (r.t, r.mean_q)).collect()
    }

    /// (t, mean G) series over the scheduled G times.
    pub fn series_g(&self) -> Vec<(usize, f64)> {
        self.rows
            .iter()
            .filter_map(|r| r.mean_g.map(|g| (r.t, g)))
            .collect()
    }
}

fn mean_and_sem(values: &[f64]) -> (f64, f64) {
    let count = values.len();
    if count == 0 {
        return (f64::INFINITY, f64::INFINITY);
    }
    let mean = values.iter().sum::<f64>() / count as f64;
    if count < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (count - 1) as f64;
    (mean, (var / count as f64).sqrt())
}

/// Aggregates per-run trajectories (in run order) into per-time statistics.
fn aggregate(trajectories: &[Trajectory], realizations: usize) -> EnsembleStats {
    let point_count = trajectories.first().map_or(0, |t| t.points.len());
    let mut rows = Vec::with_capacity(point_count);
    let mut finite_k = Vec::with_capacity(realizations);
    let mut qs = Vec::with_capacity(realizations);
    let mut gs = Vec::with_capacity(realizations);
    for p in 0..point_count {
        finite_k.clear();
        qs.clear();
        gs.clear();
        let t = trajectories[0].points[p].t;
        for trajectory in trajectories {
            let point = &trajectory.points[p];
            debug_assert_eq!(point.t, t);
            if point.k.is_finite() {
                finite_k.push(point.k);
            }
            qs.push(point.q);
            if let Some(g) = point.g {
                gs.push(g);
            }
        }
        let (mean_k, sem_k) = mean_and_sem(&finite_k);
        let (mean_q, sem_q) = mean_and_sem(&qs);
        let (mean_g, sem_g) = if gs.is_empty() {
            (None, None)
        } else {
            let (m, s) = mean_and_sem(&gs);
            (Some(m), Some(s))
        };
        rows.push(StatRow {
            t,
            mean_k,
            sem_k,
            k_excluded: realizations - finite_k.len(),
            mean_q,
            sem_q,
            mean_g,
            sem_g,
        });
    }
    EnsembleStats { realizations, rows }
}

/// Runs R independent realizations (substream per run index) and aggregates
/// them in run-index order. The result is independent of the rayon worker
/// count.
pub fn monte_carlo(
    config: &SchemeConfig,
    realizations: usize,
    schedule: &RecordSchedule,
    groverian_options: &OptimizerOptions,
) -> Result<EnsembleStats> {
    if realizations < 2 {
        return Err(Error::InvalidParameter(
            "ensemble needs at least 2 realizations".into(),
        ));
    }
    config.validate()?;
    let trajectories: Result<Vec<Trajectory>> = (0..realizations)
        .into_par_iter()
        .map(|r| run_trajectory_stream(config, r as u64, schedule, groverian_options))
        .collect();
    Ok(aggregate(&trajectories?, realizations))
}

/// Per-run Groverian samples at fixed times: `result[i][r]` is G of
/// realization r at `times[i]`. Used for distribution estimates, where the
/// raw ensemble is needed rather than its mean.
pub fn g_samples_at_times(
    config: &SchemeConfig,
    realizations: usize,
    times: &[usize],
    groverian_options: &OptimizerOptions,
) -> Result<Vec<Vec<f64>>> {
    if realizations < 2 {
        return Err(Error::InvalidParameter(
            "ensemble needs at least 2 realizations".into(),
        ));
    }
    config.validate()?;
    let schedule = RecordSchedule::all_g(times.to_vec())?;
    let trajectories: Result<Vec<Trajectory>> = (0..realizations)
        .into_par_iter()
        .map(|r| run_trajectory_stream(config, r as u64, &schedule, groverian_options))
        .collect();
    let trajectories = trajectories?;
    Ok((0..times.len())
        .map(|i| {
            trajectories
                .iter()
                .map(|t| t.points[i].g.expect("all-G schedule"))
                .collect()
        })
        .collect())
}

/// Saturation value and 90%-style crossing time of a mean-vs-t curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Saturation {
    /// Mean of the last `tail_window` recorded means.
    pub value: f64,
    /// First recorded t at which the mean reaches `fraction × value` and
    /// stays there for every later recorded t; `None` when the curve never
    /// crosses persistently.
    pub t_star: Option<usize>,
}

/// Detects the saturation value (tail-window mean, robust to the early
/// overshoot of K-type curves) and the persistent crossing time.
pub fn saturation_time(
    series: &[(usize, f64)],
    fraction: f64,
    tail_window: usize,
) -> Result<Saturation> {
    if !(0.0..1.0).contains(&fraction) || fraction == 0.0 {
        return Err(Error::InvalidParameter(format!(
            "fraction must be in (0, 1), got {fraction}"
        )));
    }
    if tail_window == 0 || series.len() < tail_window {
        return Err(Error::NotEnoughPoints {
            what: "saturation tail window",
            min: tail_window.max(1),
            got: series.len(),
        });
    }
    let tail = &series[series.len() - tail_window..];
    let value = tail.iter().map(|(_, m)| m).sum::<f64>() / tail_window as f64;
    let threshold = fraction * value;
    // Persistent crossing: one past the last point below threshold.
    let first_persistent = series
        .iter()
        .rposition(|&(_, m)| m < threshold)
        .map_or(0, |below| below + 1);
    let t_star = series.get(first_persistent).map(|&(t, _)| t);
    Ok(Saturation { value, t_star })
}

/// Least-squares polynomial fit (degree 1 or 2) with goodness-of-fit.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyFit {
    /// Coefficients in increasing power of x.
    pub coefficients: Vec<f64>,
    /// Residual sum of squares.
    pub rss: f64,
    pub r_squared: f64,
}

impl PolyFit {
    pub fn evaluate(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * x + c)
    }
}

/// Degree-1 or degree-2 least squares via normal equations on centered data.
pub fn fit_polynomial(xs: &[f64], ys: &[f64], degree: usize) -> Result<PolyFit> {
    if !(degree == 1 || degree == 2) {
        return Err(Error::InvalidParameter(format!(
            "fit degree must be 1 or 2, got {degree}"
        )));
    }
    if xs.len() != ys.len() {
        return Err(Error::InvalidParameter(
            "x and y lengths differ in polynomial fit".into(),
        ));
    }
    if xs.len() < degree + 2 {
        return Err(Error::NotEnoughPoints {
            what: "polynomial fit",
            min: degree + 2,
            got: xs.len(),
        });
    }

    let x_bar = xs.iter().sum::<f64>() / xs.len() as f64;
    let size = degree + 1;
    // Power moments of centered x and the mixed moments with y.
    let mut s = [0.0f64; 5];
    let mut t = [0.0f64; 3];
    for (&x, &y) in xs.iter().zip(ys) {
        let u = x - x_bar;
        let mut power = 1.0;
        for (k, slot) in s.iter_mut().enumerate().take(2 * degree + 1) {
            *slot += power;
            if k < size {
                t[k] += power * y;
            }
            power *= u;
        }
    }

    // Normal equations A·a = t with A[i][j] = S_{i+j}, solved by Gaussian
    // elimination with partial pivoting (3×3 at most).
    let mut a = [[0.0f64; 4]; 3];
    for i in 0..size {
        for j in 0..size {
            a[i][j] = s[i + j];
        }
        a[i][size] = t[i];
    }
    for col in 0..size {
        let pivot = (col..size)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .expect("non-empty");
        a.swap(col, pivot);
        if a[col][col] == 0.0 {
            return Err(Error::InvalidParameter(
                "singular normal equations in polynomial fit".into(),
            ));
        }
        for row in (col + 1)..size {
            let factor = a[row][col] / a[col][col];
            for k in col..=size {
                a[row][k] -= factor * a[col][k];
            }
        }
    }
    let mut centered = [0.0f64; 3];
    for row in (0..size).rev() {
        let mut acc = a[row][size];
        for k in (row + 1)..size {
            acc -= a[row][k] * centered[k];
        }
        centered[row] = acc / a[row][row];
    }

    // Expand back to raw-x coefficients: p(x) = Σ a_k (x − x̄)^k.
    let coefficients = match degree {
        1 => vec![centered[0] - centered[1] * x_bar, centered[1]],
        _ => vec![
            centered[0] - centered[1] * x_bar + centered[2] * x_bar * x_bar,
            centered[1] - 2.0 * centered[2] * x_bar,
            centered[2],
        ],
    };

    let fit = PolyFit {
        coefficients,
        rss: 0.0,
        r_squared: 0.0,
    };
    let rss: f64 = xs
        .iter()
        .zip(ys)
        .map(|(&x, &y)| {
            let r = y - fit.evaluate(x);
            r * r
        })
        .sum();
    let y_bar = ys.iter().sum::<f64>() / ys.len() as f64;
    let tss: f64 = ys.iter().map(|&y| (y - y_bar) * (y - y_bar)).sum();
    let r_squared = if tss > 0.0 {
        1.0 - rss / tss
    } else if rss <= 1e-30 {
        1.0
    } else {
        0.0
    };
    Ok(PolyFit {
        rss,
        r_squared,
        ..fit
    })
}

/// Uniform-bin probability density estimate normalized to unit integral.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    /// bin_count + 1 edges (degenerate: the repeated sample value twice).
    pub edges: Vec<f64>,
    /// Densities per bin; integrates to 1 for non-degenerate histograms.
    pub densities: Vec<f64>,
    /// All samples identical: a single zero-width bin.
    pub degenerate: bool,
}

impl Histogram {
    /// Σ density × bin width.
    pub fn integral(&self) -> f64 {
        self.densities
            .iter()
            .zip(self.edges.windows(2))
            .map(|(d, e)| d * (e[1] - e[0]))
            .sum()
    }
}

/// Histograms `samples` into `bin_count` uniform bins spanning [min, max].
pub fn histogram_density(samples: &[f64], bin_count: usize) -> Result<Histogram> {
    if samples.len() < 2 {
        return Err(Error::NotEnoughPoints {
            what: "histogram",
            min: 2,
            got: samples.len(),
        });
    }
    if bin_count == 0 {
        return Err(Error::InvalidParameter("bin count must be ≥ 1".into()));
    }
    let min = samples.iter().copied().fold(f64::INFINITY, f64::min);
    let max = samples.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !(min.is_finite() && max.is_finite()) {
        return Err(Error::InvalidParameter(
            "histogram samples must be finite".into(),
        ));
    }
    if min == max {
        return Ok(Histogram {
            edges: vec![min, max],
            densities: vec![f64::INFINITY],
            degenerate: true,
        });
    }
    let width = (max - min) / bin_count as f64;
    let mut counts = vec![0usize; bin_count];
    for &x in samples {
        let idx = (((x - min) / width) as usize).min(bin_count - 1);
        counts[idx] += 1;
    }
    let norm = samples.len() as f64 * width;
    Ok(Histogram {
        edges: (0..=bin_count).map(|i| min + i as f64 * width).collect(),
        densities: counts.iter().map(|&c| c as f64 / norm).collect(),
        degenerate: false,
    })
}

/// Haar-random pure state: 2ⁿ independent standard complex Gaussian
/// amplitudes, normalized. Per amplitude the real part is drawn first.
pub fn sample_haar_state(rng: &mut SeededGenerator, n: usize) -> Result<StateVector> {
    if n == 0 {
        return Err(Error::TooFewQubits { n, min: 1 });
    }
    let dim = 1usize << n;
    let mut amps = Vec::with_capacity(dim);
    for _ in 0..dim {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        amps.push(Complex64::new(re, im));
    }
    let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    for a in &mut amps {
        *a /= norm;
    }
    StateVector::from_amplitudes(amps)
}

/// Q and G evaluated on independent Haar-random states.
#[derive(Debug, Clone, PartialEq)]
pub struct BaselineSamples {
    pub q: Vec<f64>,
    pub g: Vec<f64>,
}

/// Samples `samples` Haar-random n-qubit states (substream per sample index)
/// and evaluates Q and G on each; the reference ensemble that long scheme
/// runs converge to.
pub fn random_state_baseline(
    n: usize,
    samples: usize,
    seed: u64,
    groverian_options: &OptimizerOptions,
) -> Result<BaselineSamples> {
    if samples == 0 {
        return Err(Error::InvalidParameter(
            "baseline needs at least 1 sample".into(),
        ));
    }
    let pairs: Result<Vec<(f64, f64)>> = (0..samples)
        .into_par_iter()
        .map(|k| {
            let mut rng = SeededGenerator::with_stream(seed, k as u64);
            let state = sample_haar_state(&mut rng, n)?;
            let q = average_bipartite_q(&state);
            let g = log_groverian(&state, groverian_options)?;
            Ok((q, g))
        })
        .collect();
    let pairs = pairs?;
    Ok(BaselineSamples {
        q: pairs.iter().map(|p| p.0).collect(),
        g: pairs.iter().map(|p| p.1).collect(),
    })
}

/// One-sample Kolmogorov–Smirnov statistic against the uniform distribution
/// on [lo, hi].
pub fn ks_statistic_uniform(samples: &[f64], lo: f64, hi: f64) -> f64 {
    let mut sorted = samples.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len() as f64;
    let mut sup: f64 = 0.0;
    for (i, &x) in sorted.iter().enumerate() {
        let cdf = ((x - lo) / (hi - lo)).clamp(0.0, 1.0);
        sup = sup.max((i as f64 / n - cdf).abs());
        sup = sup.max(((i + 1) as f64 / n - cdf).abs());
    }
    sup
}

/// Two-sample Kolmogorov–Smirnov statistic: sup |F_a − F_b| over the merged
/// sample.
pub fn ks_statistic_two_sample(a: &[f64], b: &[f64]) -> f64 {
    let mut xa = a.to_vec();
    let mut xb = b.to_vec();
    xa.sort_by(f64::total_cmp);
    xb.sort_by(f64::total_cmp);
    let (na, nb) = (xa.len() as f64, xb.len() as f64);
    let mut ia = 0usize;
    let mut ib = 0usize;
    let mut sup: f64 = 0.0;
    while ia < xa.len() && ib < xb.len() {
        let x = xa[ia].min(xb[ib]);
        while ia < xa.len() && xa[ia] <= x {
            ia += 1;
        }
        while ib < xb.len() && xb[ib] <= x {
            ib += 1;
        }
        sup = sup.max((ia as f64 / na - ib as f64 / nb).abs());
    }
    sup
}

/// Large-sample two-sample KS rejection threshold at significance `alpha`:
/// c(α)·√((n+m)/(n·m)) with c(α) = √(−ln(α/2)/2).
pub fn ks_two_sample_critical(n: usize, m: usize, alpha: f64) -> f64 {
    let c = (-(alpha / 2.0).ln() / 2.0).sqrt();
    c * ((n + m) as f64 / (n as f64 * m as f64)).sqrt()
}
