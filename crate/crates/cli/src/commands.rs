//! Implementations of the four subcommands. Each one validates flags (usage
//! errors exit 2), runs the experiment inside an optional fixed-size rayon
//! pool, and writes CSV data plus a JSON manifest sidecar.

use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, Context};
use serde_json::json;

use qent_core::experiment::{
    fit_polynomial, g_samples_at_times, histogram_density, monte_carlo, random_state_baseline,
    saturation_time, EnsembleStats, Histogram, PolyFit,
};
use qent_core::groverian::OptimizerOptions;
use qent_core::random::Geometry;
use qent_core::scheme::{RecordSchedule, SchemeConfig};

use crate::manifest::Manifest;
use crate::output::{fmt_float, fmt_opt_float, write_text};
use crate::{
    usage, AppError, BaselineArgs, CommonArgs, DistributionArgs, GeometryArg, SaturationArgs,
    TrajectoryArgs,
};

/// Seed salt for the pseudo-random-state reference of `distribution
/// --baseline`, so baseline substreams never collide with run substreams.
const BASELINE_SALT: u64 = 0x6261_7365_6c69_6e65; // "baseline"

/// Registers above this would need > 500 MB of amplitudes.
const MAX_QUBITS: usize = 24;

fn check_register(n: usize) -> Result<(), AppError> {
    if !(2..=MAX_QUBITS).contains(&n) {
        return Err(usage(format!("--n must be in 2..={MAX_QUBITS}, got {n}")));
    }
    Ok(())
}

fn check_common(common: &CommonArgs) -> Result<(), AppError> {
    if common.restarts < 1 {
        return Err(usage("--restarts must be at least 1"));
    }
    if common.tolerance.is_nan() || common.tolerance <= 0.0 {
        return Err(usage("--tolerance must be positive"));
    }
    Ok(())
}

fn optimizer_options(common: &CommonArgs) -> OptimizerOptions {
    OptimizerOptions {
        restarts: common.restarts,
        tolerance: common.tolerance,
        ..OptimizerOptions::default()
    }
}

/// Runs `f` in a dedicated pool of `threads` workers (0 = default pool).
fn with_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> anyhow::Result<T> {
    if threads == 0 {
        Ok(f())
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .context("building thread pool")?;
        Ok(pool.install(f))
    }
}

fn suffixed(base: &Path, suffix: &str) -> PathBuf {
    let mut s = base.as_os_str().to_os_string();
    s.push(suffix);
    PathBuf::from(s)
}

fn record_times(steps: usize, record_every: usize) -> Vec<usize> {
    if record_every == 0 {
        RecordSchedule::default_times(steps)
    } else {
        RecordSchedule::strided_times(steps, record_every)
    }
}

/// Automatic step budget: long enough that the slowest measure saturates
/// well before the tail window. The local chain needs O(n²) steps for the
/// Groverian measure; the non-local scheme stays O(n).
pub fn auto_steps(geometry: Geometry, n: usize) -> usize {
    match geometry {
        Geometry::Local1DPeriodic => (4 * n * n).max(160),
        Geometry::NonLocal => (16 * n).max(160),
    }
}

fn runtime(e: qent_core::Error) -> AppError {
    AppError::Runtime(anyhow!(e))
}

pub fn trajectory(args: &TrajectoryArgs) -> Result<(), AppError> {
    check_register(args.n)?;
    check_common(&args.common)?;
    if args.runs < 2 {
        return Err(usage("--runs must be at least 2"));
    }
    let started = Instant::now();
    let geometry = args.geometry.to_geometry();
    let config = SchemeConfig {
        n: args.n,
        geometry,
        total_steps: args.steps,
        seed: args.common.seed,
    };
    let times = record_times(args.steps, args.record_every);
    let schedule =
        RecordSchedule::with_g_stride(times, args.g_every).map_err(|e| usage(e.to_string()))?;
    let opts = optimizer_options(&args.common);

    let stats = with_pool(args.common.threads, || {
        monte_carlo(&config, args.runs, &schedule, &opts)
    })?
    .map_err(runtime)?;

    let mut csv = String::from("t,mean_K,sem_K,k_excluded,mean_Q,sem_Q,mean_G,sem_G\n");
    for row in &stats.rows {
        csv.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            row.t,
            fmt_float(row.mean_k),
            fmt_float(row.sem_k),
            row.k_excluded,
            fmt_float(row.mean_q),
            fmt_float(row.sem_q),
            fmt_opt_float(row.mean_g),
            fmt_opt_float(row.sem_g),
        ));
    }
    let csv_path = suffixed(&args.common.out, ".csv");
    write_text(&csv_path, &csv)?;

    let mut manifest = Manifest::new(
        "trajectory",
        vec![
            "--n".into(),
            args.n.to_string(),
            "--geometry".into(),
            args.geometry.name().into(),
            "--steps".into(),
            args.steps.to_string(),
            "--runs".into(),
            args.runs.to_string(),
            "--record-every".into(),
            args.record_every.to_string(),
            "--g-every".into(),
            args.g_every.to_string(),
            "--seed".into(),
            args.common.seed.to_string(),
            "--restarts".into(),
            args.common.restarts.to_string(),
            "--tolerance".into(),
            args.common.tolerance.to_string(),
        ],
        json!({
            "n": args.n,
            "geometry": args.geometry.name(),
            "steps": args.steps,
            "runs": args.runs,
            "seed": args.common.seed,
            "record_every": args.record_every,
            "g_every": args.g_every,
            "record_times": schedule.times().len(),
            "g_times": schedule.g_times().len(),
            "optimizer": optimizer_json(&opts),
        }),
        args.common.threads,
    );
    manifest.duration_seconds = started.elapsed().as_secs_f64();
    manifest.write(&suffixed(&args.common.out, ".manifest.json"))?;
    eprintln!(
        "[qent] trajectory n={} {} runs={}: wrote {}",
        args.n,
        args.geometry.name(),
        args.runs,
        csv_path.display()
    );
    Ok(())
}

fn optimizer_json(opts: &OptimizerOptions) -> serde_json::Value {
    json!({
        "restarts": opts.restarts,
        "max_sweeps": opts.max_sweeps,
        "tolerance": opts.tolerance,
        "seed": opts.seed,
    })
}

/// Saturation of one measure's mean series, with the tail window fixed at
/// the last 20% of recorded points (at least 2).
fn detect(series: &[(usize, f64)], fraction: f64) -> Result<(f64, Option<usize>), AppError> {
    let window = (series.len() / 5).max(2);
    let sat = saturation_time(series, fraction, window).map_err(runtime)?;
    Ok((sat.value, sat.t_star))
}

pub fn saturation(args: &SaturationArgs) -> Result<(), AppError> {
    check_common(&args.common)?;
    if args.n_min < 2 || args.n_max > MAX_QUBITS || args.n_min > args.n_max {
        return Err(usage(format!(
            "need 2 ≤ --n-min ≤ --n-max ≤ {MAX_QUBITS}, got {}..{}",
            args.n_min, args.n_max
        )));
    }
    if args.runs < 2 {
        return Err(usage("--runs must be at least 2"));
    }
    if !(args.fraction > 0.0 && args.fraction < 1.0) {
        return Err(usage("--fraction must lie strictly between 0 and 1"));
    }
    let started = Instant::now();
    let opts = optimizer_options(&args.common);

    let mut csv = String::from("n,geometry,measure,saturation_value,t_star,undetected\n");
    let mut fit_points: Vec<(GeometryArg, &str, Vec<(f64, f64)>)> = Vec::new();
    let mut resolved_steps = Vec::new();

    for geometry in args.geometry.selection() {
        let mut points_k = Vec::new();
        let mut points_q = Vec::new();
        let mut points_g = Vec::new();
        for n in args.n_min..=args.n_max {
            let steps = if args.steps == 0 {
                auto_steps(geometry.to_geometry(), n)
            } else {
                args.steps
            };
            resolved_steps.push(json!({"n": n, "geometry": geometry.name(), "steps": steps}));
            let config = SchemeConfig {
                n,
                geometry: geometry.to_geometry(),
                total_steps: steps,
                seed: args.common.seed,
            };
            let times = record_times(steps, args.record_every);
            let schedule = RecordSchedule::with_g_stride(times, args.g_every)
                .map_err(|e| usage(e.to_string()))?;
            let stats: EnsembleStats = with_pool(args.common.threads, || {
                monte_carlo(&config, args.runs, &schedule, &opts)
            })?
            .map_err(runtime)?;
            eprintln!(
                "[qent] saturation n={n} {} runs={} steps={steps}",
                geometry.name(),
                args.runs
            );

            for (measure, series, points) in [
                ("K", stats.series_k(), &mut points_k),
                ("Q", stats.series_q(), &mut points_q),
                ("G", stats.series_g(), &mut points_g),
            ] {
                let (value, t_star) = detect(&series, args.fraction)?;
                csv.push_str(&format!(
                    "{n},{},{measure},{},{},{}\n",
                    geometry.name(),
                    fmt_float(value),
                    t_star.map(|t| t.to_string()).unwrap_or_default(),
                    t_star.is_none(),
                ));
                if let Some(t) = t_star {
                    points.push((n as f64, t as f64));
                }
            }
        }
        fit_points.push((geometry, "K", points_k));
        fit_points.push((geometry, "Q", points_q));
        fit_points.push((geometry, "G", points_g));
    }

    let fit_json = |fit: &PolyFit| {
        json!({
            "coefficients": fit.coefficients,
            "rss": fit.rss,
            "r_squared": fit.r_squared,
        })
    };
    let fits: Vec<serde_json::Value> = fit_points
        .iter()
        .map(|(geometry, measure, points)| {
            let xs: Vec<f64> = points.iter().map(|p| p.0).collect();
            let ys: Vec<f64> = points.iter().map(|p| p.1).collect();
            let linear = fit_polynomial(&xs, &ys, 1).ok().map(|f| fit_json(&f));
            let quadratic = fit_polynomial(&xs, &ys, 2).ok().map(|f| fit_json(&f));
            json!({
                "geometry": geometry.name(),
                "measure": measure,
                "points": points.iter().map(|(n, t)| json!({"n": n, "t_star": t})).collect::<Vec<_>>(),
                "linear": linear,
                "quadratic": quadratic,
            })
        })
        .collect();

    let csv_path = suffixed(&args.common.out, ".csv");
    write_text(&csv_path, &csv)?;
    let mut fits_text =
        serde_json::to_string_pretty(&fits).context("serializing fit report")?;
    fits_text.push('\n');
    write_text(&suffixed(&args.common.out, ".fits.json"), &fits_text)?;

    let mut manifest = Manifest::new(
        "saturation",
        vec![
            "--n-min".into(),
            args.n_min.to_string(),
            "--n-max".into(),
            args.n_max.to_string(),
            "--geometry".into(),
            args.geometry.name().into(),
            "--runs".into(),
            args.runs.to_string(),
            "--steps".into(),
            args.steps.to_string(),
            "--record-every".into(),
            args.record_every.to_string(),
            "--g-every".into(),
            args.g_every.to_string(),
            "--fraction".into(),
            args.fraction.to_string(),
            "--seed".into(),
            args.common.seed.to_string(),
            "--restarts".into(),
            args.common.restarts.to_string(),
            "--tolerance".into(),
            args.common.tolerance.to_string(),
        ],
        json!({
            "n_min": args.n_min,
            "n_max": args.n_max,
            "geometry": args.geometry.name(),
            "runs": args.runs,
            "seed": args.common.seed,
            "record_every": args.record_every,
            "g_every": args.g_every,
            "fraction": args.fraction,
            "resolved_steps": resolved_steps,
            "optimizer": optimizer_json(&opts),
        }),
        args.common.threads,
    );
    manifest.duration_seconds = started.elapsed().as_secs_f64();
    manifest.write(&suffixed(&args.common.out, ".manifest.json"))?;
    eprintln!("[qent] saturation: wrote {}", csv_path.display());
    Ok(())
}

fn histogram_rows(csv: &mut String, label: &str, histogram: &Histogram) {
    if histogram.degenerate {
        csv.push_str(&format!(
            "{label},{},{},inf\n",
            fmt_float(histogram.edges[0]),
            fmt_float(histogram.edges[1]),
        ));
        return;
    }
    for (d, e) in histogram.densities.iter().zip(histogram.edges.windows(2)) {
        csv.push_str(&format!(
            "{label},{},{},{}\n",
            fmt_float(e[0]),
            fmt_float(e[1]),
            fmt_float(*d),
        ));
    }
}

pub fn distribution(args: &DistributionArgs) -> Result<(), AppError> {
    check_register(args.n)?;
    check_common(&args.common)?;
    if args.runs < 2 {
        return Err(usage("--runs must be at least 2"));
    }
    if args.bins == 0 {
        return Err(usage("--bins must be at least 1"));
    }
    let mut times = args.t.clone();
    times.sort_unstable();
    times.dedup();
    if times.is_empty() {
        return Err(usage("--t needs at least one time"));
    }
    let started = Instant::now();
    let total_steps = *times.last().expect("non-empty");
    let config = SchemeConfig {
        n: args.n,
        geometry: args.geometry.to_geometry(),
        total_steps,
        seed: args.common.seed,
    };
    let opts = optimizer_options(&args.common);

    let samples = with_pool(args.common.threads, || {
        g_samples_at_times(&config, args.runs, &times, &opts)
    })?
    .map_err(runtime)?;

    let mut csv = String::from("series,bin_left,bin_right,density\n");
    for (t, series) in times.iter().zip(&samples) {
        let histogram = histogram_density(series, args.bins).map_err(runtime)?;
        histogram_rows(&mut csv, &format!("t={t}"), &histogram);
    }
    let baseline_seed = args.common.seed ^ BASELINE_SALT;
    if args.baseline {
        let reference = with_pool(args.common.threads, || {
            random_state_baseline(args.n, args.runs, baseline_seed, &opts)
        })?
        .map_err(runtime)?;
        let histogram = histogram_density(&reference.g, args.bins).map_err(runtime)?;
        histogram_rows(&mut csv, "random", &histogram);
    }

    let csv_path = suffixed(&args.common.out, ".csv");
    write_text(&csv_path, &csv)?;

    let mut manifest_args = vec![
        "--n".into(),
        args.n.to_string(),
        "--geometry".into(),
        args.geometry.name().into(),
        "--t".into(),
        times
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join(","),
        "--runs".into(),
        args.runs.to_string(),
        "--bins".into(),
        args.bins.to_string(),
        "--seed".into(),
        args.common.seed.to_string(),
        "--restarts".into(),
        args.common.restarts.to_string(),
        "--tolerance".into(),
        args.common.tolerance.to_string(),
    ];
    if args.baseline {
        manifest_args.push("--baseline".into());
    }
    let mut manifest = Manifest::new(
        "distribution",
        manifest_args,
        json!({
            "n": args.n,
            "geometry": args.geometry.name(),
            "t": times,
            "runs": args.runs,
            "bins": args.bins,
            "seed": args.common.seed,
            "baseline": args.baseline,
            "baseline_seed": if args.baseline { Some(baseline_seed) } else { None },
            "optimizer": optimizer_json(&opts),
        }),
        args.common.threads,
    );
    manifest.duration_seconds = started.elapsed().as_secs_f64();
    manifest.write(&suffixed(&args.common.out, ".manifest.json"))?;
    eprintln!(
        "[qent] distribution n={} series={}: wrote {}",
        args.n,
        times.len() + usize::from(args.baseline),
        csv_path.display()
    );
    Ok(())
}

pub fn baseline(args: &BaselineArgs) -> Result<(), AppError> {
    if !(1..=MAX_QUBITS).contains(&args.n) {
        return Err(usage(format!(
            "--n must be in 1..={MAX_QUBITS}, got {}",
            args.n
        )));
    }
    check_common(&args.common)?;
    if args.samples == 0 {
        return Err(usage("--samples must be at least 1"));
    }
    let started = Instant::now();
    let opts = optimizer_options(&args.common);
    let samples = with_pool(args.common.threads, || {
        random_state_baseline(args.n, args.samples, args.common.seed, &opts)
    })?
    .map_err(runtime)?;

    let mut csv = String::from("sample,Q,G\n");
    for (i, (q, g)) in samples.q.iter().zip(&samples.g).enumerate() {
        csv.push_str(&format!("{i},{},{}\n", fmt_float(*q), fmt_float(*g)));
    }
    let csv_path = suffixed(&args.common.out, ".csv");
    write_text(&csv_path, &csv)?;

    let mut manifest = Manifest::new(
        "baseline",
        vec![
            "--n".into(),
            args.n.to_string(),
            "--samples".into(),
            args.samples.to_string(),
            "--seed".into(),
            args.common.seed.to_string(),
            "--restarts".into(),
            args.common.restarts.to_string(),
            "--tolerance".into(),
            args.common.tolerance.to_string(),
        ],
        json!({
            "n": args.n,
            "samples": args.samples,
            "seed": args.common.seed,
            "optimizer": optimizer_json(&opts),
        }),
        args.common.threads,
    );
    manifest.duration_seconds = started.elapsed().as_secs_f64();
    manifest.write(&suffixed(&args.common.out, ".manifest.json"))?;
    eprintln!(
        "[qent] baseline n={} samples={}: wrote {}",
        args.n,
        args.samples,
        csv_path.display()
    );
    Ok(())
}
