//! Verification sweeps over `hookforge-core`, with a thread pool, progress
//! reporting and text/JSON output.

pub mod config;
pub mod jobs;
pub mod render;

use rayon::prelude::*;

pub use config::{Format, RunConfig, Selector};
pub use jobs::{plan, Job, TimedReport};
pub use render::{render_json, render_text};

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "HOOKFORGE_THREADS";

/// Runs every planned job on a pool of `threads` workers (rayon's default
/// when `None`) and returns the reports sorted by check, then parameters.
///
/// `progress` is called once per finished job, from the worker thread.
pub fn run<F>(cfg: &RunConfig, threads: Option<usize>, progress: F) -> Result<Vec<TimedReport>, rayon::ThreadPoolBuildError>
where
    F: Fn(usize, usize, &Job) + Sync,
{
    let jobs = plan(cfg);
    let total = jobs.len();
    let done = std::sync::atomic::AtomicUsize::new(0);
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t);
    }
    let pool = builder.build()?;
    let mut reports: Vec<TimedReport> = pool.install(|| {
        jobs.par_iter()
            .flat_map_iter(|job| {
                let out = job.run(cfg);
                let k = done.fetch_add(1, std::sync::atomic::Ordering::Relaxed) + 1;
                progress(k, total, job);
                out
            })
            .collect()
    });
    reports.sort_by(|a, b| a.report.cmp(&b.report));
    Ok(reports)
}

/// Whether every report passed.
pub fn all_passed(reports: &[TimedReport]) -> bool {
    reports.iter().all(|t| t.report.passed())
}
