//! Expands a [`RunConfig`] into independent jobs and runs one job.

use std::fmt;
use std::time::Instant;

use hookforge_core::identity::{
    sample_distinct_rationals, verify_bijection, verify_corner_hooks, verify_corner_sum,
    verify_counting, verify_egf, verify_g_poly, verify_lemma1, verify_phi_recursion, verify_prop2,
    verify_prop2_substitution, verify_prop3, verify_prop3_alternating, verify_prop3_residues,
    verify_theorem1, verify_theorem1prime, verify_weight_substitution, CornerKind,
    VerificationReport, ALTERNATING_BOUND,
};
use hookforge_core::involutions::ENUMERATION_BOUND;
use hookforge_core::partitions::partitions_of;
use hookforge_core::Result;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::{RunConfig, Selector};

/// One unit of work. Shape sweeps are grouped by size so that a run over
/// hundreds of partitions stays a short report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Job {
    Theorem1 { order: usize },
    Theorem1Prime { n: usize },
    Substitution { n: usize },
    Lemma1 { n: usize },
    CornerHooks { n: usize },
    Prop2 { n: usize },
    Prop3 { n: usize, trial: usize },
    Prop3Alternating { n: usize },
    Bijection { n: usize },
    CornerSum { n: usize },
    Counting { n: usize },
    PhiRecursion { n: usize },
    Egf { trial: usize },
}

impl fmt::Display for Job {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Job::Theorem1 { order } => write!(f, "theorem1 order={order}"),
            Job::Theorem1Prime { n } => write!(f, "theorem1prime n={n}"),
            Job::Substitution { n } => write!(f, "substitution n={n}"),
            Job::Lemma1 { n } => write!(f, "lemma1 n={n}"),
            Job::CornerHooks { n } => write!(f, "corner_hooks n={n}"),
            Job::Prop2 { n } => write!(f, "prop2 n={n}"),
            Job::Prop3 { n, trial } => write!(f, "prop3 n={n} trial={trial}"),
            Job::Prop3Alternating { n } => write!(f, "prop3_alternating n={n}"),
            Job::Bijection { n } => write!(f, "bijection n={n}"),
            Job::CornerSum { n } => write!(f, "corner_sum n={n}"),
            Job::Counting { n } => write!(f, "counting n={n}"),
            Job::PhiRecursion { n } => write!(f, "phi_recursion n={n}"),
            Job::Egf { trial } => write!(f, "egf trial={trial}"),
        }
    }
}

/// Jobs for `cfg`, in a fixed order.
///
/// Checks that enumerate tableaux or involutions stop at the enumeration
/// bound even when `max_n` is larger.
pub fn plan(cfg: &RunConfig) -> Vec<Job> {
    let sel = cfg.selector;
    let n_max = cfg.max_n;
    let enum_max = n_max.min(ENUMERATION_BOUND);
    let mut jobs = Vec::new();
    if sel.includes(Selector::Theorem1) {
        jobs.push(Job::Theorem1 { order: cfg.order });
    }
    if sel.includes(Selector::Theorem1prime) {
        jobs.extend((0..=n_max).map(|n| Job::Theorem1Prime { n }));
    }
    if sel.includes(Selector::Substitution) {
        jobs.extend((1..=n_max).map(|n| Job::Substitution { n }));
    }
    if sel.includes(Selector::Lemma1) {
        jobs.extend((0..=n_max).map(|n| Job::Lemma1 { n }));
        jobs.extend((1..=n_max).map(|n| Job::CornerHooks { n }));
    }
    if sel.includes(Selector::Prop2) {
        jobs.extend((0..=n_max).map(|n| Job::Prop2 { n }));
    }
    if sel.includes(Selector::Prop3) {
        for n in 1..=n_max {
            jobs.extend((0..cfg.trials).map(|trial| Job::Prop3 { n, trial }));
        }
        jobs.extend((2..=n_max.min(ALTERNATING_BOUND)).map(|n| Job::Prop3Alternating { n }));
    }
    if sel.includes(Selector::Bijection) {
        jobs.extend((1..=enum_max).map(|n| Job::Bijection { n }));
        jobs.extend((1..=enum_max).map(|n| Job::CornerSum { n }));
        jobs.extend((0..=n_max).map(|n| Job::Counting { n }));
        jobs.extend((0..n_max).map(|n| Job::PhiRecursion { n }));
    }
    if sel.includes(Selector::Egf) {
        jobs.extend((0..cfg.trials).map(|trial| Job::Egf { trial }));
    }
    jobs
}

/// Generator for one sampled job: the run seed picks the key, the job picks
/// the stream, so results do not depend on scheduling.
fn job_rng(seed: u64, family: u64, n: usize, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((family << 56) | ((n as u64) << 28) | trial as u64);
    rng
}

const PROP3_STREAM: u64 = 1;
const EGF_STREAM: u64 = 2;

/// A report with the time it took to produce.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TimedReport {
    pub report: VerificationReport,
    pub millis: u64,
}

fn timed(f: impl FnOnce() -> VerificationReport) -> TimedReport {
    let start = Instant::now();
    let report = f();
    TimedReport {
        report,
        millis: start.elapsed().as_millis() as u64,
    }
}

/// Turns an argument error into a failing report for `check`.
fn or_fail(check: &'static str, label: impl fmt::Display, r: Result<VerificationReport>) -> VerificationReport {
    r.unwrap_or_else(|e| VerificationReport::pass(check).fail(format!("{label}: {e}")))
}

/// Runs `cases` in order and reports the first failure, or a pass recording
/// how many cases were checked.
fn sweep<I>(check: &'static str, n: usize, cases: I) -> VerificationReport
where
    I: IntoIterator<Item = VerificationReport>,
{
    let mut count = 0usize;
    for r in cases {
        if !r.passed() {
            let witness = r.witness.unwrap_or_default();
            return VerificationReport::pass(check).param("n", n).fail(witness);
        }
        count += 1;
    }
    VerificationReport::pass(check).param("n", n).param("cases", count)
}

impl Job {
    pub fn run(&self, cfg: &RunConfig) -> Vec<TimedReport> {
        match *self {
            Job::Theorem1 { order } => vec![timed(|| verify_theorem1(order))],
            Job::Theorem1Prime { n } => vec![timed(|| verify_theorem1prime(n))],
            Job::Substitution { n } => vec![timed(|| {
                or_fail("substitution", format!("n={n}"), verify_weight_substitution(n as i64))
            })],
            Job::Lemma1 { n } => vec![timed(|| sweep("lemma1", n, partitions_of(n).iter().map(verify_lemma1)))],
            Job::CornerHooks { n } => vec![timed(|| {
                let cases = partitions_of(n).into_iter().flat_map(|lam| {
                    let d = lam.corner_profile().d();
                    let outer = (1..=d).map(move |k| (CornerKind::Outer, k));
                    let inner = (1..d).map(move |k| (CornerKind::Inner, k));
                    outer.chain(inner).map(move |(kind, k)| {
                        let label = format!("shape {lam} {kind:?} k={k}");
                        or_fail("corner_hooks", label, verify_corner_hooks(&lam, kind, k))
                    })
                });
                sweep("corner_hooks", n, cases)
            })],
            Job::Prop2 { n } => {
                let shapes = partitions_of(n);
                let profiles: Vec<_> = shapes.iter().map(|l| (l, l.corner_profile())).collect();
                let run = |check: &'static str, f: fn(&[i64], &[i64]) -> Result<VerificationReport>| {
                    timed(|| {
                        sweep(
                            check,
                            n,
                            profiles.iter().map(|(lam, p)| {
                                or_fail(check, format!("shape {lam}"), f(&p.outer_contents, &p.inner_contents))
                            }),
                        )
                    })
                };
                vec![run("prop2", verify_prop2), run("prop2_substitution", verify_prop2_substitution)]
            }
            Job::Prop3 { n, trial } => {
                let a = sample_distinct_rationals(&mut job_rng(cfg.seed, PROP3_STREAM, n, trial), n);
                vec![
                    timed(|| or_fail("prop3", format!("n={n}"), verify_prop3(&a))),
                    timed(|| or_fail("prop3_residues", format!("n={n}"), verify_prop3_residues(&a))),
                ]
            }
            Job::Prop3Alternating { n } => vec![timed(|| {
                or_fail("prop3_alternating", format!("n={n}"), verify_prop3_alternating(n))
            })],
            Job::Bijection { n } => vec![timed(|| verify_bijection(n))],
            Job::CornerSum { n } => vec![timed(|| verify_corner_sum(n))],
            Job::Counting { n } => vec![timed(|| verify_counting(n))],
            Job::PhiRecursion { n } => vec![timed(|| verify_phi_recursion(n))],
            Job::Egf { trial } => {
                let u = sample_distinct_rationals(&mut job_rng(cfg.seed, EGF_STREAM, 0, trial), 2);
                let mut out = vec![timed(|| verify_egf(cfg.order, &u[0], &u[1]))];
                let g_max = cfg.max_n.min(ENUMERATION_BOUND);
                out.extend((0..=g_max).map(|n| timed(|| verify_g_poly(n, &u[0], &u[1]))));
                out
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem1prime_plan_has_one_job_per_n() {
        let cfg = RunConfig {
            selector: Selector::Theorem1prime,
            max_n: 12,
            ..RunConfig::default()
        };
        assert_eq!(plan(&cfg).len(), 13);
    }

    #[test]
    fn enumeration_jobs_are_capped() {
        let cfg = RunConfig {
            selector: Selector::Bijection,
            max_n: 20,
            ..RunConfig::default()
        };
        let jobs = plan(&cfg);
        assert!(!jobs.contains(&Job::Bijection { n: ENUMERATION_BOUND + 1 }));
        assert!(jobs.contains(&Job::Counting { n: 20 }));
    }

    #[test]
    fn sampled_jobs_are_reproducible() {
        let cfg = RunConfig::default();
        let job = Job::Prop3 { n: 5, trial: 2 };
        let strip = |v: Vec<TimedReport>| v.into_iter().map(|t| t.report).collect::<Vec<_>>();
        assert_eq!(strip(job.run(&cfg)), strip(job.run(&cfg)));
        let other = Job::Prop3 { n: 5, trial: 3 };
        assert_ne!(strip(job.run(&cfg)), strip(other.run(&cfg)));
    }

    #[test]
    fn sweeps_keep_the_first_witness() {
        let cases = vec![
            VerificationReport::pass("x"),
            VerificationReport::pass("x").fail("first".into()),
            VerificationReport::pass("x").fail("second".into()),
        ];
        let r = sweep("x", 3, cases);
        assert_eq!(r.witness.as_deref(), Some("first"));
        assert!(sweep("x", 3, vec![VerificationReport::pass("x")]).passed());
    }
}
