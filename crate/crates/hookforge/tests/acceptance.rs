//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use hookforge_core::exact::{factorial, BigRational};
use hookforge_core::identity::*;
use hookforge_core::involutions::involution_count;
use hookforge_core::partitions::partitions_of;
use hookforge_core::tableaux::enumerate_syt_of_size;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

struct Outcome {
    ok: bool,
    detail: String,
}

fn first_failure(reports: impl IntoIterator<Item = VerificationReport>) -> Option<VerificationReport> {
    reports.into_iter().find(|r| !r.passed())
}

fn outcome(count: usize, what: &str, failure: Option<VerificationReport>) -> Outcome {
    match failure {
        None => Outcome { ok: true, detail: format!("{count} {what}") },
        Some(r) => Outcome { ok: false, detail: format!("{r}") },
    }
}

fn shapes_up_to(n: usize) -> Vec<hookforge_core::Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

fn theorem1prime() -> Outcome {
    let reports: Vec<_> = (0..=20).into_par_iter().map(verify_theorem1prime).collect();
    outcome(reports.len(), "values of n, phi_n = psi_n", first_failure(reports))
}

fn theorem1() -> Outcome {
    let series = verify_theorem1(12);
    if !series.passed() {
        return Outcome { ok: false, detail: format!("{series}") };
    }
    for n in 0..=12 {
        let inv_sq = hook_sum_inverse_squared(n);
        let inv = hook_sum_inverse(n);
        let nf = BigRational::from_integer(factorial(n).into());
        if inv_sq != nf.recip() || inv != BigRational::from_integer(involution_count(n)) / &nf {
            return Outcome {
                ok: false,
                detail: format!("n={n}: sum 1/h^2 = {inv_sq}, sum 1/h = {inv}"),
            };
        }
    }
    outcome(13, "series coefficients with z=0 and z=1 specialisations", None)
}

fn lemma1() -> Outcome {
    let shapes = shapes_up_to(16);
    let reports: Vec<_> = shapes.par_iter().map(verify_lemma1).collect();
    if shapes.len() != 915 {
        return Outcome { ok: false, detail: format!("expected 915 shapes, got {}", shapes.len()) };
    }
    outcome(reports.len(), "shapes", first_failure(reports))
}

fn prop3() -> Outcome {
    let cases: Vec<(usize, u64)> = (1..=60).flat_map(|n| (0..10).map(move |t| (n, t))).collect();
    let reports: Vec<VerificationReport> = cases
        .par_iter()
        .flat_map_iter(|&(n, t)| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x9e37_79b9 ^ t);
            rng.set_stream(n as u64);
            let a = sample_distinct_rationals(&mut rng, n);
            let direct = verify_prop3(&a).unwrap_or_else(|e| VerificationReport::pass("prop3").fail(e.to_string()));
            let residues = verify_prop3_residues(&a)
                .unwrap_or_else(|e| VerificationReport::pass("prop3_residues").fail(e.to_string()));
            [direct, residues]
        })
        .collect();
    let alternating: Vec<_> = (2..=ALTERNATING_BOUND)
        .map(|n| verify_prop3_alternating(n).unwrap_or_else(|e| VerificationReport::pass("prop3_alternating").fail(e.to_string())))
        .collect();
    let failure = first_failure(reports.iter().cloned().chain(alternating.iter().cloned()));
    outcome(cases.len(), "vectors with residues, symbolic check for n <= 6", failure)
}

fn prop2() -> Outcome {
    let shapes = shapes_up_to(14);
    let reports: Vec<_> = shapes
        .par_iter()
        .map(|lam| {
            let p = lam.corner_profile();
            verify_prop2(&p.outer_contents, &p.inner_contents)
                .unwrap_or_else(|e| VerificationReport::pass("prop2").fail(format!("shape {lam}: {e}")))
        })
        .collect();
    outcome(reports.len(), "shapes", first_failure(reports))
}

fn bijection() -> Outcome {
    let count: usize = (0..=8).map(|n| enumerate_syt_of_size(n).len()).sum();
    let tableaux_8 = enumerate_syt_of_size(8).len();
    if tableaux_8 != 764 {
        return Outcome { ok: false, detail: format!("|SYT(8)| = {tableaux_8}, expected 764") };
    }
    let reports = (0..=8).map(verify_bijection).chain((0..=9).map(verify_corner_sum));
    outcome(count, "tableaux round-tripped, corner sums to n = 9", first_failure(reports))
}

fn counting() -> Outcome {
    let reports: Vec<_> = (0..=12).map(verify_counting).collect();
    outcome(reports.len(), "values of n", first_failure(reports))
}

fn substitution() -> Outcome {
    let reports: Vec<_> = (1..=40i64)
        .into_par_iter()
        .map(|n| verify_weight_substitution(n).expect("n >= 1"))
        .collect();
    outcome(reports.len(), "values of n", first_failure(reports))
}

fn corner_hooks() -> Outcome {
    let mut reports = Vec::new();
    for lam in shapes_up_to(12) {
        let d = lam.corner_profile().d();
        for k in 1..=d {
            reports.push(verify_corner_hooks(&lam, CornerKind::Outer, k).expect("index in range"));
        }
        for k in 1..d {
            reports.push(verify_corner_hooks(&lam, CornerKind::Inner, k).expect("index in range"));
        }
    }
    outcome(reports.len(), "corner cases", first_failure(reports))
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_hookforge"))
            .args(["verify", "all", "--max-n", "10", "--seed", "7", "--format", "json", "--quiet"])
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    if a.status.code() != Some(0) || b.status.code() != Some(0) {
        return Outcome { ok: false, detail: format!("exit codes {:?} and {:?}", a.status.code(), b.status.code()) };
    }
    if a.stdout != b.stdout {
        return Outcome { ok: false, detail: String::from("outputs differ") };
    }
    outcome(a.stdout.len(), "identical bytes", None)
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);
    let criteria: [Criterion; 10] = [
        ("phi_n = psi_n for n <= 20", theorem1prime, Some(Duration::from_secs(60))),
        ("hook expansion in z to order 12", theorem1, None),
        ("extend-retract identity for |shape| <= 16", lemma1, Some(Duration::from_secs(120))),
        ("parity identity for n <= 60", prop3, None),
        ("content identity for |shape| <= 14", prop2, None),
        ("insertion bijection for n <= 8", bijection, None),
        ("counting identities for n <= 12", counting, None),
        ("weight substitution for n <= 40", substitution, None),
        ("corner hook relations for |shape| <= 12", corner_hooks, None),
        ("byte-identical reruns", determinism, None),
    ];
    let mut failed = 0;
    for (i, (name, check, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut out = check();
        let elapsed = start.elapsed();
        if let Some(limit) = budget {
            if elapsed > *limit {
                out.ok = false;
                out.detail = format!("{} (over the {:?} budget)", out.detail, limit);
            }
        }
        let verdict = if out.ok { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {verdict}  {name}: {} [{:.2?}]", i + 1, out.detail, elapsed);
        if !out.ok {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
