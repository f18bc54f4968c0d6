//! Checks on tableaux and involutions: the insertion bijection, counting
//! identities, and the involution generating function.

use alloc::collections::BTreeSet;
use alloc::format;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::report::VerificationReport;
use crate::exact::{factorial, BigRational};
use crate::involutions::{
    enumerate_involutions, g_poly, g_poly_oracle, involution_count, verify_involution_egf,
    ENUMERATION_BOUND,
};
use crate::partitions::{f_lambda, partitions_of};
use crate::tableaux::{enumerate_syt, enumerate_syt_of_size, forward_row_insert, reverse_row_insert};

/// Largest size for which `f^λ` is cross-checked against enumerated tableaux.
pub const SYT_CROSSCHECK_BOUND: usize = 10;

/// Checks that `(P, x) ↦ (P⁻, i)` is a bijection from SYT(n) with a chosen
/// corner onto SYT(n-1) × {1..n}: both composites with forward insertion
/// are identities and the image has exactly `n |SYT(n-1)|` elements.
pub fn verify_bijection(n: usize) -> VerificationReport {
    let report = VerificationReport::pass("bijection").param("n", n);
    if n == 0 {
        return report;
    }
    let big = enumerate_syt_of_size(n);
    let small = enumerate_syt_of_size(n - 1);
    let mut image = BTreeSet::new();
    let mut pairs = 0usize;
    for p in &big {
        for x in p.shape().removable_cells() {
            pairs += 1;
            let (pm, i) = match reverse_row_insert(p, x) {
                Ok(r) => r,
                Err(e) => return report.fail(format!("P={p} x=({},{}): {e}", x.row, x.col)),
            };
            if pm.size() != n - 1 || i == 0 || i > n {
                return report.fail(format!("P={p} x=({},{}): image ({pm}, {i}) out of range", x.row, x.col));
            }
            match forward_row_insert(&pm, i) {
                Ok((back, cell)) if back == *p && cell == x => {}
                Ok((back, cell)) => {
                    return report.fail(format!(
                        "P={p} x=({},{}): forward(reverse) gave ({back}, ({},{}))",
                        x.row, x.col, cell.row, cell.col
                    ))
                }
                Err(e) => return report.fail(format!("P={p}: {e}")),
            }
            image.insert((pm, i));
        }
    }
    if image.len() != pairs || pairs != n * small.len() {
        return report.fail(format!(
            "n={n}: {pairs} pairs, {} distinct images, n |SYT(n-1)| = {}",
            image.len(),
            n * small.len()
        ));
    }
    for pm in &small {
        for i in 1..=n {
            let ok = forward_row_insert(pm, i)
                .and_then(|(p, x)| reverse_row_insert(&p, x))
                .is_ok_and(|back| back == (pm.clone(), i));
            if !ok {
                return report.fail(format!("P-={pm} i={i}: reverse(forward) is not the identity"));
            }
        }
    }
    report.param("pairs", pairs)
}

/// Checks `Σ_{P ∈ SYT(n)} #corners(P) = n |SYT(n-1)|`.
pub fn verify_corner_sum(n: usize) -> VerificationReport {
    let report = VerificationReport::pass("corner_sum").param("n", n);
    if n == 0 {
        return report;
    }
    let corners: usize = enumerate_syt_of_size(n)
        .iter()
        .map(|p| p.shape().removable_cells().len())
        .sum();
    let rhs = n * enumerate_syt_of_size(n - 1).len();
    report.ensure(corners == rhs, || format!("n={n}: corner total {corners} != {rhs}"))
}

/// Checks `Σ_{λ ⊢ n} (f^λ)² = n!` and `Σ_{λ ⊢ n} f^λ = |Inv(n)|`.
///
/// `f^λ` comes from the hook formula and, for `n <= 10`, is compared with
/// the number of enumerated tableaux. `|Inv(n)|` comes from the recurrence
/// and, for `n <= 12`, from enumeration as well.
pub fn verify_counting(n: usize) -> VerificationReport {
    let report = VerificationReport::pass("counting").param("n", n);
    let mut sum = BigUint::zero();
    let mut sum_sq = BigUint::zero();
    for lam in partitions_of(n) {
        let f = match f_lambda(&lam) {
            Ok(f) => f,
            Err(e) => return report.fail(format!("shape {lam}: {e}")),
        };
        if n <= SYT_CROSSCHECK_BOUND {
            let counted = enumerate_syt(&lam).len();
            if BigUint::from(counted) != f {
                return report.fail(format!("shape {lam}: hook formula {f}, enumeration {counted}"));
            }
        }
        sum_sq += &f * &f;
        sum += f;
    }
    if sum_sq != factorial(n) {
        return report.fail(format!("n={n}: sum of squares {sum_sq} != n! = {}", factorial(n)));
    }
    let inv = involution_count(n);
    if BigInt::from(sum.clone()) != inv {
        return report.fail(format!("n={n}: sum f = {sum}, I(n) = {inv}"));
    }
    if n <= ENUMERATION_BOUND {
        let listed = enumerate_involutions(n).len();
        if BigInt::from(listed) != inv {
            return report.fail(format!("n={n}: recurrence I(n) = {inv}, enumeration {listed}"));
        }
    }
    report
}

/// Report wrapper for [`verify_involution_egf`].
pub fn verify_egf(order: usize, u1: &BigRational, u2: &BigRational) -> VerificationReport {
    let report = VerificationReport::pass("egf")
        .param("order", order)
        .param("u1", format!("{u1}"))
        .param("u2", format!("{u2}"));
    match verify_involution_egf(order, u1, u2) {
        Ok(true) => report,
        Ok(false) => report.fail(format!("order={order} u1={u1} u2={u2}: series and g_n/n! differ")),
        Err(e) => report.fail(format!("order={order} u1={u1} u2={u2}: {e}")),
    }
}

/// Compares the recursion for `g_n` with the enumeration sum (`n <= 12`).
pub fn verify_g_poly(n: usize, u1: &BigRational, u2: &BigRational) -> VerificationReport {
    let report = VerificationReport::pass("g_poly")
        .param("n", n)
        .param("u1", format!("{u1}"))
        .param("u2", format!("{u2}"));
    if n > ENUMERATION_BOUND {
        return report.fail(format!("n={n} exceeds the enumeration bound {ENUMERATION_BOUND}"));
    }
    let rec = g_poly(n, u1, u2);
    let direct = g_poly_oracle(n, u1, u2);
    report.ensure(rec == direct, || format!("n={n} u1={u1} u2={u2}: recursion {rec}, enumeration {direct}"))
}
