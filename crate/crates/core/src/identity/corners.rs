//! The extend-retract identity for `w(λ)`, the hook/content relations at
//! corners behind it, and its reduction to a sum over corner contents.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::report::VerificationReport;
use crate::error::{Error, Result};
use crate::exact::{
    sum_of_products, sum_of_products_is_zero, BigRational, BinomialProduct, Polynomial,
    RationalFunction,
};
use crate::partitions::{Cell, Partition};

/// Checks `Σ_{λ⁺} w(λ⁺) = w(1) w(λ) + Σ_{λ⁻} w(λ⁻)`, with `λ⁺` ranging over
/// additions at outer corners and `λ⁻` over removals of inner corners.
pub fn verify_lemma1(lambda: &Partition) -> VerificationReport {
    let report = VerificationReport::pass("lemma1").param("shape", format!("{lambda}"));
    let weight = |p: &Partition| BinomialProduct::hook_weight(p.hooks());
    let plus: Vec<BinomialProduct> = lambda
        .addable_cells()
        .into_iter()
        .map(|c| weight(&lambda.add_cell(c).expect("addable")))
        .collect();
    let mut minus = vec![weight(lambda).mul(&BinomialProduct::hook_weight([1]))];
    minus.extend(
        lambda
            .removable_cells()
            .into_iter()
            .map(|c| weight(&lambda.remove_cell(c).expect("removable"))),
    );
    let neg = BigInt::from(-1);
    let difference: Vec<BinomialProduct> = plus
        .iter()
        .cloned()
        .chain(minus.iter().map(|t| t.clone().scale(&neg)))
        .collect();
    match sum_of_products_is_zero(&difference) {
        Ok(true) => report,
        Ok(false) => {
            let show = |terms: &[BinomialProduct]| match sum_of_products(terms) {
                Ok(r) => format!("{}", r.display("q")),
                Err(e) => format!("{e}"),
            };
            report.fail(format!(
                "shape {lambda}: sum over additions {} != w(1)w(shape) + sum over removals {}",
                show(&plus),
                show(&minus)
            ))
        }
        Err(e) => report.fail(format!("shape {lambda}: {e}")),
    }
}

/// Which corner family the index `k` of [`verify_corner_hooks`] refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CornerKind {
    /// Add the `k`-th outer corner `M_k`.
    Outer,
    /// Remove the `k`-th inner corner `N_k`.
    Inner,
}

/// Checks the hook/content relations at the `k`-th (1-based) outer or inner
/// corner, recomputing every hook length directly from the shapes.
///
/// With outer corners `M_i = (a_i, b_i)` of contents `x_i` and inner corners
/// `N_i = (α_i, β_i)` of contents `y_i`, adding `M_k` requires
///
/// * `h_{λ⁺}(a_i, b_k) = x_i - x_k` for `i < k`,
/// * `h_λ(α_i, b_k) = y_i - x_k` for `i < k`,
/// * `h_{λ⁺}(a_k, b_i) = x_k - x_i` for `i > k`,
/// * `h_λ(a_k, β_i) = x_k - y_i` for `k <= i <= d-1`,
///
/// and removing `N_k` requires
///
/// * `h_{λ⁻}(α_i, β_k) = y_i - y_k` for `i < k`,
/// * `h_λ(a_i, β_k) = x_i - y_k` for `i <= k`,
/// * `h_{λ⁻}(α_k, β_i) = y_k - y_i` for `i > k`,
/// * `h_λ(α_k, b_i) = y_k - x_i` for `i > k`.
pub fn verify_corner_hooks(lambda: &Partition, kind: CornerKind, k: usize) -> Result<VerificationReport> {
    let prof = lambda.corner_profile();
    let d = prof.d();
    let limit = match kind {
        CornerKind::Outer => d,
        CornerKind::Inner => d - 1,
    };
    if k == 0 || k > limit {
        return Err(Error::InvalidArgument(format!(
            "corner index {k} out of range 1..={limit} for shape {lambda}"
        )));
    }
    let kind_name = match kind {
        CornerKind::Outer => "outer",
        CornerKind::Inner => "inner",
    };
    let report = VerificationReport::pass("corner_hooks")
        .param("shape", format!("{lambda}"))
        .param("corner", kind_name)
        .param("k", k);

    let outer = &prof.outer_cells;
    let inner = &prof.inner_cells;
    let x = |i: usize| prof.outer_contents[i - 1];
    let y = |i: usize| prof.inner_contents[i - 1];
    let m = |i: usize| outer[i - 1];
    let nn = |i: usize| inner[i - 1];

    // (shape label, shape, cell, expected hook)
    let mut checks: Vec<(&str, &Partition, Cell, i64)> = Vec::new();
    let changed;
    match kind {
        CornerKind::Outer => {
            changed = lambda.add_cell(m(k))?;
            for i in 1..k {
                checks.push(("lambda+", &changed, Cell::new(m(i).row, m(k).col), x(i) - x(k)));
                checks.push(("lambda", lambda, Cell::new(nn(i).row, m(k).col), y(i) - x(k)));
            }
            for i in k + 1..=d {
                checks.push(("lambda+", &changed, Cell::new(m(k).row, m(i).col), x(k) - x(i)));
            }
            for i in k..d {
                checks.push(("lambda", lambda, Cell::new(m(k).row, nn(i).col), x(k) - y(i)));
            }
        }
        CornerKind::Inner => {
            changed = lambda.remove_cell(nn(k))?;
            for i in 1..k {
                checks.push(("lambda-", &changed, Cell::new(nn(i).row, nn(k).col), y(i) - y(k)));
            }
            for i in 1..=k {
                checks.push(("lambda", lambda, Cell::new(m(i).row, nn(k).col), x(i) - y(k)));
            }
            for i in k + 1..d {
                checks.push(("lambda-", &changed, Cell::new(nn(k).row, nn(i).col), y(k) - y(i)));
            }
            for i in k + 1..=d {
                checks.push(("lambda", lambda, Cell::new(nn(k).row, m(i).col), y(k) - x(i)));
            }
        }
    }
    for (label, shape, cell, expected) in checks {
        let actual = shape.hook_length(cell).map(|h| h as i64);
        if actual != Ok(expected) {
            return Ok(report.fail(format!(
                "shape {lambda}, {kind_name} k={k}: hook of {label} at ({},{}) is {actual:?}, content difference {expected}",
                cell.row, cell.col
            )));
        }
    }
    Ok(report)
}

fn check_distinct(xs: &[i64], ys: &[i64]) -> Result<()> {
    if xs.is_empty() || ys.len() + 1 != xs.len() {
        return Err(Error::InvalidArgument(format!(
            "need d >= 1 outer and d - 1 inner values, got {} and {}",
            xs.len(),
            ys.len()
        )));
    }
    let mut all: Vec<i64> = xs.iter().chain(ys).copied().collect();
    all.sort_unstable();
    if all.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::NotDistinct);
    }
    Ok(())
}

/// Multiplies `t` by `w(h)^e`, using `w(-h) = -w(h)`.
fn mul_weight(t: &mut BinomialProduct, h: i64, e: i64) -> Result<()> {
    if h == 0 {
        return Err(Error::ZeroWeightArgument);
    }
    let m = h.unsigned_abs() as usize;
    t.mul_binomial(2 * m, e);
    t.mul_binomial(m, -2 * e);
    if h < 0 && e % 2 != 0 {
        *t = core::mem::replace(t, BinomialProduct::one()).scale(&BigInt::from(-1));
    }
    Ok(())
}

/// The `2d - 1` summands of the content identity, outer terms first.
fn prop2_terms(xs: &[i64], ys: &[i64]) -> Result<Vec<BinomialProduct>> {
    let mut terms = Vec::with_capacity(xs.len() + ys.len());
    for (same, other) in [(xs, ys), (ys, xs)] {
        for (k, &vk) in same.iter().enumerate() {
            let mut t = BinomialProduct::one();
            for (i, &vi) in same.iter().enumerate() {
                if i != k {
                    mul_weight(&mut t, vk - vi, 1)?;
                }
            }
            for &ui in other {
                mul_weight(&mut t, vk - ui, -1)?;
            }
            terms.push(t);
        }
    }
    Ok(terms)
}

fn join(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| format!("{x}")).collect();
    parts.join(",")
}

/// Checks the content identity
/// `Σ_k Π_{i≠k} w(x_k-x_i) / Π_i w(x_k-y_i) + Σ_k Π_{i≠k} w(y_k-y_i) / Π_i w(y_k-x_i) = 1`
/// exactly in `q` for distinct integers.
pub fn verify_prop2(xs: &[i64], ys: &[i64]) -> Result<VerificationReport> {
    check_distinct(xs, ys)?;
    let report = VerificationReport::pass("prop2")
        .param("xs", join(xs))
        .param("ys", join(ys));
    let total = sum_of_products(&prop2_terms(xs, ys)?)?;
    Ok(report.ensure(total.is_one(), || {
        format!("xs=[{}] ys=[{}]: sum = {}", join(xs), join(ys), total.display("q"))
    }))
}

/// Checks the reduction of the content identity to the parity identity:
/// with `a_i = q^{-x_i}` and `a_{d+i} = -q^{-y_i}`, each summand
/// `Π_{j≠k} (a_k + a_j)/(a_k - a_j)` equals the matching content-identity
/// summand, and the `2d - 1` summands add to 1.
pub fn verify_prop2_substitution(xs: &[i64], ys: &[i64]) -> Result<VerificationReport> {
    check_distinct(xs, ys)?;
    let report = VerificationReport::pass("prop2_substitution")
        .param("xs", join(xs))
        .param("ys", join(ys));
    // a_i = s_i q^{-e_i} = s_i q^{shift - e_i} / q^shift; the common q^shift cancels
    let signed: Vec<(i64, i64)> = xs.iter().map(|&x| (1, x)).chain(ys.iter().map(|&y| (-1, y))).collect();
    let shift = signed.iter().map(|&(_, e)| e).max().expect("nonempty");
    let numer = |(s, e): (i64, i64)| {
        Polynomial::monomial(BigRational::from_integer(BigInt::from(s)), (shift - e) as usize)
    };
    let terms = prop2_terms(xs, ys)?;
    for (k, &ak) in signed.iter().enumerate() {
        let (mut num, mut den) = (Polynomial::one(), Polynomial::one());
        for (i, &ai) in signed.iter().enumerate() {
            if i != k {
                num = &num * &(&numer(ak) + &numer(ai));
                den = &den * &(&numer(ak) - &numer(ai));
            }
        }
        let t = RationalFunction::new(num, den)?;
        let expected = terms[k].to_rational_function()?;
        if t != expected {
            return Ok(report.fail(format!(
                "xs=[{}] ys=[{}]: summand {} is {} after substitution but {} in weights",
                join(xs),
                join(ys),
                k + 1,
                t.display("q"),
                expected.display("q")
            )));
        }
    }
    let total = sum_of_products(&terms)?;
    Ok(report.ensure(total.is_one(), || {
        format!("xs=[{}] ys=[{}]: substituted sum = {}", join(xs), join(ys), total.display("q"))
    }))
}
