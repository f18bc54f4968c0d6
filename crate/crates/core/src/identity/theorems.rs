//! The hook expansion in `z`, its `q` reformulation, the change of variables
//! linking them, and the `φ_n` recursion.

use alloc::collections::BTreeMap;
use alloc::format;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::report::VerificationReport;
use super::{phi_n, rho, weight_w};
use crate::error::{Error, Result};
use crate::exact::{factorial, series_exp, BigRational, Polynomial, PowerSeries, RationalFunction};
use crate::involutions::{involution_count, psi_n};
use crate::partitions::{partitions_of, Partition};

/// Checks `φ_n = ψ_n` as canonical rational functions in `q`.
pub fn verify_theorem1prime(n: usize) -> VerificationReport {
    let report = VerificationReport::pass("theorem1prime").param("n", n);
    let phi = phi_n(n);
    match psi_n(n) {
        Ok(psi) => report.ensure(phi == psi, || {
            format!(
                "n={n}: phi={} psi={}",
                phi.display("q"),
                psi.display("q")
            )
        }),
        Err(e) => report.fail(format!("n={n}: {e}")),
    }
}

/// `Σ_{λ ⊢ n} Π_{x ∈ λ} ρ(h(x), z)` as a rational function in `z`.
pub fn rho_sum(n: usize) -> RationalFunction {
    let mut memo: BTreeMap<usize, RationalFunction> = BTreeMap::new();
    let mut rho_of = |h: usize| {
        memo.entry(h)
            .or_insert_with(|| rho(h as i64).expect("hook lengths are positive"))
            .clone()
    };
    partitions_of(n)
        .iter()
        .map(|lam| {
            lam.hooks()
                .into_iter()
                .fold(RationalFunction::one(), |acc, h| &acc * &rho_of(h))
        })
        .fold(RationalFunction::zero(), |acc, t| &acc + &t)
}

/// `Σ_{λ ⊢ n} Π 1/h(x)^2`, computed directly in rationals.
pub fn hook_sum_inverse_squared(n: usize) -> BigRational {
    hook_power_sum(n, 2)
}

/// `Σ_{λ ⊢ n} Π 1/h(x)`, computed directly in rationals.
pub fn hook_sum_inverse(n: usize) -> BigRational {
    hook_power_sum(n, 1)
}

fn hook_power_sum(n: usize, power: usize) -> BigRational {
    partitions_of(n)
        .iter()
        .map(|lam: &Partition| {
            let prod = lam
                .hooks()
                .into_iter()
                .fold(BigInt::one(), |acc, h| acc * BigInt::from(h).pow(power as u32));
            BigRational::new(BigInt::one(), prod)
        })
        .fold(BigRational::zero(), |acc, t| acc + t)
}

/// Checks `e^{t + z t^2/2} = Σ_n t^n Σ_{λ ⊢ n} Π ρ(h(x), z)` up to `t^order`.
///
/// For every `n <= order` the partition sum must reduce to a polynomial in
/// `z` of degree `⌊n/2⌋` with nonnegative coefficients equal to the series
/// coefficient. The `z = 0` and `z = 1` specialisations are compared with
/// `Σ Π 1/h² = 1/n!` and `Σ Π 1/h = I(n)/n!` computed independently.
pub fn verify_theorem1(order: usize) -> VerificationReport {
    let report = VerificationReport::pass("theorem1").param("order", order);
    let half_z = Polynomial::from_coeffs(alloc::vec![
        BigRational::zero(),
        BigRational::new(BigInt::one(), BigInt::from(2)),
    ]);
    let f = PowerSeries::from_coeffs(order, [Polynomial::zero(), Polynomial::one(), half_z]);
    let series = match series_exp(&f) {
        Ok(s) => s,
        Err(e) => return report.fail(format!("series: {e}")),
    };
    let zero = BigRational::zero();
    let one = BigRational::one();
    for n in 0..=order {
        let sum = rho_sum(n);
        let Some(poly) = sum.as_polynomial() else {
            return report.fail(format!("n={n}: partition sum is not a polynomial: {}", sum.display("z")));
        };
        let coeff = series.coeff(n).expect("within order");
        if poly != coeff {
            return report.fail(format!(
                "n={n}: partition sum {} != series coefficient {}",
                poly.display("z"),
                coeff.display("z")
            ));
        }
        let degree = poly.degree().unwrap_or(0);
        if degree != n / 2 || poly.coeffs().iter().any(Signed::is_negative) {
            return report.fail(format!(
                "n={n}: expected degree {} with nonnegative coefficients, got {}",
                n / 2,
                poly.display("z")
            ));
        }
        let n_fact = BigRational::from_integer(factorial(n).into());
        let at_zero = poly.eval(&zero);
        let direct_zero = hook_sum_inverse_squared(n);
        let want_zero = n_fact.recip();
        if at_zero != want_zero || direct_zero != want_zero {
            return report.fail(format!(
                "n={n}: z=0 gives {at_zero}, sum of 1/h^2 gives {direct_zero}, 1/n! = {want_zero}"
            ));
        }
        let at_one = poly.eval(&one);
        let direct_one = hook_sum_inverse(n);
        let want_one = BigRational::from_integer(involution_count(n)) / &n_fact;
        if at_one != want_one || direct_one != want_one {
            return report.fail(format!(
                "n={n}: z=1 gives {at_one}, sum of 1/h gives {direct_one}, I(n)/n! = {want_one}"
            ));
        }
    }
    report
}

/// Checks `ρ(n, s²) = w(n) s / n` with `s = (1 - q)/(1 + q)`, the square
/// root of `z` under the change of variables linking the `z` and `q` forms.
pub fn verify_weight_substitution(n: i64) -> Result<VerificationReport> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!("substitution check requires n >= 1, got {n}")));
    }
    let report = VerificationReport::pass("substitution").param("n", n);
    let s = RationalFunction::new(Polynomial::from_i64s(&[1, -1]), Polynomial::from_i64s(&[1, 1]))?;
    let lhs = rho(n)?.compose(&s.pow(2))?;
    let rhs = (&weight_w(n)? * &s).scale(&BigRational::new(BigInt::one(), BigInt::from(n)));
    Ok(report.ensure(lhs == rhs, || {
        format!("n={n}: rho(n, s^2)={} w(n)s/n={}", lhs.display("q"), rhs.display("q"))
    }))
}

/// Checks `φ_{n+1} = w(1) φ_n + n φ_{n-1}`; for `n = 0` the last term is absent.
pub fn verify_phi_recursion(n: usize) -> VerificationReport {
    let report = VerificationReport::pass("phi_recursion").param("n", n);
    let w1 = weight_w(1).expect("w(1) is defined");
    let next = phi_n(n + 1);
    let mut rhs = &w1 * &phi_n(n);
    if n >= 1 {
        rhs = &rhs + &phi_n(n - 1).scale(&BigRational::from_integer(BigInt::from(n)));
    }
    report.ensure(next == rhs, || {
        format!(
            "n={n}: phi_(n+1)={} w(1)phi_n + n phi_(n-1)={}",
            next.display("q"),
            rhs.display("q")
        )
    })
}
