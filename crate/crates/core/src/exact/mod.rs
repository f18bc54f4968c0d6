//! Exact arithmetic: rationals, dense univariate polynomials, canonical
//! rational functions, truncated power series, and a small sparse
//! multivariate polynomial type for alternating-polynomial checks.

mod cyclo;
mod modgcd;
pub mod multipoly;
mod poly;
mod ratfunc;
mod ring;
mod series;

pub use cyclo::{cyclotomic, sum_of_products, sum_of_products_is_zero, BinomialProduct};
pub use multipoly::MultiPoly;
pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
pub use poly::{poly_gcd, poly_gcd_euclid, Polynomial};
pub use ratfunc::{ratfunc_eval, ratfunc_normalize, RationalFunction};
pub use ring::Coefficient;
pub use series::{series_exp, PowerSeries};

use num_traits::{One, Zero};

/// `n / d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as a rational.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `n!` as an arbitrary-precision integer.
pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}
