//! Sums of products of binomials `1 - q^m`.
//!
//! Hook weights are such products: `(1 + q^h)/(1 - q^h)` equals
//! `(1 - q^{2h}) (1 - q^h)^{-2}`. Adding them through generic rational
//! function arithmetic pays for a polynomial gcd at every step. Here each
//! term is first rewritten over cyclotomic factors, the sum is taken over
//! their least common denominator, and the only cancellations left to test
//! are by those cyclotomic factors. Multiplying or dividing by `1 - q^m`
//! costs one pass over the coefficients.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{CheckedAdd, CheckedSub, One, Zero};

use super::{Polynomial, RationalFunction};
use crate::error::{Error, Result};

/// `c · Π_m (1 - q^m)^{e_m}` with integer exponents of either sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialProduct {
    coeff: BigInt,
    exps: BTreeMap<usize, i64>,
}

impl BinomialProduct {
    pub fn constant(coeff: BigInt) -> Self {
        BinomialProduct {
            coeff,
            exps: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The product `Π_{h} (1 + q^h)/(1 - q^h)` over the given `h >= 1`.
    pub fn hook_weight(hooks: impl IntoIterator<Item = usize>) -> Self {
        let mut p = Self::one();
        for h in hooks {
            p.mul_binomial(2 * h, 1);
            p.mul_binomial(h, -2);
        }
        p
    }

    pub fn coeff(&self) -> &BigInt {
        &self.coeff
    }

    /// Multiplies by `(1 - q^m)^e`. Panics if `m == 0`.
    pub fn mul_binomial(&mut self, m: usize, e: i64) {
        assert!(m > 0, "1 - q^0 vanishes");
        let slot = self.exps.entry(m).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.exps.remove(&m);
        }
    }

    pub fn scale(mut self, c: &BigInt) -> Self {
        self.coeff *= c;
        self
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.coeff *= &other.coeff;
        for (&m, &e) in &other.exps {
            out.mul_binomial(m, e);
        }
        out
    }

    /// Exponents over `Φ'_1 = 1 - q` and `Φ_d`, `d >= 2`; each `1 - q^m` is
    /// exactly the product of these over the divisors of `m`.
    fn cyclotomic_exponents(&self) -> BTreeMap<usize, i64> {
        let mut out = BTreeMap::new();
        for (&m, &e) in &self.exps {
            for d in divisors(m) {
                *out.entry(d).or_insert(0) += e;
            }
        }
        out.retain(|_, e| *e != 0);
        out
    }

    /// Canonical rational function.
    pub fn to_rational_function(&self) -> Result<RationalFunction> {
        sum_of_products(core::slice::from_ref(self))
    }
}

fn divisors(m: usize) -> impl Iterator<Item = usize> {
    (1..=m).filter(move |d| m.is_multiple_of(*d))
}

fn mobius(mut n: usize) -> i64 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Binomial exponents of `Π_d Φ_d^{a_d}` by Möbius inversion.
fn binomial_exponents(cyclo: &BTreeMap<usize, i64>) -> BTreeMap<usize, i64> {
    let mut out = BTreeMap::new();
    for (&d, &a) in cyclo {
        for m in divisors(d) {
            let mu = mobius(d / m);
            if mu != 0 {
                *out.entry(m).or_insert(0) += mu * a;
            }
        }
    }
    out.retain(|_, e| *e != 0);
    out
}

/// `p · (1 - q^m)`; `None` on overflow.
fn mul_binomial<T: Clone + Zero + CheckedSub>(p: &mut Vec<T>, m: usize) -> Option<()> {
    p.resize(p.len() + m, T::zero());
    for k in (m..p.len()).rev() {
        p[k] = p[k].checked_sub(&p[k - m])?;
    }
    Some(())
}

/// `p / (1 - q^m)`; `None` on overflow or a nonzero remainder.
fn div_binomial<T: Clone + Zero + CheckedAdd>(p: &mut Vec<T>, m: usize) -> Option<()> {
    if p.len() <= m {
        return p.iter().all(Zero::is_zero).then(|| p.clear());
    }
    for k in m..p.len() {
        p[k] = p[k].checked_add(&p[k - m])?;
    }
    let keep = p.len() - m;
    if !p[keep..].iter().all(Zero::is_zero) {
        return None;
    }
    p.truncate(keep);
    Some(())
}

/// Expands `Π (1 - q^m)^{e_m}`, multiplying before dividing.
fn expand<T: Clone + Zero + One + CheckedAdd + CheckedSub>(exps: &BTreeMap<usize, i64>) -> Option<Vec<T>> {
    let mut p = vec![T::one()];
    for (&m, &e) in exps.iter().filter(|(_, e)| **e > 0) {
        for _ in 0..e {
            mul_binomial(&mut p, m)?;
        }
    }
    for (&m, &e) in exps.iter().filter(|(_, e)| **e < 0) {
        for _ in 0..-e {
            div_binomial(&mut p, m)?;
        }
    }
    Some(p)
}

/// Integer coefficients of `Π (1 - q^m)^{e_m}`, which must be a polynomial.
fn expand_integer(exps: &BTreeMap<usize, i64>) -> Result<Vec<BigInt>> {
    if let Some(p) = expand::<i128>(exps) {
        return Ok(p.into_iter().map(BigInt::from).collect());
    }
    expand::<BigInt>(exps).ok_or_else(|| Error::Internal("binomial quotient is not a polynomial".into()))
}

/// Quotient of `p` by a monic `d`, or `None` if `d` does not divide `p`.
fn div_monic(p: &[BigInt], d: &[BigInt]) -> Option<Vec<BigInt>> {
    let dd = d.len() - 1;
    if p.len() <= dd {
        return p.iter().all(Zero::is_zero).then(Vec::new);
    }
    let mut rem = p.to_vec();
    let mut quot = vec![BigInt::zero(); p.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = core::mem::take(&mut rem[k + dd]);
        if c.is_zero() {
            continue;
        }
        for (j, dj) in d[..dd].iter().enumerate() {
            if !dj.is_zero() {
                rem[k + j] -= &c * dj;
            }
        }
        quot[k] = c;
    }
    rem.iter().all(Zero::is_zero).then_some(quot)
}

fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Cyclotomic polynomial `Φ_d` (`d >= 1`), lowest degree first.
pub fn cyclotomic(d: usize) -> Polynomial {
    let mut p = cyclotomic_integer(d);
    if d == 1 {
        p.iter_mut().for_each(|c| *c = -&*c);
    }
    Polynomial::from_integers(p)
}

/// `Φ_d` for `d >= 2`, `1 - q` for `d = 1`.
fn cyclotomic_integer(d: usize) -> Vec<BigInt> {
    let exps = binomial_exponents(&BTreeMap::from([(d, 1)]));
    expand_integer(&exps).expect("cyclotomic polynomials are binomial quotients")
}

/// Numerator of `Σ terms` over the cyclotomic factors common to all terms,
/// together with the exponents of those factors.
fn common_numerator(terms: &[BinomialProduct]) -> Result<(Vec<BigInt>, BTreeMap<usize, i64>)> {
    let cyclo: Vec<_> = terms.iter().map(BinomialProduct::cyclotomic_exponents).collect();
    let mut floor: BTreeMap<usize, i64> = BTreeMap::new();
    for c in &cyclo {
        for &d in c.keys() {
            floor.entry(d).or_insert(0);
        }
    }
    for (d, f) in floor.iter_mut() {
        *f = cyclo.iter().map(|c| c.get(d).copied().unwrap_or(0)).min().unwrap_or(0);
    }
    let mut num: Vec<BigInt> = Vec::new();
    for (t, c) in terms.iter().zip(&cyclo) {
        if t.coeff.is_zero() {
            continue;
        }
        let shifted = floor
            .iter()
            .map(|(&d, &f)| (d, c.get(&d).copied().unwrap_or(0) - f))
            .filter(|&(_, e)| e != 0)
            .collect();
        let p = expand_integer(&binomial_exponents(&shifted))?;
        if num.len() < p.len() {
            num.resize(p.len(), BigInt::zero());
        }
        for (slot, v) in num.iter_mut().zip(p) {
            *slot += v * &t.coeff;
        }
    }
    trim(&mut num);
    Ok((num, floor))
}

/// Whether `Σ terms` vanishes identically.
pub fn sum_of_products_is_zero(terms: &[BinomialProduct]) -> Result<bool> {
    Ok(common_numerator(terms)?.0.is_empty())
}

/// `Σ terms` as a canonical rational function.
pub fn sum_of_products(terms: &[BinomialProduct]) -> Result<RationalFunction> {
    let (mut num, floor) = common_numerator(terms)?;
    if num.is_empty() {
        return Ok(RationalFunction::zero());
    }
    let mut num_exps = BTreeMap::new();
    let mut den_exps = BTreeMap::new();
    for (&d, &f) in &floor {
        if f > 0 {
            num_exps.insert(d, f);
            continue;
        }
        // cancel Φ_d from the numerator while it divides
        let mut left = -f;
        let phi = cyclotomic_integer(d);
        let phi_monic = if d == 1 { phi.iter().map(|c| -c).collect() } else { phi };
        while left > 0 {
            match div_monic(&num, &phi_monic) {
                Some(q) => {
                    num = q;
                    if d == 1 {
                        num.iter_mut().for_each(|c| *c = -&*c);
                    }
                    left -= 1;
                }
                None => break,
            }
        }
        if left > 0 {
            den_exps.insert(d, left);
        }
    }
    if !num_exps.is_empty() {
        let extra = expand_integer(&binomial_exponents(&num_exps))?;
        num = mul_integer(&num, &extra);
    }
    let den = expand_integer(&binomial_exponents(&den_exps))?;
    Ok(RationalFunction::from_coprime(
        Polynomial::from_integers(num),
        Polynomial::from_integers(den),
    ))
}

fn mul_integer(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}
