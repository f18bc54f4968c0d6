//! The parity identity `Σ_k Π_{i≠k} (a_k + a_i)/(a_k - a_i) = n mod 2`,
//! checked three ways: direct exact evaluation, through the partial fraction
//! expansion of `Π (t + a_i)/(t - a_i)`, and symbolically as an alternating
//! polynomial divided by the Vandermonde product.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

use super::report::VerificationReport;
use crate::error::{Error, Result};
use crate::exact::{BigRational, MultiPoly, Polynomial};

/// Largest `n` for the symbolic alternating-polynomial check.
pub const ALTERNATING_BOUND: usize = 6;

const NUMERATOR_BOUND: i64 = 1_000_000;
const DENOMINATOR_BOUND: i64 = 1_000;

/// Draws `n` rationals `p/q'` with `p ∈ [-10⁶, 10⁶]`, `q' ∈ [1, 10³]`,
/// resampling zeros, repeats, and values whose negation was already drawn.
pub fn sample_distinct_rationals<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<BigRational> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let p = rng.gen_range(-NUMERATOR_BOUND..=NUMERATOR_BOUND);
        let q = rng.gen_range(1..=DENOMINATOR_BOUND);
        if p == 0 {
            continue;
        }
        let v = BigRational::new(BigInt::from(p), BigInt::from(q));
        if seen.contains(&v) || seen.contains(&-v.clone()) {
            continue;
        }
        seen.insert(v.clone());
        out.push(v);
    }
    out
}

fn check_inputs(a: &[BigRational], forbid_opposites: bool) -> Result<()> {
    let mut seen = BTreeSet::new();
    for v in a {
        if v.is_zero() {
            return Err(Error::InvalidArgument(String::from("values must be nonzero")));
        }
        if !seen.insert(v.clone()) {
            return Err(Error::NotDistinct);
        }
    }
    if forbid_opposites && a.iter().any(|v| seen.contains(&-v.clone())) {
        return Err(Error::InvalidArgument(String::from(
            "no two values may sum to zero",
        )));
    }
    Ok(())
}

fn join(a: &[BigRational]) -> String {
    let parts: Vec<String> = a.iter().map(|x| format!("{x}")).collect();
    parts.join(",")
}

/// A fraction left unreduced, so that long sums cost multiplications only.
/// Equality is decided by cross-multiplying.
#[derive(Clone, Debug)]
struct Frac {
    num: BigInt,
    den: BigInt,
}

impl Frac {
    fn new(num: BigInt, den: BigInt) -> Self {
        Frac { num, den }
    }

    fn integer(n: &BigInt) -> Self {
        Frac::new(n.clone(), BigInt::one())
    }

    fn rational(r: &BigRational) -> Self {
        Frac::new(r.numer().clone(), r.denom().clone())
    }

    fn add(&self, o: &Frac) -> Frac {
        Frac::new(&self.num * &o.den + &o.num * &self.den, &self.den * &o.den)
    }

    fn mul(&self, o: &Frac) -> Frac {
        Frac::new(&self.num * &o.num, &self.den * &o.den)
    }

    fn div(&self, o: &Frac) -> Frac {
        Frac::new(&self.num * &o.den, &self.den * &o.num)
    }

    fn same(&self, o: &Frac) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }

    fn value(&self) -> BigRational {
        BigRational::new(self.num.clone(), self.den.clone())
    }
}

/// Folds adjacent pairs until one value is left, keeping operands balanced.
fn pairwise<T: Clone>(mut items: Vec<T>, empty: T, combine: impl Fn(&T, &T) -> T) -> T {
    while items.len() > 1 {
        items = items
            .chunks(2)
            .map(|c| if c.len() == 2 { combine(&c[0], &c[1]) } else { c[0].clone() })
            .collect();
    }
    items.pop().unwrap_or(empty)
}

fn frac_sum(items: Vec<Frac>) -> Frac {
    pairwise(items, Frac::integer(&BigInt::zero()), Frac::add)
}

/// `b_k = Π_{i≠k} (a_k + a_i)/(a_k - a_i)`.
fn summands(a: &[BigRational]) -> Vec<Frac> {
    (0..a.len())
        .map(|k| {
            let (pk, qk) = (a[k].numer(), a[k].denom());
            let (num, den) = a
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .fold((BigInt::one(), BigInt::one()), |(n, d), (_, ai)| {
                    let (l, r) = (pk * ai.denom(), ai.numer() * qk);
                    (n * (&l + &r), d * (l - r))
                });
            Frac::new(num, den)
        })
        .collect()
}

/// `Π_i (q_i t + sign p_i)` for `a_i = p_i/q_i`, lowest degree first.
fn cleared_product(a: &[BigRational], sign: i64) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    for ai in a {
        let p = ai.numer() * sign;
        let q = ai.denom();
        out.push(BigInt::zero());
        for j in (0..out.len()).rev() {
            let low = if j > 0 { q * &out[j - 1] } else { BigInt::zero() };
            out[j] = &p * &out[j] + low;
        }
    }
    out
}

/// Quotient of `d` by `q t - p`, or `None` if the division is not exact.
fn divide_linear(d: &[BigInt], a: &BigRational) -> Option<Vec<BigInt>> {
    let (p, q) = (a.numer(), a.denom());
    let m = d.len().checked_sub(1)?;
    let mut c = vec![BigInt::zero(); m];
    let mut carry = BigInt::zero();
    for j in (1..=m).rev() {
        let (quo, rem) = (&d[j] + p * &carry).div_rem(q);
        if !rem.is_zero() {
            return None;
        }
        c[j - 1] = quo.clone();
        carry = quo;
    }
    (d[0] == -(p * &carry)).then_some(c)
}

/// Value of an integer polynomial at `a`, as `Σ c_j p^j q^{m-j} / q^m`.
fn eval_at(poly: &[BigInt], a: &BigRational) -> Frac {
    let (p, q) = (a.numer(), a.denom());
    let mut acc = BigInt::zero();
    let mut qpow = BigInt::one();
    for (j, c) in poly.iter().rev().enumerate() {
        acc = acc * p + c * &qpow;
        if j + 1 < poly.len() {
            qpow *= q;
        }
    }
    Frac::new(acc, qpow)
}

fn display_integer(poly: &[BigInt]) -> String {
    let p = Polynomial::from_coeffs(poly.iter().cloned().map(BigRational::from_integer).collect());
    format!("{}", p.display("t"))
}

fn parity(n: usize) -> BigRational {
    BigRational::from_integer(BigInt::from((n % 2) as i64))
}

/// Evaluates `Σ_k b_k` exactly and compares it with `n mod 2`.
pub fn verify_prop3(a: &[BigRational]) -> Result<VerificationReport> {
    check_inputs(a, false)?;
    let n = a.len();
    let report = VerificationReport::pass("prop3").param("n", n).param("a", join(a));
    let total = frac_sum(summands(a));
    Ok(report.ensure(total.same(&Frac::rational(&parity(n))), || {
        format!("a=[{}]: sum = {}, expected {}", join(a), total.value(), parity(n))
    }))
}

/// Checks the partial fraction route for `F(t) = Π (t + a_i)/(t - a_i)`:
///
/// 1. `c_0 = 1`: numerator and denominator are monic of equal degree, and
///    the polynomial quotient of the division is exactly 1;
/// 2. each residue `c_k`, computed by exact division of the denominator by
///    `t - a_k`, equals `2 a_k b_k`;
/// 3. `c_0 + Σ c_k/(t - a_k)` reassembles `F`, and at `t = 0` gives
///    `(-1)^n = c_0 - Σ c_k / a_k`, hence `1 - (-1)^n = 2 Σ b_k`.
pub fn verify_prop3_residues(a: &[BigRational]) -> Result<VerificationReport> {
    check_inputs(a, true)?;
    let n = a.len();
    let report = VerificationReport::pass("prop3_residues").param("n", n).param("a", join(a));
    let fail = |msg: String| report.clone().fail(format!("a=[{}]: {msg}", join(a)));

    // With a_i = p_i/q_i, F(t) = N(t)/D(t) for N = Π (q_i t + p_i) and
    // D = Π (q_i t - p_i); both carry the same factor Π q_i relative to the
    // monic products, so the partial fractions of F are unchanged.
    let numer = cleared_product(a, 1);
    let denom = cleared_product(a, -1);

    // (1) c_0 = 1: equal leading coefficients and deg(N - D) < n
    if numer.last() != denom.last() {
        return Ok(fail(String::from("numerator and denominator have different leading terms")));
    }
    let mut rem: Vec<BigInt> = numer.iter().zip(&denom).map(|(x, y)| x - y).collect();
    if !rem.pop().is_some_and(|top| top.is_zero()) {
        return Ok(fail(format!("N - D = {} has degree n", display_integer(&rem))));
    }
    let c0 = BigRational::one();

    // (2) residues c_k = (N - D)(a_k) / (q_k C_k(a_k)) with D = (q_k t - p_k) C_k
    let b = summands(a);
    let two = BigRational::from_integer(BigInt::from(2));
    let mut residues = Vec::with_capacity(n);
    let mut cofactors = Vec::with_capacity(n);
    for (k, ak) in a.iter().enumerate() {
        let Some(cofactor) = divide_linear(&denom, ak) else {
            return Ok(fail(format!("t - a_{} does not divide the denominator", k + 1)));
        };
        let at_pole = eval_at(&cofactor, ak).mul(&Frac::integer(ak.denom()));
        if at_pole.num.is_zero() {
            return Ok(fail(format!("repeated pole at a_{}", k + 1)));
        }
        let ck = eval_at(&rem, ak).div(&at_pole);
        let expected = b[k].mul(&Frac::rational(&(&two * ak)));
        if !ck.same(&expected) {
            return Ok(fail(format!(
                "residue c_{} = {}, expected 2 a_k b_k = {}",
                k + 1,
                ck.value(),
                expected.value()
            )));
        }
        residues.push(ck);
        cofactors.push(cofactor);
    }

    // (3) reassembly N - c_0 D = Σ c_k q_k C_k, over the product of denominators
    let parts: Vec<(Vec<BigInt>, BigInt)> = residues
        .iter()
        .zip(a)
        .zip(&cofactors)
        .map(|((ck, ak), cof)| {
            let r = ck.mul(&Frac::integer(ak.denom()));
            (cof.iter().map(|c| c * &r.num).collect(), r.den)
        })
        .collect();
    let (sum, den) = pairwise(parts, (vec![BigInt::zero(); n], BigInt::one()), |(p1, d1), (p2, d2)| {
        let p = p1.iter().zip(p2).map(|(x, y)| x * d2 + y * d1).collect();
        (p, d1 * d2)
    });
    if sum.iter().zip(&rem).any(|(x, y)| *x != y * &den) {
        return Ok(fail(String::from("partial fractions do not reassemble the product")));
    }
    let sign = if n.is_multiple_of(2) { BigRational::one() } else { -BigRational::one() };
    let at_zero = BigRational::new(numer[0].clone(), denom[0].clone());
    let over_poles = frac_sum(
        residues.iter().zip(a).map(|(ck, ak)| ck.div(&Frac::rational(ak))).collect(),
    );
    // c_0 - Σ c_k/a_k = (-1)^n
    if at_zero != sign || !over_poles.same(&Frac::rational(&(&c0 - &sign))) {
        return Ok(fail(format!(
            "t=0 gives {at_zero} and c_0 - sum c_k/a_k = {}, expected {sign}",
            &c0 - over_poles.value()
        )));
    }
    let lhs = BigRational::one() - &sign;
    let sum_b = frac_sum(b);
    if !sum_b.mul(&Frac::rational(&two)).same(&Frac::rational(&lhs)) {
        return Ok(fail(format!("1 - (-1)^n = {lhs} but 2 sum b_k = {}", &two * sum_b.value())));
    }
    Ok(report)
}

/// `Π_{i<j} (a_i - a_j)` in `n` variables.
fn vandermonde(n: usize, skip: Option<usize>) -> MultiPoly {
    let mut out = MultiPoly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            if skip == Some(i) || skip == Some(j) {
                continue;
            }
            out = &out * &(&MultiPoly::var(n, i) - &MultiPoly::var(n, j));
        }
    }
    out
}

/// Clears denominators in the parity identity and checks the polynomial
/// `Σ_k (-1)^{k-1} Π_{i≠k} (a_k + a_i) Π_{i<j; i,j≠k} (a_i - a_j)` symbolically:
/// it changes sign under every adjacent transposition, the Vandermonde
/// product divides it, and the quotient is the constant `n mod 2`, which
/// is also the coefficient of `a_1^{n-1} a_2^{n-2} ... a_{n-1}`.
pub fn verify_prop3_alternating(n: usize) -> Result<VerificationReport> {
    if !(2..=ALTERNATING_BOUND).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "symbolic check supports 2 <= n <= {ALTERNATING_BOUND}, got {n}"
        )));
    }
    let report = VerificationReport::pass("prop3_alternating").param("n", n);
    let mut lhs = MultiPoly::zero(n);
    for k in 0..n {
        let mut term = vandermonde(n, Some(k));
        for i in (0..n).filter(|&i| i != k) {
            term = &term * &(&MultiPoly::var(n, k) + &MultiPoly::var(n, i));
        }
        lhs = if k % 2 == 0 { &lhs + &term } else { &lhs - &term };
    }

    for r in 0..n - 1 {
        if lhs.swap_vars(r, r + 1) != -&lhs {
            return Ok(report.fail(format!("n={n}: not alternating under a_{} <-> a_{}", r + 1, r + 2)));
        }
    }
    let vdm = vandermonde(n, None);
    let Some(quotient) = lhs.exact_div(&vdm) else {
        return Ok(report.fail(format!("n={n}: Vandermonde product does not divide the polynomial")));
    };
    let delta = BigInt::from((n % 2) as i64);
    if quotient.as_constant() != Some(delta.clone()) {
        return Ok(report.fail(format!("n={n}: quotient is not the constant {delta}: {quotient:?}")));
    }
    let staircase: Vec<u32> = (0..n).map(|i| (n - 1 - i) as u32).collect();
    let coeff = lhs.coeff(&staircase);
    Ok(report.ensure(coeff == delta, || {
        format!("n={n}: staircase coefficient {coeff}, expected {delta}")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use alloc::string::ToString;
    use num_traits::Signed;
    use rand::SeedableRng;

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn values(v: &[Frac]) -> Vec<BigRational> {
        v.iter().map(Frac::value).collect()
    }

    #[test]
    fn prop3_examples() {
        assert!(verify_prop3(&ints(&[5])).unwrap().passed());
        assert!(verify_prop3(&ints(&[1, 2])).unwrap().passed());
        assert!(verify_prop3(&ints(&[1, 2, 4])).unwrap().passed());
        // the three summands of [1, 2, 4] are 5, -9, 5
        assert_eq!(values(&summands(&ints(&[1, 2, 4]))), ints(&[5, -9, 5]));
        let err = verify_prop3(&ints(&[1, 2, 1])).unwrap_err();
        assert_eq!(err.to_string(), "requires distinct values");
        assert!(verify_prop3(&ints(&[0, 2])).is_err());
    }

    #[test]
    fn residue_examples() {
        assert!(verify_prop3_residues(&ints(&[1])).unwrap().passed());
        assert!(verify_prop3_residues(&ints(&[1, 2])).unwrap().passed());
        assert!(verify_prop3_residues(&ints(&[1, 2, 4])).unwrap().passed());
        // b for [1, 2] is [-3, 3], so c = [2*1*(-3), 2*2*3] = [-6, 12]
        assert_eq!(values(&summands(&ints(&[1, 2]))), ints(&[-3, 3]));
        assert!(verify_prop3_residues(&ints(&[1, -1])).is_err());
        assert!(verify_prop3(&ints(&[1, -1])).is_ok());
    }

    #[test]
    fn alternating_examples() {
        for n in 2..=5 {
            let r = verify_prop3_alternating(n).unwrap();
            assert!(r.passed(), "{r}");
        }
        assert!(verify_prop3_alternating(1).is_err());
        assert!(verify_prop3_alternating(7).is_err());
    }

    #[test]
    fn sampler_respects_constraints() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let a = sample_distinct_rationals(&mut rng, 40);
        assert_eq!(a.len(), 40);
        check_inputs(&a, true).unwrap();
        let bound = int(NUMERATOR_BOUND);
        assert!(a.iter().all(|v| v.abs() <= bound && *v.denom() <= BigInt::from(DENOMINATOR_BOUND)));
        let mut again = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        assert_eq!(sample_distinct_rationals(&mut again, 40), a);
        assert!(verify_prop3(&[rat(1, 2), rat(-3, 7), rat(5, 3), rat(9, 11)]).unwrap().passed());
    }
}
