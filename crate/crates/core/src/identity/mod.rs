//! Hook weights and the identity checks built from them.
//!
//! All weights are rational functions in `q` (or `z` for `ρ`) kept in
//! canonical form, so every identity below is decided by comparing exact
//! representations.

mod corners;
mod counting;
mod prop3;
mod report;
mod theorems;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use corners::{
    verify_corner_hooks, verify_lemma1, verify_prop2, verify_prop2_substitution, CornerKind,
};
pub use counting::{
    verify_bijection, verify_corner_sum, verify_counting, verify_egf, verify_g_poly,
    SYT_CROSSCHECK_BOUND,
};
pub use prop3::{
    sample_distinct_rationals, verify_prop3, verify_prop3_alternating, verify_prop3_residues,
    ALTERNATING_BOUND,
};
pub use report::{ParamValue, Verdict, VerificationReport};
pub use theorems::{
    hook_sum_inverse, hook_sum_inverse_squared, rho_sum, verify_phi_recursion, verify_theorem1,
    verify_theorem1prime, verify_weight_substitution,
};

use crate::error::{Error, Result};
use crate::exact::{
    binomial, sum_of_products, BigRational, BinomialProduct, Polynomial, RationalFunction,
};
use crate::partitions::{f_lambda, partitions_of, Partition};

/// `1 + s q^h` as a polynomial.
fn one_plus(sign: i64, h: usize) -> Polynomial {
    let mut c = vec![BigRational::zero(); h + 1];
    c[0] = BigRational::one();
    c[h] += BigRational::from_integer(BigInt::from(sign));
    Polynomial::from_coeffs(c)
}

/// `w(h) = (1 + q^h)/(1 - q^h)` for `h != 0`; `w(-h) = -w(h)`.
pub fn weight_w(h: i64) -> Result<RationalFunction> {
    if h == 0 {
        return Err(Error::ZeroWeightArgument);
    }
    let m = h.unsigned_abs() as usize;
    let w = RationalFunction::new(one_plus(1, m), one_plus(-1, m))?;
    Ok(if h > 0 { w } else { -w })
}

/// Memo table for `w(h)`. Fill order never changes the values returned, so
/// one cache per worker behaves as a pure function.
#[derive(Debug, Default)]
pub struct WeightCache {
    memo: BTreeMap<usize, RationalFunction>,
}

impl WeightCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn w(&mut self, h: i64) -> Result<RationalFunction> {
        if h == 0 {
            return Err(Error::ZeroWeightArgument);
        }
        let m = h.unsigned_abs() as usize;
        let w = match self.memo.get(&m) {
            Some(w) => w.clone(),
            None => {
                let w = weight_w(m as i64)?;
                self.memo.insert(m, w.clone());
                w
            }
        };
        Ok(if h > 0 { w } else { -w })
    }
}

/// `w(λ) = Π_{x ∈ λ} w(h(x))`.
pub fn weight_lambda(lambda: &Partition) -> RationalFunction {
    BinomialProduct::hook_weight(lambda.hooks())
        .to_rational_function()
        .expect("hook weights expand exactly")
}

/// `ρ(n, z) = Σ_k C(n,2k) z^k / (n Σ_k C(n,2k+1) z^k)` in canonical form.
pub fn rho(n: i64) -> Result<RationalFunction> {
    if n <= 0 {
        return Err(Error::InvalidArgument(alloc::format!("rho requires n >= 1, got {n}")));
    }
    let n = n as usize;
    let big = |v: num_bigint::BigUint| BigRational::from_integer(BigInt::from(v));
    let even = Polynomial::from_coeffs((0..=n / 2).map(|k| big(binomial(n, 2 * k))).collect());
    let odd = Polynomial::from_coeffs(
        (0..=n.saturating_sub(1) / 2)
            .map(|k| big(binomial(n, 2 * k + 1) * n))
            .collect(),
    );
    RationalFunction::new(even, odd)
}

/// `φ_n = Σ_{λ ⊢ n} f^λ w(λ)`, summed over a common denominator.
pub fn phi_n(n: usize) -> RationalFunction {
    let terms: Vec<BinomialProduct> = partitions_of(n)
        .iter()
        .map(|lam| {
            let f = f_lambda(lam).expect("hook formula is integral");
            BinomialProduct::hook_weight(lam.hooks()).scale(&BigInt::from(f))
        })
        .collect();
    sum_of_products(&terms).expect("hook weights expand exactly")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn weight_examples() {
        assert_eq!(weight_w(1).unwrap(), rf(&[1, 1], &[1, -1]));
        assert_eq!(weight_w(2).unwrap(), rf(&[1, 0, 1], &[1, 0, -1]));
        assert_eq!(weight_w(-1).unwrap(), rf(&[-1, -1], &[1, -1]));
        assert_eq!(weight_w(0), Err(Error::ZeroWeightArgument));
        let mut cache = WeightCache::new();
        for h in 1..=50 {
            let w = cache.w(h).unwrap();
            assert_eq!(cache.w(-h).unwrap(), -&w);
            assert_eq!(w, weight_w(h).unwrap());
        }
    }

    #[test]
    fn weight_lambda_examples() {
        assert_eq!(weight_lambda(&Partition::empty()), RationalFunction::one());
        assert_eq!(weight_lambda(&"1".parse().unwrap()), weight_w(1).unwrap());
        let two = rf(&[1, 1, 1, 1], &[1, -1, -1, 1]); // (1+q)(1+q^2)/((1-q)(1-q^2))
        assert_eq!(weight_lambda(&"2".parse().unwrap()), two);
        // same as the cell-by-cell product
        let lam: Partition = "4,2,1".parse().unwrap();
        let prod = lam
            .hooks()
            .into_iter()
            .fold(RationalFunction::one(), |acc, h| &acc * &weight_w(h as i64).unwrap());
        assert_eq!(weight_lambda(&lam), prod);
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(1).unwrap(), RationalFunction::one());
        let r2 = RationalFunction::from_polynomial(Polynomial::from_coeffs(alloc::vec![rat(1, 4), rat(1, 4)]));
        assert_eq!(rho(2).unwrap(), r2);
        assert_eq!(rho(3).unwrap(), rf(&[1, 3], &[9, 3]));
        assert!(rho(0).is_err());
        assert!(rho(-2).is_err());
        // specialisations: 1/h^2 at z = 0, 1/h at z = 1
        for h in 1..=15i64 {
            let r = rho(h).unwrap();
            assert_eq!(r.eval(&int(0)).unwrap(), rat(1, h * h));
            assert_eq!(r.eval(&int(1)).unwrap(), rat(1, h));
        }
    }

    #[test]
    fn phi_matches_termwise_addition() {
        for n in 0..=7 {
            let generic = partitions_of(n).iter().fold(RationalFunction::zero(), |acc, lam| {
                let f = BigRational::from_integer(f_lambda(lam).unwrap().into());
                &acc + &weight_lambda(lam).scale(&f)
            });
            assert_eq!(phi_n(n), generic, "n = {n}");
        }
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_n(0), RationalFunction::one());
        assert_eq!(phi_n(1), weight_w(1).unwrap());
        assert_eq!(phi_n(2), rf(&[2, 0, 2], &[1, -2, 1]));
    }
}
