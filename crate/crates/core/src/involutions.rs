//! Involutions of `{1..n}`, their cycle statistics, and the generating
//! polynomial `g_n(u1, u2) = Σ u1^{fixed points} u2^{2-cycles}`.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, series_exp, BigRational, PowerSeries, RationalFunction};
use crate::identity::weight_w;

/// Largest `n` for which involutions are enumerated explicitly
/// (`I(12) = 140152`).
pub const ENUMERATION_BOUND: usize = 12;

/// A permutation equal to its own inverse, in one-line notation (1-based).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Involution {
    images: Vec<usize>,
}

/// Fixed points and 2-cycles of an involution; `alpha1 + 2 alpha2 = n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycleStats {
    pub alpha1: usize,
    pub alpha2: usize,
}

impl Involution {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        for (i, &v) in images.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::InvalidInvolution("image out of range".to_string()));
            }
            if images[v - 1] != i + 1 {
                return Err(Error::InvalidInvolution("not its own inverse".to_string()));
            }
        }
        Ok(Involution { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn cycle_stats(&self) -> CycleStats {
        let alpha1 = self.images.iter().enumerate().filter(|&(i, &v)| v == i + 1).count();
        CycleStats {
            alpha1,
            alpha2: (self.images.len() - alpha1) / 2,
        }
    }
}

/// All involutions of `{1..n}`: point `n` is either fixed or paired with
/// some `j < n`, recursively.
pub fn enumerate_involutions(n: usize) -> Vec<Involution> {
    fn rec(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out: Vec<Vec<usize>> = rec(n - 1)
            .into_iter()
            .map(|mut p| {
                p.push(n);
                p
            })
            .collect();
        if n >= 2 {
            for j in 1..n {
                // pair (j, n) with an involution of the other n - 2 points
                for small in rec(n - 2) {
                    let relabel = |v: usize| if v >= j { v + 1 } else { v };
                    let mut images = vec![0; n];
                    for (i, &v) in small.iter().enumerate() {
                        images[relabel(i + 1) - 1] = relabel(v);
                    }
                    images[j - 1] = n;
                    images[n - 1] = j;
                    out.push(images);
                }
            }
        }
        out
    }
    rec(n).into_iter().map(|images| Involution { images }).collect()
}

/// `I(n)` from the recurrence `I(n) = I(n-1) + (n-1) I(n-2)`.
pub fn involution_count(n: usize) -> BigInt {
    let (mut prev, mut cur) = (BigInt::one(), BigInt::one());
    for k in 1..n {
        let next = &cur + &prev * BigInt::from(k);
        prev = cur;
        cur = next;
    }
    cur
}

/// `g_n(u1, u2)` from `g_{n+1} = u1 g_n + n u2 g_{n-1}`, `g_0 = 1`, `g_1 = u1`.
pub fn g_poly(n: usize, u1: &BigRational, u2: &BigRational) -> BigRational {
    let mut prev = BigRational::one();
    if n == 0 {
        return prev;
    }
    let mut cur = u1.clone();
    for k in 1..n {
        let next = u1 * &cur + BigRational::from_integer(BigInt::from(k)) * u2 * &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `g_n(u1, u2)` summed directly over [`enumerate_involutions`].
pub fn g_poly_oracle(n: usize, u1: &BigRational, u2: &BigRational) -> BigRational {
    enumerate_involutions(n)
        .iter()
        .map(|pi| {
            let s = pi.cycle_stats();
            num_traits::pow(u1.clone(), s.alpha1) * num_traits::pow(u2.clone(), s.alpha2)
        })
        .fold(BigRational::zero(), |acc, t| acc + t)
}

/// Compares the coefficients of `exp(u1 t + u2 t^2/2)` up to `t^order` with
/// `g_n(u1, u2) / n!`.
pub fn verify_involution_egf(order: usize, u1: &BigRational, u2: &BigRational) -> Result<bool> {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let f = PowerSeries::from_coeffs(order, [BigRational::zero(), u1.clone(), u2 * &half]);
    let e = series_exp(&f)?;
    Ok((0..=order).all(|n| {
        let expected = g_poly(n, u1, u2) / BigRational::from_integer(factorial(n).into());
        e.coeff(n) == Some(&expected)
    }))
}

/// `ψ_n` by `ψ_{n+1} = w(1) ψ_n + n ψ_{n-1}`.
pub fn psi_recursive(n: usize) -> RationalFunction {
    let w1 = weight_w(1).expect("w(1) is defined");
    let mut prev = RationalFunction::one();
    if n == 0 {
        return prev;
    }
    let mut cur = w1.clone();
    for k in 1..n {
        let next = &(&w1 * &cur) + &prev.scale(&BigRational::from_integer(BigInt::from(k)));
        prev = cur;
        cur = next;
    }
    cur
}

/// `ψ_n = Σ_{π ∈ Inv(n)} w(1)^{fixed points of π}` by enumeration; `None`
/// above [`ENUMERATION_BOUND`].
pub fn psi_enumerated(n: usize) -> Option<RationalFunction> {
    if n > ENUMERATION_BOUND {
        return None;
    }
    let mut by_fixed = vec![0u64; n + 1];
    for pi in enumerate_involutions(n) {
        by_fixed[pi.cycle_stats().alpha1] += 1;
    }
    let w1 = weight_w(1).expect("w(1) is defined");
    let mut total = RationalFunction::zero();
    for (a1, &count) in by_fixed.iter().enumerate() {
        if count > 0 {
            let term = w1.pow(a1 as u32).scale(&BigRational::from_integer(BigInt::from(count)));
            total = &total + &term;
        }
    }
    Some(total)
}

/// `ψ_n` in canonical form. The recursion and, up to
/// [`ENUMERATION_BOUND`], direct enumeration must agree.
pub fn psi_n(n: usize) -> Result<RationalFunction> {
    let rec = psi_recursive(n);
    if let Some(direct) = psi_enumerated(n) {
        if direct != rec {
            return Err(Error::Internal(alloc::format!(
                "psi_{n}: recursion {} != enumeration {}",
                rec.display("q"),
                direct.display("q")
            )));
        }
    }
    Ok(rec)
}

impl fmt::Display for Involution {
    /// One-line notation, e.g. `2 1 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Involution {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split_whitespace()
            .map(|v| v.parse::<usize>().map_err(|_| Error::InvalidInvolution(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Involution::new(images)
    }
}
