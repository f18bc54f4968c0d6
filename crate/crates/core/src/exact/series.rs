use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{BigRational, Coefficient};
use crate::error::{Error, Result};

/// Power series in `t` truncated after `t^order`.
///
/// Always holds exactly `order + 1` coefficients; arithmetic never looks past
/// `t^order`.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries<C> {
    order: usize,
    coeffs: Vec<C>,
}

impl<C: Coefficient> PowerSeries<C> {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            order,
            coeffs: (0..=order).map(|_| C::zero()).collect(),
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = C::one();
        s
    }

    /// Takes the given coefficients of `t^0, t^1, ...`; missing ones are zero
    /// and those beyond `order` are dropped.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = C>) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `t^k`; `None` beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Option<&C> {
        self.coeffs.get(k)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(PowerSeries {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(PowerSeries {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub(b)).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        PowerSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(Coefficient::neg).collect(),
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        PowerSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.scale(factor)).collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = Self::zero(self.order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=self.order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] = out.coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    /// `exp(self)`; see [`series_exp`].
    pub fn exp(&self) -> Result<Self> {
        series_exp(self)
    }
}

/// `sum_{k=0}^{N} f^k / k!` truncated at the order `N` of `f`.
///
/// `f` must have zero constant term, so `f^k` vanishes below `t^k` and the
/// truncated sum is the exact truncation of `e^f`.
pub fn series_exp<C: Coefficient>(f: &PowerSeries<C>) -> Result<PowerSeries<C>> {
    if !f.coeffs[0].is_zero() {
        return Err(Error::NonZeroConstantTerm);
    }
    let mut term = PowerSeries::one(f.order);
    let mut total = term.clone();
    for k in 1..=f.order {
        term = term.mul(f)?.scale(&BigRational::new(BigInt::from(1), BigInt::from(k)));
        total = total.add(&term)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, Polynomial};
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn exp_of_t() {
        let t = PowerSeries::from_coeffs(3, vec![int(0), int(1)]);
        let e = series_exp(&t).unwrap();
        assert_eq!(e.coeffs(), &[int(1), int(1), rat(1, 2), rat(1, 6)]);
    }

    #[test]
    fn exp_over_z_polynomials() {
        // t + z t^2/2 to order 2: 1 + t + (1/2 + z/2) t^2
        let half_z = Polynomial::from_coeffs(vec![int(0), rat(1, 2)]);
        let f = PowerSeries::from_coeffs(2, vec![Polynomial::zero(), Polynomial::one(), half_z]);
        let e = series_exp(&f).unwrap();
        assert_eq!(e.coeff(0).unwrap(), &Polynomial::one());
        assert_eq!(e.coeff(1).unwrap(), &Polynomial::one());
        assert_eq!(e.coeff(2).unwrap(), &Polynomial::from_coeffs(vec![rat(1, 2), rat(1, 2)]));
    }

    #[test]
    fn exp_of_zero_and_errors() {
        let z: PowerSeries<BigRational> = PowerSeries::zero(5);
        assert_eq!(series_exp(&z).unwrap(), PowerSeries::one(5));
        let bad = PowerSeries::from_coeffs(2, vec![int(1)]);
        let err = series_exp(&bad).unwrap_err();
        assert_eq!(err.to_string(), "exp requires zero constant term");
        let a: PowerSeries<BigRational> = PowerSeries::zero(2);
        let b = PowerSeries::zero(3);
        assert_eq!(a.mul(&b), Err(Error::OrderMismatch(2, 3)));
    }
}
