use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::forward_owned_binop;
use super::{poly_gcd, BigRational, Polynomial};
use crate::error::{Error, Result};

/// A quotient of polynomials in canonical form.
///
/// The numerator and denominator are coprime, the denominator is monic, and
/// zero is `0/1`. Two equal functions therefore have identical fields, so
/// `==` is exact equality of rational functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

/// Reduces `num/den` to canonical form.
pub fn ratfunc_normalize(num: Polynomial, den: Polynomial) -> Result<RationalFunction> {
    RationalFunction::new(num, den)
}

/// Exact value of `f` at `point`; `Error::Pole` where the denominator vanishes.
pub fn ratfunc_eval(f: &RationalFunction, point: &BigRational) -> Result<BigRational> {
    f.eval(point)
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = poly_gcd(&num, &den)?;
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (exact(&num, &g), exact(&den, &g))
        };
        Ok(Self::from_coprime(num, den))
    }

    /// Builds from a coprime pair, only fixing the denominator to be monic.
    pub(crate) fn from_coprime(num: Polynomial, den: Polynomial) -> Self {
        let lc = den.leading_coeff().expect("nonzero denominator").clone();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.recip();
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_polynomial(Polynomial::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_polynomial(Polynomial::constant(c))
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The numerator when the function is a polynomial.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            num: self.num.scale(factor),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        // coprime factors stay coprime under powers
        RationalFunction {
            num: self.num.pow(exp),
            den: self.den.pow(exp),
        }
    }

    pub fn eval(&self, point: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.num.eval(point) / d)
    }

    /// Equality decided by cross-multiplication instead of by comparing
    /// canonical forms.
    pub fn eq_cross(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// Substitutes the rational function `value` for the indeterminate.
    pub fn compose(&self, value: &RationalFunction) -> Result<Self> {
        let num = substitute(&self.num, value);
        let den = substitute(&self.den, value);
        // both share the factor value.den^max(deg); it cancels in the quotient
        let (nn, nd) = num;
        let (dn, dd) = den;
        let top = &nn * &dd;
        let bottom = &dn * &nd;
        if bottom.is_zero() {
            return Err(Error::Pole);
        }
        Self::new(top, bottom)
    }

    /// Renders as `(num)/(den)` with a named indeterminate.
    pub fn display<'a>(&'a self, var: &'a str) -> RatFuncDisplay<'a> {
        RatFuncDisplay { f: self, var }
    }
}

/// `p(u/v)` as the pair `(sum p_k u^k v^(d-k), v^d)`.
fn substitute(p: &Polynomial, value: &RationalFunction) -> (Polynomial, Polynomial) {
    let Some(d) = p.degree() else {
        return (Polynomial::zero(), Polynomial::one());
    };
    let u = value.num();
    let v = value.den();
    let mut upow = Polynomial::one();
    let mut vpows = alloc::vec::Vec::with_capacity(d + 1);
    let mut acc = Polynomial::one();
    for _ in 0..=d {
        vpows.push(acc.clone());
        acc = &acc * v;
    }
    let mut total = Polynomial::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            total = &total + &(&upow * &vpows[d - k]).scale(c);
        }
        upow = &upow * u;
    }
    (total, vpows[d].clone())
}

fn exact(a: &Polynomial, b: &Polynomial) -> Polynomial {
    a.exact_div(b)
        .expect("nonzero divisor")
        .expect("gcd divides its arguments")
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RationalFunction::from_polynomial(&self.num + &rhs.num);
            }
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone())
                .expect("nonzero denominator");
        }
        // a/b + c/d with g = gcd(b, d): only factors of g can cancel afterwards
        let g = poly_gcd(&self.den, &rhs.den).expect("nonzero denominators");
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            if num.is_zero() {
                return RationalFunction::zero();
            }
            return RationalFunction::from_coprime(num, &self.den * &rhs.den);
        }
        let b_g = exact(&self.den, &g);
        let d_g = exact(&rhs.den, &g);
        let num = &(&self.num * &d_g) + &(&rhs.num * &b_g);
        if num.is_zero() {
            return RationalFunction::zero();
        }
        let h = poly_gcd(&num, &g).expect("nonzero");
        let (num, g_h) = if h.is_one() {
            (num, g)
        } else {
            (exact(&num, &h), exact(&g, &h))
        };
        RationalFunction::from_coprime(num, &(&b_g * &d_g) * &g_h)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        // cross-cancel: (a/b)(c/d) = (a/g1)(c/g2) / ((b/g2)(d/g1))
        let cancel = |n: &Polynomial, d: &Polynomial| -> (Polynomial, Polynomial) {
            if n.is_constant() || d.is_constant() {
                return (n.clone(), d.clone());
            }
            let g = poly_gcd(n, d).expect("nonzero");
            if g.is_one() {
                (n.clone(), d.clone())
            } else {
                (exact(n, &g), exact(d, &g))
            }
        };
        let (a, d) = cancel(&self.num, &rhs.den);
        let (c, b) = cancel(&rhs.num, &self.den);
        RationalFunction::from_coprime(&a * &c, &b * &d)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    /// Panics on division by zero; see [`RationalFunction::checked_div`].
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

forward_owned_binop!(RationalFunction, Add, add);
forward_owned_binop!(RationalFunction, Sub, sub);
forward_owned_binop!(RationalFunction, Mul, mul);
forward_owned_binop!(RationalFunction, Div, div);

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_polynomial(p)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({})", self.display("x"))
    }
}

pub struct RatFuncDisplay<'a> {
    f: &'a RationalFunction,
    var: &'a str,
}

impl fmt::Display for RatFuncDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.f.den.is_one() {
            write!(f, "{}", self.f.num.display(self.var))
        } else {
            write!(
                f,
                "({})/({})",
                self.f.num.display(self.var),
                self.f.den.display(self.var)
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use alloc::format;
    use alloc::string::ToString;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    #[test]
    fn normalize_examples() {
        // (q^2 - 1)/(q - 1) -> q + 1
        let f = ratfunc_normalize(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!((f.num(), f.den()), (&p(&[1, 1]), &p(&[1])));
        // (1 + q)/(1 - q) -> (-1 - q)/(q - 1)
        let f = ratfunc_normalize(p(&[1, 1]), p(&[1, -1])).unwrap();
        assert_eq!((f.num(), f.den()), (&p(&[-1, -1]), &p(&[-1, 1])));
        // 0/(q^3 + 2) -> 0/1
        let f = ratfunc_normalize(Polynomial::zero(), p(&[2, 0, 0, 1])).unwrap();
        assert_eq!((f.num(), f.den()), (&Polynomial::zero(), &p(&[1])));
        assert_eq!(
            ratfunc_normalize(p(&[1]), Polynomial::zero()).unwrap_err().to_string(),
            "division by zero"
        );
    }

    #[test]
    fn eval_examples() {
        let w1 = ratfunc_normalize(p(&[1, 1]), p(&[1, -1])).unwrap();
        assert_eq!(ratfunc_eval(&w1, &rat(1, 2)).unwrap(), int(3));
        let f = RationalFunction::from_polynomial(p(&[1, 1]));
        assert_eq!(ratfunc_eval(&f, &int(0)).unwrap(), int(1));
        let err = ratfunc_eval(&w1, &int(1)).unwrap_err();
        assert_eq!(err, Error::Pole);
        assert_eq!(err.to_string(), "pole");
    }

    #[test]
    fn arithmetic_stays_canonical() {
        let a = ratfunc_normalize(p(&[1]), p(&[-1, 1])).unwrap(); // 1/(q-1)
        let b = ratfunc_normalize(p(&[1]), p(&[1, 1])).unwrap(); // 1/(q+1)
        let s = &a + &b; // 2q/(q^2-1)
        assert_eq!((s.num(), s.den()), (&p(&[0, 2]), &p(&[-1, 0, 1])));
        let d = &a - &a;
        assert!(d.is_zero());
        assert_eq!(d.den(), &p(&[1]));
        let prod = &s * &ratfunc_normalize(p(&[-1, 0, 1]), p(&[0, 1])).unwrap();
        assert_eq!(prod, RationalFunction::constant(int(2)));
        // shared factor in denominators: 1/(q(q-1)) + 1/(q(q+1)) = 2/(q^2-1)
        let c = ratfunc_normalize(p(&[1]), p(&[0, -1, 1])).unwrap();
        let e = ratfunc_normalize(p(&[1]), p(&[0, 1, 1])).unwrap();
        assert_eq!(&c + &e, ratfunc_normalize(p(&[2]), p(&[-1, 0, 1])).unwrap());
    }

    #[test]
    fn compose_with_rational_function() {
        // f(z) = (1 + z)/4 at z = ((1-q)/(1+q))^2 equals (1 + q^2)/(2 (1+q)^2)
        let f = RationalFunction::from_polynomial(Polynomial::from_coeffs(alloc::vec![rat(1, 4), rat(1, 4)]));
        let s = ratfunc_normalize(p(&[1, -1]), p(&[1, 1])).unwrap();
        let got = f.compose(&s.pow(2)).unwrap();
        let want = ratfunc_normalize(p(&[1, 0, 1]), p(&[2, 4, 2])).unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn display_forms() {
        let w1 = ratfunc_normalize(p(&[1, 1]), p(&[1, -1])).unwrap();
        assert_eq!(format!("{}", w1.display("q")), "(-q - 1)/(q - 1)");
        assert_eq!(format!("{}", RationalFunction::one().display("q")), "1");
    }
}
