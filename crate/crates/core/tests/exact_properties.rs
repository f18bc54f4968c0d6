use hookforge_core::exact::{
    poly_gcd, poly_gcd_euclid, series_exp, sum_of_products, BigInt, BigRational, BinomialProduct,
    Polynomial, PowerSeries, RationalFunction,
};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = BigRational> {
    (-1000i64..=1000, 1i64..=60).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn nonzero_rational() -> impl Strategy<Value = BigRational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn polynomial(max_len: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-30i64..=30, 1i64..=6), 0..=max_len).prop_map(|cs| {
        Polynomial::from_coeffs(
            cs.into_iter()
                .map(|(n, d)| BigRational::new(n.into(), d.into()))
                .collect(),
        )
    })
}

fn nonzero_polynomial(max_len: usize) -> impl Strategy<Value = Polynomial> {
    polynomial(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (polynomial(5), nonzero_polynomial(5)).prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

fn is_canonical(f: &RationalFunction) -> bool {
    if f.is_zero() {
        return f.den().is_one();
    }
    f.den().leading_coeff().is_some_and(One::is_one)
        && poly_gcd(f.num(), f.den()).unwrap().is_one()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &(-a.clone()), BigRational::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip(), BigRational::one());
        }
        // stored in lowest terms with a positive denominator
        prop_assert!(a.denom().is_positive());
        prop_assert!(a.numer().gcd(a.denom()).is_one());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn ratfunc_equality_two_ways(f in ratfunc(), g in ratfunc(), c in nonzero_rational()) {
        prop_assert_eq!(f == g, f.eq_cross(&g));
        // the same value reached by a different route is the same representation
        let h = &(&f * &RationalFunction::constant(c.clone())) / &RationalFunction::constant(c);
        prop_assert!(h == f);
        prop_assert!(h.eq_cross(&f));
        let sum = &f + &g;
        prop_assert!(is_canonical(&sum));
        prop_assert!(is_canonical(&(&f * &g)));
        prop_assert_eq!(&sum - &g, f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn product_over_factor_is_exact(a in polynomial(8), b in nonzero_polynomial(6)) {
        let prod = &a * &b;
        prop_assert_eq!(prod.exact_div(&b).unwrap(), Some(a.clone()));
        let (q, r) = prod.div_rem(&b).unwrap();
        prop_assert_eq!(q, a.clone());
        prop_assert!(r.is_zero());
        let f = RationalFunction::new(prod, b).unwrap();
        prop_assert_eq!(f.as_polynomial(), Some(&a));
    }

    #[test]
    fn modular_gcd_matches_euclid(a in polynomial(6), b in polynomial(6), common in polynomial(4)) {
        let (a, b) = (&a * &common, &b * &common);
        prop_assume!(!(a.is_zero() && b.is_zero()));
        let fast = poly_gcd(&a, &b).unwrap();
        prop_assert_eq!(&fast, &poly_gcd_euclid(&a, &b).unwrap());
        if !fast.is_zero() {
            prop_assert!(a.exact_div(&fast).unwrap().is_some());
            prop_assert!(b.exact_div(&fast).unwrap().is_some());
        }
    }

    #[test]
    fn exp_of_negation_is_inverse(order in 1usize..=8, cs in prop::collection::vec(rational(), 8)) {
        let f = PowerSeries::from_coeffs(
            order,
            std::iter::once(BigRational::zero()).chain(cs),
        );
        let prod = series_exp(&f).unwrap().mul(&series_exp(&f.neg()).unwrap()).unwrap();
        prop_assert_eq!(prod, PowerSeries::one(order));
    }

    #[test]
    fn binomial_sums_match_generic_addition(
        terms in prop::collection::vec(
            (-5i64..=5, prop::collection::vec((1usize..=9, -2i64..=2), 0..4)),
            1..5,
        )
    ) {
        let products: Vec<BinomialProduct> = terms
            .iter()
            .map(|(c, exps)| {
                let mut p = BinomialProduct::constant(BigInt::from(*c));
                for &(m, e) in exps {
                    p.mul_binomial(m, e);
                }
                p
            })
            .collect();
        let generic = terms.iter().fold(RationalFunction::zero(), |acc, (c, exps)| {
            let mut term = RationalFunction::constant(BigRational::from_integer((*c).into()));
            for &(m, e) in exps {
                let mut c = vec![0i64; m + 1];
                c[0] = 1;
                c[m] = -1;
                let b = RationalFunction::from_polynomial(Polynomial::from_i64s(&c));
                let b = if e >= 0 { b.pow(e as u32) } else { b.recip().unwrap().pow((-e) as u32) };
                term = &term * &b;
            }
            &acc + &term
        });
        prop_assert_eq!(sum_of_products(&products).unwrap(), generic);
    }
}
