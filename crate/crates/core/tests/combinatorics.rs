use std::collections::BTreeSet;

use hookforge_core::exact::{factorial, BigRational, BigUint};
use hookforge_core::involutions::{
    enumerate_involutions, g_poly, g_poly_oracle, involution_count, psi_enumerated, psi_recursive,
    verify_involution_egf, ENUMERATION_BOUND,
};
use hookforge_core::partitions::{f_lambda, partitions_of, Partition};
use hookforge_core::tableaux::{enumerate_syt, enumerate_syt_of_size, forward_row_insert, reverse_row_insert};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    BigRational::new(rng.gen_range(-50i64..=50).into(), rng.gen_range(1i64..=9).into())
}

#[test]
fn hook_formula_matches_enumeration() {
    for n in 0..=12 {
        for lam in partitions_of(n) {
            let counted = enumerate_syt(&lam).len();
            assert_eq!(f_lambda(&lam).unwrap(), BigUint::from(counted), "shape {lam}");
        }
    }
}

#[test]
fn squares_of_f_sum_to_factorial() {
    for n in 0..=12 {
        let total: BigUint = partitions_of(n).iter().map(|l| f_lambda(l).unwrap().pow(2)).sum();
        assert_eq!(total, factorial(n), "n = {n}");
    }
}

#[test]
fn corner_profiles_interlace_and_cells_round_trip() {
    for n in 0..=14 {
        for lam in partitions_of(n) {
            let prof = lam.corner_profile();
            assert!(prof.is_interlaced(), "shape {lam}");
            assert_eq!(prof.outer_contents.len(), prof.inner_contents.len() + 1);
            for cell in lam.addable_cells() {
                let bigger = lam.add_cell(cell).unwrap();
                assert_eq!(bigger.remove_cell(cell).unwrap(), lam);
            }
        }
    }
}

#[test]
fn syt_count_equals_involution_count() {
    for n in 0..=10 {
        let syt = enumerate_syt_of_size(n).len();
        let by_shape: BigUint = partitions_of(n).iter().map(|l| f_lambda(l).unwrap()).sum();
        assert_eq!(BigUint::from(syt), by_shape);
        assert_eq!(involution_count(n), (syt as u64).into(), "n = {n}");
    }
}

#[test]
fn reverse_insertion_is_a_bijection() {
    for n in 1..=8 {
        let mut image = BTreeSet::new();
        for p in enumerate_syt_of_size(n) {
            for x in p.shape().removable_cells() {
                let (pm, i) = reverse_row_insert(&p, x).unwrap();
                assert_eq!(forward_row_insert(&pm, i).unwrap(), (p.clone(), x));
                assert!(image.insert((pm, i)), "collision for n = {n}");
            }
        }
        assert_eq!(image.len(), n * enumerate_syt_of_size(n - 1).len());
    }
}

#[test]
fn shapes_from_strings() {
    let lam: Partition = "4,2,2,1".parse().unwrap();
    assert_eq!(lam.size(), 9);
    assert_eq!(lam.conjugate().to_string(), "4,3,1,1");
    assert!("2,3".parse::<Partition>().is_err());
}

#[test]
fn involutions_and_their_statistics() {
    for n in 0..=ENUMERATION_BOUND.min(10) {
        let all = enumerate_involutions(n);
        assert_eq!(involution_count(n), (all.len() as u64).into());
        for pi in &all {
            let s = pi.cycle_stats();
            assert_eq!(s.alpha1 + 2 * s.alpha2, n);
        }
    }
}

#[test]
fn g_poly_matches_enumeration_at_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let (u1, u2) = (random_rational(&mut rng), random_rational(&mut rng));
        for n in 0..=8 {
            assert_eq!(g_poly(n, &u1, &u2), g_poly_oracle(n, &u1, &u2), "n = {n}, u = ({u1}, {u2})");
        }
    }
}

#[test]
fn involution_egf_at_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..10 {
        let (u1, u2) = (random_rational(&mut rng), random_rational(&mut rng));
        assert!(verify_involution_egf(8, &u1, &u2).unwrap(), "u = ({u1}, {u2})");
    }
}

#[test]
fn psi_recursion_matches_enumeration() {
    for n in 0..=ENUMERATION_BOUND {
        assert_eq!(Some(psi_recursive(n)), psi_enumerated(n), "n = {n}");
    }
    assert_eq!(psi_enumerated(ENUMERATION_BOUND + 1), None);
}
