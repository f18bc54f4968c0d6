//! Multi-modular gcd of integer polynomials.
//!
//! Images of the gcd are computed modulo word-sized primes, combined by
//! Chinese remaindering until the symmetric lift stabilizes, and the lift is
//! accepted only after exact trial division over the integers.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Primes just below 2^62, in descending order.
struct Primes {
    next: u64,
}

impl Primes {
    fn new() -> Self {
        Primes { next: (1u64 << 62) - 1 }
    }
}

impl Iterator for Primes {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        while self.next > 3 {
            let candidate = self.next;
            self.next -= 2;
            if is_prime(candidate) {
                return Some(candidate);
            }
        }
        None
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit integers.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn reduce(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64")
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// `a mod b` over GF(p); `b` must be nonzero and trimmed.
fn rem_mod(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let lc_inv = inv_mod(b[db], p);
    while a.len() > db {
        let top = *a.last().unwrap();
        if top != 0 {
            let factor = mul_mod(top, lc_inv, p);
            let shift = a.len() - 1 - db;
            for (j, &bc) in b.iter().enumerate() {
                let sub = mul_mod(factor, bc, p);
                let slot = &mut a[shift + j];
                *slot = if *slot >= sub { *slot - sub } else { *slot + p - sub };
            }
        }
        a.pop();
        trim(&mut a);
    }
    a
}

fn monic_gcd_mod(a: Vec<u64>, b: Vec<u64>, p: u64) -> Vec<u64> {
    let (mut x, mut y) = (a, b);
    while !y.is_empty() {
        let r = rem_mod(x, &y, p);
        x = y;
        y = r;
    }
    let inv = inv_mod(*x.last().expect("nonzero gcd"), p);
    x.iter().map(|&c| mul_mod(c, inv, p)).collect()
}

/// Exact quotient `a / b` over the integers, or `None` if `b` does not divide `a`.
fn divides_exactly(a: &[BigInt], b: &[BigInt]) -> bool {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return a.iter().all(Zero::is_zero);
    }
    let lc = &b[db];
    let mut rem: Vec<BigInt> = a.to_vec();
    for k in (0..=a.len() - b.len()).rev() {
        let top = &rem[k + db];
        if top.is_zero() {
            continue;
        }
        let (factor, r) = top.div_rem(lc);
        if !r.is_zero() {
            return false;
        }
        for (j, bc) in b.iter().enumerate() {
            rem[k + j] -= &factor * bc;
        }
    }
    rem.iter().all(Zero::is_zero)
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if v.last().is_some_and(Signed::is_negative) {
        g = -g;
    }
    v.into_iter().map(|c| c / &g).collect()
}

/// Gcd of two primitive integer polynomials of positive degree, returned
/// primitive with a positive leading coefficient.
pub(crate) fn gcd_integer_poly(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let lc_a = a.last().expect("nonzero");
    let lc_b = b.last().expect("nonzero");
    let lc_gcd = lc_a.gcd(lc_b);

    let mut modulus = BigInt::one();
    let mut lifted: Vec<BigInt> = Vec::new();
    let mut best_degree = usize::MAX;

    for p in Primes::new() {
        if reduce(lc_a, p) == 0 || reduce(lc_b, p) == 0 {
            continue;
        }
        let ap: Vec<u64> = a.iter().map(|c| reduce(c, p)).collect();
        let bp: Vec<u64> = b.iter().map(|c| reduce(c, p)).collect();
        let g = monic_gcd_mod(ap, bp, p);
        let deg = g.len() - 1;
        if deg == 0 {
            return vec![BigInt::one()];
        }
        if deg > best_degree {
            // unlucky prime
            continue;
        }
        let scale = reduce(&lc_gcd, p);
        let image: Vec<u64> = g.iter().map(|&c| mul_mod(c, scale, p)).collect();
        let pb = BigInt::from(p);

        if deg < best_degree {
            best_degree = deg;
            modulus = pb;
            lifted = image.into_iter().map(BigInt::from).collect();
            continue;
        }

        // Chinese remaindering: x ≡ lifted (mod modulus), x ≡ image (mod p).
        let m_inv = inv_mod(reduce(&modulus, p), p);
        let mut changed = false;
        let new_modulus = &modulus * &pb;
        let half = &new_modulus >> 1u32;
        let old_half = &modulus >> 1u32;
        for (h, &r) in lifted.iter_mut().zip(image.iter()) {
            let hp = reduce(h, p);
            let diff = if r >= hp { r - hp } else { r + p - hp };
            let t = mul_mod(diff, m_inv, p);
            let next = &*h + &modulus * BigInt::from(t);
            let sym_old = if *h > old_half { &*h - &modulus } else { h.clone() };
            let sym_new = if next > half { &next - &new_modulus } else { next.clone() };
            if sym_old != sym_new {
                changed = true;
            }
            *h = next;
        }
        modulus = new_modulus;
        if changed {
            continue;
        }
        let half = &modulus >> 1u32;
        let candidate: Vec<BigInt> = lifted
            .iter()
            .map(|h| if *h > half { h - &modulus } else { h.clone() })
            .collect();
        let candidate = primitive(candidate);
        if divides_exactly(a, &candidate) && divides_exactly(b, &candidate) {
            return candidate;
        }
    }
    unreachable!("prime supply exhausted")
}
