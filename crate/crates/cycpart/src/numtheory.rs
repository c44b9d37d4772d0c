//! Elementary number theory, all exact: gcd, 2-adic valuation, divisors,
//! Möbius, Euler totient, Ramanujan sums, big binomials, and the divisor
//! endomorphism d -> d/(u,d) with its preimage fibers.
//!
//! Scalar functions use machine integers; their results are bounded by their
//! inputs, so this is exact at the scales the crate targets. Counts that can
//! grow combinatorially are `ExactCount` (arbitrary precision).

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use std::collections::BTreeSet;
use std::fmt;

/// Arbitrary-precision non-negative count.
pub type ExactCount = BigUint;

/// Arbitrary-precision signed integer, used for Möbius-weighted sums.
pub type SignedExact = BigInt;

/// 2-adic valuation. `Infinity` is the valuation of 0 and compares greater
/// than every finite valuation.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Valuation {
    Finite(u32),
    Infinity,
}

impl Valuation {
    pub fn finite(self) -> Option<u32> {
        match self {
            Valuation::Finite(k) => Some(k),
            Valuation::Infinity => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(k) => write!(f, "{k}"),
            Valuation::Infinity => write!(f, "inf"),
        }
    }
}

/// Residue class n mod m, stored canonically with 0 <= value < m.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ResidueClass {
    modulus: u64,
    value: u64,
}

impl ResidueClass {
    pub fn new(n: i64, m: u64) -> Self {
        ResidueClass {
            modulus: m,
            value: residue(n, m),
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }
}

impl fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// Canonical representative of n mod m in [0, m).
pub fn residue(n: i64, m: u64) -> u64 {
    assert!(m >= 1, "modulus must be positive");
    (n as i128).rem_euclid(m as i128) as u64
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Non-negative gcd; gcd(0, 0) = 0.
pub fn gcd(a: i64, b: i64) -> u64 {
    gcd_u64(a.unsigned_abs(), b.unsigned_abs())
}

/// 2-adic valuation of n, with v2(0) = Infinity.
pub fn v2(n: i64) -> Valuation {
    if n == 0 {
        Valuation::Infinity
    } else {
        Valuation::Finite(n.unsigned_abs().trailing_zeros())
    }
}

/// Prime factorization as (prime, exponent) pairs in ascending prime order.
pub fn factorization(n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorization requires n >= 1");
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All positive divisors of n in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors requires n >= 1");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Möbius function: 0 on non-squarefree n, otherwise (-1)^(number of primes).
pub fn mobius(n: u64) -> i64 {
    assert!(n >= 1, "mobius requires n >= 1");
    let f = factorization(n);
    if f.iter().any(|&(_, e)| e > 1) {
        return 0;
    }
    if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Euler totient.
pub fn totient(n: u64) -> u64 {
    assert!(n >= 1, "totient requires n >= 1");
    let mut out = n;
    for (p, _) in factorization(n) {
        out = out / p * (p - 1);
    }
    out
}

/// Ramanujan sum c_d(n): the sum of e^(2*pi*i*j*n/d) over j coprime with d.
/// Evaluated exactly by Hölder's formula mu(d/g) * phi(d) / phi(d/g) with
/// g = gcd(d, n); in particular c_d(0) = phi(d).
pub fn ramanujan_sum(d: u64, n: i64) -> i64 {
    assert!(d >= 1, "ramanujan_sum requires d >= 1");
    let r = (n as i128).rem_euclid(d as i128) as u64;
    let g = gcd_u64(d, r);
    let dg = d / g;
    let phi_d = totient(d);
    let phi_dg = totient(dg);
    debug_assert_eq!(phi_d % phi_dg, 0);
    mobius(dg) * (phi_d / phi_dg) as i64
}

/// Binomial coefficient C(n, k), zero for k < 0 or k > n.
pub fn binomial(n: u64, k: i64) -> ExactCount {
    if k < 0 || k as u64 > n {
        return ExactCount::default();
    }
    let k = (k as u64).min(n - k as u64);
    let mut out = BigUint::one();
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

/// The divisor endomorphism d -> d / gcd(u, d) on the divisors of m.
pub fn divisor_endo(m: u64, u: u64, d: u64) -> u64 {
    assert!(m >= 1 && u >= 1, "divisor_endo requires m, u >= 1");
    assert!(d >= 1 && m % d == 0, "d must divide m");
    d / gcd_u64(u, d)
}

/// The fiber of the divisor endomorphism over dprime: every divisor d of m
/// with d / gcd(u, d) = dprime. Empty when dprime lies outside the image.
pub fn divisor_endo_preimage(m: u64, u: u64, dprime: u64) -> BTreeSet<u64> {
    assert!(m >= 1 && u >= 1 && dprime >= 1);
    divisors(m)
        .into_iter()
        .filter(|&d| divisor_endo(m, u, d) == dprime)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use proptest::prelude::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(6, 2), 2);
        assert_eq!(gcd(0, 5), 5);
        assert_eq!(gcd(5, 0), 5);
        assert_eq!(gcd(0, 0), 0);
        assert_eq!(gcd(-12, 8), 4);
        assert_eq!(gcd(12, -8), 4);
    }

    #[test]
    fn v2_values_and_ordering() {
        assert_eq!(v2(8), Valuation::Finite(3));
        assert_eq!(v2(12), Valuation::Finite(2));
        assert_eq!(v2(5), Valuation::Finite(0));
        assert_eq!(v2(-4), Valuation::Finite(2));
        assert_eq!(v2(0), Valuation::Infinity);
        assert!(Valuation::Infinity > Valuation::Finite(u32::MAX));
        assert!(Valuation::Finite(1) < Valuation::Finite(2));
    }

    #[test]
    fn residue_canonicalizes() {
        assert_eq!(residue(7, 5), 2);
        assert_eq!(residue(-1, 5), 4);
        assert_eq!(residue(0, 5), 0);
        assert_eq!(ResidueClass::new(-13, 6).value(), 5);
    }

    #[test]
    fn divisors_ascending() {
        assert_eq!(divisors(6), vec![1, 2, 3, 6]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(8), vec![1, 2, 4, 8]);
        assert_eq!(divisors(36), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
    }

    #[test]
    #[should_panic(expected = "divisors requires n >= 1")]
    fn divisors_rejects_zero() {
        divisors(0);
    }

    #[test]
    fn mobius_values() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(2), -1);
        assert_eq!(mobius(4), 0);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(12), 0);
    }

    #[test]
    fn totient_values() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(2), 1);
        assert_eq!(totient(6), 2);
        assert_eq!(totient(8), 4);
        assert_eq!(totient(9), 6);
    }

    #[test]
    fn ramanujan_examples() {
        assert_eq!(ramanujan_sum(1, 17), 1);
        assert_eq!(ramanujan_sum(4, 0), 2);
        assert_eq!(ramanujan_sum(4, 2), -2);
        assert_eq!(ramanujan_sum(4, 1), 0);
        assert_eq!(ramanujan_sum(2, 1), -1);
        assert_eq!(ramanujan_sum(6, 0), 2);
        // negative n reduces mod d first
        assert_eq!(ramanujan_sum(4, -2), -2);
    }

    #[test]
    fn ramanujan_row_sums_vanish() {
        // sum over a full period is 0 except for d = 1
        for d in 1u64..=200 {
            let s: i64 = (0..d as i64).map(|n| ramanujan_sum(d, n)).sum();
            assert_eq!(s, i64::from(d == 1), "row sum failed at d={d}");
        }
    }

    #[test]
    fn ramanujan_matches_exponential_sum() {
        for d in 1u64..=200 {
            let coprime: Vec<u64> = (1..=d).filter(|&j| gcd_u64(j, d) == 1).collect();
            for n in (0..=200i64).step_by(7).chain([1, 199]) {
                let mut acc = Complex64::new(0.0, 0.0);
                for &j in &coprime {
                    let angle = 2.0 * std::f64::consts::PI
                        * ((j as i128 * n as i128).rem_euclid(d as i128) as f64)
                        / d as f64;
                    acc += Complex64::new(angle.cos(), angle.sin());
                }
                let exact = ramanujan_sum(d, n) as f64;
                assert!(
                    (acc.im).abs() < 1e-6 && (acc.re - exact).abs() < 1e-6,
                    "c_{d}({n}): got {acc}, want {exact}"
                );
            }
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(6, 2), big(15));
        assert_eq!(binomial(8, 4), big(70));
        assert_eq!(binomial(5, 0), big(1));
        assert_eq!(binomial(5, 5), big(1));
        assert_eq!(binomial(5, -1), big(0));
        assert_eq!(binomial(5, 7), big(0));
        assert_eq!(binomial(0, 0), big(1));
        // C(64, 32) needs more than 64 bits
        assert_eq!(
            binomial(64, 32).to_string(),
            "1832624140942590534"
        );
    }

    #[test]
    fn divisor_endo_examples() {
        assert_eq!(divisor_endo(12, 2, 4), 2);
        assert_eq!(divisor_endo(12, 2, 3), 3);
        assert_eq!(divisor_endo(12, 2, 12), 6);
        // u = 1 is the identity
        for d in divisors(36) {
            assert_eq!(divisor_endo(36, 1, d), d);
        }
    }

    #[test]
    fn divisor_endo_image_is_divisors_of_quotient() {
        for m in 1u64..=60 {
            for u in 1u64..=12 {
                let image: BTreeSet<u64> =
                    divisors(m).into_iter().map(|d| divisor_endo(m, u, d)).collect();
                let expect: BTreeSet<u64> =
                    divisors(m / gcd_u64(u, m)).into_iter().collect();
                assert_eq!(image, expect, "image mismatch at m={m} u={u}");
            }
        }
    }

    #[test]
    fn divisor_endo_preimage_examples() {
        let pre: Vec<u64> = divisor_endo_preimage(12, 2, 3).into_iter().collect();
        assert_eq!(pre, vec![3, 6]);
        assert!(divisor_endo_preimage(12, 2, 5).is_empty());
        assert_eq!(
            divisor_endo_preimage(12, 8, 3).into_iter().collect::<Vec<_>>(),
            vec![3, 6, 12]
        );
    }

    /// Product-form description of a fiber: with u_perp the full power of
    /// every prime of u coprime with dprime and u_par = u / u_perp, the fiber
    /// over an image point dprime is { dp * u_par * dprime : dp | (m, u_perp) }.
    fn preimage_by_structure(m: u64, u: u64, dprime: u64) -> BTreeSet<u64> {
        let mut u_perp = 1u64;
        for (p, e) in factorization(u) {
            if dprime % p != 0 {
                u_perp *= p.pow(e);
            }
        }
        let u_par = u / u_perp;
        divisors(gcd_u64(m, u_perp))
            .into_iter()
            .map(|dp| dp * u_par * dprime)
            .collect()
    }

    #[test]
    fn divisor_endo_preimages_partition_divisors() {
        for m in 1u64..=500 {
            for u in 1u64..=30 {
                let image: BTreeSet<u64> =
                    divisors(m).into_iter().map(|d| divisor_endo(m, u, d)).collect();
                let mut seen: Vec<u64> = Vec::new();
                for &dp in &image {
                    let fiber = divisor_endo_preimage(m, u, dp);
                    assert!(!fiber.is_empty());
                    assert_eq!(
                        fiber,
                        preimage_by_structure(m, u, dp),
                        "fiber structure mismatch at m={m} u={u} d'={dp}"
                    );
                    seen.extend(fiber.iter().copied());
                }
                seen.sort_unstable();
                assert_eq!(seen, divisors(m), "fibers must partition at m={m} u={u}");
            }
        }
    }

    proptest! {
        #[test]
        fn binomial_pascal_recurrence(n in 1u64..=64, k in -2i64..=66) {
            prop_assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
        }

        #[test]
        fn binomial_row_sums(n in 0u64..=40) {
            let total: BigUint = (0..=n as i64).map(|k| binomial(n, k)).sum();
            prop_assert_eq!(total, BigUint::from(2u32).pow(n as u32));
        }
    }
}
