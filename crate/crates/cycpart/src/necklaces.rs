//! Counting binary necklaces (rotation classes of words) by length, number of
//! black beads, and rotation frequency, and the case-by-case correspondence
//! that matches subset-sum counts to necklace counts.

use crate::numtheory::{
    binomial, divisors, gcd_u64, mobius, ramanujan_sum, v2, ExactCount, Valuation,
};
use crate::partitions::q_mod;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;
use std::collections::BTreeSet;
use std::fmt;

/// A set of admissible rotation frequencies, used to describe which necklaces
/// a subset-sum count corresponds to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FreqSelector {
    /// All frequencies dividing the given value.
    DivisorsOf(u64),
    /// An explicit finite set.
    Explicit(BTreeSet<u64>),
    /// Frequencies of the form factor * f with f admitted by the inner
    /// selector.
    Scaled { factor: u64, inner: Box<FreqSelector> },
}

impl FreqSelector {
    pub fn divisors_of(n: u64) -> Self {
        assert!(n >= 1, "divisor selector requires n >= 1");
        FreqSelector::DivisorsOf(n)
    }

    pub fn contains(&self, u: u64) -> bool {
        match self {
            FreqSelector::DivisorsOf(n) => u >= 1 && n % u == 0,
            FreqSelector::Explicit(set) => set.contains(&u),
            FreqSelector::Scaled { factor, inner } => {
                u % factor == 0 && inner.contains(u / factor)
            }
        }
    }
}

impl fmt::Display for FreqSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FreqSelector::DivisorsOf(n) => write!(f, "<{n}>"),
            FreqSelector::Explicit(set) => {
                let items: Vec<String> = set.iter().map(|u| u.to_string()).collect();
                write!(f, "{{{}}}", items.join(","))
            }
            FreqSelector::Scaled { factor, inner } => write!(f, "{factor}*{inner}"),
        }
    }
}

/// Number of aperiodic necklaces of length m with t black beads:
/// (1/m) * sum over d | gcd(m, t) of mu(d) * C(m/d, t/d).
/// For t = 0 the divisor gcd is m itself and the count is 1 exactly when
/// m = 1 (the single white bead).
pub fn count_aperiodic(m: u64, t: u64) -> ExactCount {
    assert!(m >= 1, "necklace length must be positive");
    assert!(t <= m, "black count must lie in [0, m]");
    let g = if t == 0 { m } else { gcd_u64(m, t) };
    let mut acc = BigInt::zero();
    for d in divisors(g) {
        acc += BigInt::from(mobius(d)) * BigInt::from(binomial(m / d, (t / d) as i64));
    }
    let (q, r) = acc.div_rem(&BigInt::from(m));
    assert!(r.is_zero(), "aperiodic count: divisor sum not divisible by m={m}");
    q.to_biguint()
        .unwrap_or_else(|| panic!("aperiodic count negative for m={m} t={t}"))
}

/// Number of necklaces of length m with t black beads and rotation frequency
/// exactly u. Such a necklace is the (m/u)-fold repetition check in reverse:
/// it exists iff u divides both m and t, and then corresponds to an aperiodic
/// necklace of length m/u with t/u black beads.
pub fn count_exact_frequency(m: u64, t: u64, u: u64) -> ExactCount {
    assert!(m >= 1 && u >= 1);
    assert!(t <= m, "black count must lie in [0, m]");
    if t == 0 {
        return if u == m { BigUint::from(1u32) } else { BigUint::zero() };
    }
    if m % u != 0 || t % u != 0 {
        return BigUint::zero();
    }
    count_aperiodic(m / u, t / u)
}

/// Number of necklaces of length m with t black beads whose rotation
/// frequency divides n:
/// (1/m) * sum over d | gcd(m, t) of C(m/d, t/d) * c_d(n).
pub fn count_freq_dividing(m: u64, t: u64, n: u64) -> ExactCount {
    assert!(m >= 1 && n >= 1, "count_freq_dividing requires m, n >= 1");
    assert!(t <= m, "black count must lie in [0, m]");
    let g = if t == 0 { m } else { gcd_u64(m, t) };
    let mut acc = BigInt::zero();
    for d in divisors(g) {
        acc += BigInt::from(binomial(m / d, (t / d) as i64))
            * BigInt::from(ramanujan_sum(d, n as i64));
    }
    let (q, r) = acc.div_rem(&BigInt::from(m));
    assert!(r.is_zero(), "freq-dividing count: divisor sum not divisible by m={m}");
    q.to_biguint()
        .unwrap_or_else(|| panic!("freq-dividing count negative for m={m} t={t} n={n}"))
}

/// Total count of necklaces of length m with t black beads whose frequency
/// is admitted by the selector.
pub fn count_with_selector(m: u64, t: u64, sel: &FreqSelector) -> ExactCount {
    let mut acc = BigUint::zero();
    for u in 1..=m {
        if sel.contains(u) {
            acc += count_exact_frequency(m, t, u);
        }
    }
    acc
}

/// One resolved case of the subset-sum / necklace correspondence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrespondenceCase {
    /// Which of the four dispatch cases applied (1..=4).
    pub case_id: u8,
    /// The admitted rotation frequencies.
    pub selector: FreqSelector,
    /// The common value: subset-sum count and selected necklace count.
    pub count: ExactCount,
}

/// Resolve which dispatch case applies and which frequency divisor the
/// selector should use, without counting anything. Returns (case_id, d)
/// meaning the selector is "frequencies dividing d". Dispatch:
///   outside the even-aligned regime (not v2(m) >= v2(t) >= 1): frequencies
///     dividing n (with n = 0 read as gcd(m, t));
///   v2(n) < v2(t) - 1: frequencies dividing n;
///   v2(n) = v2(t) - 1: frequencies dividing 2n;
///   v2(n) >= v2(t):    frequencies dividing gcd(t, n) / 2.
pub fn correspondence_selector(m: u64, t: u64, n: i64) -> (u8, u64) {
    assert!(m >= 1, "modulus must be positive");
    assert!(t <= m, "black count must lie in [0, m]");
    let n0 = (n as i128).rem_euclid(m as i128) as u64;
    let vt = v2(t as i64);
    let vm = v2(m as i64);
    let even_aligned = match vt {
        Valuation::Finite(k) => k >= 1 && vm >= vt,
        Valuation::Infinity => false, // t = 0 stays in the generic case
    };
    if !even_aligned {
        let d = if n0 == 0 {
            if t == 0 {
                m
            } else {
                gcd_u64(m, t)
            }
        } else {
            n0
        };
        return (1, d);
    }
    let vn = v2(n0 as i64);
    let vt1 = match vt {
        Valuation::Finite(k) => k,
        Valuation::Infinity => unreachable!("t = 0 handled above"),
    };
    if vn < Valuation::Finite(vt1 - 1) {
        (2, n0)
    } else if vn == Valuation::Finite(vt1 - 1) {
        (3, 2 * n0)
    } else {
        let g = if n0 == 0 { t } else { gcd_u64(t, n0) };
        (4, g / 2)
    }
}

/// Match the count of t-subsets of Z/m summing to n against a necklace count
/// with an explicit frequency selector (see correspondence_selector for the
/// case dispatch). The returned count is asserted equal on both sides.
pub fn correspondence(m: u64, t: u64, n: i64) -> CorrespondenceCase {
    let (case_id, divisor) = correspondence_selector(m, t, n);
    let selector = FreqSelector::divisors_of(divisor);
    let count = count_freq_dividing(m, t, divisor);
    let subset_count = q_mod(m, t as i64, n);
    assert_eq!(
        count, subset_count,
        "correspondence mismatch at m={m} t={t} n={n}: necklaces {count}, subsets {subset_count}"
    );
    CorrespondenceCase { case_id, selector, count }
}

/// One (t, frequency) class excluded from the global match-up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExcludedClass {
    pub t: u64,
    pub frequency: u64,
    pub count: ExactCount,
}

/// The global accounting for one modulus: total subsets hitting sum 0 versus
/// total necklaces, with the excluded frequency classes itemized.
#[derive(Clone, Debug)]
pub struct IdentityAudit {
    pub m: u64,
    /// sum over t of #(t-subsets of Z/m summing to 0)
    pub partition_total: ExactCount,
    /// sum over t and u of #(necklaces with t black beads, frequency u)
    pub necklace_total: ExactCount,
    /// classes with v2(u) = v2(t) >= 1 and v2(m) >= v2(t), which have no
    /// subset-sum partner
    pub excluded: Vec<ExcludedClass>,
}

impl IdentityAudit {
    pub fn excluded_total(&self) -> ExactCount {
        let mut acc = BigUint::zero();
        for e in &self.excluded {
            acc += e.count.clone();
        }
        acc
    }
}

/// Audit the identity: partition_total = necklace_total - excluded_total.
/// The equality is asserted before returning.
pub fn identity_audit(m: u64) -> IdentityAudit {
    assert!(m >= 1, "modulus must be positive");
    let mut partition_total = BigUint::zero();
    for t in 0..=m {
        partition_total += q_mod(m, t as i64, 0);
    }
    let vm = v2(m as i64);
    let mut necklace_total = BigUint::zero();
    let mut excluded = Vec::new();
    for t in 0..=m {
        let vt = v2(t as i64);
        for u in 1..=m {
            let c = count_exact_frequency(m, t, u);
            if c.is_zero() {
                continue;
            }
            necklace_total += c.clone();
            let in_regime = match vt {
                Valuation::Finite(k) => k >= 1 && vm >= vt,
                Valuation::Infinity => false,
            };
            if in_regime && v2(u as i64) == vt {
                excluded.push(ExcludedClass { t, frequency: u, count: c });
            }
        }
    }
    let audit = IdentityAudit { m, partition_total, necklace_total, excluded };
    assert_eq!(
        audit.partition_total.clone() + audit.excluded_total(),
        audit.necklace_total,
        "identity audit failed at m={m}"
    );
    audit
}
