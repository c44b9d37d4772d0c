//! Closed forms for the subset-sum partition counts over Z/mZ.
//!
//! The central quantity is q_mod(m, t, n): how many t-element subsets of
//! Z/mZ sum to n mod m. It is computed exactly as a Ramanujan-sum-weighted
//! divisor sum, divided by m with the exactness asserted. Around it sit the
//! zero-free variant, congruence-filtered sums, the divisor-indexed
//! coefficients A(m, t), maximizer classification, the urn view, and
//! box-diagram rendering.

use crate::numtheory::{
    binomial, divisors, gcd, gcd_u64, mobius, ramanujan_sum, residue, v2, ExactCount,
    SignedExact,
};
use crate::oracle::q_recursive;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::BTreeSet;

/// Divide an exactly-divisible signed divisor sum by m and return the
/// non-negative quotient. Panics if either property fails: both signal an
/// implementation bug, not bad input.
fn exact_count_div(sum: SignedExact, m: u64, what: &str) -> ExactCount {
    let (q, r) = sum.div_rem(&BigInt::from(m));
    assert!(r.is_zero(), "{what}: divisor sum {sum} not divisible by m={m}");
    q.to_biguint()
        .unwrap_or_else(|| panic!("{what}: negative count {q}"))
}

/// Add sign * mag to acc, where the sign is (-1)^parity.
fn add_signed(acc: &mut SignedExact, parity: i64, mag: SignedExact) {
    if parity.rem_euclid(2) == 1 {
        *acc -= mag;
    } else {
        *acc += mag;
    }
}

/// Count of t-element subsets of Z/mZ with sum = n (mod m), as the exact
/// divisor sum (1/m) * sum over d | (t, m) of (-1)^(t + t/d) C(m/d, t/d) c_d(n).
/// Zero for t outside [0, m].
pub fn q_mod(m: u64, t: i64, n: i64) -> ExactCount {
    assert!(m >= 1, "modulus must be positive");
    if t < 0 || t as u64 > m {
        return BigUint::zero();
    }
    let g = gcd_u64(t as u64, m);
    let mut acc = BigInt::zero();
    for d in divisors(g) {
        let td = t / d as i64;
        let mag = BigInt::from(binomial(m / d, td)) * BigInt::from(ramanujan_sum(d, n));
        add_signed(&mut acc, t + td, mag);
    }
    exact_count_div(acc, m, "q_mod")
}

/// Full table of q_mod(m, t, n) for n = 0, .., m-1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub m: u64,
    pub t: i64,
    pub values: Vec<ExactCount>,
}

impl CountTable {
    pub fn at(&self, n: i64) -> &ExactCount {
        &self.values[residue(n, self.m) as usize]
    }

    pub fn total(&self) -> ExactCount {
        self.values.iter().fold(BigUint::zero(), |a, b| a + b)
    }
}

pub fn q_table(m: u64, t: i64) -> CountTable {
    let values = (0..m).map(|n| q_mod(m, t, n as i64)).collect();
    CountTable { m, t, values }
}

/// Zero-free variant: t-element subsets of Z/mZ avoiding the element 0, with
/// sum = n (mod m). Computed from the partition recursion as
/// sum over j >= 0 of q(m-1, t, m*j + n') with n' the canonical residue.
pub fn q_nonzero(m: u64, t: i64, n: i64) -> ExactCount {
    assert!(m >= 1, "modulus must be positive");
    if t < 0 {
        return BigUint::zero();
    }
    let n0 = residue(n, m) as i64;
    let cap = t * (m as i64 - 1);
    let mut acc = BigUint::zero();
    let mut x = n0;
    while x <= cap {
        acc += q_recursive(m as i64 - 1, t, x);
        x += m as i64;
    }
    acc
}

/// Every subset either contains 0 or not: q_mod(m,t,n) must equal
/// q_nonzero(m,t-1,n) + q_nonzero(m,t,n).
pub fn q_split_check(m: u64, t: i64, n: i64) -> bool {
    q_mod(m, t, n) == q_nonzero(m, t - 1, n) + q_nonzero(m, t, n)
}

/// Congruence-filtered count: sum of q_mod(m, u, n) over all u = t (mod s)
/// (effectively 0 <= u <= m), evaluated by the closed double divisor sum
/// (1/m) * sum over d | m of c_d(n) * sum over j = t (mod s), d | j, 0 <= j <= m
/// of (-1)^(j + j/d) C(m/d, j/d).
pub fn q_congruence_sum(m: u64, t: i64, s: u64, n: i64) -> ExactCount {
    assert!(m >= 1 && s >= 1, "q_congruence_sum requires m, s >= 1");
    let tr = t.rem_euclid(s as i64) as u64;
    let mut acc = BigInt::zero();
    for d in divisors(m) {
        let c = BigInt::from(ramanujan_sum(d, n));
        let mut inner = BigInt::zero();
        let mut j = tr;
        while j <= m {
            if j % d == 0 {
                let jd = (j / d) as i64;
                add_signed(&mut inner, j as i64 + jd, BigInt::from(binomial(m / d, jd)));
            }
            j += s;
        }
        acc += inner * c;
    }
    exact_count_div(acc, m, "q_congruence_sum")
}

/// Divisor-indexed coefficient A(m, t) =
/// (1/m) * sum over d | (t, m) of (-1)^(t + t/d) mu(d) C(m/d, t/d).
/// Always a non-negative integer; A(m, t) = q_mod(m, t, 1).
pub fn a_coeff(m: u64, t: i64) -> ExactCount {
    assert!(m >= 1, "a_coeff requires m >= 1");
    let g = gcd(t, m as i64);
    let mut acc = BigInt::zero();
    for d in divisors(g) {
        let td = t / d as i64;
        let mag = BigInt::from(binomial(m / d, td)) * BigInt::from(mobius(d));
        add_signed(&mut acc, t + td, mag);
    }
    exact_count_div(acc, m, "a_coeff")
}

/// Rebuild q_mod from the A coefficients:
/// q_mod(m, t, n) = sum over d | (n, t, m) of (-1)^(t + t/d) A(m/d, t/d).
pub fn q_via_a(m: u64, t: i64, n: i64) -> ExactCount {
    assert!(m >= 1, "q_via_a requires m >= 1");
    let g = gcd_u64(gcd(n, t), m);
    let mut acc = BigInt::zero();
    for d in divisors(g) {
        let td = t / d as i64;
        add_signed(&mut acc, t + td, BigInt::from(a_coeff(m / d, td)));
    }
    acc.to_biguint()
        .unwrap_or_else(|| panic!("q_via_a: negative count {acc}"))
}

/// Check the binomial decomposition
/// C(m, t) = sum over d | (t, m) of (-1)^(t + t/d) (m/d) A(m/d, t/d).
pub fn binomial_via_a_check(m: u64, t: i64) -> bool {
    assert!(m >= 1);
    let g = gcd(t, m as i64);
    let mut acc = BigInt::zero();
    for d in divisors(g) {
        let td = t / d as i64;
        let mag = BigInt::from(a_coeff(m / d, td)) * BigInt::from(m / d);
        add_signed(&mut acc, t + td, mag);
    }
    acc == BigInt::from(binomial(m, t))
}

/// Which residues maximize q_mod(m, t, .), classified by the parity shape of
/// g = gcd(t, m):
/// case 1: g odd, maximized exactly on gcd(n, t, m) = g;
/// case 2: g even with v2(g) < v2(t), same witness g;
/// case 3: g even with v2(g) = v2(t), maximized on gcd(n, t, m) = g/2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximizerReport {
    pub m: u64,
    pub t: i64,
    pub case_id: u8,
    pub witness_gcd: u64,
    pub maximizing_residues: BTreeSet<u64>,
    pub max_value: ExactCount,
}

pub fn maximizers(m: u64, t: i64) -> MaximizerReport {
    assert!(m >= 1, "modulus must be positive");
    assert!(t >= 0 && t as u64 <= m, "t must lie in [0, m]");
    let g = gcd_u64(t as u64, m);
    let (case_id, witness_gcd) = if g % 2 == 1 {
        (1, g)
    } else if v2(g as i64) < v2(t) {
        (2, g)
    } else {
        (3, g / 2)
    };
    let maximizing_residues: BTreeSet<u64> = (0..m)
        .filter(|&n| gcd_u64(gcd(n as i64, t), m) == witness_gcd)
        .collect();
    let first = *maximizing_residues
        .iter()
        .next()
        .expect("a residue with the witness gcd always exists");
    let max_value = q_mod(m, t, first as i64);
    MaximizerReport {
        m,
        t,
        case_id,
        witness_gcd,
        maximizing_residues,
        max_value,
    }
}

/// The urn view: draw t of m distinguishable balls labelled 0..m-1; the
/// probability that the labels sum to n mod m is q_mod(m,t,n) / C(m,t).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UrnDistribution {
    pub m: u64,
    pub t: i64,
    pub probabilities: Vec<BigRational>,
}

pub fn urn_distribution(m: u64, t: i64) -> UrnDistribution {
    assert!(m >= 1, "modulus must be positive");
    assert!(t >= 0 && t as u64 <= m, "t must lie in [0, m]");
    let total = BigInt::from(binomial(m, t));
    let probabilities: Vec<BigRational> = q_table(m, t)
        .values
        .into_iter()
        .map(|q| BigRational::new(BigInt::from(q), total.clone()))
        .collect();
    let sum: BigRational = probabilities.iter().fold(BigRational::zero(), |a, b| a + b);
    assert!(sum.is_one(), "urn probabilities must sum to exactly 1");
    UrnDistribution {
        m,
        t,
        probabilities,
    }
}

fn column_heights(m: u64, t: i64) -> Vec<usize> {
    q_table(m, t)
        .values
        .iter()
        .map(|q| q.to_usize().expect("column height too large to render"))
        .collect()
}

/// Bottom-justified column chart of the count table, one column per residue,
/// rows emitted top-down with '#' boxes and '.' filler.
pub fn diagram_ascii(m: u64, t: i64) -> String {
    let heights = column_heights(m, t);
    let peak = heights.iter().copied().max().unwrap_or(0);
    let mut out = String::new();
    for row in 0..peak {
        for &h in &heights {
            out.push(if h >= peak - row { '#' } else { '.' });
        }
        out.push('\n');
    }
    out
}

/// The same chart as a standalone SVG 1.1 document: unit boxes scaled by 4,
/// no external references. One rect per counted subset.
pub fn diagram_svg(m: u64, t: i64) -> String {
    const SCALE: usize = 4;
    let heights = column_heights(m, t);
    let peak = heights.iter().copied().max().unwrap_or(0);
    let width = m as usize * SCALE;
    let height = peak.max(1) * SCALE;
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    ));
    for (n, &h) in heights.iter().enumerate() {
        for k in 0..h {
            let x = n * SCALE;
            let y = (peak - 1 - k) * SCALE;
            out.push_str(&format!(
                "  <rect x=\"{x}\" y=\"{y}\" width=\"{SCALE}\" height=\"{SCALE}\" fill=\"#1f2430\" stroke=\"#ffffff\" stroke-width=\"0.5\"/>\n"
            ));
        }
    }
    out.push_str("</svg>\n");
    out
}
