//! Brute-force ground truth. Everything here is deliberately naive so the
//! closed forms elsewhere can be checked against an independent computation:
//! subset sums are tallied by enumerating combinations, necklaces by
//! canonicalizing every word, and the partition recursion by memoized
//! descent on its defining recurrence.

use crate::numtheory::{divisors, residue, ExactCount};
use num_bigint::BigUint;
use num_traits::Zero;
use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};

/// Hard cap on subset-sum enumeration; C(30, 15) combinations is the most
/// this oracle will ever walk.
pub const SUBSET_SUM_LIMIT: u64 = 30;

/// Hard cap on necklace enumeration (2^24 words canonicalized).
pub const NECKLACE_LIMIT: u64 = 24;

/// Tally of t-element subsets of {0, .., m-1} by sum residue mod m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetSumTally {
    pub m: u64,
    pub t: i64,
    /// table[n] = number of t-element subsets with sum = n (mod m).
    pub table: Vec<ExactCount>,
}

impl SubsetSumTally {
    pub fn total(&self) -> ExactCount {
        self.table.iter().fold(BigUint::zero(), |a, b| a + b)
    }

    pub fn at(&self, n: i64) -> &ExactCount {
        &self.table[residue(n, self.m) as usize]
    }
}

/// Visit every t-element subset of {0, .., m-1} in lexicographic order.
fn for_each_combination(m: u64, t: u64, mut f: impl FnMut(&[u64])) {
    if t > m {
        return;
    }
    if t == 0 {
        f(&[]);
        return;
    }
    let t = t as usize;
    let mut idx: Vec<u64> = (0..t as u64).collect();
    loop {
        f(&idx);
        let mut advanced = false;
        for i in (0..t).rev() {
            if idx[i] < m - (t - i) as u64 {
                idx[i] += 1;
                for j in i + 1..t {
                    idx[j] = idx[j - 1] + 1;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            return;
        }
    }
}

/// Enumerate all t-element subsets of {0, .., m-1} and tally their sums
/// mod m. t outside [0, m] produces an all-zero table (empty sum for t = 0
/// still counts once at n = 0).
pub fn enumerate_subset_sums(m: u64, t: i64) -> SubsetSumTally {
    assert!(
        (1..=SUBSET_SUM_LIMIT).contains(&m),
        "subset-sum oracle bound: 1 <= m <= {SUBSET_SUM_LIMIT}"
    );
    let mut tally = vec![0u64; m as usize];
    if t == 0 {
        tally[0] = 1;
    } else if t > 0 && t as u64 <= m {
        for_each_combination(m, t as u64, |idx| {
            let s: u64 = idx.iter().sum();
            tally[(s % m) as usize] += 1;
        });
    }
    SubsetSumTally {
        m,
        t,
        table: tally.into_iter().map(BigUint::from).collect(),
    }
}

/// A binary necklace: the lexicographically least rotation of its words,
/// plus its rotation frequency m / (minimal period).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct NecklaceWord {
    pub beads: Vec<u8>,
    pub frequency: u64,
}

impl NecklaceWord {
    pub fn black_count(&self) -> u64 {
        self.beads.iter().filter(|&&b| b == 1).count() as u64
    }

    pub fn word_string(&self) -> String {
        self.beads.iter().map(|&b| if b == 1 { '1' } else { '0' }).collect()
    }
}

/// Lexicographically least rotation of a bead word.
pub fn canonical_rotation(beads: &[u8]) -> Vec<u8> {
    let m = beads.len();
    assert!(m >= 1);
    let mut best = 0usize;
    for k in 1..m {
        for i in 0..m {
            let a = beads[(k + i) % m];
            let b = beads[(best + i) % m];
            if a != b {
                if a < b {
                    best = k;
                }
                break;
            }
        }
    }
    (0..m).map(|i| beads[(best + i) % m]).collect()
}

/// Smallest period p (a divisor of the length) with beads[i] = beads[i + p].
pub fn minimal_period(beads: &[u8]) -> usize {
    let m = beads.len();
    assert!(m >= 1);
    for p in divisors(m as u64) {
        let p = p as usize;
        if (0..m).all(|i| beads[i] == beads[(i + p) % m]) {
            return p;
        }
    }
    unreachable!("period m always works");
}

/// Enumerate the necklaces of length m with t black beads, in lexicographic
/// order of their canonical words.
pub fn enumerate_necklaces(m: u64, t: i64) -> Vec<NecklaceWord> {
    assert!(
        (1..=NECKLACE_LIMIT).contains(&m),
        "necklace oracle bound: 1 <= m <= {NECKLACE_LIMIT}"
    );
    assert!(t >= 0 && t as u64 <= m, "black count must lie in [0, m]");
    let mut canon: BTreeSet<Vec<u8>> = BTreeSet::new();
    for_each_combination(m, t as u64, |positions| {
        let mut w = vec![0u8; m as usize];
        for &p in positions {
            w[p as usize] = 1;
        }
        canon.insert(canonical_rotation(&w));
    });
    canon
        .into_iter()
        .map(|beads| {
            let p = minimal_period(&beads);
            NecklaceWord {
                frequency: m / p as u64,
                beads,
            }
        })
        .collect()
}

thread_local! {
    static Q_MEMO: RefCell<HashMap<(i64, i64, i64), BigUint>> = RefCell::new(HashMap::new());
}

/// Number of partitions of n into t distinct parts, each from {1, .., m}.
/// Defined by q(m,t,n) = q(m-1,t-1,n-t) + q(m-1,t,n-t) + [n=m=t=0], with
/// value 0 whenever any argument is negative.
pub fn q_recursive(m: i64, t: i64, n: i64) -> ExactCount {
    if m < 0 || t < 0 || n < 0 {
        return BigUint::zero();
    }
    if let Some(v) = Q_MEMO.with(|c| c.borrow().get(&(m, t, n)).cloned()) {
        return v;
    }
    let mut v = q_recursive(m - 1, t - 1, n - t) + q_recursive(m - 1, t, n - t);
    if m == 0 && t == 0 && n == 0 {
        v += 1u32;
    }
    Q_MEMO.with(|c| c.borrow_mut().insert((m, t, n), v.clone()));
    v
}
