//! Brute-force ground truth: sums of two cubes, seed searches and relation checking.
//!
//! Nothing here calls into [`crate::families`] or [`crate::series`]; the checks are meant to
//! stay independent of the code paths they validate.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::Range;

use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::exact::{Integer, Rational};
use crate::families::{PowerRelation, Sign};
use crate::identities::{CubicSeed, FiveCubeSeed, Side};

/// Largest bound accepted by the positive-pair searches; `2·bound³` must fit in `u128`.
pub const MAX_SEARCH_BOUND: u64 = 1 << 42;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("bound {bound} cannot certify a number with {k} representations; raise the bound")]
    InsufficientBound { k: usize, bound: u64 },
    #[error("bound {0} exceeds the supported search range")]
    BoundTooLarge(u64),
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}

/// `value = a³ + b³` with `a ≤ b`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CubeTableEntry {
    pub value: Integer,
    pub pair: (Integer, Integer),
}

impl CubeTableEntry {
    pub fn new(a: Integer, b: Integer) -> Self {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        let value = cube(&a) + cube(&b);
        Self {
            value,
            pair: (a, b),
        }
    }

    pub fn is_consistent(&self) -> bool {
        self.pair.0 <= self.pair.1 && cube(&self.pair.0) + cube(&self.pair.1) == self.value
    }
}

fn cube(x: &Integer) -> Integer {
    x * x * x
}

/// Packed positive cube sum `(a³ + b³, a, b)`.
pub type PackedSum = (u128, u64, u64);

/// A number and all its representations as `a³ + b³`, sorted by `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representations {
    pub n: Integer,
    pub pairs: Vec<(Integer, Integer)>,
}

/// All `(a, b)` with `a ≤ b`, `|a|, |b| ≤ bound` and `a³ + b³ = n`.
///
/// Positive bases only unless `allow_negative`. Uses `i128` while `bound³` and `n` fit,
/// arbitrary precision otherwise.
pub fn two_cube_representations(
    n: &Integer,
    bound: u64,
    allow_negative: bool,
) -> Vec<(Integer, Integer)> {
    let lo: i128 = if allow_negative {
        -i128::from(bound)
    } else {
        1
    };
    let hi = i128::from(bound);
    let fits = hi
        .checked_mul(hi)
        .and_then(|v| v.checked_mul(hi))
        .and_then(|c| c.checked_mul(2))
        .is_some();
    match (fits, n.to_i128()) {
        (true, Some(n)) => {
            let table: BTreeMap<i128, i128> = (lo..=hi).map(|b| (b * b * b, b)).collect();
            let mut out = Vec::new();
            for a in lo..=hi {
                let Some(rest) = n.checked_sub(a * a * a) else {
                    continue;
                };
                if let Some(&b) = table.get(&rest) {
                    if a <= b {
                        out.push((Integer::from(a), Integer::from(b)));
                    }
                }
            }
            out
        }
        _ => {
            let range = || {
                let mut v = Integer::from(lo);
                let end = Integer::from(hi);
                core::iter::from_fn(move || {
                    (v <= end).then(|| {
                        let cur = v.clone();
                        v += 1;
                        cur
                    })
                })
            };
            let table: BTreeMap<Integer, Integer> = range().map(|b| (cube(&b), b)).collect();
            range()
                .filter_map(|a| {
                    let b = table.get(&(n - cube(&a)))?;
                    (a <= *b).then(|| (a.clone(), b.clone()))
                })
                .collect()
        }
    }
}

/// Positive sums `a³ + b³ ≤ bound³` with `a` in `a_range`, `a ≤ b ≤ bound`, sorted.
///
/// One worker's share of [`taxicab`]; concatenate shares and pass them to [`merge_sums`].
pub fn positive_sums_for_range(a_range: Range<u64>, bound: u64) -> Vec<PackedSum> {
    let cap = u128::from(bound).pow(3);
    let mut out = Vec::new();
    for a in a_range.start.max(1)..a_range.end.min(bound + 1) {
        let a3 = u128::from(a).pow(3);
        for b in a..=bound {
            let v = a3 + u128::from(b).pow(3);
            if v > cap {
                break;
            }
            out.push((v, a, b));
        }
    }
    out.sort_unstable();
    out
}

/// Deterministic merge of per-worker shares; the result does not depend on share order.
pub fn merge_sums(parts: Vec<Vec<PackedSum>>) -> Vec<PackedSum> {
    let mut all: Vec<PackedSum> = parts.into_iter().flatten().collect();
    all.sort_unstable();
    all
}

/// Smallest value in a sorted table with at least `k` entries.
///
/// The table must hold every positive sum up to `bound³`, so the answer is certified.
pub fn smallest_in_sums(
    sums: &[PackedSum],
    k: usize,
    bound: u64,
) -> Result<Representations, OracleError> {
    if k == 0 {
        return Err(OracleError::InvalidArgument("k must be positive"));
    }
    for run in sums.chunk_by(|x, y| x.0 == y.0) {
        if run.len() >= k {
            return Ok(Representations {
                n: Integer::from(run[0].0),
                pairs: run
                    .iter()
                    .map(|&(_, a, b)| (Integer::from(a), Integer::from(b)))
                    .collect(),
            });
        }
    }
    Err(OracleError::InsufficientBound { k, bound })
}

fn check_bound(bound: u64) -> Result<(), OracleError> {
    if bound == 0 {
        return Err(OracleError::InvalidArgument("bound must be positive"));
    }
    if bound > MAX_SEARCH_BOUND {
        return Err(OracleError::BoundTooLarge(bound));
    }
    Ok(())
}

/// The smallest positive integer with `k` representations as a sum of two positive cubes,
/// together with those representations.
pub fn taxicab(k: usize, bound: u64) -> Result<Representations, OracleError> {
    check_bound(bound)?;
    let sums = positive_sums_for_range(1..bound + 1, bound);
    smallest_in_sums(&sums, k, bound)
}

pub fn smallest_with_k_representations(k: usize, bound: u64) -> Result<Integer, OracleError> {
    taxicab(k, bound).map(|r| r.n)
}

/// Checks the relation by clearing all denominators and comparing integer power sums.
pub fn verify_relation(rel: &PowerRelation) -> bool {
    if rel.entries.len() != rel.sides.len() {
        return false;
    }
    let mut values: Vec<&Rational> = rel.entries.iter().collect();
    if let Some((_, r)) = &rel.residual {
        values.push(r);
    }
    let lcm = values
        .iter()
        .fold(Integer::one(), |acc, v| acc.lcm(v.denom()));
    let scaled = |v: &Rational| -> Integer { v.numer() * (&lcm / v.denom()) };
    let power = |v: Integer| num_traits::pow::pow(v, rel.exponent as usize);
    let mut left = Integer::zero();
    let mut right = Integer::zero();
    for (x, side) in rel.entries.iter().zip(&rel.sides) {
        match side {
            Side::Left => left += power(scaled(x)),
            Side::Right => right += power(scaled(x)),
        }
    }
    match &rel.residual {
        Some((Sign::Plus, r)) => right += power(scaled(r)),
        Some((Sign::Minus, r)) => right -= power(scaled(r)),
        None => {}
    }
    left == right
}

/// Positive `p ≤ q ≤ r < s ≤ bound` with `p³ + q³ + r³ = s³`, sorted by `s`, then `(p, q, r)`.
pub fn seed_search_three_cubes(bound: u64) -> Vec<CubicSeed> {
    let cubes: BTreeMap<u128, u64> = (1..=bound).map(|s| (u128::from(s).pow(3), s)).collect();
    let mut found: Vec<[u64; 4]> = Vec::new();
    for p in 1..=bound {
        for q in p..=bound {
            for r in q..=bound {
                let sum = u128::from(p).pow(3) + u128::from(q).pow(3) + u128::from(r).pow(3);
                if let Some(&s) = cubes.get(&sum) {
                    found.push([p, q, r, s]);
                }
            }
        }
    }
    found.sort_by_key(|&[p, q, r, s]| (s, p, q, r));
    found
        .into_iter()
        .map(|v| CubicSeed::from_i64s(v.map(|x| x as i64)).expect("relation holds by construction"))
        .collect()
}

/// Integer `(p, q, r, s, t, u)` with entries in `[−bound, bound]`, `p³+q³+r³+s³+t³ = u³`,
/// and `p+s`, `q+t`, `r−u` nonzero; sorted lexicographically.
pub fn seed_search_five_cubes(bound: u64) -> Vec<FiveCubeSeed> {
    let b = bound as i64;
    let c = |x: i64| i128::from(x).pow(3);
    // right half: u³ − s³ − t³ keyed to (s, t, u)
    let mut right: BTreeMap<i128, Vec<(i64, i64, i64)>> = BTreeMap::new();
    for s in -b..=b {
        for t in -b..=b {
            for u in -b..=b {
                right.entry(c(u) - c(s) - c(t)).or_default().push((s, t, u));
            }
        }
    }
    let mut found = Vec::new();
    for p in -b..=b {
        for q in -b..=b {
            for r in -b..=b {
                let Some(matches) = right.get(&(c(p) + c(q) + c(r))) else {
                    continue;
                };
                for &(s, t, u) in matches {
                    if p + s != 0 && q + t != 0 && r - u != 0 {
                        found.push([p, q, r, s, t, u]);
                    }
                }
            }
        }
    }
    found.sort_unstable();
    found
        .into_iter()
        .map(|v| FiveCubeSeed::from_i64s(v).expect("invariants hold by construction"))
        .collect()
}
