//! Exact integers, rationals, and a tower of up to three formal square roots over ℚ.

mod radical;

use alloc::string::{String, ToString};
use core::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use radical::{RadicalScalar, MAX_RADICANDS};

/// Sign-magnitude integer of unbounded size.
pub type Integer = BigInt;

/// Reduced fraction with a positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("undefined rational: zero denominator")]
    ZeroDenominator,
    #[error("unsupported radical tower: {needed} distinct radicands needed, at most {MAX_RADICANDS} allowed")]
    UnsupportedTower { needed: usize },
    #[error("invalid radicand {0}: must be squarefree and not 0 or 1")]
    InvalidRadicand(String),
    #[error("cannot parse {kind} from {input:?}")]
    Parse { kind: &'static str, input: String },
}

/// Builds `num/den` in canonical form (positive denominator, coprime parts, zero as `0/1`).
pub fn rational_normalize(num: Integer, den: Integer) -> Result<Rational, ExactError> {
    if den.is_zero() {
        return Err(ExactError::ZeroDenominator);
    }
    let g = num.gcd(&den);
    let (mut n, mut d) = if g.is_zero() {
        (num, den)
    } else {
        (num / &g, den / &g)
    };
    if d.is_negative() {
        n = -n;
        d = -d;
    }
    if n.is_zero() {
        d = Integer::one();
    }
    Ok(Rational::new_raw(n, d))
}

pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

pub fn rat(v: i64) -> Rational {
    Rational::from_integer(Integer::from(v))
}

/// `num/den` from machine integers. Panics on a zero denominator; meant for literals.
pub fn ratio(num: i64, den: i64) -> Rational {
    rational_normalize(Integer::from(num), Integer::from(den))
        .expect("literal with zero denominator")
}

pub fn is_integral(q: &Rational) -> bool {
    q.denom().is_one()
}

pub fn pow_rational(q: &Rational, exp: u32) -> Rational {
    Rational::new_raw(q.numer().pow(exp), q.denom().pow(exp))
}

/// Parses a decimal integer: optional sign, ASCII digits, no exponent notation.
pub fn parse_integer(s: &str) -> Result<Integer, ExactError> {
    let t = s.trim();
    let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ExactError::Parse {
            kind: "integer",
            input: s.to_string(),
        });
    }
    Integer::from_str(t).map_err(|_| ExactError::Parse {
        kind: "integer",
        input: s.to_string(),
    })
}

/// Parses `"num/den"` or a bare integer.
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    match s.split_once('/') {
        Some((n, d)) => {
            let err = || ExactError::Parse {
                kind: "rational",
                input: s.to_string(),
            };
            let n = parse_integer(n).map_err(|_| err())?;
            let d = parse_integer(d).map_err(|_| err())?;
            rational_normalize(n, d)
        }
        None => parse_integer(s).map(Rational::from_integer),
    }
}

/// Splits a nonzero integer as `m = root² · core` with `core` squarefree and carrying the sign.
///
/// Returns `(root, core)` with `root > 0`. Zero maps to `(0, 0)`.
pub fn squarefree_decompose(m: &Integer) -> (Integer, Integer) {
    if m.is_zero() {
        return (Integer::zero(), Integer::zero());
    }
    let sign = if m.is_negative() { -1 } else { 1 };
    let mag = m.magnitude();
    let (root, core) = match mag.to_u128() {
        Some(v) => {
            let (r, c) = squarefree_u128(v);
            (BigUint::from(r), BigUint::from(c))
        }
        None => squarefree_big(mag),
    };
    (
        Integer::from_biguint(Sign::Plus, root),
        Integer::from(sign) * Integer::from_biguint(Sign::Plus, core),
    )
}

fn squarefree_u128(mut v: u128) -> (u128, u128) {
    let mut root = 1u128;
    let mut core = 1u128;
    let mut p = 2u128;
    while p <= v / p {
        if v.is_multiple_of(p) {
            let mut e = 0u32;
            while v.is_multiple_of(p) {
                v /= p;
                e += 1;
            }
            root *= p.pow(e / 2);
            if e % 2 == 1 {
                core *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if v > 1 {
        core *= v;
    }
    (root, core)
}

fn squarefree_big(m: &BigUint) -> (BigUint, BigUint) {
    let mut v = m.clone();
    let mut root = BigUint::one();
    let mut core = BigUint::one();
    let mut p = BigUint::from(2u32);
    while &p * &p <= v {
        if (&v % &p).is_zero() {
            let mut e = 0u32;
            while (&v % &p).is_zero() {
                v /= &p;
                e += 1;
            }
            root *= p.pow(e / 2);
            if e % 2 == 1 {
                core *= &p;
            }
        }
        p += 1u32;
    }
    if v > BigUint::one() {
        core *= v;
    }
    (root, core)
}

/// Exact integer cube root, if `m` is a perfect cube.
pub fn exact_cube_root(m: &Integer) -> Option<Integer> {
    let r = m.cbrt();
    (&r * &r * &r == *m).then_some(r)
}
