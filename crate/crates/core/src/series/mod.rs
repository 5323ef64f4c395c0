//! Dense univariate polynomials over ℚ and rational functions built from them.
//!
//! Sequences come out of rational functions in two ways: the Taylor expansion at
//! `x = 0` and the Laurent expansion at `x = ∞`. Both are computed by the same linear
//! recurrence; the Laurent case first substitutes `x → 1/y`.

mod parse;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact::Rational;

pub use parse::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("zero denominator polynomial")]
    ZeroDenominator,
    #[error("not Taylor-expandable at 0: denominator has zero constant term")]
    NotTaylorExpandable,
    #[error("unsupported shape for Laurent expansion: numerator degree {numerator} >= denominator degree {denominator}")]
    UnsupportedShape {
        numerator: usize,
        denominator: usize,
    },
}

/// Polynomial in `x` with coefficients indexed by degree; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| crate::exact::rat(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Constant polynomial value, if the degree is at most 0.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Coefficients reversed against `declared_degree`: `x^d · p(1/x)`.
    ///
    /// Panics if `declared_degree` is below the actual degree.
    pub fn reversed(&self, declared_degree: usize) -> Self {
        assert!(
            self.degree().is_none_or(|d| d <= declared_degree),
            "declared degree below actual degree"
        );
        let mut c = self.coeffs.clone();
        c.resize(declared_degree + 1, Rational::zero());
        c.reverse();
        Self::from_coeffs(c)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Prints as `c0 + c1*x + c2*x^2 + ...`, skipping zero terms.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// `numerator / denominator`, kept exactly as declared (no common-factor cancellation).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalFunction {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self, SeriesError> {
        if denominator.is_zero() {
            return Err(SeriesError::ZeroDenominator);
        }
        Ok(Self {
            numerator,
            denominator,
        })
    }

    /// Shorthand for integer-coefficient literals, lowest degree first.
    pub fn from_i64s(numerator: &[i64], denominator: &[i64]) -> Self {
        Self::new(
            Polynomial::from_i64s(numerator),
            Polynomial::from_i64s(denominator),
        )
        .expect("nonzero denominator literal")
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    /// Coefficients `a₀ … a_{count-1}` of the power series at `x = 0`.
    ///
    /// Uses `q₀·aₙ = pₙ − Σ_{i≥1} qᵢ·a_{n−i}`.
    pub fn taylor_coeffs(&self, count: usize) -> Result<Vec<Rational>, SeriesError> {
        series_quotient(&self.numerator, &self.denominator, count)
    }

    /// Coefficients `α₀ … α_{count-1}` where `αₖ` multiplies `x^{-(k+1)}` at `x = ∞`.
    ///
    /// Requires a strictly proper function. With `D = deg q` and `N = deg p`, the expansion
    /// equals `y^{D−N} · rev(p)(y) / rev(q)(y)` expanded at `y = 0`.
    pub fn laurent_coeffs_at_infinity(&self, count: usize) -> Result<Vec<Rational>, SeriesError> {
        let d = self
            .denominator
            .degree()
            .ok_or(SeriesError::ZeroDenominator)?;
        let Some(n) = self.numerator.degree() else {
            return Ok(vec![Rational::zero(); count]);
        };
        if n >= d {
            return Err(SeriesError::UnsupportedShape {
                numerator: n,
                denominator: d,
            });
        }
        let shift = d - n;
        // αₖ is the coefficient of y^{k+1}, which sits at index k+1-shift of the quotient
        let needed = (count + 1).saturating_sub(shift);
        let t = series_quotient(
            &self.numerator.reversed(n),
            &self.denominator.reversed(d),
            needed,
        )?;
        Ok((0..count)
            .map(|k| match (k + 1).checked_sub(shift) {
                Some(i) => t[i].clone(),
                None => Rational::zero(),
            })
            .collect())
    }

    /// Value at `x`, or `None` where the denominator vanishes.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let den = self.denominator.eval(x);
        (!den.is_zero()).then(|| self.numerator.eval(x) / den)
    }
}

fn series_quotient(
    num: &Polynomial,
    den: &Polynomial,
    count: usize,
) -> Result<Vec<Rational>, SeriesError> {
    let q0 = den.coeff(0);
    if q0.is_zero() {
        return Err(if den.is_zero() {
            SeriesError::ZeroDenominator
        } else {
            SeriesError::NotTaylorExpandable
        });
    }
    let q0_inv = q0.recip();
    let dq = den.coeffs();
    let mut out: Vec<Rational> = Vec::with_capacity(count);
    for n in 0..count {
        let mut acc = num.coeff(n);
        for (i, qi) in dq.iter().enumerate().skip(1).take(n) {
            if !qi.is_zero() {
                acc -= qi * &out[n - i];
            }
        }
        out.push(acc * &q0_inv);
    }
    Ok(out)
}

/// Prints as `(<numerator>)/(<denominator>)`.
impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.numerator, self.denominator)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}
