use alloc::collections::BTreeMap;
use core::cmp::Ordering;
use core::fmt;

use crate::exact::{ExactError, RadicalScalar, Rational};

/// Exponent vector over the variables `(a, b, c)`.
///
/// Ordered graded-lexicographically with `a > b > c`: higher total degree is greater,
/// ties broken by the exponent of `a`, then `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u8; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn var(i: usize) -> Self {
        let mut e = [0u8; 3];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in up to three variables with [`RadicalScalar`] coefficients.
///
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, RadicalScalar>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: RadicalScalar) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::ONE, c).expect("single term");
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> RadicalScalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(RadicalScalar::zero)
    }

    /// Terms from the greatest monomial down.
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &RadicalScalar)> {
        self.terms.iter().rev()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, m: Monomial, c: RadicalScalar) -> Result<(), ExactError> {
        if c.is_zero() {
            return Ok(());
        }
        let sum = match self.terms.remove(&m) {
            Some(prev) => prev.try_add(&c)?,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(m, sum);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExactError> {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone())?;
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ExactError> {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.neg())?;
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ExactError> {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.try_mul(cb)?)?;
            }
        }
        Ok(out)
    }

    pub fn try_pow(&self, exp: u32) -> Result<Self, ExactError> {
        let mut acc = Self::constant(RadicalScalar::one());
        for _ in 0..exp {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    /// Value at a rational point; missing coordinates count as zero.
    pub fn eval(&self, point: &[Rational]) -> Result<RadicalScalar, ExactError> {
        let mut acc = RadicalScalar::zero();
        for (m, c) in &self.terms {
            let mut v = Rational::from_integer(1.into());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    let x = point.get(i).cloned().unwrap_or_default();
                    v *= crate::exact::pow_rational(&x, u32::from(e));
                }
            }
            acc = acc.try_add(&c.scale(&v))?;
        }
        Ok(acc)
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("MultiPoly{")?;
        for (i, (m, c)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "a^{}b^{}c^{}: {c}", m.0[0], m.0[1], m.0[2])?;
        }
        f.write_str("}")
    }
}
