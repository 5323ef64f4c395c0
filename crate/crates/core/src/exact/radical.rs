use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::{rational_normalize, squarefree_decompose, ExactError, Integer, Rational};

pub const MAX_RADICANDS: usize = 3;

/// An element `Σ c_S · ∏_{i∈S} √dᵢ` of ℚ adjoined with up to three formal square roots.
///
/// Components are indexed by bitmask over `radicands`: bit `i` set means `√dᵢ` is a factor.
/// The radicands are kept sorted, and any radicand that no nonzero component uses is
/// dropped, so two equal values always have identical representations.
///
/// Negative radicands are allowed; `√d` is a formal symbol with `√d · √d = d` and nothing
/// is ever ordered or approximated.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RadicalScalar {
    radicands: Vec<Integer>,
    components: Vec<Rational>,
}

impl RadicalScalar {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        Self {
            radicands: Vec::new(),
            components: vec![q],
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(Integer::from(n)))
    }

    /// `coeff · √d` for a squarefree `d ∉ {0, 1}`.
    pub fn radical(coeff: Rational, d: Integer) -> Result<Self, ExactError> {
        check_radicand(&d)?;
        let mut out = Self {
            radicands: vec![d],
            components: vec![Rational::zero(), coeff],
        };
        out.prune();
        Ok(out)
    }

    /// Builds a value from explicit radicands and `2^k` components.
    pub fn from_parts(
        radicands: Vec<Integer>,
        components: Vec<Rational>,
    ) -> Result<Self, ExactError> {
        if radicands.len() > MAX_RADICANDS {
            return Err(ExactError::UnsupportedTower {
                needed: radicands.len(),
            });
        }
        for d in &radicands {
            check_radicand(d)?;
        }
        for (i, d) in radicands.iter().enumerate() {
            if radicands[..i].contains(d) {
                return Err(ExactError::InvalidRadicand(alloc::format!(
                    "{d} (repeated)"
                )));
            }
        }
        if components.len() != 1 << radicands.len() {
            return Err(ExactError::Parse {
                kind: "radical components",
                input: alloc::format!(
                    "{} components for {} radicands",
                    components.len(),
                    radicands.len()
                ),
            });
        }
        // sort radicands and permute component masks to match
        let mut order: Vec<usize> = (0..radicands.len()).collect();
        order.sort_by(|&a, &b| radicands[a].cmp(&radicands[b]));
        let sorted: Vec<Integer> = order.iter().map(|&i| radicands[i].clone()).collect();
        let mut comps = vec![Rational::zero(); components.len()];
        for (mask, c) in components.into_iter().enumerate() {
            let mut new_mask = 0usize;
            for (new_pos, &old_pos) in order.iter().enumerate() {
                if mask & (1 << old_pos) != 0 {
                    new_mask |= 1 << new_pos;
                }
            }
            comps[new_mask] = c;
        }
        let mut out = Self {
            radicands: sorted,
            components: comps,
        };
        out.prune();
        Ok(out)
    }

    /// Square root of a rational as `(f/den)·√D`, where `num·den = f²·D` with `D` squarefree.
    ///
    /// Perfect rational squares come back with no radicands; zero maps to zero.
    pub fn sqrt_of_rational(q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        let prod = q.numer() * q.denom();
        let (root, core) = squarefree_decompose(&prod);
        let coeff = rational_normalize(root, q.denom().clone()).expect("denominator is positive");
        if core.is_one() {
            Self::from_rational(coeff)
        } else {
            Self::radical(coeff, core).expect("squarefree core")
        }
    }

    pub fn radicands(&self) -> &[Integer] {
        &self.radicands
    }

    /// Components in bitmask order over [`radicands`](Self::radicands).
    pub fn components(&self) -> &[Rational] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Zero::is_zero)
    }

    /// The value as a rational, if no radicand is involved.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.radicands.is_empty().then(|| &self.components[0])
    }

    pub fn neg(&self) -> Self {
        Self {
            radicands: self.radicands.clone(),
            components: self.components.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = Self {
            radicands: self.radicands.clone(),
            components: self.components.iter().map(|c| c * k).collect(),
        };
        out.prune();
        out
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExactError> {
        let union = merge_radicands(&self.radicands, &other.radicands)?;
        let mut comps = self.lift(&union);
        for (c, o) in comps.iter_mut().zip(other.lift(&union)) {
            *c += o;
        }
        let mut out = Self {
            radicands: union,
            components: comps,
        };
        out.prune();
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ExactError> {
        let union = merge_radicands(&self.radicands, &other.radicands)?;
        let a = self.lift(&union);
        let b = other.lift(&union);
        let mut comps = vec![Rational::zero(); a.len()];
        for (s, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (t, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                // √d·√d = d for every radicand in both factors
                let mut fold = Integer::one();
                for (i, d) in union.iter().enumerate() {
                    if s & t & (1 << i) != 0 {
                        fold *= d;
                    }
                }
                comps[s ^ t] += x * y * Rational::from_integer(fold);
            }
        }
        let mut out = Self {
            radicands: union,
            components: comps,
        };
        out.prune();
        Ok(out)
    }

    pub fn try_pow(&self, exp: u32) -> Result<Self, ExactError> {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    fn lift(&self, union: &[Integer]) -> Vec<Rational> {
        let positions: Vec<usize> = self
            .radicands
            .iter()
            .map(|d| {
                union
                    .iter()
                    .position(|u| u == d)
                    .expect("radicand in union")
            })
            .collect();
        let mut out = vec![Rational::zero(); 1 << union.len()];
        for (mask, c) in self.components.iter().enumerate() {
            let mut m = 0usize;
            for (i, &p) in positions.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    m |= 1 << p;
                }
            }
            out[m] = c.clone();
        }
        out
    }

    fn prune(&mut self) {
        let mut i = 0;
        while i < self.radicands.len() {
            let bit = 1usize << i;
            let used = self
                .components
                .iter()
                .enumerate()
                .any(|(m, c)| m & bit != 0 && !c.is_zero());
            if used {
                i += 1;
                continue;
            }
            self.radicands.remove(i);
            self.components = self
                .components
                .iter()
                .enumerate()
                .filter(|(m, _)| m & bit == 0)
                .map(|(_, c)| c.clone())
                .collect();
            debug_assert_eq!(self.components.len(), 1 << self.radicands.len());
        }
    }
}

fn check_radicand(d: &Integer) -> Result<(), ExactError> {
    if d.is_zero() || d.is_one() || squarefree_decompose(d).1 != *d {
        return Err(ExactError::InvalidRadicand(alloc::format!("{d}")));
    }
    Ok(())
}

fn merge_radicands(a: &[Integer], b: &[Integer]) -> Result<Vec<Integer>, ExactError> {
    let mut out: Vec<Integer> = a.to_vec();
    for d in b {
        if !out.contains(d) {
            out.push(d.clone());
        }
    }
    out.sort();
    if out.len() > MAX_RADICANDS {
        return Err(ExactError::UnsupportedTower { needed: out.len() });
    }
    Ok(out)
}

impl From<Rational> for RadicalScalar {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl fmt::Display for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (mask, c) in self.components.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mut wrote = false;
            if mask == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
                wrote = true;
            }
            for (i, d) in self.radicands.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    if wrote {
                        f.write_str("*")?;
                    }
                    write!(f, "sqrt({d})")?;
                    wrote = true;
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RadicalScalar({self})")
    }
}
