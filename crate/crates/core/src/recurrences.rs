//! Order-2 integer recurrences `ω_{n+2} = c1·ω_{n+1} + c2·ωₙ`.
//!
//! If `λ, μ` are the roots of `t² − c1·t − c2`, then `ωₙ²` and `ωₙωₙ₊₁` are both
//! combinations of `λ²ⁿ, μ²ⁿ, (λμ)ⁿ`, so their generating functions share the
//! denominator `(1 − λ²x)(1 − μ²x)(1 − λμx)`. Its coefficients follow from
//! `λ + μ = c1`, `λμ = −c2`:
//!
//! ```text
//! e1 = λ² + μ² + λμ        = c1² + c2
//! e2 = λ²μ² + λμ(λ² + μ²)  = −c2·(c1² + c2)
//! e3 = (λμ)³               = −c2³
//! denominator = 1 − e1·x + e2·x² − e3·x³
//! ```

use alloc::vec::Vec;

use crate::exact::{Integer, Rational};
use crate::series::{Polynomial, RationalFunction};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearRecurrence2 {
    pub c1: Integer,
    pub c2: Integer,
    pub w0: Integer,
    pub w1: Integer,
}

impl LinearRecurrence2 {
    pub fn new(
        c1: impl Into<Integer>,
        c2: impl Into<Integer>,
        w0: impl Into<Integer>,
        w1: impl Into<Integer>,
    ) -> Self {
        Self {
            c1: c1.into(),
            c2: c2.into(),
            w0: w0.into(),
            w1: w1.into(),
        }
    }

    /// Fibonacci numbers, `ω₀ = 0`, `ω₁ = 1`.
    pub fn fibonacci() -> Self {
        Self::new(1, 1, 0, 1)
    }

    /// `ωₙ`, by iteration.
    pub fn term(&self, n: usize) -> Integer {
        let mut it = self.iter();
        it.nth(n).expect("recurrence iterator is infinite")
    }

    /// `ω₀ … ω_{count-1}`.
    pub fn terms(&self, count: usize) -> Vec<Integer> {
        self.iter().take(count).collect()
    }

    pub fn iter(&self) -> Terms<'_> {
        Terms {
            rec: self,
            cur: self.w0.clone(),
            next: self.w1.clone(),
        }
    }

    /// `ωₙ₊₁² − ωₙ·ωₙ₊₂`.
    pub fn casoratian(&self, n: usize) -> Integer {
        let mut it = self.iter().skip(n);
        let a = it.next().expect("infinite");
        let b = it.next().expect("infinite");
        let c = it.next().expect("infinite");
        &b * &b - &a * &c
    }

    /// `(−c2)ⁿ · (w1² − w0·(c1·w1 + c2·w0))`, the closed form of [`casoratian`](Self::casoratian).
    pub fn casoratian_closed_form(&self, n: usize) -> Integer {
        let initial = &self.w1 * &self.w1 - &self.w0 * (&self.c1 * &self.w1 + &self.c2 * &self.w0);
        num_traits::pow::pow(-self.c2.clone(), n) * initial
    }

    /// Shared denominator of [`square_ogf`](Self::square_ogf) and [`cross_ogf`](Self::cross_ogf).
    pub fn product_denominator(&self) -> Polynomial {
        let c1sq = &self.c1 * &self.c1;
        let e1 = &c1sq + &self.c2;
        let e2 = -(&self.c2) * &e1;
        let e3 = -(&self.c2 * &self.c2 * &self.c2);
        Polynomial::from_coeffs(
            [Integer::from(1), -e1, e2, -e3]
                .into_iter()
                .map(Rational::from_integer)
                .collect(),
        )
    }

    /// `Σ ωₙ² xⁿ` as a rational function.
    pub fn square_ogf(&self) -> RationalFunction {
        let t = self.terms(3);
        self.ogf_from_prefix(t.iter().map(|w| w * w).collect())
    }

    /// `Σ ωₙωₙ₊₁ xⁿ` as a rational function.
    pub fn cross_ogf(&self) -> RationalFunction {
        let t = self.terms(4);
        self.ogf_from_prefix(t.windows(2).map(|w| &w[0] * &w[1]).collect())
    }

    // numerator = (first three terms) · denominator, truncated below x³
    fn ogf_from_prefix(&self, prefix: Vec<Integer>) -> RationalFunction {
        let den = self.product_denominator();
        let head =
            Polynomial::from_coeffs(prefix.into_iter().map(Rational::from_integer).collect());
        let full = &head * &den;
        let num = Polynomial::from_coeffs((0..3).map(|i| full.coeff(i)).collect());
        RationalFunction::new(num, den).expect("denominator has constant term 1")
    }
}

pub struct Terms<'a> {
    rec: &'a LinearRecurrence2,
    cur: Integer,
    next: Integer,
}

impl Iterator for Terms<'_> {
    type Item = Integer;

    fn next(&mut self) -> Option<Integer> {
        let after = &self.rec.c1 * &self.next + &self.rec.c2 * &self.cur;
        let out = core::mem::replace(&mut self.cur, core::mem::replace(&mut self.next, after));
        Some(out)
    }
}

/// True when `ωₙ₊₁² − ωₙωₙ₊₂ = (−c2)·(previous)` holds for every `1 ≤ n ≤ n_max`.
pub fn casoratian_is_geometric(rec: &LinearRecurrence2, n_max: usize) -> bool {
    let ratio = -rec.c2.clone();
    let mut prev = rec.casoratian(0);
    for n in 1..=n_max {
        let cur = rec.casoratian(n);
        if cur != &ratio * &prev {
            return false;
        }
        prev = cur;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn rec_9() -> LinearRecurrence2 {
        // ω_{n+2} = 9ωₙ − 7ω_{n+1}
        LinearRecurrence2::new(-7, 9, 0, 1)
    }

    fn known_recurrences() -> Vec<(LinearRecurrence2, [i64; 4])> {
        alloc::vec![
            (LinearRecurrence2::fibonacci(), [1, -2, -2, 1]),
            (rec_9(), [1, -58, -522, 729]),
            (LinearRecurrence2::new(2, -6, 0, 1), [1, 2, -12, -216]),
            (LinearRecurrence2::new(-5, 3, 0, 1), [1, -28, -84, 27]),
            (LinearRecurrence2::new(6, 3, 0, 1), [1, -39, -117, 27]),
        ]
    }

    #[test]
    fn term_examples() {
        assert_eq!(LinearRecurrence2::fibonacci().term(6), int(8));
        assert_eq!(rec_9().term(2), int(-7));
        assert_eq!(rec_9().term(3), int(58));
    }

    #[test]
    fn casoratian_examples() {
        assert_eq!(rec_9().casoratian(0), int(1));
        assert_eq!(rec_9().casoratian(1), int(-9));
        let r28 = LinearRecurrence2::new(-5, 3, 0, 1);
        assert_eq!(int(8) * r28.casoratian(0), int(8));
        assert_eq!(int(8) * r28.casoratian(3), int(8 * -27));
    }

    #[test]
    fn casoratian_matches_closed_form_and_is_geometric() {
        for (rec, _) in known_recurrences() {
            for n in 0..=100 {
                assert_eq!(rec.casoratian(n), rec.casoratian_closed_form(n));
            }
            assert!(casoratian_is_geometric(&rec, 100));
        }
        let odd = LinearRecurrence2::new(3, -2, 5, -4);
        for n in 0..40 {
            assert_eq!(odd.casoratian(n), odd.casoratian_closed_form(n));
        }
    }

    #[test]
    fn ogf_denominators_match_table() {
        for (rec, den) in known_recurrences() {
            assert_eq!(rec.product_denominator(), Polynomial::from_i64s(&den));
            assert_eq!(rec.square_ogf().denominator(), &Polynomial::from_i64s(&den));
        }
    }

    #[test]
    fn ogf_examples() {
        let fib = LinearRecurrence2::fibonacci();
        assert_eq!(
            fib.square_ogf(),
            RationalFunction::from_i64s(&[0, 1, -1], &[1, -2, -2, 1])
        );
        assert_eq!(
            fib.cross_ogf(),
            RationalFunction::from_i64s(&[0, 1], &[1, -2, -2, 1])
        );
        assert_eq!(
            rec_9().square_ogf(),
            RationalFunction::from_i64s(&[0, 1, -9], &[1, -58, -522, 729])
        );
        assert_eq!(
            rec_9().cross_ogf(),
            RationalFunction::from_i64s(&[0, -7], &[1, -58, -522, 729])
        );
        let r26 = LinearRecurrence2::new(2, -6, 0, 1);
        assert_eq!(
            r26.square_ogf(),
            RationalFunction::from_i64s(&[0, 1, 6], &[1, 2, -12, -216])
        );
        assert_eq!(
            r26.cross_ogf(),
            RationalFunction::from_i64s(&[0, 2], &[1, 2, -12, -216])
        );
        let r28 = LinearRecurrence2::new(-5, 3, 0, 1);
        assert_eq!(
            r28.cross_ogf(),
            RationalFunction::from_i64s(&[0, -5], &[1, -28, -84, 27])
        );
        assert_eq!(
            r28.square_ogf(),
            RationalFunction::from_i64s(&[0, 1, -3], &[1, -28, -84, 27])
        );
    }

    #[test]
    fn ogf_coefficients_match_iteration() {
        let mut recs: Vec<LinearRecurrence2> =
            known_recurrences().into_iter().map(|(r, _)| r).collect();
        recs.push(LinearRecurrence2::new(2, -1, 3, 5)); // repeated root λ = μ = 1
        recs.push(LinearRecurrence2::new(0, 4, 1, -1));
        for rec in recs {
            let w = rec.terms(202);
            let sq = rec.square_ogf().taylor_coeffs(201).unwrap();
            let cr = rec.cross_ogf().taylor_coeffs(201).unwrap();
            for n in 0..=200 {
                assert_eq!(sq[n], Rational::from_integer(&w[n] * &w[n]));
                assert_eq!(cr[n], Rational::from_integer(&w[n] * &w[n + 1]));
            }
        }
    }
}
