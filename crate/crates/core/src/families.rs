//! Infinite families of solutions generated by rational functions.
//!
//! Every family has two independent descriptions:
//!
//! - generating functions `aₙ = [xⁿ] P_a(x)/Q(x)`, stored verbatim, and
//! - quadratic forms in `(A, B) = (ωₙ₊₁, ωₙ)` for an order-2 recurrence `ω`.
//!
//! [`generate`] uses the first, [`substitution_values`] the second, and
//! [`generator_from_forms`] rebuilds the first from the second symbolically.
//!
//! The residual summand (if any) is `sign · (base · ratioⁿ)^exponent` on the right-hand side.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer as _;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{is_integral, pow_rational, rat, ratio, Integer, Rational};
use crate::identities::Side;
use crate::recurrences::LinearRecurrence2;
use crate::series::{Polynomial, RationalFunction, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family {name:?}; valid names: {valid}")]
    UnknownFamily { name: String, valid: String },
    #[error("family {family} at n = {index} violates its power relation")]
    Inconsistent { family: String, index: usize },
    #[error("family {0} has the wrong expansion direction for this operation")]
    WrongDirection(String),
    #[error("clearing base must be at least 2")]
    InvalidBase,
    #[error("no power of {base} is divisible by the denominator {denominator}")]
    NotClearable { base: Integer, denominator: Integer },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Coefficients of `xⁿ` at 0.
    Taylor,
    /// Coefficients of `x⁻⁽ⁿ⁺¹⁾` at infinity.
    Laurent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn apply(self, v: Rational) -> Rational {
        match self {
            Sign::Plus => v,
            Sign::Minus => -v,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Residual `sign · (base · ratioⁿ)^exponent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualSpec {
    pub base: Rational,
    pub ratio: Rational,
    pub sign: Sign,
}

impl ResidualSpec {
    pub fn value(&self, n: usize) -> Rational {
        let n = u32::try_from(n).expect("index fits in u32");
        &self.base * pow_rational(&self.ratio, n)
    }
}

/// `Σ_left xᵢ^e = Σ_right xⱼ^e ± r^e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerRelation {
    pub entries: Vec<Rational>,
    pub sides: Vec<Side>,
    pub exponent: u32,
    /// Sign and base value of the residual term on the right-hand side.
    pub residual: Option<(Sign, Rational)>,
}

impl PowerRelation {
    /// `a^e + b^e = c^e + d^e`.
    pub fn two_by_two(entries: [Rational; 4], exponent: u32) -> Self {
        Self {
            entries: entries.to_vec(),
            sides: vec![Side::Left, Side::Left, Side::Right, Side::Right],
            exponent,
            residual: None,
        }
    }

    /// `Σ left − Σ right − residual term`; zero iff the relation holds.
    pub fn defect(&self) -> Rational {
        let mut acc = Rational::zero();
        for (x, side) in self.entries.iter().zip(&self.sides) {
            let p = pow_rational(x, self.exponent);
            match side {
                Side::Left => acc += p,
                Side::Right => acc -= p,
            }
        }
        if let Some((sign, r)) = &self.residual {
            acc -= sign.apply(pow_rational(r, self.exponent));
        }
        acc
    }

    pub fn holds(&self) -> bool {
        self.entries.len() == self.sides.len() && self.defect().is_zero()
    }

    pub fn scaled(&self, k: &Rational) -> Self {
        Self {
            entries: self.entries.iter().map(|x| x * k).collect(),
            sides: self.sides.clone(),
            exponent: self.exponent,
            residual: self.residual.as_ref().map(|(s, r)| (*s, r * k)),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(is_integral)
            && self.residual.as_ref().is_none_or(|(_, r)| is_integral(r))
    }
}

/// One member of a family; the relation is checked on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionTuple {
    index: usize,
    relation: PowerRelation,
}

impl SolutionTuple {
    pub fn new(family: &str, index: usize, relation: PowerRelation) -> Result<Self, FamilyError> {
        if !relation.holds() {
            return Err(FamilyError::Inconsistent {
                family: family.to_string(),
                index,
            });
        }
        Ok(Self { index, relation })
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn relation(&self) -> &PowerRelation {
        &self.relation
    }

    pub fn entries(&self) -> &[Rational] {
        &self.relation.entries
    }

    pub fn residual(&self) -> Option<&(Sign, Rational)> {
        self.relation.residual.as_ref()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub name: String,
    pub exponent: u32,
    pub generators: Vec<RationalFunction>,
    pub sides: Vec<Side>,
    pub residual: Option<ResidualSpec>,
    pub direction: Direction,
    pub recurrence: LinearRecurrence2,
    /// Per generator, coefficients of `A², AB, B²` with `(A, B) = (ωₙ₊₁, ωₙ)`.
    pub forms: Vec<[i64; 3]>,
    /// The form whose value is the residual base, when there is one.
    pub residual_form: Option<[i64; 3]>,
}

impl FamilySpec {
    pub fn denominator(&self) -> &Polynomial {
        self.generators[0].denominator()
    }
}

struct Raw {
    name: &'static str,
    exponent: u32,
    rec: (i64, i64),
    den: [i64; 4],
    nums: &'static [[i64; 3]],
    forms: &'static [[i64; 3]],
    sides: &'static [Side],
    residual: Option<(Rational, Rational, Sign, [i64; 3])>,
}

impl Raw {
    fn build(self, direction: Direction, name: &str) -> FamilySpec {
        FamilySpec {
            name: name.to_string(),
            exponent: self.exponent,
            generators: self
                .nums
                .iter()
                .map(|n| RationalFunction::from_i64s(n, &self.den))
                .collect(),
            sides: self.sides.to_vec(),
            residual: self.residual.as_ref().map(|(b, r, s, _)| ResidualSpec {
                base: b.clone(),
                ratio: r.clone(),
                sign: *s,
            }),
            direction,
            recurrence: LinearRecurrence2::new(self.rec.0, self.rec.1, 0, 1),
            forms: self.forms.to_vec(),
            residual_form: self.residual.map(|(_, _, _, f)| f),
        }
    }
}

const L: Side = Side::Left;
const R: Side = Side::Right;
const CUBIC_RESIDUAL: &[Side] = &[L, L, R];
const TWO_BY_TWO: &[Side] = &[L, L, R, R];
const FIVE_ONE: &[Side] = &[L, L, L, L, L, R];
const FOUR_ONE: &[Side] = &[L, L, L, L, R];

fn taylor_raw() -> Vec<Raw> {
    use Sign::{Minus, Plus};
    vec![
        Raw {
            name: "thm1.1",
            exponent: 3,
            rec: (9, 1),
            den: [1, -82, -82, 1],
            nums: &[[1, 53, 9], [2, -26, -12], [2, 8, -10]],
            forms: &[[1, 7, -9], [2, -4, 12], [2, 0, 10]],
            sides: CUBIC_RESIDUAL,
            residual: Some((rat(1), rat(-1), Plus, [1, -9, -1])),
        },
        Raw {
            name: "thm2.4",
            exponent: 3,
            rec: (1, 1),
            den: [1, -2, -2, 1],
            nums: &[[1, -3, 9], [2, 6, -12], [2, 8, -10], [1, -11, 1]],
            forms: &[[1, 7, -9], [2, -4, 12], [2, 0, 10], [1, -9, -1]],
            sides: TWO_BY_TWO,
            residual: None,
        },
        Raw {
            name: "thm2.5",
            exponent: 3,
            rec: (-7, 9),
            den: [1, -58, -522, 729],
            nums: &[[2, -8, -90], [1, 53, 9], [2, 22, -108]],
            forms: &[[2, 0, 10], [1, -9, -1], [2, -4, 12]],
            sides: CUBIC_RESIDUAL,
            residual: Some((rat(1), rat(-9), Plus, [1, 7, -9])),
        },
        Raw {
            name: "thm2.6",
            exponent: 3,
            rec: (2, -6),
            den: [1, 2, -12, -216],
            nums: &[[2, 22, 60], [1, -13, -6], [1, 11, -54]],
            forms: &[[2, 0, 10], [1, -9, -1], [1, 7, -9]],
            sides: CUBIC_RESIDUAL,
            residual: Some((rat(2), rat(6), Plus, [2, -4, 12])),
        },
        Raw {
            name: "thm2.7",
            exponent: 4,
            rec: (1, 1),
            den: [1, -2, -2, 1],
            nums: &[
                [8, 8, 24],
                [6, -68, 18],
                [14, -60, 42],
                [9, 18, -27],
                [4, 8, -12],
                [15, 30, -45],
            ],
            forms: &[
                [8, 40, -24],
                [6, -44, -18],
                [14, -4, -42],
                [9, 0, 27],
                [4, 0, 12],
                [15, 0, 45],
            ],
            sides: FIVE_ONE,
            residual: None,
        },
        Raw {
            name: "thm2.8",
            exponent: 4,
            rec: (-5, 3),
            den: [1, -28, -84, 27],
            nums: &[
                [6, 184, 54],
                [14, -64, 126],
                [9, 0, -81],
                [4, 0, -36],
                [15, 0, -135],
            ],
            forms: &[
                [6, -44, -18],
                [14, -4, -42],
                [9, 0, 27],
                [4, 0, 12],
                [15, 0, 45],
            ],
            sides: FOUR_ONE,
            residual: Some((rat(8), rat(-3), Minus, [8, 40, -24])),
        },
        Raw {
            name: "thm2.9",
            exponent: 4,
            rec: (1, 1),
            den: [1, -2, -2, 1],
            nums: &[
                [4, -16, 12],
                [3, 6, -9],
                [2, -20, 6],
                [4, 8, -12],
                [2, 4, 6],
                [5, 10, -15],
            ],
            forms: &[
                [4, 0, -12],
                [3, 0, 9],
                [2, -12, -6],
                [4, 0, 12],
                [2, 12, -6],
                [5, 0, 15],
            ],
            sides: FIVE_ONE,
            residual: None,
        },
        Raw {
            name: "thm2.10",
            exponent: 4,
            rec: (6, 3),
            den: [1, -39, -117, 27],
            nums: &[
                [4, -24, 36],
                [3, 0, -27],
                [4, 0, -36],
                [2, 60, 18],
                [5, 0, -45],
            ],
            forms: &[[4, 0, -12], [3, 0, 9], [4, 0, 12], [2, 12, -6], [5, 0, 15]],
            sides: FOUR_ONE,
            residual: Some((rat(2), rat(-3), Minus, [2, -12, -6])),
        },
    ]
}

/// All eleven built-in families: eight expanded at 0, then three expanded at infinity.
pub fn builtin_families() -> Vec<FamilySpec> {
    let mut out: Vec<FamilySpec> = Vec::new();
    let mut laurent = Vec::new();
    for raw in taylor_raw() {
        let name = raw.name;
        let at_infinity = match name {
            "thm1.1" => Some((rat(1), rat(-1), Sign::Plus)),
            "thm2.5" => Some((ratio(-1, 9), ratio(-1, 9), Sign::Minus)),
            "thm2.6" => Some((ratio(1, 3), ratio(1, 6), Sign::Minus)),
            _ => None,
        };
        let spec = raw.build(Direction::Taylor, name);
        if let Some((base, ratio, sign)) = at_infinity {
            let mut l = spec.clone();
            l.name = alloc::format!("{name}-laurent");
            l.direction = Direction::Laurent;
            l.residual = Some(ResidualSpec { base, ratio, sign });
            // the forms describe the expansion at 0 only
            l.forms.clear();
            l.residual_form = None;
            laurent.push(l);
        }
        out.push(spec);
    }
    out.extend(laurent);
    out
}

pub fn family_names() -> Vec<String> {
    builtin_families().into_iter().map(|f| f.name).collect()
}

pub fn family(name: &str) -> Result<FamilySpec, FamilyError> {
    let all = builtin_families();
    let valid = all
        .iter()
        .map(|f| f.name.as_str())
        .collect::<Vec<_>>()
        .join(", ");
    all.iter()
        .find(|f| f.name == name)
        .cloned()
        .ok_or(FamilyError::UnknownFamily {
            name: name.to_string(),
            valid,
        })
}

fn assemble(
    spec: &FamilySpec,
    columns: Vec<Vec<Rational>>,
    n_max: usize,
) -> Result<Vec<SolutionTuple>, FamilyError> {
    (0..=n_max)
        .map(|n| {
            let relation = PowerRelation {
                entries: columns.iter().map(|c| c[n].clone()).collect(),
                sides: spec.sides.clone(),
                exponent: spec.exponent,
                residual: spec.residual.as_ref().map(|r| (r.sign, r.value(n))),
            };
            SolutionTuple::new(&spec.name, n, relation)
        })
        .collect()
}

/// Tuples for `n = 0..=n_max` in the family's own direction.
pub fn generate(spec: &FamilySpec, n_max: usize) -> Result<Vec<SolutionTuple>, FamilyError> {
    match spec.direction {
        Direction::Taylor => {
            let columns = spec
                .generators
                .iter()
                .map(|g| g.taylor_coeffs(n_max + 1))
                .collect::<Result<Vec<_>, _>>()?;
            assemble(spec, columns, n_max)
        }
        Direction::Laurent => generate_laurent(spec, n_max),
    }
}

/// Tuples `(αₙ, βₙ, γₙ)` from the expansions at infinity; the residual pairs with index `n + 1`.
pub fn generate_laurent(
    spec: &FamilySpec,
    n_max: usize,
) -> Result<Vec<SolutionTuple>, FamilyError> {
    if spec.direction != Direction::Laurent {
        return Err(FamilyError::WrongDirection(spec.name.clone()));
    }
    let columns = spec
        .generators
        .iter()
        .map(|g| g.laurent_coeffs_at_infinity(n_max + 1))
        .collect::<Result<Vec<_>, _>>()?;
    assemble(spec, columns, n_max)
}

// least k with d | base^k, or None when d has a prime factor not dividing base
fn clearing_power(d: &Integer, base: &Integer) -> Option<u32> {
    let mut rest = d.clone();
    let mut k = 0;
    while !rest.is_one() {
        let g = rest.gcd(base);
        if g.is_one() {
            return None;
        }
        rest /= g;
        k += 1;
    }
    Some(k)
}

/// Scales entries and residual by the least `base^k` that makes all of them integers.
pub fn clear_denominators(t: &SolutionTuple, base: &Integer) -> Result<SolutionTuple, FamilyError> {
    if *base < Integer::from(2) {
        return Err(FamilyError::InvalidBase);
    }
    let rel = &t.relation;
    let mut k = 0;
    for v in rel
        .entries
        .iter()
        .chain(rel.residual.as_ref().map(|(_, r)| r))
    {
        k = k.max(
            clearing_power(v.denom(), base).ok_or_else(|| FamilyError::NotClearable {
                base: base.clone(),
                denominator: v.denom().clone(),
            })?,
        );
    }
    let factor = Rational::from_integer(num_traits::pow::pow(base.clone(), k as usize));
    SolutionTuple::new("cleared", t.index, rel.scaled(&factor))
}

/// `dₙ = −aₙ₊₁` for `n ≤ n_max` in the two-by-two cubic family.
pub fn check_index_shift(n_max: usize) -> Result<bool, FamilyError> {
    let rows = generate(&family("thm2.4")?, n_max + 1)?;
    Ok(rows
        .windows(2)
        .all(|w| w[0].entries()[3] == -&w[1].entries()[0]))
}

fn eval_form(f: &[i64; 3], a: &Integer, b: &Integer) -> Integer {
    Integer::from(f[0]) * a * a + Integer::from(f[1]) * a * b + Integer::from(f[2]) * b * b
}

/// Entries and residual base at index `n` computed from the recurrence alone.
///
/// Empty entries for families without forms (the expansions at infinity).
pub fn substitution_values(spec: &FamilySpec, n: usize) -> (Vec<Integer>, Option<Integer>) {
    let mut it = spec.recurrence.iter().skip(n);
    let b = it.next().expect("infinite");
    let a = it.next().expect("infinite");
    (
        spec.forms.iter().map(|f| eval_form(f, &a, &b)).collect(),
        spec.residual_form.as_ref().map(|f| eval_form(f, &a, &b)),
    )
}

/// True iff generating functions and recurrence substitution agree for all `n ≤ n_max`,
/// residual included.
pub fn dual_pipeline_agrees(spec: &FamilySpec, n_max: usize) -> Result<bool, FamilyError> {
    if spec.direction != Direction::Taylor || spec.forms.len() != spec.generators.len() {
        return Err(FamilyError::WrongDirection(spec.name.clone()));
    }
    let rows = generate(spec, n_max)?;
    for (n, row) in rows.iter().enumerate() {
        let (entries, residual) = substitution_values(spec, n);
        if row.entries().iter().ne(entries
            .into_iter()
            .map(Rational::from_integer)
            .collect::<Vec<_>>()
            .iter())
        {
            return Ok(false);
        }
        let expected = row.residual().map(|(_, r)| r.clone());
        if expected != residual.map(Rational::from_integer) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Σ (f₀ωₙ₊₁² + f₁ωₙωₙ₊₁ + f₂ωₙ²) xⁿ` as a rational function over the recurrence's
/// shared denominator.
pub fn generator_from_forms(rec: &LinearRecurrence2, form: &[i64; 3]) -> RationalFunction {
    let sq = rec.square_ogf();
    let cr = rec.cross_ogf();
    let den = sq.denominator().clone();
    // Σ ωₙ₊₁² xⁿ = (S(x) − ω₀²) / x
    let w0sq = Rational::from_integer(&rec.w0 * &rec.w0);
    let shifted_full = sq.numerator() - &den.scale(&w0sq);
    let shifted = Polynomial::from_coeffs(shifted_full.coeffs().iter().skip(1).cloned().collect());
    let num = &(&shifted.scale(&rat(form[0])) + &cr.numerator().scale(&rat(form[1])))
        + &sq.numerator().scale(&rat(form[2]));
    RationalFunction::new(num, den).expect("nonzero denominator")
}

/// True when the residual, if any, is nonzero for every `n`.
pub fn residual_nonvanishing(spec: &FamilySpec) -> bool {
    spec.residual
        .as_ref()
        .is_none_or(|r| !r.base.is_zero() && !r.ratio.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::identities::{certify_identity, QuadraticForm, QuadraticFormTuple};
    use proptest::prelude::*;

    fn ints(t: &SolutionTuple) -> Vec<Rational> {
        t.entries().to_vec()
    }

    fn rats(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn catalogue() {
        let all = builtin_families();
        assert_eq!(all.len(), 11);
        assert_eq!(
            all.iter()
                .filter(|f| f.direction == Direction::Laurent)
                .count(),
            3
        );
        assert_eq!(
            family("thm2.4").unwrap().denominator(),
            &Polynomial::from_i64s(&[1, -2, -2, 1])
        );
        assert_eq!(family("thm2.9").unwrap().generators.len(), 6);
        assert!(matches!(
            family("bogus"),
            Err(FamilyError::UnknownFamily { .. })
        ));
        for f in &all {
            assert!(f
                .generators
                .iter()
                .all(|g| g.denominator() == f.denominator()));
            assert_eq!(
                f.denominator(),
                &f.recurrence.product_denominator(),
                "{}",
                f.name
            );
            assert_eq!(f.generators.len(), f.sides.len());
            assert!(residual_nonvanishing(f));
        }
    }

    #[test]
    fn taylor_examples() {
        let g = |name: &str, n: usize| generate(&family(name).unwrap(), n).unwrap().pop().unwrap();
        assert_eq!(ints(&g("thm2.4", 1)), rats(&[-1, 10, 12, -9]));
        let t = g("thm2.5", 1);
        assert_eq!(ints(&t), rats(&[108, 111, 138]));
        assert_eq!(t.residual(), Some(&(Sign::Plus, rat(-9))));
        assert_eq!(ints(&g("thm2.7", 2)), rats(&[88, -82, 6, 63, 28, 105]));
        let t = g("thm2.10", 1);
        assert_eq!(ints(&t), rats(&[132, 117, 156, 138, 195]));
        assert_eq!(t.residual(), Some(&(Sign::Minus, rat(-6))));
        let t = g("thm1.1", 1);
        assert_eq!(ints(&t), rats(&[135, 138, 172]));
        assert_eq!(t.residual(), Some(&(Sign::Plus, rat(-1))));
    }

    #[test]
    fn six_family_residuals_double() {
        // 552³ − 36³ = 444³ + 432³, so the residual base is 2·6³ = 432
        let rows = generate(&family("thm2.6").unwrap(), 4).unwrap();
        assert_eq!(ints(&rows[3]), rats(&[552, -36, 444]));
        assert_eq!(rows[3].residual(), Some(&(Sign::Plus, rat(432))));
        assert_eq!(ints(&rows[4]), rats(&[3360, -2736, 336]));
        assert_eq!(rows[4].residual(), Some(&(Sign::Plus, rat(2592))));
    }

    #[test]
    fn laurent_examples() {
        let rows = generate(&family("thm1.1-laurent").unwrap(), 2).unwrap();
        assert_eq!(ints(&rows[0]), rats(&[9, -12, -10]));
        assert_eq!(ints(&rows[1]), rats(&[791, -1010, -812]));
        assert_eq!(ints(&rows[2]), rats(&[65601, -83802, -67402]));

        let t = &generate(&family("thm2.5-laurent").unwrap(), 0).unwrap()[0];
        assert_eq!(ints(t), [ratio(-10, 81), ratio(1, 81), ratio(-4, 27)]);
        assert_eq!(t.residual(), Some(&(Sign::Minus, ratio(-1, 9))));

        let t = &generate(&family("thm2.6-laurent").unwrap(), 0).unwrap()[0];
        assert_eq!(ints(t), [ratio(-5, 18), ratio(1, 36), ratio(1, 4)]);
        assert_eq!(t.residual(), Some(&(Sign::Minus, ratio(1, 3))));

        assert_eq!(
            generate_laurent(&family("thm2.5").unwrap(), 1),
            Err(FamilyError::WrongDirection("thm2.5".into()))
        );
    }

    #[test]
    fn clearing_examples() {
        let rows = generate(&family("thm2.5-laurent").unwrap(), 2).unwrap();
        let c = clear_denominators(&rows[0], &int(9)).unwrap();
        assert_eq!(ints(&c), rats(&[-10, 1, -12]));
        assert_eq!(c.residual(), Some(&(Sign::Minus, rat(-9))));
        let c = clear_denominators(&rows[1], &int(9)).unwrap();
        assert_eq!(ints(&c), rats(&[-652, 535, -498]));
        assert_eq!(c.residual(), Some(&(Sign::Minus, rat(81))));
        let c = clear_denominators(&rows[2], &int(9)).unwrap();
        assert_eq!(ints(&c), rats(&[-41578, 32281, -33690]));
        assert_eq!(c.residual(), Some(&(Sign::Minus, rat(-729))));

        let rows = generate(&family("thm2.6-laurent").unwrap(), 2).unwrap();
        let c = clear_denominators(&rows[1], &int(6)).unwrap();
        assert_eq!(ints(&c), rats(&[-112, 76, -84]));
        assert_eq!(c.residual(), Some(&(Sign::Minus, rat(72))));
        let c = clear_denominators(&rows[2], &int(6)).unwrap();
        assert_eq!(ints(&c), rats(&[-328, -356, 60]));
        assert_eq!(c.residual(), Some(&(Sign::Minus, rat(432))));

        // 1/81 never clears with powers of 2
        assert!(matches!(
            clear_denominators(&rows[0], &int(2)),
            Err(FamilyError::NotClearable { .. })
        ));
        assert_eq!(
            clear_denominators(&rows[0], &int(1)),
            Err(FamilyError::InvalidBase)
        );
        // integral tuples are untouched
        let t = &generate(&family("thm2.4").unwrap(), 1).unwrap()[1];
        assert_eq!(&clear_denominators(t, &int(7)).unwrap(), t);
    }

    #[test]
    fn index_shift() {
        for n in [0, 4, 100] {
            assert!(check_index_shift(n).unwrap());
        }
    }

    #[test]
    fn substitution_route_agrees() {
        for f in builtin_families()
            .iter()
            .filter(|f| f.direction == Direction::Taylor)
        {
            assert!(dual_pipeline_agrees(f, 60).unwrap(), "{}", f.name);
        }
    }

    #[test]
    fn transcribed_generators_match_forms() {
        for f in builtin_families()
            .iter()
            .filter(|f| f.direction == Direction::Taylor)
        {
            for (g, form) in f.generators.iter().zip(&f.forms) {
                assert_eq!(g, &generator_from_forms(&f.recurrence, form), "{}", f.name);
            }
        }
    }

    #[test]
    fn forms_are_identities() {
        // moving the residual form onto the proper side gives a certified identity
        for f in builtin_families()
            .iter()
            .filter(|f| f.direction == Direction::Taylor)
        {
            let mut forms: Vec<QuadraticForm> = f
                .forms
                .iter()
                .map(|c| QuadraticForm::from_i64s(c))
                .collect();
            let mut sides = f.sides.clone();
            if let (Some(r), Some(form)) = (&f.residual, &f.residual_form) {
                forms.push(QuadraticForm::from_i64s(form));
                sides.push(match r.sign {
                    Sign::Plus => Side::Right,
                    Sign::Minus => Side::Left,
                });
            }
            let t = QuadraticFormTuple::new(vec!["A".into(), "B".into()], forms, sides, f.exponent)
                .unwrap();
            assert!(certify_identity(&t).unwrap(), "{}", f.name);
        }
    }

    #[test]
    fn residual_is_scaled_casoratian() {
        for f in builtin_families()
            .iter()
            .filter(|f| f.direction == Direction::Taylor)
        {
            let Some(r) = &f.residual else { continue };
            let scale = r.base.clone();
            for n in 0..=40 {
                let cas = Rational::from_integer(f.recurrence.casoratian(n));
                assert_eq!(r.value(n), &scale * cas, "{} n={n}", f.name);
            }
        }
    }

    #[test]
    fn broken_relation_rejected() {
        let rel = PowerRelation::two_by_two([rat(9), rat(10), rat(1), rat(13)], 3);
        assert!(matches!(
            SolutionTuple::new("x", 0, rel),
            Err(FamilyError::Inconsistent { .. })
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn laurent_relations_hold_far_out(n in 0usize..50) {
            for name in ["thm1.1-laurent", "thm2.5-laurent", "thm2.6-laurent"] {
                let rows = generate(&family(name).unwrap(), n).unwrap();
                prop_assert!(rows[n].relation().holds());
            }
        }

        #[test]
        fn cleared_tuples_are_integral(n in 0usize..12) {
            for (name, base) in [("thm2.5-laurent", 9), ("thm2.6-laurent", 6)] {
                let rows = generate(&family(name).unwrap(), n).unwrap();
                let c = clear_denominators(&rows[n], &int(base)).unwrap();
                prop_assert!(c.relation().is_integral());
                prop_assert!(c.relation().holds());
            }
        }
    }
}
