//! Parametric solutions as tuples of quadratic forms, and their exact certification.
//!
//! A [`QuadraticFormTuple`] claims `Σ_left Fᵢ^k = Σ_right Gⱼ^k` identically in its
//! variables. [`certify_identity`] expands both sides into a [`MultiPoly`] over the
//! radical tower and checks that every coefficient of the difference vanishes.
//!
//! The constructors [`euler_forms`] and [`five_cube_forms`] come from the chord
//! method: a line through a known point of the cubic hypersurface meets it in one more
//! point, which is rational in the line's direction. Rescaling the direction by
//! inverse square roots of the seed's pair sums turns that point into quadratic forms.

mod multipoly;

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;
use thiserror::Error;

use crate::exact::{pow_rational, rat, ExactError, RadicalScalar, Rational};

pub use multipoly::{Monomial, MultiPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("degenerate chord direction: θ has a zero denominator")]
    DegenerateDirection,
    #[error("degenerate seed: {0} is zero")]
    DegenerateSeed(&'static str),
    #[error("seed does not satisfy {0}")]
    SeedRelation(&'static str),
    #[error("malformed form tuple: {0}")]
    Shape(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Which side of the power relation a term sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// Degree-2 monomials in `nvars` variables, in graded-lex order: `a², ab, (ac,) b², (bc, c²)`.
pub fn quadratic_monomials(nvars: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    for i in 0..nvars {
        for j in i..nvars {
            out.push(Monomial::var(i).mul(&Monomial::var(j)));
        }
    }
    out
}

/// A homogeneous quadratic form; coefficients follow [`quadratic_monomials`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticForm {
    pub coeffs: Vec<RadicalScalar>,
}

impl QuadraticForm {
    pub fn from_i64s(c: &[i64]) -> Self {
        Self {
            coeffs: c.iter().map(|&v| RadicalScalar::from_integer(v)).collect(),
        }
    }

    pub fn to_multipoly(&self, nvars: usize) -> Result<MultiPoly, ExactError> {
        let mut p = MultiPoly::zero();
        for (m, c) in quadratic_monomials(nvars).into_iter().zip(&self.coeffs) {
            p.add_term(m, c.clone())?;
        }
        Ok(p)
    }
}

/// A claimed identity `Σ_{left} Fᵢ^exponent = Σ_{right} Fⱼ^exponent` in 2 or 3 variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticFormTuple {
    variables: Vec<String>,
    forms: Vec<QuadraticForm>,
    sides: Vec<Side>,
    exponent: u32,
}

impl QuadraticFormTuple {
    pub fn new(
        variables: Vec<String>,
        forms: Vec<QuadraticForm>,
        sides: Vec<Side>,
        exponent: u32,
    ) -> Result<Self, IdentityError> {
        let nvars = variables.len();
        if !(2..=3).contains(&nvars) {
            return Err(IdentityError::Shape(alloc::format!(
                "{nvars} variables, expected 2 or 3"
            )));
        }
        if !(1..=8).contains(&exponent) {
            return Err(IdentityError::Shape(alloc::format!(
                "exponent {exponent} outside 1..=8"
            )));
        }
        if forms.len() != sides.len() || forms.is_empty() {
            return Err(IdentityError::Shape(
                "forms and sides differ in length".to_string(),
            ));
        }
        let width = nvars * (nvars + 1) / 2;
        if let Some(f) = forms.iter().find(|f| f.coeffs.len() != width) {
            return Err(IdentityError::Shape(alloc::format!(
                "form with {} coefficients, expected {width}",
                f.coeffs.len()
            )));
        }
        Ok(Self {
            variables,
            forms,
            sides,
            exponent,
        })
    }

    fn integer(vars: [&str; 2], forms: &[[i64; 3]], sides: &[Side], exponent: u32) -> Self {
        Self::new(
            vars.iter().map(|v| v.to_string()).collect(),
            forms.iter().map(|f| QuadraticForm::from_i64s(f)).collect(),
            sides.to_vec(),
            exponent,
        )
        .expect("well-formed built-in")
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn forms(&self) -> &[QuadraticForm] {
        &self.forms
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// Mutable access to one coefficient; the shape stays valid.
    pub fn coeff_mut(&mut self, form: usize, monomial: usize) -> Option<&mut RadicalScalar> {
        self.forms.get_mut(form)?.coeffs.get_mut(monomial)
    }

    /// Values of every form at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Vec<RadicalScalar>, IdentityError> {
        if point.len() != self.variables.len() {
            return Err(IdentityError::Shape(alloc::format!(
                "point has {} coordinates, expected {}",
                point.len(),
                self.variables.len()
            )));
        }
        self.forms
            .iter()
            .map(|f| Ok(f.to_multipoly(self.variables.len())?.eval(point)?))
            .collect()
    }
}

/// Outcome of a full symbolic expansion.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub certified: bool,
    /// Distinct monomials appearing in either expanded side.
    pub monomials_checked: usize,
    /// `Σ_left − Σ_right`, zero iff certified.
    pub difference: MultiPoly,
}

pub fn certify_detailed(t: &QuadraticFormTuple) -> Result<Certificate, IdentityError> {
    let nvars = t.variables.len();
    let mut left = MultiPoly::zero();
    let mut right = MultiPoly::zero();
    for (form, side) in t.forms.iter().zip(&t.sides) {
        let power = form.to_multipoly(nvars)?.try_pow(t.exponent)?;
        match side {
            Side::Left => left = left.try_add(&power)?,
            Side::Right => right = right.try_add(&power)?,
        }
    }
    let mut seen: Vec<Monomial> = left.monomials().chain(right.monomials()).copied().collect();
    seen.sort();
    seen.dedup();
    let difference = left.try_sub(&right)?;
    Ok(Certificate {
        certified: difference.is_zero(),
        monomials_checked: seen.len(),
        difference,
    })
}

/// True iff the tuple's claimed identity holds as a polynomial identity.
pub fn certify_identity(t: &QuadraticFormTuple) -> Result<bool, IdentityError> {
    Ok(certify_detailed(t)?.certified)
}

/// Rational point `(p, q, r, s)` with `p³ + q³ + r³ = s³`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicSeed {
    pub p: Rational,
    pub q: Rational,
    pub r: Rational,
    pub s: Rational,
}

impl CubicSeed {
    pub fn new(p: Rational, q: Rational, r: Rational, s: Rational) -> Result<Self, IdentityError> {
        let cube = |x: &Rational| pow_rational(x, 3);
        if cube(&p) + cube(&q) + cube(&r) != cube(&s) {
            return Err(IdentityError::SeedRelation("p³ + q³ + r³ = s³"));
        }
        Ok(Self { p, q, r, s })
    }

    pub fn from_i64s(v: [i64; 4]) -> Result<Self, IdentityError> {
        Self::new(rat(v[0]), rat(v[1]), rat(v[2]), rat(v[3]))
    }

    pub fn scaled(&self, k: &Rational) -> Self {
        Self {
            p: &self.p * k,
            q: &self.q * k,
            r: &self.r * k,
            s: &self.s * k,
        }
    }

    pub fn entries(&self) -> [&Rational; 4] {
        [&self.p, &self.q, &self.r, &self.s]
    }
}

/// Rational point with `p³ + q³ + r³ + s³ + t³ = u³` and nonzero `p+s`, `q+t`, `r−u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiveCubeSeed {
    pub p: Rational,
    pub q: Rational,
    pub r: Rational,
    pub s: Rational,
    pub t: Rational,
    pub u: Rational,
}

impl FiveCubeSeed {
    pub fn new(v: [Rational; 6]) -> Result<Self, IdentityError> {
        let [p, q, r, s, t, u] = v;
        let cube = |x: &Rational| pow_rational(x, 3);
        if cube(&p) + cube(&q) + cube(&r) + cube(&s) + cube(&t) != cube(&u) {
            return Err(IdentityError::SeedRelation("p³ + q³ + r³ + s³ + t³ = u³"));
        }
        if (&p + &s).is_zero() {
            return Err(IdentityError::DegenerateSeed("p + s"));
        }
        if (&q + &t).is_zero() {
            return Err(IdentityError::DegenerateSeed("q + t"));
        }
        if (&r - &u).is_zero() {
            return Err(IdentityError::DegenerateSeed("r - u"));
        }
        Ok(Self { p, q, r, s, t, u })
    }

    pub fn from_i64s(v: [i64; 6]) -> Result<Self, IdentityError> {
        Self::new(v.map(rat))
    }

    pub fn entries(&self) -> [&Rational; 6] {
        [&self.p, &self.q, &self.r, &self.s, &self.t, &self.u]
    }
}

/// Chord parameter for the line `(p + aθ, q + bθ, r − aθ, s + bθ)` through a cubic seed:
/// `θ = −(a(p²−r²) + b(q²−s²)) / (a²(p+r) + b²(q−s))`.
pub fn chord_theta(
    seed: &CubicSeed,
    a: &Rational,
    b: &Rational,
) -> Result<Rational, IdentityError> {
    let CubicSeed { p, q, r, s } = seed;
    let den = a * a * (p + r) + b * b * (q - s);
    if den.is_zero() {
        return Err(IdentityError::DegenerateDirection);
    }
    let num = a * (p * p - r * r) + b * (q * q - s * s);
    Ok(-num / den)
}

/// The second intersection point of the chord; it satisfies `A³ + B³ + C³ = D³`.
pub fn chord_point(
    seed: &CubicSeed,
    a: &Rational,
    b: &Rational,
) -> Result<[Rational; 4], IdentityError> {
    let theta = chord_theta(seed, a, b)?;
    Ok([
        &seed.p + a * &theta,
        &seed.q + b * &theta,
        &seed.r - a * &theta,
        &seed.s + b * &theta,
    ])
}

/// `(pa²+mab−rb²)³ + (qa²−nab+sb²)³ + (ra²−mab−pb²)³ = (sa²−nab+qb²)³`
/// with `m = (s+q)·√((s−q)/(r+p))` and `n = (r−p)·√((r+p)/(s−q))`.
///
/// The ratio is never negative: `s−q` and `r+p` share the sign of `s³−q³ = p³+r³`.
/// `√((r+p)/(s−q))` is taken as the reciprocal of `√((s−q)/(r+p))`.
pub fn euler_forms(seed: &CubicSeed) -> Result<QuadraticFormTuple, IdentityError> {
    let CubicSeed { p, q, r, s } = seed;
    let rp = r + p;
    let sq = s - q;
    if rp.is_zero() {
        return Err(IdentityError::DegenerateSeed("r + p"));
    }
    if sq.is_zero() {
        return Err(IdentityError::DegenerateSeed("s - q"));
    }
    let ratio = &sq / &rp;
    let root = RadicalScalar::sqrt_of_rational(&ratio);
    let m = root.scale(&(s + q));
    let n = root.scale(&((r - p) / &ratio));
    let lit = |x: &Rational| RadicalScalar::from_rational(x.clone());
    let neg = |x: &Rational| RadicalScalar::from_rational(-x);
    let forms = vec![
        QuadraticForm {
            coeffs: vec![lit(p), m.clone(), neg(r)],
        },
        QuadraticForm {
            coeffs: vec![lit(q), n.neg(), lit(s)],
        },
        QuadraticForm {
            coeffs: vec![lit(r), m.neg(), neg(p)],
        },
        QuadraticForm {
            coeffs: vec![lit(s), n.neg(), lit(q)],
        },
    ];
    QuadraticFormTuple::new(
        vec!["a".to_string(), "b".to_string()],
        forms,
        vec![Side::Left, Side::Left, Side::Left, Side::Right],
        3,
    )
}

/// The six radical coefficients `g, h, k, l, m, n` of the five-cube construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiveCubeRadicals {
    pub g: RadicalScalar,
    pub h: RadicalScalar,
    pub k: RadicalScalar,
    pub l: RadicalScalar,
    pub m: RadicalScalar,
    pub n: RadicalScalar,
}

/// With `X = p+s`, `Y = q+t`, `Z = r−u`:
/// `g = (q−t)√(Y/X)`, `h = (p−s)√(X/Z)`, `k = (p−s)√(X/Y)`,
/// `l = (q−t)√(Y/Z)`, `m = (r+u)√(Z/X)`, `n = (r+u)√(Z/Y)`.
///
/// Every ratio root is built as `√num · √den / den` from the three roots `√X, √Y, √Z`,
/// so reciprocal pairs multiply to 1 and the tower never exceeds three radicands.
pub fn five_cube_radicals(seed: &FiveCubeSeed) -> Result<FiveCubeRadicals, IdentityError> {
    let x = &seed.p + &seed.s;
    let y = &seed.q + &seed.t;
    let z = &seed.r - &seed.u;
    let rx = RadicalScalar::sqrt_of_rational(&x);
    let ry = RadicalScalar::sqrt_of_rational(&y);
    let rz = RadicalScalar::sqrt_of_rational(&z);
    // √(top/bottom) = √top·√bottom / bottom
    let ratio_root = |top: &RadicalScalar, bottom: &RadicalScalar, bottom_val: &Rational| {
        top.try_mul(bottom).map(|v| v.scale(&bottom_val.recip()))
    };
    let qt = &seed.q - &seed.t;
    let ps = &seed.p - &seed.s;
    let ru = &seed.r + &seed.u;
    Ok(FiveCubeRadicals {
        g: ratio_root(&ry, &rx, &x)?.scale(&qt),
        h: ratio_root(&rx, &rz, &z)?.scale(&ps),
        k: ratio_root(&rx, &ry, &y)?.scale(&ps),
        l: ratio_root(&ry, &rz, &z)?.scale(&qt),
        m: ratio_root(&rz, &rx, &x)?.scale(&ru),
        n: ratio_root(&rz, &ry, &y)?.scale(&ru),
    })
}

/// The six forms in `(a, b, c)`:
///
/// ```text
/// (sa²+pb²+pc²−gab−mac)³ + (qa²+tb²+qc²−kab−nbc)³ + (ra²+rb²−uc²−hac−lbc)³
///   + (pa²+sb²+sc²+mac+gab)³ + (ta²+qb²+tc²+kab+nbc)³ = (ua²+ub²−rc²−hac−lbc)³
/// ```
pub fn five_cube_forms(seed: &FiveCubeSeed) -> Result<QuadraticFormTuple, IdentityError> {
    let FiveCubeRadicals { g, h, k, l, m, n } = five_cube_radicals(seed)?;
    let FiveCubeSeed { p, q, r, s, t, u } = seed;
    let lit = |x: &Rational| RadicalScalar::from_rational(x.clone());
    let zero = RadicalScalar::zero;
    // columns: a², ab, ac, b², bc, c²
    let forms = vec![
        [lit(s), g.neg(), m.neg(), lit(p), zero(), lit(p)],
        [lit(q), k.neg(), zero(), lit(t), n.neg(), lit(q)],
        [lit(r), zero(), h.neg(), lit(r), l.neg(), lit(&-u)],
        [lit(p), g.clone(), m.clone(), lit(s), zero(), lit(s)],
        [lit(t), k.clone(), zero(), lit(q), n.clone(), lit(t)],
        [lit(u), zero(), h.neg(), lit(u), l.neg(), lit(&-r)],
    ];
    QuadraticFormTuple::new(
        vec!["a".to_string(), "b".to_string(), "c".to_string()],
        forms
            .into_iter()
            .map(|c| QuadraticForm { coeffs: c.to_vec() })
            .collect(),
        vec![
            Side::Left,
            Side::Left,
            Side::Left,
            Side::Left,
            Side::Left,
            Side::Right,
        ],
        3,
    )
}

/// Names accepted by [`builtin_identity`].
pub const BUILTIN_IDENTITIES: [&str; 4] = ["eq1.4", "eq1.5", "eq3.9", "eq3.12"];

/// Fixed parametric identities with integer coefficients.
///
/// - `eq1.4`: `(3a²+5ab−5b²)³ + (4a²−4ab+6b²)³ + (5a²−5ab−3b²)³ = (6a²−4ab+4b²)³`
/// - `eq1.5`: `(A²+7AB−9B²)³ + (2A²−4AB+12B²)³ = (2A²+10B²)³ + (A²−9AB−B²)³`
/// - `eq3.9`: six fourth powers in `(s, t)`
/// - `eq3.12`: six fourth powers in `(m, n)`
pub fn builtin_identity(name: &str) -> Option<QuadraticFormTuple> {
    use Side::{Left as L, Right as R};
    Some(match name {
        "eq1.4" => QuadraticFormTuple::integer(
            ["a", "b"],
            &[[3, 5, -5], [4, -4, 6], [5, -5, -3], [6, -4, 4]],
            &[L, L, L, R],
            3,
        ),
        "eq1.5" => QuadraticFormTuple::integer(
            ["A", "B"],
            &[[1, 7, -9], [2, -4, 12], [2, 0, 10], [1, -9, -1]],
            &[L, L, R, R],
            3,
        ),
        "eq3.9" => QuadraticFormTuple::integer(
            ["s", "t"],
            &[
                [8, 40, -24],
                [6, -44, -18],
                [14, -4, -42],
                [9, 0, 27],
                [4, 0, 12],
                [15, 0, 45],
            ],
            &[L, L, L, L, L, R],
            4,
        ),
        "eq3.12" => QuadraticFormTuple::integer(
            ["m", "n"],
            &[
                [4, 0, -12],
                [3, 0, 9],
                [2, -12, -6],
                [4, 0, 12],
                [2, 12, -6],
                [5, 0, 15],
            ],
            &[L, L, L, L, L, R],
            4,
        ),
        _ => return None,
    })
}

pub fn builtin_quartic_identities() -> Vec<QuadraticFormTuple> {
    ["eq3.9", "eq3.12"]
        .iter()
        .map(|n| builtin_identity(n).expect("built-in"))
        .collect()
}
