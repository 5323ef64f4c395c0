//! JSON and CSV encodings. Every number is an exact decimal string (`"-7"`, `"-10/81"`).

use std::io::Write;

use serde::{Deserialize, Serialize};
use taxicab_forge_core::exact::{parse_integer, parse_rational, ExactError};
use taxicab_forge_core::families::{PowerRelation, Sign, SolutionTuple};
use taxicab_forge_core::identities::{QuadraticForm, QuadraticFormTuple, Side};
use taxicab_forge_core::oracle::Representations;
use taxicab_forge_core::{Integer, LinearRecurrence2, RadicalScalar, Rational};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid number: {0}")]
    Number(#[from] ExactError),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("invalid record: {0}")]
    Invalid(String),
}

fn ints(v: &[String]) -> Result<Vec<Integer>, FormatError> {
    v.iter().map(|s| Ok(parse_integer(s)?)).collect()
}

fn rats(v: &[String]) -> Result<Vec<Rational>, FormatError> {
    v.iter().map(|s| Ok(parse_rational(s)?)).collect()
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SideRecord {
    Left,
    Right,
}

impl From<Side> for SideRecord {
    fn from(s: Side) -> Self {
        match s {
            Side::Left => SideRecord::Left,
            Side::Right => SideRecord::Right,
        }
    }
}

impl From<SideRecord> for Side {
    fn from(s: SideRecord) -> Self {
        match s {
            SideRecord::Left => Side::Left,
            SideRecord::Right => Side::Right,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualRecord {
    /// `"+"` or `"-"`: how the residual power enters the right-hand side.
    pub sign: String,
    pub value: String,
}

/// One row of a family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleRecord {
    pub n: usize,
    pub exponent: u32,
    pub entries: Vec<String>,
    pub sides: Vec<SideRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<ResidualRecord>,
}

impl From<&SolutionTuple> for TupleRecord {
    fn from(t: &SolutionTuple) -> Self {
        let rel = t.relation();
        Self {
            n: t.index(),
            exponent: rel.exponent,
            entries: strings(&rel.entries),
            sides: rel.sides.iter().map(|&s| s.into()).collect(),
            residual: rel.residual.as_ref().map(|(sign, v)| ResidualRecord {
                sign: sign.symbol().to_string(),
                value: v.to_string(),
            }),
        }
    }
}

impl TupleRecord {
    /// Rebuilds the tuple; the relation is re-verified.
    pub fn to_tuple(&self) -> Result<SolutionTuple, FormatError> {
        let residual = match &self.residual {
            None => None,
            Some(r) => {
                let sign = match r.sign.as_str() {
                    "+" => Sign::Plus,
                    "-" => Sign::Minus,
                    other => return Err(FormatError::Invalid(format!("residual sign {other:?}"))),
                };
                Some((sign, parse_rational(&r.value)?))
            }
        };
        let rel = PowerRelation {
            entries: rats(&self.entries)?,
            sides: self.sides.iter().map(|&s| s.into()).collect(),
            exponent: self.exponent,
            residual,
        };
        SolutionTuple::new("record", self.n, rel).map_err(|e| FormatError::Invalid(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationRecord {
    pub n: String,
    pub pairs: Vec<[String; 2]>,
}

impl From<&Representations> for RepresentationRecord {
    fn from(r: &Representations) -> Self {
        Self {
            n: r.n.to_string(),
            pairs: r
                .pairs
                .iter()
                .map(|(a, b)| [a.to_string(), b.to_string()])
                .collect(),
        }
    }
}

impl RepresentationRecord {
    pub fn to_representations(&self) -> Result<Representations, FormatError> {
        Ok(Representations {
            n: parse_integer(&self.n)?,
            pairs: self
                .pairs
                .iter()
                .map(|[a, b]| Ok((parse_integer(a)?, parse_integer(b)?)))
                .collect::<Result<_, FormatError>>()?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceRecord {
    pub c1: String,
    pub c2: String,
    pub w0: String,
    pub w1: String,
}

impl From<&LinearRecurrence2> for RecurrenceRecord {
    fn from(r: &LinearRecurrence2) -> Self {
        Self {
            c1: r.c1.to_string(),
            c2: r.c2.to_string(),
            w0: r.w0.to_string(),
            w1: r.w1.to_string(),
        }
    }
}

impl RecurrenceRecord {
    pub fn to_recurrence(&self) -> Result<LinearRecurrence2, FormatError> {
        let v = ints(&[
            self.c1.clone(),
            self.c2.clone(),
            self.w0.clone(),
            self.w1.clone(),
        ])?;
        let [c1, c2, w0, w1] = <[Integer; 4]>::try_from(v).expect("four values");
        Ok(LinearRecurrence2 { c1, c2, w0, w1 })
    }
}

/// A coefficient in `ℚ[√d₁, √d₂, √d₃]`: component `i` multiplies the product of the
/// radicands whose bits are set in `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalRecord {
    pub radicands: Vec<String>,
    pub components: Vec<String>,
}

impl From<&RadicalScalar> for RadicalRecord {
    fn from(r: &RadicalScalar) -> Self {
        Self {
            radicands: strings(r.radicands()),
            components: strings(r.components()),
        }
    }
}

impl RadicalRecord {
    pub fn to_scalar(&self) -> Result<RadicalScalar, FormatError> {
        Ok(RadicalScalar::from_parts(
            ints(&self.radicands)?,
            rats(&self.components)?,
        )?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormRecord {
    pub side: SideRecord,
    /// In graded-lex monomial order: `a², ab, b²` or `a², ab, ac, b², bc, c²`.
    pub coefficients: Vec<RadicalRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormTupleRecord {
    pub variables: Vec<String>,
    pub exponent: u32,
    pub forms: Vec<FormRecord>,
}

impl From<&QuadraticFormTuple> for FormTupleRecord {
    fn from(t: &QuadraticFormTuple) -> Self {
        Self {
            variables: t.variables().to_vec(),
            exponent: t.exponent(),
            forms: t
                .forms()
                .iter()
                .zip(t.sides())
                .map(|(f, &s)| FormRecord {
                    side: s.into(),
                    coefficients: f.coeffs.iter().map(RadicalRecord::from).collect(),
                })
                .collect(),
        }
    }
}

impl FormTupleRecord {
    pub fn to_tuple(&self) -> Result<QuadraticFormTuple, FormatError> {
        let forms = self
            .forms
            .iter()
            .map(|f| {
                Ok(QuadraticForm {
                    coeffs: f
                        .coefficients
                        .iter()
                        .map(RadicalRecord::to_scalar)
                        .collect::<Result<_, FormatError>>()?,
                })
            })
            .collect::<Result<Vec<_>, FormatError>>()?;
        QuadraticFormTuple::new(
            self.variables.clone(),
            forms,
            self.forms.iter().map(|f| f.side.into()).collect(),
            self.exponent,
        )
        .map_err(|e| FormatError::Invalid(e.to_string()))
    }
}

/// Column names for a family of `width` sequences: `a, b, c, …`.
pub fn entry_columns(width: usize) -> Vec<String> {
    (0..width)
        .map(|i| char::from(b'a' + (i % 26) as u8).to_string())
        .collect()
}

/// CSV with header `n,a,b,…[,residual]`; the residual column is the signed base value.
pub fn write_tuples_csv<W: Write>(out: W, rows: &[SolutionTuple]) -> Result<(), FormatError> {
    let mut w = csv::Writer::from_writer(out);
    let Some(first) = rows.first() else {
        w.flush()?;
        return Ok(());
    };
    let mut header = vec!["n".to_string()];
    header.extend(entry_columns(first.entries().len()));
    let has_residual = first.residual().is_some();
    if has_residual {
        header.push("residual".to_string());
    }
    w.write_record(&header)?;
    for t in rows {
        let mut rec = vec![t.index().to_string()];
        rec.extend(strings(t.entries()));
        if let Some((_, r)) = t.residual() {
            rec.push(r.to_string());
        }
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

/// Parses [`write_tuples_csv`] output back into `(n, entries, residual)` rows.
/// `(n, entries, residual)` as read back from CSV.
pub type CsvRow = (usize, Vec<Rational>, Option<Rational>);

pub fn read_tuples_csv(text: &str) -> Result<Vec<CsvRow>, FormatError> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let has_residual = r.headers()?.iter().next_back() == Some("residual");
    let mut out = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        let fields: Vec<String> = rec.iter().map(str::to_string).collect();
        let (head, rest) = fields
            .split_first()
            .ok_or_else(|| FormatError::Invalid("empty row".into()))?;
        let n = head
            .parse()
            .map_err(|_| FormatError::Invalid(format!("row index {head:?}")))?;
        let mut values = rats(rest)?;
        let residual = if has_residual { values.pop() } else { None };
        out.push((n, values, residual));
    }
    Ok(out)
}

/// `108^3 + 111^3 = 138^3 + (-9)^3`
pub fn relation_text(rel: &PowerRelation) -> String {
    let term = |v: &Rational| {
        let s = v.to_string();
        if s.starts_with('-') || s.contains('/') {
            format!("({s})^{}", rel.exponent)
        } else {
            format!("{s}^{}", rel.exponent)
        }
    };
    let side = |which: Side| {
        rel.entries
            .iter()
            .zip(&rel.sides)
            .filter(|(_, &s)| s == which)
            .map(|(v, _)| term(v))
            .collect::<Vec<_>>()
            .join(" + ")
    };
    let mut right = side(Side::Right);
    if let Some((sign, r)) = &rel.residual {
        right.push_str(&format!(" {} {}", sign.symbol(), term(r)));
    }
    format!("{} = {}", side(Side::Left), right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use taxicab_forge_core::families::{family, generate};
    use taxicab_forge_core::identities::{builtin_identity, euler_forms, CubicSeed};

    #[test]
    fn tuple_json_round_trip() {
        for name in ["thm2.5", "thm2.8", "thm2.5-laurent"] {
            for t in generate(&family(name).unwrap(), 3).unwrap() {
                let json = serde_json::to_string(&TupleRecord::from(&t)).unwrap();
                let back: TupleRecord = serde_json::from_str(&json).unwrap();
                assert_eq!(back.to_tuple().unwrap(), t);
            }
        }
    }

    #[test]
    fn forged_tuple_json_is_rejected() {
        let t = &generate(&family("thm2.4").unwrap(), 1).unwrap()[1];
        let mut rec = TupleRecord::from(t);
        rec.entries[0] = "2".into();
        assert!(matches!(rec.to_tuple(), Err(FormatError::Invalid(_))));
    }

    #[test]
    fn form_tuple_json_round_trip() {
        let seed = CubicSeed::from_i64s([1, 6, 8, 9]).unwrap();
        for t in [
            euler_forms(&seed).unwrap(),
            builtin_identity("eq3.9").unwrap(),
        ] {
            let json = serde_json::to_string(&FormTupleRecord::from(&t)).unwrap();
            let back: FormTupleRecord = serde_json::from_str(&json).unwrap();
            assert_eq!(back.to_tuple().unwrap(), t);
        }
    }

    #[test]
    fn recurrence_json() {
        let r = LinearRecurrence2::new(-7, 9, 0, 1);
        let json = serde_json::to_string(&RecurrenceRecord::from(&r)).unwrap();
        assert_eq!(json, r#"{"c1":"-7","c2":"9","w0":"0","w1":"1"}"#);
        let back: RecurrenceRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_recurrence().unwrap(), r);
    }

    #[test]
    fn csv_round_trip() {
        let rows = generate(&family("thm2.5").unwrap(), 2).unwrap();
        let mut buf = Vec::new();
        write_tuples_csv(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("n,a,b,c,residual\n0,2,1,2,1\n1,108,111,138,-9\n"));
        let back = read_tuples_csv(&text).unwrap();
        for (t, (n, e, r)) in rows.iter().zip(back) {
            assert_eq!(n, t.index());
            assert_eq!(e, t.entries());
            assert_eq!(r.as_ref(), t.residual().map(|(_, v)| v));
        }
    }

    #[test]
    fn relation_rendering() {
        let t = &generate(&family("thm2.5").unwrap(), 1).unwrap()[1];
        assert_eq!(
            relation_text(t.relation()),
            "108^3 + 111^3 = 138^3 + (-9)^3"
        );
        let t = &generate(&family("thm2.8").unwrap(), 1).unwrap()[1];
        assert!(relation_text(t.relation()).ends_with(" - (-24)^4"));
    }
}
