use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use taxicab_forge_core::exact::{parse_integer, parse_rational, ExactError};
use taxicab_forge_core::families::{
    builtin_families, clear_denominators, family, generate, Direction, FamilyError, FamilySpec,
};
use taxicab_forge_core::identities::{
    builtin_identity, certify_detailed, euler_forms, five_cube_forms, quadratic_monomials,
    CubicSeed, FiveCubeSeed, IdentityError, QuadraticForm, QuadraticFormTuple, BUILTIN_IDENTITIES,
};
use taxicab_forge_core::oracle::{seed_search_five_cubes, seed_search_three_cubes, OracleError};
use taxicab_forge_core::series::SeriesError;
use taxicab_forge_core::{Rational, RationalFunction};
use thiserror::Error;

use crate::format::{
    relation_text, write_tuples_csv, FormTupleRecord, FormatError, RecurrenceRecord,
    RepresentationRecord, SideRecord, TupleRecord,
};
use crate::parallel::{resolve_workers, taxicab_parallel, WORKERS_ENV};

pub mod exit {
    pub const OK: i32 = 0;
    pub const INTERNAL: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const PRECONDITION: i32 = 3;
    pub const INSUFFICIENT_BOUND: i32 = 4;
    pub const CERTIFICATION_FAILED: i32 = 5;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    InsufficientBound(String),
    #[error("{0}")]
    Internal(String),
    #[error("output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Precondition(_) => exit::PRECONDITION,
            CliError::InsufficientBound(_) => exit::INSUFFICIENT_BOUND,
            CliError::Internal(_) | CliError::Io(_) => exit::INTERNAL,
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::UnknownFamily { .. } => CliError::Usage(e.to_string()),
            FamilyError::Inconsistent { .. } => CliError::Internal(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<SeriesError> for CliError {
    fn from(e: SeriesError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<IdentityError> for CliError {
    fn from(e: IdentityError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::InsufficientBound { .. } => CliError::InsufficientBound(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Io(e) => CliError::Io(e),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "taxicab-forge",
    version,
    about = "Exact generation and verification of solutions to A³+B³=C³+D³ and related equations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Default, Args)]
#[group(multiple = false)]
pub struct FormatArgs {
    /// JSON output (one document, or one object per line for row streams)
    #[arg(long)]
    pub json: bool,
    /// CSV output with a header row
    #[arg(long)]
    pub csv: bool,
    /// Plain text output (default)
    #[arg(long)]
    pub text: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl FormatArgs {
    pub fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else if self.csv {
            Format::Csv
        } else {
            Format::Text
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeedKind {
    /// p³ + q³ + r³ = s³, positive entries
    Three,
    /// p³ + q³ + r³ + s³ + t³ = u³, signed entries
    Five,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand a rational function at 0 (Taylor) or at infinity (Laurent)
    Expand {
        /// e.g. "(1+53x+9x^2)/(1-82x-82x^2+x^3)"
        #[arg(allow_hyphen_values = true)]
        function: String,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, conflicts_with = "laurent")]
        taylor: bool,
        /// Coefficients of x⁻¹, x⁻², … at infinity
        #[arg(long)]
        laurent: bool,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Generate and verify a built-in family of solutions
    Family {
        name: Option<String>,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        /// Scale each row by the least power of this base that makes it integral
        #[arg(long)]
        clear_base: Option<String>,
        /// List family names
        #[arg(long, conflicts_with_all = ["name", "describe"])]
        list: bool,
        /// Print the family's generating functions, recurrence and residual instead of rows
        #[arg(long)]
        describe: bool,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Certify a parametric identity by full symbolic expansion
    Certify {
        /// eq1.4, eq1.5, eq3.9, eq3.12, euler or five-cubes
        target: Option<String>,
        /// Seed for euler (p,q,r,s) or five-cubes (p,q,r,s,t,u); rationals allowed
        #[arg(long, allow_hyphen_values = true)]
        seed: Option<String>,
        /// Certify a form tuple read from a JSON file
        #[arg(long, conflicts_with_all = ["target", "seed"])]
        file: Option<PathBuf>,
        /// Print the forms being certified
        #[arg(long)]
        show_forms: bool,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Smallest number that is a sum of two positive cubes in k ways
    Taxicab {
        k: usize,
        bound: u64,
        /// Worker threads; the TAXICAB_FORGE_WORKERS environment variable takes precedence
        #[arg(long)]
        workers: Option<usize>,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Search for seeds of the chord constructions
    Seeds {
        #[arg(value_enum)]
        kind: SeedKind,
        #[arg(long)]
        bound: u64,
        #[arg(long)]
        limit: Option<usize>,
        /// Certify the identity built from each seed
        #[arg(long)]
        certify: bool,
        #[command(flatten)]
        format: FormatArgs,
    },
}

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                exit::USAGE
            } else {
                exit::OK
            };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let env = std::env::var(WORKERS_ENV).ok();
    match execute(cli.command, env.as_deref(), out, err) {
        Ok(code) => code,
        // reader went away (`| head`): not our failure
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => exit::OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(
    cmd: Command,
    workers_env: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    match cmd {
        Command::Expand {
            function,
            count,
            laurent,
            format,
            ..
        } => cmd_expand(&function, count, laurent, format.format(), out),
        Command::Family {
            name,
            n_max,
            clear_base,
            list,
            describe,
            format,
        } => {
            if list {
                return cmd_family_list(format.format(), out);
            }
            let name = name.ok_or_else(|| {
                CliError::Usage(format!(
                    "missing family name; valid names: {}",
                    names().join(", ")
                ))
            })?;
            if describe {
                return cmd_family_describe(&family(&name)?, format.format(), out);
            }
            cmd_family(&name, n_max, clear_base.as_deref(), format.format(), out)
        }
        Command::Certify {
            target,
            seed,
            file,
            show_forms,
            format,
        } => cmd_certify(
            target.as_deref(),
            seed.as_deref(),
            file,
            show_forms,
            format.format(),
            out,
        ),
        Command::Taxicab {
            k,
            bound,
            workers,
            format,
        } => {
            let workers = resolve_workers(workers, workers_env).map_err(CliError::Usage)?;
            cmd_taxicab(k, bound, workers, format.format(), out, err)
        }
        Command::Seeds {
            kind,
            bound,
            limit,
            certify,
            format,
        } => cmd_seeds(kind, bound, limit, certify, format.format(), out, err),
    }
}

fn names() -> Vec<String> {
    builtin_families().into_iter().map(|f| f.name).collect()
}

#[derive(Serialize)]
struct ExpansionRecord {
    function: String,
    direction: &'static str,
    coefficients: Vec<String>,
}

fn cmd_expand(
    function: &str,
    count: usize,
    laurent: bool,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let rf: RationalFunction = function
        .parse()
        .map_err(|e| CliError::Usage(format!("cannot parse {function:?}: {e}")))?;
    let coeffs = if laurent {
        rf.laurent_coeffs_at_infinity(count)?
    } else {
        rf.taylor_coeffs(count)?
    };
    match format {
        Format::Text => {
            for c in &coeffs {
                writeln!(out, "{c}")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["n", "coefficient"])?;
            for (i, c) in coeffs.iter().enumerate() {
                w.write_record([i.to_string(), c.to_string()])?;
            }
            w.flush()?;
        }
        Format::Json => {
            let rec = ExpansionRecord {
                function: rf.to_string(),
                direction: if laurent { "laurent" } else { "taylor" },
                coefficients: coeffs.iter().map(ToString::to_string).collect(),
            };
            writeln!(out, "{}", serde_json::to_string(&rec)?)?;
        }
    }
    Ok(exit::OK)
}

fn cmd_family_list(format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    let names = names();
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&names)?)?,
        Format::Csv => {
            writeln!(out, "name")?;
            for n in names {
                writeln!(out, "{n}")?;
            }
        }
        Format::Text => {
            for n in names {
                writeln!(out, "{n}")?;
            }
        }
    }
    Ok(exit::OK)
}

#[derive(Serialize)]
struct ResidualSpecRecord {
    sign: String,
    base: String,
    ratio: String,
}

#[derive(Serialize)]
struct FamilyRecord {
    name: String,
    direction: &'static str,
    exponent: u32,
    generators: Vec<String>,
    sides: Vec<SideRecord>,
    recurrence: RecurrenceRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    residual: Option<ResidualSpecRecord>,
}

fn cmd_family_describe(
    spec: &FamilySpec,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let rec = FamilyRecord {
        name: spec.name.clone(),
        direction: match spec.direction {
            Direction::Taylor => "taylor",
            Direction::Laurent => "laurent",
        },
        exponent: spec.exponent,
        generators: spec.generators.iter().map(ToString::to_string).collect(),
        sides: spec.sides.iter().map(|&s| s.into()).collect(),
        recurrence: RecurrenceRecord::from(&spec.recurrence),
        residual: spec.residual.as_ref().map(|r| ResidualSpecRecord {
            sign: r.sign.symbol().to_string(),
            base: r.base.to_string(),
            ratio: r.ratio.to_string(),
        }),
    };
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&rec)?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["name", "direction", "exponent", "generator"])?;
            for g in &rec.generators {
                w.write_record([
                    rec.name.as_str(),
                    rec.direction,
                    &rec.exponent.to_string(),
                    g,
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            writeln!(
                out,
                "{} ({} expansion, exponent {})",
                rec.name, rec.direction, rec.exponent
            )?;
            for (g, s) in rec.generators.iter().zip(&rec.sides) {
                writeln!(out, "  {:<5} {g}", format!("{s:?}").to_lowercase())?;
            }
            let r = &rec.recurrence;
            writeln!(
                out,
                "  recurrence w(n+2) = {}*w(n+1) {} {}*w(n), w0 = {}, w1 = {}",
                r.c1,
                if r.c2.starts_with('-') { '-' } else { '+' },
                r.c2.trim_start_matches('-'),
                r.w0,
                r.w1
            )?;
            if let Some(res) = &rec.residual {
                writeln!(
                    out,
                    "  residual {} ({} * ({})^n)^{}",
                    res.sign, res.base, res.ratio, rec.exponent
                )?;
            }
        }
    }
    Ok(exit::OK)
}

fn cmd_family(
    name: &str,
    n_max: usize,
    clear_base: Option<&str>,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let spec = family(name)?;
    let mut rows = generate(&spec, n_max)?;
    if let Some(b) = clear_base {
        let base = parse_integer(b).map_err(|e| CliError::Usage(e.to_string()))?;
        rows = rows
            .iter()
            .map(|t| clear_denominators(t, &base))
            .collect::<Result<_, _>>()?;
    }
    match format {
        Format::Csv => write_tuples_csv(&mut *out, &rows)?,
        Format::Json => {
            for t in &rows {
                writeln!(out, "{}", serde_json::to_string(&TupleRecord::from(t))?)?;
            }
        }
        Format::Text => {
            for t in &rows {
                writeln!(out, "n={}: {}", t.index(), relation_text(t.relation()))?;
            }
        }
    }
    Ok(exit::OK)
}

fn parse_seed(raw: &str) -> Result<Vec<Rational>, CliError> {
    raw.split(',')
        .map(|s| parse_rational(s.trim()))
        .collect::<Result<_, ExactError>>()
        .map_err(|e| CliError::Usage(format!("invalid seed {raw:?}: {e}")))
}

fn monomial_names(vars: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    for i in 0..vars.len() {
        for j in i..vars.len() {
            out.push(if i == j {
                format!("{}^2", vars[i])
            } else {
                format!("{}*{}", vars[i], vars[j])
            });
        }
    }
    out
}

/// `3*a^2 + 5*a*b - 5*b^2`, with radical coefficients parenthesised.
pub fn form_text(form: &QuadraticForm, vars: &[String]) -> String {
    debug_assert_eq!(form.coeffs.len(), quadratic_monomials(vars.len()).len());
    let mut s = String::new();
    for (c, m) in form.coeffs.iter().zip(monomial_names(vars)) {
        if c.is_zero() {
            continue;
        }
        let (neg, body) = match c.as_rational() {
            Some(q) => {
                let neg = q < &Rational::from_integer(0.into());
                let mag = if neg { -q.clone() } else { q.clone() };
                let body = if mag == Rational::from_integer(1.into()) {
                    m.clone()
                } else {
                    format!("{mag}*{m}")
                };
                (neg, body)
            }
            None => (false, format!("({c})*{m}")),
        };
        match (s.is_empty(), neg) {
            (true, true) => s.push('-'),
            (true, false) => {}
            (false, true) => s.push_str(" - "),
            (false, false) => s.push_str(" + "),
        }
        s.push_str(&body);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

#[derive(Serialize)]
struct CertificateRecord {
    target: String,
    certified: bool,
    monomials_checked: usize,
    nonzero_coefficients: usize,
    tuple: FormTupleRecord,
}

fn cmd_certify(
    target: Option<&str>,
    seed: Option<&str>,
    file: Option<PathBuf>,
    show_forms: bool,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let (label, tuple): (String, QuadraticFormTuple) = match (target, file) {
        (_, Some(path)) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            let bad = |e: serde_json::Error| CliError::Usage(format!("{}: {e}", path.display()));
            // either a bare tuple or the whole `certify --json` document
            let mut doc: serde_json::Value = serde_json::from_str(&text).map_err(bad)?;
            if let Some(inner) = doc.get_mut("tuple") {
                doc = inner.take();
            }
            let rec: FormTupleRecord = serde_json::from_value(doc).map_err(bad)?;
            (path.display().to_string(), rec.to_tuple()?)
        }
        (Some("euler"), None) => {
            let v = parse_seed(
                seed.ok_or_else(|| CliError::Usage("euler needs --seed p,q,r,s".into()))?,
            )?;
            let [p, q, r, s] = <[Rational; 4]>::try_from(v).map_err(|v| {
                CliError::Usage(format!("euler seed needs 4 values, got {}", v.len()))
            })?;
            ("euler".into(), euler_forms(&CubicSeed::new(p, q, r, s)?)?)
        }
        (Some("five-cubes"), None) => {
            let v =
                parse_seed(seed.ok_or_else(|| {
                    CliError::Usage("five-cubes needs --seed p,q,r,s,t,u".into())
                })?)?;
            let v = <[Rational; 6]>::try_from(v).map_err(|v| {
                CliError::Usage(format!("five-cubes seed needs 6 values, got {}", v.len()))
            })?;
            (
                "five-cubes".into(),
                five_cube_forms(&FiveCubeSeed::new(v)?)?,
            )
        }
        (Some(name), None) => {
            if seed.is_some() {
                return Err(CliError::Usage(format!("{name} takes no --seed")));
            }
            let t = builtin_identity(name).ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown identity {name:?}; valid: {}, euler, five-cubes",
                    BUILTIN_IDENTITIES.join(", ")
                ))
            })?;
            (name.to_string(), t)
        }
        (None, None) => {
            return Err(CliError::Usage(
                "nothing to certify; give an identity name or --file".into(),
            ))
        }
    };
    let cert = certify_detailed(&tuple)?;
    let verdict = if cert.certified {
        "CERTIFIED"
    } else {
        "FAILED"
    };
    match format {
        Format::Text => {
            if show_forms {
                let vars = tuple.variables();
                for (f, side) in tuple.forms().iter().zip(tuple.sides()) {
                    writeln!(
                        out,
                        "{:<5} ({})^{}",
                        format!("{side:?}").to_lowercase(),
                        form_text(f, vars),
                        tuple.exponent()
                    )?;
                }
            }
            writeln!(
                out,
                "{verdict} {label}: {} monomials checked, {} nonzero in the difference",
                cert.monomials_checked,
                cert.difference.len()
            )?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record([
                "target",
                "certified",
                "monomials_checked",
                "nonzero_coefficients",
            ])?;
            w.write_record([
                label.clone(),
                cert.certified.to_string(),
                cert.monomials_checked.to_string(),
                cert.difference.len().to_string(),
            ])?;
            w.flush()?;
        }
        Format::Json => {
            let rec = CertificateRecord {
                target: label,
                certified: cert.certified,
                monomials_checked: cert.monomials_checked,
                nonzero_coefficients: cert.difference.len(),
                tuple: FormTupleRecord::from(&tuple),
            };
            writeln!(out, "{}", serde_json::to_string(&rec)?)?;
        }
    }
    Ok(if cert.certified {
        exit::OK
    } else {
        exit::CERTIFICATION_FAILED
    })
}

fn cmd_taxicab(
    k: usize,
    bound: u64,
    workers: usize,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    writeln!(
        err,
        "searching a^3 + b^3 <= {bound}^3 with {workers} worker(s)"
    )?;
    let rep = taxicab_parallel(k, bound, workers)?;
    match format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string(&RepresentationRecord::from(&rep))?
        )?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["n", "a", "b"])?;
            for (a, b) in &rep.pairs {
                w.write_record([rep.n.to_string(), a.to_string(), b.to_string()])?;
            }
            w.flush()?;
        }
        Format::Text => {
            let pairs: Vec<String> = rep
                .pairs
                .iter()
                .map(|(a, b)| format!("{a}^3 + {b}^3"))
                .collect();
            writeln!(out, "{} = {}", rep.n, pairs.join(" = "))?;
        }
    }
    Ok(exit::OK)
}

#[derive(Serialize)]
struct SeedRecord {
    seed: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certified: Option<bool>,
}

fn cmd_seeds(
    kind: SeedKind,
    bound: u64,
    limit: Option<usize>,
    certify: bool,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    if bound == 0 {
        return Err(CliError::Precondition("bound must be positive".into()));
    }
    let rows: Vec<(Vec<Rational>, Option<QuadraticFormTuple>)> = match kind {
        SeedKind::Three => seed_search_three_cubes(bound)
            .into_iter()
            .take(limit.unwrap_or(usize::MAX))
            .map(|s| {
                let forms = if certify {
                    Some(euler_forms(&s)?)
                } else {
                    None
                };
                Ok((s.entries().map(Clone::clone).to_vec(), forms))
            })
            .collect::<Result<_, IdentityError>>()?,
        SeedKind::Five => seed_search_five_cubes(bound)
            .into_iter()
            .take(limit.unwrap_or(usize::MAX))
            .map(|s| {
                let forms = if certify {
                    Some(five_cube_forms(&s)?)
                } else {
                    None
                };
                Ok((s.entries().map(Clone::clone).to_vec(), forms))
            })
            .collect::<Result<_, IdentityError>>()?,
    };
    writeln!(err, "{} seed(s)", rows.len())?;
    let mut any_failed = false;
    let mut verdicts = Vec::with_capacity(rows.len());
    for (_, forms) in &rows {
        let v = match forms {
            Some(t) => {
                let ok = certify_detailed(t)?.certified;
                any_failed |= !ok;
                Some(ok)
            }
            None => None,
        };
        verdicts.push(v);
    }
    let columns: &[&str] = match kind {
        SeedKind::Three => &["p", "q", "r", "s"],
        SeedKind::Five => &["p", "q", "r", "s", "t", "u"],
    };
    match format {
        Format::Json => {
            for ((seed, _), certified) in rows.iter().zip(&verdicts) {
                let rec = SeedRecord {
                    seed: seed.iter().map(ToString::to_string).collect(),
                    certified: *certified,
                };
                writeln!(out, "{}", serde_json::to_string(&rec)?)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            let mut header: Vec<&str> = columns.to_vec();
            if certify {
                header.push("certified");
            }
            w.write_record(&header)?;
            for ((seed, _), certified) in rows.iter().zip(&verdicts) {
                let mut rec: Vec<String> = seed.iter().map(ToString::to_string).collect();
                if let Some(c) = certified {
                    rec.push(c.to_string());
                }
                w.write_record(&rec)?;
            }
            w.flush()?;
        }
        Format::Text => {
            for ((seed, _), certified) in rows.iter().zip(&verdicts) {
                let s: Vec<String> = seed.iter().map(ToString::to_string).collect();
                match certified {
                    Some(true) => writeln!(out, "{}  CERTIFIED", s.join(", "))?,
                    Some(false) => writeln!(out, "{}  FAILED", s.join(", "))?,
                    None => writeln!(out, "{}", s.join(", "))?,
                }
            }
        }
    }
    Ok(if any_failed {
        exit::CERTIFICATION_FAILED
    } else {
        exit::OK
    })
}
