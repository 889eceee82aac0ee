//! Command dispatch for the `superweyl` binary.
//!
//! [`run`] parses an argument vector, writes the result to `out` and
//! diagnostics to `err`, and returns the process exit status: 0 on success,
//! 2 on usage errors and 1 on domain errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use superweyl::characters::{
    induced_dim_bound, simple_torus_dim, super_character_with, weyl_dimension, CharacterError,
    CharacterOptions, SuperCharacterReport,
};
use superweyl::clifford::{
    classify, construct_rep, gram_from_weight, CliffordClassification, CliffordError, Matrix, QuadraticSpace,
};
use superweyl::field::{FieldError, FieldMode};
use superweyl::laurent::{HalfWeight, LaurentError};
use superweyl::rootdata::{polarize, GammaFunctional, GroupSpec, PolarizedDatum, RootDataError, RootDatum};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("InvalidLambda: {0}")]
    InvalidLambda(String),
    #[error("LambdaFileUnreadable: {0}")]
    LambdaFile(String),
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error(transparent)]
    Character(#[from] CharacterError),
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Debug, Parser)]
#[command(name = "superweyl", version, about = "Root data, Clifford supermodules and super Weyl characters")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Even and odd roots split by gamma, and the rho vectors.
    Roots(GroupArgs),
    /// Dominance of one or more weights.
    Dominant(WeightArgs),
    /// Even character, odd factor and super character of H^0(lambda).
    Character(WeightArgs),
    /// Dimensions of H^0(lambda) with the Weyl formula and the induced bound.
    Dimension(WeightArgs),
    /// Classification of the simple Clifford supermodule for b^lambda or a Gram matrix.
    Clifford(CliffordArgs),
    /// Whether gamma admits a distinguished parabolic.
    Parabolic(GroupArgs),
}

#[derive(Debug, Clone, Args)]
pub struct GroupArgs {
    /// gl:m,n | q:n | p:n
    #[arg(long)]
    pub group: GroupSpec,
    /// Comma-separated rationals; defaults to gamma(L_i) = -i.
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<GammaFunctional>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct WeightArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Integer coordinates in the L_i basis, e.g. 1,0,-1.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "lambda_file")]
    pub lambda: Option<IntVector>,
    /// File with one integer vector per line.
    #[arg(long)]
    pub lambda_file: Option<PathBuf>,
    /// Q, Fp:<p> or closed:<char>.
    #[arg(long)]
    pub field: Option<FieldMode>,
    /// Compute without a distinguished parabolic (Euler characteristic only).
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Clone, Args)]
pub struct CliffordArgs {
    /// gl:m,n | q:n | p:n, used with --lambda.
    #[arg(long, requires = "lambda")]
    pub group: Option<GroupSpec>,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<IntVector>,
    /// Row-major square Gram matrix, e.g. 0,1,1,0.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "group")]
    pub gram: Option<IntVector>,
    #[arg(long, default_value = "Q")]
    pub field: FieldMode,
    /// Also print a matrix representation of the Clifford superalgebra.
    #[arg(long)]
    pub rep: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// Integer vector flag value such as `1,0,-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntVector(pub Vec<i64>);

impl std::str::FromStr for IntVector {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_lambda(s).map(Self)
    }
}

fn parse_lambda(s: &str) -> Result<Vec<i64>, String> {
    let v = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|_| format!("'{t}' is not an integer")))
        .collect::<Result<Vec<_>, _>>()?;
    if v.is_empty() {
        return Err("empty vector".into());
    }
    Ok(v)
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Runs a parsed command and returns the full standard-output document.
pub fn execute(command: &Command) -> Result<String, CliError> {
    match command {
        Command::Roots(a) => roots(a),
        Command::Dominant(a) => dominant(a),
        Command::Character(a) => character(a),
        Command::Dimension(a) => dimension(a),
        Command::Clifford(a) => clifford(a),
        Command::Parabolic(a) => parabolic(a),
    }
}

fn polarized(args: &GroupArgs) -> Result<PolarizedDatum, CliError> {
    let datum = RootDatum::build(args.group)?;
    let gamma = args
        .gamma
        .clone()
        .unwrap_or_else(|| GammaFunctional::standard(datum.rank()));
    Ok(polarize(&datum, &gamma)?)
}

fn weights(args: &WeightArgs) -> Result<Vec<HalfWeight>, CliError> {
    let vectors = match (&args.lambda, &args.lambda_file) {
        (Some(v), _) => vec![v.0.clone()],
        (None, Some(path)) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| CliError::LambdaFile(format!("{}: {e}", path.display())))?;
            let v = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(|l| parse_lambda(l).map_err(|e| CliError::InvalidLambda(format!("{l}: {e}"))))
                .collect::<Result<Vec<_>, _>>()?;
            if v.is_empty() {
                return Err(CliError::InvalidLambda(format!("{} holds no weights", path.display())));
            }
            v
        }
        (None, None) => return Err(CliError::Usage("one of --lambda or --lambda-file is required".into())),
    };
    Ok(vectors
        .iter()
        .map(|v| HalfWeight::integral(v))
        .collect::<Result<_, _>>()?)
}

fn check_rank(pd: &PolarizedDatum, lambda: &HalfWeight) -> Result<(), CliError> {
    Ok(pd.datum().check_weight(lambda)?)
}

fn machine<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

/// A single object for one weight, an array for a lambda file.
fn machine_batch<T: Serialize>(items: &[T], batch: bool) -> String {
    if batch {
        machine(&items)
    } else {
        machine(&items[0])
    }
}

fn list<'a>(items: impl Iterator<Item = &'a HalfWeight>) -> String {
    let v: Vec<String> = items.map(HalfWeight::to_combination).collect();
    if v.is_empty() {
        "(none)".into()
    } else {
        v.join(", ")
    }
}

fn odd_list<'a>(items: impl Iterator<Item = (&'a HalfWeight, &'a u32)>) -> String {
    let v: Vec<String> = items
        .map(|(d, &m)| {
            if m == 1 {
                d.to_combination()
            } else {
                format!("{} (x{m})", d.to_combination())
            }
        })
        .collect();
    if v.is_empty() {
        "(none)".into()
    } else {
        v.join(", ")
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Serialize)]
struct DoubledWeight {
    doubled: Vec<i64>,
}

impl From<&HalfWeight> for DoubledWeight {
    fn from(w: &HalfWeight) -> Self {
        Self { doubled: w.doubled().to_vec() }
    }
}

#[derive(Serialize)]
struct OddRoot {
    root: Vec<i64>,
    multiplicity: u32,
}

#[derive(Serialize)]
struct RootsDoc {
    group: String,
    gamma: Vec<String>,
    even_positive: Vec<Vec<i64>>,
    even_negative: Vec<Vec<i64>>,
    odd_positive: Vec<OddRoot>,
    odd_negative: Vec<OddRoot>,
    odd_cartan_dim: usize,
    rho_even: DoubledWeight,
    rho_odd: DoubledWeight,
    rho: DoubledWeight,
    distinguished_parabolic: bool,
}

fn coords(w: &HalfWeight) -> Vec<i64> {
    w.coords().expect("roots are integral")
}

fn roots(args: &GroupArgs) -> Result<String, CliError> {
    let pd = polarized(args)?;
    let parabolic = pd.admits_distinguished_parabolic();
    if args.format == Format::Machine {
        let odd = |m: &std::collections::BTreeMap<HalfWeight, u32>| {
            m.iter()
                .map(|(d, &k)| OddRoot { root: coords(d), multiplicity: k })
                .collect()
        };
        return Ok(machine(&RootsDoc {
            group: args.group.to_string(),
            gamma: pd.gamma().values().iter().map(|v| v.to_string()).collect(),
            even_positive: pd.pos_even().iter().map(coords).collect(),
            even_negative: pd.neg_even().iter().map(coords).collect(),
            odd_positive: odd(pd.pos_odd()),
            odd_negative: odd(pd.neg_odd()),
            odd_cartan_dim: pd.datum().odd_cartan_dim(),
            rho_even: pd.rho_even().into(),
            rho_odd: pd.rho_odd().into(),
            rho: pd.rho().into(),
            distinguished_parabolic: parabolic,
        }));
    }
    let mut s = String::new();
    writeln!(s, "group: {}", args.group).unwrap();
    writeln!(s, "gamma: {}", pd.gamma()).unwrap();
    writeln!(s, "even positive: {}", list(pd.pos_even().iter())).unwrap();
    writeln!(s, "even negative: {}", list(pd.neg_even().iter())).unwrap();
    writeln!(s, "odd positive: {}", odd_list(pd.pos_odd().iter())).unwrap();
    writeln!(s, "odd negative: {}", odd_list(pd.neg_odd().iter())).unwrap();
    writeln!(s, "odd cartan dim: {}", pd.datum().odd_cartan_dim()).unwrap();
    writeln!(s, "rho_0: {}", pd.rho_even()).unwrap();
    writeln!(s, "rho_1: {}", pd.rho_odd()).unwrap();
    writeln!(s, "rho: {}", pd.rho()).unwrap();
    writeln!(s, "distinguished parabolic: {}", yes_no(parabolic)).unwrap();
    Ok(s)
}

#[derive(Serialize)]
struct DominantDoc {
    lambda: Vec<i64>,
    dominant: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    characteristic: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    in_lambda_plus_p: Option<bool>,
}

fn dominant(args: &WeightArgs) -> Result<String, CliError> {
    let pd = polarized(&args.group)?;
    let ws = weights(args)?;
    let mut docs = Vec::new();
    for lambda in &ws {
        check_rank(&pd, lambda)?;
        let restricted = match args.field {
            Some(f) if f.characteristic() > 0 => Some(pd.in_lambda_plus_p(lambda, f.characteristic() as i64)?),
            _ => None,
        };
        docs.push(DominantDoc {
            lambda: coords(lambda),
            dominant: pd.is_dominant(lambda),
            characteristic: restricted.map(|_| args.field.unwrap().characteristic()),
            in_lambda_plus_p: restricted,
        });
    }
    if args.group.format == Format::Machine {
        return Ok(machine_batch(&docs, args.lambda_file.is_some()));
    }
    let mut s = String::new();
    for d in &docs {
        let lambda = HalfWeight::integral(&d.lambda)?;
        write!(s, "{lambda}: {}", if d.dominant { "dominant" } else { "not dominant" }).unwrap();
        if let (Some(p), Some(r)) = (d.characteristic, d.in_lambda_plus_p) {
            write!(s, "; restricted for p = {p}: {}", yes_no(r)).unwrap();
        }
        s.push('\n');
    }
    Ok(s)
}

const REFLECTED_NOTE: &str = "note: the negated positive odd roots differ from the negative odd roots, so the \
                              products of (1 + e^-d) and (1 + e^d) over positive odd d disagree; both are reported";

fn character_text(pd: &PolarizedDatum, r: &SuperCharacterReport) -> String {
    let mut s = String::new();
    writeln!(s, "group: {}", pd.datum().name()).unwrap();
    writeln!(s, "lambda: {}", r.lambda).unwrap();
    if r.euler_only {
        writeln!(s, "note: no distinguished parabolic; Euler characteristic only").unwrap();
    }
    writeln!(s, "even character: {}", r.even_char).unwrap();
    writeln!(s, "odd factor: {}", r.odd_factor).unwrap();
    writeln!(s, "super character: {}", r.super_char).unwrap();
    writeln!(s, "even dim: {}", r.even_dim).unwrap();
    writeln!(s, "super dim: {}", r.super_dim).unwrap();
    writeln!(s, "top weight check: {}", if r.top_weight_ok { "pass" } else { "fail" }).unwrap();
    if let Some(n) = r.n_lambda {
        writeln!(s, "n_lambda: {n}").unwrap();
    }
    if let Some(alt) = &r.reflected {
        writeln!(s, "reflected odd factor: {}", alt.odd_factor).unwrap();
        writeln!(s, "reflected super character: {}", alt.super_char).unwrap();
        writeln!(s, "reflected super dim: {}", alt.super_dim).unwrap();
        writeln!(s, "reflected top weight check: {}", if alt.top_weight_ok { "pass" } else { "fail" }).unwrap();
        writeln!(s, "{REFLECTED_NOTE}").unwrap();
    }
    s
}

fn reports(args: &WeightArgs) -> Result<(PolarizedDatum, Vec<SuperCharacterReport>), CliError> {
    let pd = polarized(&args.group)?;
    let opts = CharacterOptions { force: args.force };
    let reports = weights(args)?
        .iter()
        .map(|l| {
            check_rank(&pd, l)?;
            Ok(super_character_with(&pd, l, opts)?)
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok((pd, reports))
}

fn character(args: &WeightArgs) -> Result<String, CliError> {
    let (pd, reports) = reports(args)?;
    if args.group.format == Format::Machine {
        return Ok(machine_batch(&reports, args.lambda_file.is_some()));
    }
    Ok(reports
        .iter()
        .map(|r| character_text(&pd, r))
        .collect::<Vec<_>>()
        .join("\n"))
}

/// A JSON integer when it fits in `i64`, otherwise its decimal string.
fn integer_value(digits: String) -> serde_json::Value {
    digits.parse::<i64>().map(Into::into).unwrap_or(serde_json::Value::String(digits))
}

#[derive(Serialize)]
struct DimensionDoc {
    lambda: Vec<i64>,
    even_dim: serde_json::Value,
    super_dim: serde_json::Value,
    weyl_formula: String,
    n_lambda: u64,
    bound_holds: bool,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    euler_only: bool,
}

fn dimension(args: &WeightArgs) -> Result<String, CliError> {
    let (pd, reports) = reports(args)?;
    let mut docs = Vec::new();
    for r in &reports {
        let n_lambda = match r.n_lambda {
            Some(n) => n,
            None => simple_torus_dim(&pd, &r.lambda)?,
        };
        docs.push(DimensionDoc {
            lambda: coords(&r.lambda),
            even_dim: integer_value(r.even_dim.to_string()),
            super_dim: integer_value(r.super_dim.to_string()),
            weyl_formula: weyl_dimension(&pd, &r.lambda)?.to_string(),
            n_lambda,
            bound_holds: induced_dim_bound(&pd, &r.lambda, n_lambda)?,
            euler_only: r.euler_only,
        });
    }
    if args.group.format == Format::Machine {
        return Ok(machine_batch(&docs, args.lambda_file.is_some()));
    }
    let mut s = String::new();
    for d in &docs {
        writeln!(s, "lambda: {}", HalfWeight::integral(&d.lambda)?).unwrap();
        if d.euler_only {
            writeln!(s, "note: no distinguished parabolic; Euler characteristic only").unwrap();
        }
        writeln!(s, "even dim: {}", d.even_dim).unwrap();
        writeln!(s, "weyl formula: {}", d.weyl_formula).unwrap();
        writeln!(s, "super dim: {}", d.super_dim).unwrap();
        writeln!(s, "n_lambda: {}", d.n_lambda).unwrap();
        writeln!(s, "induced bound: {}", if d.bound_holds { "holds" } else { "violated" }).unwrap();
    }
    Ok(s)
}

fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    m.iter().map(|row| row.iter().map(|x| x.to_string()).collect()).collect()
}

fn matrix_text(m: &Matrix) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|row| format!("[{}]", row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

#[derive(Serialize)]
struct RepDoc {
    even_dim: usize,
    odd_dim: usize,
    squares: Vec<String>,
    generators: Vec<Vec<Vec<String>>>,
}

#[derive(Serialize)]
struct CliffordDoc {
    field: String,
    gram: Vec<Vec<String>>,
    #[serde(flatten)]
    classification: CliffordClassification,
    #[serde(skip_serializing_if = "Option::is_none")]
    rep: Option<RepDoc>,
}

fn clifford(args: &CliffordArgs) -> Result<String, CliError> {
    let qs = match (&args.group, &args.lambda, &args.gram) {
        (Some(g), Some(l), None) => {
            let datum = RootDatum::build(*g)?;
            gram_from_weight(&datum, &HalfWeight::integral(&l.0)?, args.field)?
        }
        (None, None, Some(IntVector(flat))) => {
            let r = (0..=flat.len()).find(|r| r * r >= flat.len()).unwrap_or(0);
            if r * r != flat.len() {
                return Err(CliError::Usage(format!("--gram needs a square number of entries, got {}", flat.len())));
            }
            let rows: Vec<Vec<i64>> = flat.chunks(r).map(<[i64]>::to_vec).collect();
            QuadraticSpace::from_integers(&rows, args.field)?
        }
        _ => return Err(CliError::Usage("clifford needs --group with --lambda, or --gram".into())),
    };
    let c = classify(&qs);
    let rep = if args.rep { Some(construct_rep(&qs)?) } else { None };
    if args.format == Format::Machine {
        return Ok(machine(&CliffordDoc {
            field: args.field.to_string(),
            gram: matrix_strings(qs.gram()),
            rep: rep.map(|r| RepDoc {
                even_dim: r.even_dim,
                odd_dim: r.odd_dim,
                squares: r.diagonal.iter().map(|x| x.to_string()).collect(),
                generators: r.generators.iter().map(matrix_strings).collect(),
            }),
            classification: c,
        }));
    }
    let mut s = String::new();
    writeln!(s, "field: {}", args.field).unwrap();
    writeln!(s, "gram: {}", matrix_text(qs.gram())).unwrap();
    writeln!(s, "r: {}", c.r).unwrap();
    writeln!(s, "rad_dim: {}", c.rad_dim).unwrap();
    writeln!(s, "d: {}", c.d).unwrap();
    writeln!(s, "delta: {}", c.delta).unwrap();
    writeln!(s, "delta_class: {}", c.delta_class).unwrap();
    writeln!(s, "type: {}", c.simple_type).unwrap();
    if let Some(n) = c.closed_dim {
        writeln!(s, "closed_dim: {n}").unwrap();
    }
    writeln!(s, "isotropic_dim: {}", c.isotropic_dim).unwrap();
    if let Some(r) = rep {
        writeln!(s, "rep: ({}|{})", r.even_dim, r.odd_dim).unwrap();
        for (i, g) in r.generators.iter().enumerate() {
            writeln!(s, "x{} (square {}): {}", i + 1, r.diagonal[i], matrix_text(g)).unwrap();
        }
    }
    Ok(s)
}

#[derive(Serialize)]
struct ParabolicDoc {
    group: String,
    gamma: Vec<String>,
    distinguished_parabolic: bool,
}

fn parabolic(args: &GroupArgs) -> Result<String, CliError> {
    let pd = polarized(args)?;
    let ok = pd.admits_distinguished_parabolic();
    if args.format == Format::Machine {
        return Ok(machine(&ParabolicDoc {
            group: args.group.to_string(),
            gamma: pd.gamma().values().iter().map(|v| v.to_string()).collect(),
            distinguished_parabolic: ok,
        }));
    }
    Ok(format!("{} with gamma {}: distinguished parabolic: {}\n", args.group, pd.gamma(), yes_no(ok)))
}
