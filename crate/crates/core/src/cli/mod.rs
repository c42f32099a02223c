//! Command implementations behind the `csgoppa` binary. Each command
//! returns its rendered output and an overall verdict.

mod tables;

pub use tables::cmd_table;

use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::algebra::{code_field, AlgebraError, Poly};
use crate::chains::{verify_chain, ChainError};
use crate::codes::{make_code, CodeError, CodeInstance, SupportVariant};
use crate::distance::{min_distance_exact, min_distance_upper, DistanceError, ExactOptions, SearchMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(CliError::Usage(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Settings {
    pub format: Format,
    pub threads: usize,
    pub cap: u64,
    pub seed: u64,
    pub dump_h: Option<PathBuf>,
    pub dump_support: Option<PathBuf>,
    pub include_extended: bool,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            format: Format::Json,
            threads: 1,
            cap: crate::distance::ExactOptions::default().cap,
            seed: 1,
            dump_h: None,
            dump_support: None,
            include_extended: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub pass: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Distance(#[from] DistanceError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn is_usage_algebra(e: &AlgebraError) -> bool {
    matches!(
        e,
        AlgebraError::NotPrime(_)
            | AlgebraError::UnsupportedQ(_)
            | AlgebraError::ExtensionDegree(_)
            | AlgebraError::CapExceeded { .. }
    )
}

impl CliError {
    /// 2 for invalid parameters, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        let usage = match self {
            CliError::Usage(_) => true,
            CliError::Code(CodeError::Algebra(e)) => is_usage_algebra(e),
            CliError::Code(CodeError::ZeroOrder | CodeError::SupportRoot(_) | CodeError::UnknownVariant(_)) => true,
            CliError::Chain(ChainError::OrderOutOfRange { .. }) => true,
            CliError::Chain(ChainError::Code(CodeError::Algebra(e))) => is_usage_algebra(e),
            CliError::Distance(DistanceError::CapExceeded { .. } | DistanceError::OrderOutOfRange { .. }) => true,
            _ => false,
        };
        if usage {
            2
        } else {
            1
        }
    }
}

/// A code family as named on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyArg {
    Variant(SupportVariant),
    /// Γ3 with the unit row and the zero coordinate removed.
    C3Star,
}

impl FromStr for FamilyArg {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let k = s.to_ascii_lowercase();
        if k == "c3star" || k == "c3*" {
            return Ok(FamilyArg::C3Star);
        }
        s.parse::<SupportVariant>()
            .map(FamilyArg::Variant)
            .map_err(|_| CliError::Usage(format!("unknown family {s:?}")))
    }
}

impl FamilyArg {
    pub fn name(&self) -> String {
        match self {
            FamilyArg::Variant(v) => v.name().replace('L', "gamma"),
            FamilyArg::C3Star => "c3*".to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CodeSpec {
    pub family: FamilyArg,
    pub q: u32,
    pub l: u32,
    pub order: u32,
    /// Power of (x - 1) multiplied into the Goppa polynomial.
    pub extra_power: u32,
}

pub fn build_instance(spec: &CodeSpec) -> Result<CodeInstance, CliError> {
    if spec.l == 0 {
        return Err(CliError::Usage("l must be at least 1".into()));
    }
    let field = code_field(spec.q, spec.l).map_err(CodeError::from)?;
    let extra = (spec.extra_power > 0).then(|| Poly::linear(&field, field.one()).pow(spec.extra_power));
    match spec.family {
        FamilyArg::Variant(v) => Ok(make_code(v, spec.q, spec.l, spec.order, extra)?),
        FamilyArg::C3Star => {
            let g3 = make_code(SupportVariant::L3, spec.q, spec.l, spec.order, extra)?;
            Ok(g3.shorten_redundancy()?)
        }
    }
}

fn write_dumps(code: &CodeInstance, s: &Settings) -> Result<(), CliError> {
    if let Some(p) = &s.dump_h {
        let mut f = std::io::BufWriter::new(fs::File::create(p)?);
        code.h_ext().write_dump(&mut f).map_err(|e| CliError::Code(CodeError::Matrix(e)))?;
    }
    if let Some(p) = &s.dump_support {
        fs::write(p, code.support().to_dump())?;
    }
    Ok(())
}

fn cell_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// CSV with a header row taken from the first record's keys.
pub(crate) fn render_csv(records: &[Map<String, Value>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    if let Some(first) = records.first() {
        w.write_record(first.keys()).expect("in-memory write");
    }
    for r in records {
        w.write_record(r.values().map(cell_text)).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8 cells")
}

fn render(value: Value, records: &[Map<String, Value>], format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&value).expect("serializable")),
        Format::Csv => render_csv(records),
    }
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("record is an object"),
    }
}

pub fn cmd_build(spec: &CodeSpec, s: &Settings) -> Result<Output, CliError> {
    let code = build_instance(spec)?;
    write_dumps(&code, s)?;
    let f = code.field();
    let modulus: Vec<String> = f.modulus().iter().map(|c| c.to_string()).collect();
    let v = json!({
        "family": spec.family.name(),
        "q": spec.q,
        "l": spec.l,
        "order": spec.order,
        "extra_power": spec.extra_power,
        "field": f.id().to_string(),
        "modulus": modulus.join(" "),
        "construction": code.construction(),
        "n": code.n(),
        "k": code.k(),
        "redundancy": code.redundancy(),
        "deg_full": code.full_polynomial().degree().unwrap_or(0),
        "designed_distance": code.designed_distance(),
        "h_ext_rows": code.h_ext().rows(),
        "h_base_rows": code.h_base().rows(),
    });
    let rec = object(v.clone());
    Ok(Output { text: render(v, &[rec], s.format), pass: true })
}

pub fn cmd_dim(spec: &CodeSpec, s: &Settings) -> Result<Output, CliError> {
    let code = build_instance(spec)?;
    write_dumps(&code, s)?;
    let v = json!({
        "family": spec.family.name(),
        "q": spec.q,
        "l": spec.l,
        "order": spec.order,
        "n": code.n(),
        "k": code.k(),
    });
    let rec = object(v.clone());
    Ok(Output { text: render(v, &[rec], s.format), pass: true })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MindistMode {
    Exact,
    Fast,
    Sample,
}

impl FromStr for MindistMode {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "exact" => Ok(MindistMode::Exact),
            "fast" => Ok(MindistMode::Fast),
            "sample" => Ok(MindistMode::Sample),
            _ => Err(CliError::Usage(format!("unknown mode {s:?}"))),
        }
    }
}

pub fn cmd_mindist(spec: &CodeSpec, mode: MindistMode, samples: u64, s: &Settings) -> Result<Output, CliError> {
    let code = build_instance(spec)?;
    write_dumps(&code, s)?;
    let g = code.generator_matrix();
    let r = match mode {
        MindistMode::Sample => min_distance_upper(g, samples.max(1), s.seed)?,
        MindistMode::Exact | MindistMode::Fast => {
            let opts = ExactOptions {
                cap: s.cap,
                mode: if mode == MindistMode::Fast { SearchMode::Fast } else { SearchMode::Exact },
                threads: s.threads,
                target: Some(code.designed_distance()),
            };
            min_distance_exact(g, &opts)?
        }
    };
    let v = serde_json::to_value(&r).expect("serializable");
    let rec = object(v.clone());
    Ok(Output { text: render(v, &[rec], s.format), pass: true })
}

/// Chain report for one order, or for every order 1..=q when `order` is
/// `None`.
pub fn cmd_verify_chain(q: u32, l: u32, order: Option<u32>, s: &Settings) -> Result<Output, CliError> {
    let orders: Vec<u32> = match order {
        Some(i) => vec![i],
        None => (1..=q).collect(),
    };
    let reports =
        tables::par_map(&orders, s.threads, |&i| verify_chain(q, l, i)).into_iter().collect::<Result<Vec<_>, _>>()?;
    let pass = reports.iter().all(|r| r.all_verified());
    let mut records = Vec::new();
    for r in &reports {
        for rel in &r.relations {
            let mut m = Map::new();
            m.insert("q".into(), json!(r.q));
            m.insert("l".into(), json!(r.l));
            m.insert("order".into(), json!(r.order));
            m.extend(object(serde_json::to_value(rel).expect("serializable")));
            m.entry("note").or_insert(Value::Null);
            records.push(m);
        }
    }
    let v = match order {
        Some(_) => serde_json::to_value(&reports[0]).expect("serializable"),
        None => json!({ "q": q, "l": l, "all_verified": pass, "orders": reports }),
    };
    Ok(Output { text: render(v, &records, s.format), pass })
}
