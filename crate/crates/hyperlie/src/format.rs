//! JSON interchange for hypergroups, hyperfields and Lie hyperalgebras.
//!
//! Tables are row-major lists of value lists, indexed by element order.
//! Serialization sorts every value list by element order and writes one
//! table row per line, so output is byte-identical for equal structures.

use std::fmt::Write as _;
use std::path::Path;

use hyperlie_core::structure::{Carrier, FiniteHyperfield, FiniteLieHyperalgebra, HyperOpTable, DEFAULT_MAX_CARRIER};
use hyperlie_core::Subset;
use serde::{Deserialize, Serialize};

/// Environment variable overriding the carrier size cap.
pub const MAX_CARRIER_ENV: &str = "HYPERLIE_MAX_CARRIER";

pub type RawTable = Vec<Vec<Vec<String>>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawStructure {
    pub kind: String,
    pub elements: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub one: Option<String>,
    pub add: RawTable,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mul: Option<RawTable>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bracket: Option<RawTable>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scalar: Option<RawTable>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<RawField>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RawField {
    Shorthand(String),
    Embedded(Box<RawStructure>),
}

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown kind `{0}`")]
    UnknownKind(String),
    #[error("`{field}` is required for kind `{kind}`")]
    MissingField { kind: String, field: &'static str },
    #[error("`{field}` is not allowed for kind `{kind}`")]
    UnexpectedField { kind: String, field: &'static str },
    #[error("table `{table}` has {found} rows, expected {expected}")]
    RowCount { table: &'static str, found: usize, expected: usize },
    #[error("table `{table}` row `{row}` has {found} entries, expected {expected}")]
    RowLength { table: &'static str, row: String, found: usize, expected: usize },
    #[error("table `{table}` row `{row}` column `{col}`: unknown element `{name}`")]
    UnknownElement { table: &'static str, row: String, col: String, name: String },
    #[error("table `{table}` row `{row}` column `{col}`: empty value list")]
    EmptyEntry { table: &'static str, row: String, col: String },
    #[error("`{field}` names unknown element `{name}`")]
    UnknownName { field: &'static str, name: String },
    #[error("field shorthand `{0}` is not of the form trivial:F<q>")]
    BadShorthand(String),
    #[error("{MAX_CARRIER_ENV} must be a positive integer, got `{0}`")]
    BadLimit(String),
    #[error(transparent)]
    Core(#[from] hyperlie_core::Error),
}

/// A parsed interchange file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Hypergroup { carrier: Carrier, add: HyperOpTable, zero: Option<usize> },
    Hyperfield(FiniteHyperfield),
    Lie(FiniteLieHyperalgebra),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Hypergroup { .. } => "hypergroup",
            Structure::Hyperfield(_) => "hyperfield",
            Structure::Lie(_) => "lie_hyperalgebra",
        }
    }
}

/// Carrier cap from the environment, or the library default.
pub fn max_carrier() -> Result<usize, ParseError> {
    match std::env::var(MAX_CARRIER_ENV) {
        Ok(v) => v.trim().parse::<usize>().ok().filter(|&n| n > 0).ok_or(ParseError::BadLimit(v)),
        Err(_) => Ok(DEFAULT_MAX_CARRIER),
    }
}

pub fn load(path: &Path) -> Result<Structure, ParseError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| ParseError::Io { path: path.display().to_string(), source })?;
    parse(&text)
}

pub fn parse(text: &str) -> Result<Structure, ParseError> {
    let raw: RawStructure = serde_json::from_str(text)?;
    from_raw(&raw, max_carrier()?)
}

fn require<'a, T>(raw: &RawStructure, field: &'static str, v: &'a Option<T>) -> Result<&'a T, ParseError> {
    v.as_ref().ok_or_else(|| ParseError::MissingField { kind: raw.kind.clone(), field })
}

fn forbid<T>(raw: &RawStructure, field: &'static str, v: &Option<T>) -> Result<(), ParseError> {
    match v {
        Some(_) => Err(ParseError::UnexpectedField { kind: raw.kind.clone(), field }),
        None => Ok(()),
    }
}

fn lookup(carrier: &Carrier, field: &'static str, name: &str) -> Result<usize, ParseError> {
    carrier.index_of(name).ok_or_else(|| ParseError::UnknownName { field, name: name.to_string() })
}

fn table(
    name: &'static str,
    raw: &RawTable,
    rows: &Carrier,
    cols: &Carrier,
    range: &Carrier,
) -> Result<HyperOpTable, ParseError> {
    if raw.len() != rows.len() {
        return Err(ParseError::RowCount { table: name, found: raw.len(), expected: rows.len() });
    }
    let mut entries = Vec::with_capacity(rows.len() * cols.len());
    for (i, row) in raw.iter().enumerate() {
        let row_name = || rows.name(i).to_string();
        if row.len() != cols.len() {
            return Err(ParseError::RowLength { table: name, row: row_name(), found: row.len(), expected: cols.len() });
        }
        for (j, values) in row.iter().enumerate() {
            if values.is_empty() {
                return Err(ParseError::EmptyEntry { table: name, row: row_name(), col: cols.name(j).to_string() });
            }
            let mut s = Subset::empty(range.len());
            for v in values {
                let x = range.index_of(v).ok_or_else(|| ParseError::UnknownElement {
                    table: name,
                    row: row_name(),
                    col: cols.name(j).to_string(),
                    name: v.clone(),
                })?;
                s.insert(x);
            }
            entries.push(s);
        }
    }
    Ok(HyperOpTable::new(name, rows.len(), cols.len(), range.len(), entries)?)
}

fn hyperfield(raw: &RawStructure, limit: usize) -> Result<FiniteHyperfield, ParseError> {
    forbid(raw, "bracket", &raw.bracket)?;
    forbid(raw, "scalar", &raw.scalar)?;
    forbid(raw, "field", &raw.field)?;
    let carrier = Carrier::with_limit(raw.elements.clone(), limit)?;
    let zero = lookup(&carrier, "zero", require(raw, "zero", &raw.zero)?)?;
    let one = lookup(&carrier, "one", require(raw, "one", &raw.one)?)?;
    let add = table("add", &raw.add, &carrier, &carrier, &carrier)?;
    let mul = table("mul", require(raw, "mul", &raw.mul)?, &carrier, &carrier, &carrier)?;
    Ok(FiniteHyperfield::new(carrier, add, mul, zero, one)?)
}

fn shorthand(s: &str) -> Result<FiniteHyperfield, ParseError> {
    let q = s
        .strip_prefix("trivial:F")
        .and_then(|q| q.parse::<usize>().ok())
        .ok_or_else(|| ParseError::BadShorthand(s.to_string()))?;
    Ok(FiniteHyperfield::trivial(q)?)
}

pub fn from_raw(raw: &RawStructure, limit: usize) -> Result<Structure, ParseError> {
    match raw.kind.as_str() {
        "hypergroup" => {
            for (f, present) in [("one", raw.one.is_some()), ("mul", raw.mul.is_some()), ("bracket", raw.bracket.is_some()), ("scalar", raw.scalar.is_some()), ("field", raw.field.is_some())] {
                if present {
                    return Err(ParseError::UnexpectedField { kind: raw.kind.clone(), field: f });
                }
            }
            let carrier = Carrier::with_limit(raw.elements.clone(), limit)?;
            let zero = raw.zero.as_deref().map(|z| lookup(&carrier, "zero", z)).transpose()?;
            let add = table("add", &raw.add, &carrier, &carrier, &carrier)?;
            Ok(Structure::Hypergroup { carrier, add, zero })
        }
        "hyperfield" => Ok(Structure::Hyperfield(hyperfield(raw, limit)?)),
        "lie_hyperalgebra" => {
            forbid(raw, "one", &raw.one)?;
            forbid(raw, "mul", &raw.mul)?;
            let field = match require(raw, "field", &raw.field)? {
                RawField::Shorthand(s) => shorthand(s)?,
                RawField::Embedded(f) if f.kind == "hyperfield" => hyperfield(f, limit)?,
                RawField::Embedded(f) => return Err(ParseError::UnknownKind(format!("{} (as field)", f.kind))),
            };
            let carrier = Carrier::with_limit(raw.elements.clone(), limit)?;
            let zero = lookup(&carrier, "zero", require(raw, "zero", &raw.zero)?)?;
            let add = table("add", &raw.add, &carrier, &carrier, &carrier)?;
            let bracket = table("bracket", require(raw, "bracket", &raw.bracket)?, &carrier, &carrier, &carrier)?;
            let scalar = table("scalar", require(raw, "scalar", &raw.scalar)?, field.carrier(), &carrier, &carrier)?;
            Ok(Structure::Lie(FiniteLieHyperalgebra::new(carrier, add, scalar, bracket, field, zero)?))
        }
        other => Err(ParseError::UnknownKind(other.to_string())),
    }
}

fn raw_table(t: &HyperOpTable, range: &Carrier) -> RawTable {
    (0..t.rows())
        .map(|i| (0..t.cols()).map(|j| t.get(i, j).iter().map(|x| range.name(x).to_string()).collect()).collect())
        .collect()
}

fn raw_hyperfield(f: &FiniteHyperfield) -> RawStructure {
    let c = f.carrier();
    RawStructure {
        kind: "hyperfield".into(),
        elements: c.names().to_vec(),
        zero: Some(c.name(f.zero()).into()),
        one: Some(c.name(f.one()).into()),
        add: raw_table(f.add(), c),
        mul: Some(raw_table(f.mul(), c)),
        bracket: None,
        scalar: None,
        field: None,
    }
}

/// `trivial:F<q>` if `f` is exactly the trivial hyperfield of `𝔽_q`.
fn field_ref(f: &FiniteHyperfield) -> RawField {
    match FiniteHyperfield::trivial(f.len()) {
        Ok(t) if t == *f => RawField::Shorthand(format!("trivial:F{}", f.len())),
        _ => RawField::Embedded(Box::new(raw_hyperfield(f))),
    }
}

pub fn to_raw(s: &Structure) -> RawStructure {
    match s {
        Structure::Hypergroup { carrier, add, zero } => RawStructure {
            kind: "hypergroup".into(),
            elements: carrier.names().to_vec(),
            zero: zero.map(|z| carrier.name(z).into()),
            one: None,
            add: raw_table(add, carrier),
            mul: None,
            bracket: None,
            scalar: None,
            field: None,
        },
        Structure::Hyperfield(f) => raw_hyperfield(f),
        Structure::Lie(l) => {
            let c = l.carrier();
            RawStructure {
                kind: "lie_hyperalgebra".into(),
                elements: c.names().to_vec(),
                zero: Some(c.name(l.zero()).into()),
                one: None,
                add: raw_table(l.add(), c),
                mul: None,
                bracket: Some(raw_table(l.bracket(), c)),
                scalar: Some(raw_table(l.scalar(), c)),
                field: Some(field_ref(l.field())),
            }
        }
    }
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

fn write_table(out: &mut String, indent: &str, t: &RawTable) {
    out.push_str("[\n");
    for (i, row) in t.iter().enumerate() {
        let sep = if i + 1 < t.len() { "," } else { "" };
        let _ = writeln!(out, "{indent}  {}{sep}", json(row));
    }
    let _ = write!(out, "{indent}]");
}

fn write_raw(out: &mut String, indent: &str, r: &RawStructure) {
    let mut fields: Vec<(&str, String)> = vec![("kind", json(&r.kind)), ("elements", json(&r.elements))];
    for (k, v) in [("zero", &r.zero), ("one", &r.one)] {
        if let Some(v) = v {
            fields.push((k, json(v)));
        }
    }
    let inner = format!("{indent}  ");
    let mut tables: Vec<(&str, &RawTable)> = vec![("add", &r.add)];
    for (k, v) in [("mul", &r.mul), ("bracket", &r.bracket), ("scalar", &r.scalar)] {
        if let Some(v) = v {
            tables.push((k, v));
        }
    }
    for (k, t) in tables {
        let mut s = String::new();
        write_table(&mut s, &inner, t);
        fields.push((k, s));
    }
    match &r.field {
        Some(RawField::Shorthand(s)) => fields.push(("field", json(s))),
        Some(RawField::Embedded(f)) => {
            let mut s = String::new();
            write_raw(&mut s, &inner, f);
            fields.push(("field", s));
        }
        None => {}
    }
    out.push_str("{\n");
    for (i, (k, v)) in fields.iter().enumerate() {
        let sep = if i + 1 < fields.len() { "," } else { "" };
        let _ = writeln!(out, "{inner}\"{k}\": {v}{sep}");
    }
    let _ = write!(out, "{indent}}}");
}

/// Canonical text form, one table row per line.
pub fn to_string(s: &Structure) -> String {
    let mut out = String::new();
    write_raw(&mut out, "", &to_raw(s));
    out.push('\n');
    out
}
