//! The JSON document format.
//!
//! A document is an object with a `kind` (`cochain`, `bicomplex`,
//! `real_bicomplex`, `chain_map`, `bicomplex_map`) and a `field` (`Q`, or
//! `Q_i` for real bicomplexes). Graded spaces map keys `"n"` or `"p,q"` to
//! dimensions; differentials and maps map source keys to row-major matrices
//! of fraction strings. Gaussian rationals are pairs `["re","im"]`. Absent
//! blocks are zero. Maps carry their `source` and `target` as nested
//! documents, and an `offset` when it is not zero.
//!
//! Emission is canonical: keys in degree order, reduced fractions, zero
//! blocks and zero dimensions dropped, objects one entry per line and
//! matrices on a single line.

use std::collections::BTreeMap;

use bico::complexes::{Bideg, Complex, Degree, GradedMap};
use bico::exactlin::Matrix;
use bico::realbico::RealBicomplex;
use bico::scalar::{format_q, parse_q, Field, Q, QI};
use serde_json::{Map, Value};

#[derive(Debug, thiserror::Error)]
pub enum DocError {
    #[error("JSON syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("at {path}: {message}")]
    Format { path: String, message: String },
    #[error("invalid {kind}:\n{report}")]
    Invalid { kind: &'static str, report: String },
}

impl DocError {
    fn format(path: &str, message: impl Into<String>) -> Self {
        DocError::Format { path: path.to_string(), message: message.into() }
    }
}

/// A parsed and validated document.
#[derive(Clone, Debug, PartialEq)]
pub enum Object {
    Cochain(Complex<i32, Q>),
    Bicomplex(Complex<Bideg, Q>),
    RealBicomplex(RealBicomplex),
    ChainMap(GradedMap<i32, Q>),
    BicomplexMap(GradedMap<Bideg, Q>),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Cochain(_) => "cochain",
            Object::Bicomplex(_) => "bicomplex",
            Object::RealBicomplex(_) => "real_bicomplex",
            Object::ChainMap(_) => "chain_map",
            Object::BicomplexMap(_) => "bicomplex_map",
        }
    }
}

/// Degree keys: `"n"` and `"p,q"`.
pub trait Key: Degree {
    const SPACE: &'static str;
    const DIFFS: &'static [&'static str];
    fn parse_key(text: &str) -> Option<Self>;
    fn key(self) -> String;
}

impl Key for i32 {
    const SPACE: &'static str = "cochain";
    const DIFFS: &'static [&'static str] = &["d"];
    fn parse_key(text: &str) -> Option<Self> {
        text.trim().parse().ok()
    }
    fn key(self) -> String {
        self.to_string()
    }
}

impl Key for Bideg {
    const SPACE: &'static str = "bicomplex";
    const DIFFS: &'static [&'static str] = &["del", "delbar"];
    fn parse_key(text: &str) -> Option<Self> {
        let (p, q) = text.split_once(',')?;
        Some((p.trim().parse().ok()?, q.trim().parse().ok()?))
    }
    fn key(self) -> String {
        format!("{},{}", self.0, self.1)
    }
}

/// Scalars as JSON values.
pub trait Scalar: Field {
    const FIELD: &'static str;
    fn from_json(v: &Value) -> Result<Self, String>;
    fn to_json(&self) -> Value;
}

fn rational(v: &Value) -> Result<Q, String> {
    match v {
        Value::String(s) => parse_q(s).map_err(|e| e.to_string()),
        Value::Number(n) if n.is_i64() => Ok(Q::from_i64(n.as_i64().expect("checked"))),
        other => Err(format!("expected a fraction string, found {other}")),
    }
}

impl Scalar for Q {
    const FIELD: &'static str = "Q";
    fn from_json(v: &Value) -> Result<Self, String> {
        rational(v)
    }
    fn to_json(&self) -> Value {
        Value::String(format_q(self))
    }
}

impl Scalar for QI {
    const FIELD: &'static str = "Q_i";
    fn from_json(v: &Value) -> Result<Self, String> {
        match v {
            Value::Array(parts) if parts.len() == 2 => Ok(QI::new(rational(&parts[0])?, rational(&parts[1])?)),
            Value::Array(_) => Err("a Gaussian rational is a pair [re, im]".into()),
            other => Ok(QI::from_q(&rational(other)?)),
        }
    }
    fn to_json(&self) -> Value {
        Value::Array(vec![self.re.to_json(), self.im.to_json()])
    }
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>, DocError> {
    v.as_object().ok_or_else(|| DocError::format(path, "expected an object"))
}

fn field<'a>(m: &'a Map<String, Value>, name: &str, path: &str) -> Result<&'a Value, DocError> {
    m.get(name).ok_or_else(|| DocError::format(path, format!("missing key {name:?}")))
}

fn check_field(m: &Map<String, Value>, expected: &str, path: &str) -> Result<(), DocError> {
    match m.get("field") {
        None => Ok(()),
        Some(Value::String(s)) if s == expected => Ok(()),
        Some(other) => Err(DocError::format(path, format!("field must be {expected:?} here, found {other}"))),
    }
}

fn parse_matrix<F: Scalar>(v: &Value, shape: (usize, usize), path: &str) -> Result<Matrix<F>, DocError> {
    let rows = v.as_array().ok_or_else(|| DocError::format(path, "expected an array of rows"))?;
    if rows.len() != shape.0 {
        return Err(DocError::format(path, format!("expected {} rows, found {}", shape.0, rows.len())));
    }
    let mut out = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let rpath = format!("{path}[{i}]");
        let entries = row.as_array().ok_or_else(|| DocError::format(&rpath, "expected an array of entries"))?;
        if entries.len() != shape.1 {
            return Err(DocError::format(&rpath, format!("expected {} entries, found {}", shape.1, entries.len())));
        }
        let parsed: Result<Vec<F>, DocError> = entries
            .iter()
            .enumerate()
            .map(|(j, e)| F::from_json(e).map_err(|m| DocError::format(&format!("{rpath}[{j}]"), m)))
            .collect();
        out.push(parsed?);
    }
    Ok(Matrix::from_rows(out, shape.1))
}

fn emit_matrix<F: Scalar>(m: &Matrix<F>) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(Scalar::to_json).collect())).collect())
}

fn parse_key<D: Key>(text: &str, path: &str) -> Result<D, DocError> {
    D::parse_key(text).ok_or_else(|| DocError::format(path, format!("malformed degree key {text:?}")))
}

fn parse_dims<D: Key>(v: &Value, path: &str) -> Result<BTreeMap<D, usize>, DocError> {
    let mut dims = BTreeMap::new();
    for (k, n) in object(v, path)? {
        let x = parse_key::<D>(k, path)?;
        let n = n.as_u64().ok_or_else(|| DocError::format(&format!("{path}[{k:?}]"), "expected a dimension"))?;
        dims.insert(x, n as usize);
    }
    Ok(dims)
}

/// Blocks keyed by source degree; `shape` gives the expected shape.
fn parse_blocks<D: Key, F: Scalar>(
    v: Option<&Value>,
    path: &str,
    shape: impl Fn(D) -> (usize, usize),
) -> Result<BTreeMap<D, Matrix<F>>, DocError> {
    let mut blocks = BTreeMap::new();
    let Some(v) = v else { return Ok(blocks) };
    for (k, m) in object(v, path)? {
        let x = parse_key::<D>(k, path)?;
        blocks.insert(x, parse_matrix(m, shape(x), &format!("{path}[{k:?}]"))?);
    }
    Ok(blocks)
}

fn parse_complex_unchecked<D: Key, F: Scalar>(m: &Map<String, Value>, path: &str) -> Result<Complex<D, F>, DocError> {
    let dims = parse_dims::<D>(field(m, "dims", path)?, &format!("{path}.dims"))?;
    let mut diffs = Vec::new();
    for (name, &step) in D::DIFFS.iter().zip(D::differentials()) {
        let dim = |x: D| dims.get(&x).copied().unwrap_or(0);
        diffs.push(parse_blocks::<D, F>(m.get(*name), &format!("{path}.{name}"), |x| (dim(x.add(step)), dim(x)))?);
    }
    Complex::from_blocks(dims.into_iter().filter(|(_, n)| *n > 0), diffs)
        .map_err(|e| DocError::format(path, e.to_string()))
}

fn parse_complex<D: Key, F: Scalar>(m: &Map<String, Value>, path: &str) -> Result<Complex<D, F>, DocError> {
    let c = parse_complex_unchecked::<D, F>(m, path)?;
    let report = c.validate();
    if !report.is_valid() {
        return Err(DocError::Invalid { kind: D::SPACE, report: report.to_string() });
    }
    Ok(c)
}

fn expect_kind(m: &Map<String, Value>, kind: &str, path: &str) -> Result<(), DocError> {
    match m.get("kind") {
        Some(Value::String(k)) if k == kind => Ok(()),
        Some(other) => Err(DocError::format(path, format!("expected kind {kind:?}, found {other}"))),
        None => Err(DocError::format(path, "missing key \"kind\"")),
    }
}

fn parse_map<D: Key>(m: &Map<String, Value>, kind: &'static str) -> Result<GradedMap<D, Q>, DocError> {
    let mut ends = Vec::new();
    for end in ["source", "target"] {
        let sub = object(field(m, end, "$")?, &format!("$.{end}"))?;
        expect_kind(sub, D::SPACE, &format!("$.{end}"))?;
        check_field(sub, "Q", &format!("$.{end}"))?;
        ends.push(parse_complex::<D, Q>(sub, &format!("$.{end}"))?);
    }
    let target = ends.pop().expect("two ends");
    let source = ends.pop().expect("two ends");
    let offset = match m.get("offset") {
        None => D::zero(),
        Some(Value::String(s)) => parse_key::<D>(s, "$.offset")?,
        Some(_) => return Err(DocError::format("$.offset", "expected a degree key string")),
    };
    let blocks = parse_blocks::<D, Q>(m.get("blocks"), "$.blocks", |x| (target.dim(x.add(offset)), source.dim(x)))?;
    let f = GradedMap::new(source, target, offset, blocks).map_err(|e| DocError::format("$.blocks", e.to_string()))?;
    if offset == D::zero() {
        let report = f.validate();
        if !report.is_valid() {
            return Err(DocError::Invalid { kind, report: report.to_string() });
        }
    }
    Ok(f)
}

fn parse_real(m: &Map<String, Value>) -> Result<RealBicomplex, DocError> {
    let complex = parse_complex::<Bideg, QI>(m, "$")?;
    let dim = |x: Bideg| complex.dim(x);
    let sigma = parse_blocks::<Bideg, QI>(m.get("sigma"), "$.sigma", |x| (dim((x.1, x.0)), dim(x)))?;
    let a = RealBicomplex::new(complex, sigma).map_err(|e| DocError::format("$.sigma", e.to_string()))?;
    let report = a.validate();
    if !report.is_valid() {
        return Err(DocError::Invalid { kind: "real_bicomplex", report: report.to_string() });
    }
    Ok(a)
}

pub fn parse_value(v: &Value) -> Result<Object, DocError> {
    let m = object(v, "$")?;
    let kind = match field(m, "kind", "$")? {
        Value::String(k) => k.as_str(),
        other => return Err(DocError::format("$.kind", format!("expected a string, found {other}"))),
    };
    let expected_field = if kind == "real_bicomplex" { QI::FIELD } else { Q::FIELD };
    check_field(m, expected_field, "$")?;
    match kind {
        "cochain" => parse_complex::<i32, Q>(m, "$").map(Object::Cochain),
        "bicomplex" => parse_complex::<Bideg, Q>(m, "$").map(Object::Bicomplex),
        "real_bicomplex" => parse_real(m).map(Object::RealBicomplex),
        "chain_map" => parse_map::<i32>(m, "chain_map").map(Object::ChainMap),
        "bicomplex_map" => parse_map::<Bideg>(m, "bicomplex_map").map(Object::BicomplexMap),
        other => Err(DocError::format("$.kind", format!("unknown kind {other:?}"))),
    }
}

/// Parses and validates a document.
pub fn parse(text: &str) -> Result<Object, DocError> {
    let v: Value = serde_json::from_str(text).map_err(|e| DocError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    parse_value(&v)
}

fn emit_blocks<D: Key, F: Scalar>(blocks: &BTreeMap<D, Matrix<F>>) -> Value {
    Value::Object(blocks.iter().filter(|(_, m)| !m.is_zero()).map(|(x, m)| (x.key(), emit_matrix(m))).collect())
}

fn emit_complex<D: Key, F: Scalar>(c: &Complex<D, F>, kind: &str) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("kind".into(), kind.into());
    m.insert("field".into(), F::FIELD.into());
    m.insert("dims".into(), Value::Object(c.dims().iter().map(|(x, n)| (x.key(), (*n).into())).collect()));
    for (k, name) in D::DIFFS.iter().enumerate() {
        m.insert((*name).into(), emit_blocks(c.diff_blocks(k)));
    }
    m
}

fn emit_map<D: Key>(f: &GradedMap<D, Q>, kind: &str) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("kind".into(), kind.into());
    m.insert("field".into(), Q::FIELD.into());
    m.insert("source".into(), Value::Object(emit_complex(f.source(), D::SPACE)));
    m.insert("target".into(), Value::Object(emit_complex(f.target(), D::SPACE)));
    if f.offset() != D::zero() {
        m.insert("offset".into(), f.offset().key().into());
    }
    m.insert("blocks".into(), emit_blocks(f.blocks()));
    m
}

pub fn to_value(o: &Object) -> Value {
    Value::Object(match o {
        Object::Cochain(c) => emit_complex(c, "cochain"),
        Object::Bicomplex(a) => emit_complex(a, "bicomplex"),
        Object::RealBicomplex(a) => {
            let mut m = emit_complex(&a.complex, "real_bicomplex");
            m.insert("sigma".into(), emit_blocks(a.sigma_blocks()));
            m
        }
        Object::ChainMap(f) => emit_map(f, "chain_map"),
        Object::BicomplexMap(f) => emit_map(f, "bicomplex_map"),
    })
}

/// Objects one entry per line, arrays on one line.
pub fn render(v: &Value) -> String {
    let mut out = String::new();
    render_into(v, 0, &mut out);
    out.push('\n');
    out
}

fn render_into(v: &Value, indent: usize, out: &mut String) {
    match v {
        Value::Object(m) if !m.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in m.iter().enumerate() {
                out.push_str(&"  ".repeat(indent + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                render_into(x, indent + 1, out);
                if i + 1 < m.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&"  ".repeat(indent));
            out.push('}');
        }
        other => out.push_str(&other.to_string()),
    }
}

/// The canonical text of an object.
pub fn emit(o: &Object) -> String {
    render(&to_value(o))
}
