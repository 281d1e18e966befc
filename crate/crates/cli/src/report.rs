//! Run reports and their CSV / JSON serialisation.
//!
//! A report is a table plus everything needed to regenerate it. Output is
//! byte-deterministic for fixed flags: floats are written as `%.12e`, maps
//! are key-sorted, and the timestamp comes only from `SOURCE_DATE_EPOCH`.

use serde::Serialize;
use serde_json::{Map, Value};

/// One table entry.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Float(f64),
    Int(i64),
    Bool(bool),
    Text(String),
    /// Written as an empty CSV field and JSON `null`.
    Missing,
}

impl Cell {
    fn to_field(&self) -> String {
        match self {
            Cell::Float(x) => format_float(*x),
            Cell::Int(n) => n.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Missing => String::new(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Float(x) => Value::from(*x),
            Cell::Int(n) => Value::from(*n),
            Cell::Bool(b) => Value::from(*b),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Missing => Value::Null,
        }
    }

    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Cell::Float(x) => Some(*x),
            Cell::Int(n) => Some(*n as f64),
            _ => None,
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Float(x)
    }
}

impl From<i64> for Cell {
    fn from(n: i64) -> Self {
        Cell::Int(n)
    }
}

impl From<u32> for Cell {
    fn from(n: u32) -> Self {
        Cell::Int(n.into())
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Missing, Cell::Float)
    }
}

/// C-style `%.12e`: `1.000000000000e+00`, `-2.5e-07` as `-2.500000000000e-07`.
pub fn format_float(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let s = format!("{x:.12e}");
    let (mantissa, exponent) = s.split_once('e').expect("exponent form");
    let (sign, digits) = match exponent.strip_prefix('-') {
        Some(d) => ('-', d),
        None => ('+', exponent),
    };
    format!("{mantissa}e{sign}{digits:0>2}")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Metadata {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub units: &'static str,
    /// Lengths and momenta are passed through in the caller's units; when a
    /// scale μ is given it is recorded here so rows can be read in units of 1/μ.
    pub length_unit: String,
    /// `SOURCE_DATE_EPOCH` if set; otherwise absent so reruns stay identical.
    pub timestamp: Option<String>,
}

impl Metadata {
    pub fn new(command: &str, mu: Option<f64>) -> Self {
        Self {
            tool: "anomalab",
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            units: "hbar = 1, 2m = 1: E = k^2, coupling g = 2m lambda",
            length_unit: match mu {
                Some(mu) => format!("user; mu = {}", format_float(mu)),
                None => "user".to_string(),
            },
            timestamp: std::env::var("SOURCE_DATE_EPOCH").ok(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub parameters: Map<String, Value>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    /// Scalar results that are not per-row (JSON `results.summary`).
    pub summary: Map<String, Value>,
    pub metadata: Metadata,
}

impl RunReport {
    pub fn new(metadata: Metadata, parameters: Value, columns: Vec<&'static str>) -> Self {
        let parameters = match parameters {
            Value::Object(map) => map,
            other => panic!("parameters must be an object, got {other}"),
        };
        Self {
            parameters,
            columns,
            rows: Vec::new(),
            summary: Map::new(),
            metadata,
        }
    }

    pub fn push_row(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }

    pub fn set_summary(&mut self, key: &str, value: impl Into<Value>) {
        self.summary.insert(key.to_string(), value.into());
    }

    /// Numeric values of a column; non-numeric cells become NaN.
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let idx = self.columns.iter().position(|c| *c == name)?;
        Some(
            self.rows
                .iter()
                .map(|r| r[idx].as_f64().unwrap_or(f64::NAN))
                .collect(),
        )
    }

    fn header(&self) -> Value {
        let mut map = Map::new();
        map.insert("parameters".into(), Value::Object(self.parameters.clone()));
        map.insert("summary".into(), Value::Object(self.summary.clone()));
        map.insert(
            "metadata".into(),
            serde_json::to_value(&self.metadata).expect("metadata"),
        );
        Value::Object(map)
    }

    /// `#` + compact JSON header, then an RFC-4180 table with `\n` endings.
    pub fn to_csv(&self) -> String {
        let mut out = format!("# {}\n", self.header());
        let mut writer = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        writer.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            writer
                .write_record(row.iter().map(Cell::to_field))
                .expect("in-memory write");
        }
        let bytes = writer.into_inner().expect("in-memory flush");
        out.push_str(std::str::from_utf8(&bytes).expect("utf-8 fields"));
        out
    }

    /// `{parameters, results: {columns, rows, summary}, metadata}`.
    pub fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| (c.to_string(), v.to_json()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut results = Map::new();
        results.insert("columns".into(), Value::from(self.columns.clone()));
        results.insert("rows".into(), Value::Array(rows));
        results.insert("summary".into(), Value::Object(self.summary.clone()));
        let mut top = Map::new();
        top.insert("parameters".into(), Value::Object(self.parameters.clone()));
        top.insert("results".into(), Value::Object(results));
        top.insert(
            "metadata".into(),
            serde_json::to_value(&self.metadata).expect("metadata"),
        );
        let mut s = serde_json::to_string_pretty(&Value::Object(top)).expect("json");
        s.push('\n');
        s
    }
}
