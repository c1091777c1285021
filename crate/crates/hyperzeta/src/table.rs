//! Column-named numeric tables and their CSV and JSON encodings.
//!
//! Numbers are written with the shortest representation that parses back to
//! the same `f64`, so a table read from either encoding is bit-identical to
//! the one that was written.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::path::Path;

use serde_json::{json, Map, Value};

use crate::error::{CliError, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    /// Run parameters; carried in JSON output only.
    pub meta: Map<String, Value>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self {
            columns: columns.iter().map(|c| (*c).to_owned()).collect(),
            rows: Vec::new(),
            meta: Map::new(),
        }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn with_meta(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.meta.insert(key.to_owned(), value.into());
        self
    }

    /// Fails unless the header is exactly `expected`.
    pub fn expect_columns(&self, expected: &[&str]) -> Result<()> {
        if self
            .columns
            .iter()
            .map(String::as_str)
            .eq(expected.iter().copied())
        {
            Ok(())
        } else {
            Err(CliError::Schema(format!(
                "expected columns {}, found {}",
                expected.join(","),
                self.columns.join(",")
            )))
        }
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|v| v.to_string()))?;
        }
        w.flush().map_err(|e| CliError::io("csv", e))?;
        Ok(())
    }

    pub fn write_json<W: Write>(&self, out: W) -> Result<()> {
        let mut meta = self.meta.clone();
        meta.insert("columns".into(), json!(self.columns));
        for v in self.rows.iter().flatten() {
            if !v.is_finite() {
                return Err(CliError::Schema(format!("{v} has no JSON encoding")));
            }
        }
        let doc = json!({ "meta": meta, "rows": self.rows });
        let mut out = out;
        serde_json::to_writer(&mut out, &doc)?;
        out.write_all(b"\n").map_err(|e| CliError::io("json", e))?;
        Ok(())
    }

    pub fn write<W: Write>(&self, format: Format, out: W) -> Result<()> {
        match format {
            Format::Csv => self.write_csv(out),
            Format::Json => self.write_json(out),
        }
    }

    pub fn read_csv<R: Read>(input: R) -> Result<Self> {
        let mut r = csv::Reader::from_reader(input);
        let columns: Vec<String> = r.headers()?.iter().map(str::to_owned).collect();
        let mut rows = Vec::new();
        for (line, rec) in r.records().enumerate() {
            let rec = rec?;
            let row = rec
                .iter()
                .map(|f| {
                    f.trim().parse::<f64>().map_err(|_| {
                        CliError::Schema(format!("record {}: {f:?} is not a number", line + 1))
                    })
                })
                .collect::<Result<Vec<f64>>>()?;
            rows.push(row);
        }
        Ok(Self {
            columns,
            rows,
            meta: Map::new(),
        })
    }

    pub fn read_json<R: Read>(input: R) -> Result<Self> {
        let doc: Value = serde_json::from_reader(input)?;
        let schema = |m: &str| CliError::Schema(m.to_owned());
        let meta = doc
            .get("meta")
            .and_then(Value::as_object)
            .ok_or_else(|| schema("missing meta object"))?
            .clone();
        let columns: Vec<String> = meta
            .get("columns")
            .and_then(Value::as_array)
            .ok_or_else(|| schema("missing meta.columns"))?
            .iter()
            .map(|c| {
                c.as_str()
                    .map(str::to_owned)
                    .ok_or_else(|| schema("non-string column name"))
            })
            .collect::<Result<_>>()?;
        let rows = doc
            .get("rows")
            .and_then(Value::as_array)
            .ok_or_else(|| schema("missing rows array"))?
            .iter()
            .map(|r| {
                let r = r.as_array().ok_or_else(|| schema("row is not an array"))?;
                if r.len() != columns.len() {
                    return Err(schema("row length differs from meta.columns"));
                }
                r.iter()
                    .map(|v| v.as_f64().ok_or_else(|| schema("non-numeric cell")))
                    .collect()
            })
            .collect::<Result<_>>()?;
        let mut meta = meta;
        meta.remove("columns");
        Ok(Self {
            columns,
            rows,
            meta,
        })
    }

    /// Reads JSON when the first non-blank byte is `{`, CSV otherwise.
    pub fn read_path(path: &Path) -> Result<Self> {
        let ctx = || format!("reading {}", path.display());
        let mut buf = Vec::new();
        BufReader::new(File::open(path).map_err(|e| CliError::io(ctx(), e))?)
            .read_to_end(&mut buf)
            .map_err(|e| CliError::io(ctx(), e))?;
        match buf.iter().find(|b| !b.is_ascii_whitespace()) {
            Some(b'{') => Self::read_json(buf.as_slice()),
            _ => Self::read_csv(buf.as_slice()),
        }
    }

    /// Writes to `path`, or to standard output when `path` is `None`.
    pub fn emit(&self, format: Format, path: Option<&Path>) -> Result<()> {
        match path {
            Some(p) => {
                let f = File::create(p)
                    .map_err(|e| CliError::io(format!("creating {}", p.display()), e))?;
                self.write(format, BufWriter::new(f))
            }
            None => self.write(format, io::stdout().lock()),
        }
    }
}
