use std::io::Write;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::args::Format;
use crate::error::CliError;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Default)]
pub struct Report {
    pub command: String,
    pub params: Map<String, Value>,
    pub rows: Vec<Value>,
    pub checks: Vec<Check>,
}

pub fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self { command: command.to_string(), ..Self::default() }
    }

    pub fn param(&mut self, key: &str, v: impl Serialize) -> &mut Self {
        self.params.insert(key.to_string(), to_value(&v));
        self
    }

    pub fn row(&mut self, v: impl Serialize) {
        self.rows.push(to_value(&v));
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), pass, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> Value {
        let mut out = Map::new();
        out.insert("command".into(), Value::String(self.command.clone()));
        out.insert("params".into(), Value::Object(self.params.clone()));
        out.insert("rows".into(), Value::Array(self.rows.clone()));
        out.insert("checks".into(), to_value(&self.checks));
        out.insert("pass".into(), Value::Bool(self.passed()));
        Value::Object(out)
    }

    pub fn emit(&self, format: Format, out: &mut impl Write) -> Result<(), CliError> {
        match format {
            Format::Json => {
                // Map is ordered by key, so output is deterministic.
                let s = serde_json::to_string_pretty(&self.to_json()).expect("json");
                writeln!(out, "{s}")?;
            }
            Format::Csv => self.emit_csv(out)?,
            Format::Text => self.emit_text(out)?,
        }
        Ok(())
    }

    fn emit_csv(&self, out: &mut impl Write) -> Result<(), CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let cols = columns(&self.rows);
        if !cols.is_empty() {
            w.write_record(&cols)?;
            for r in &self.rows {
                w.write_record(cols.iter().map(|c| cell(r, c)))?;
            }
        }
        let mut body = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
        if !self.checks.is_empty() {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["check", "pass", "detail"])?;
            for c in &self.checks {
                w.write_record([c.name.as_str(), if c.pass { "true" } else { "false" }, c.detail.as_str()])?;
            }
            if !body.is_empty() {
                body.push(b'\n');
            }
            body.extend(w.into_inner().map_err(|e| CliError::Io(e.to_string()))?);
        }
        out.write_all(&body)?;
        Ok(())
    }

    fn emit_text(&self, out: &mut impl Write) -> Result<(), CliError> {
        writeln!(out, "{}", self.command)?;
        for (k, v) in &self.params {
            writeln!(out, "  {k} = {}", plain(v))?;
        }
        let cols = columns(&self.rows);
        for r in &self.rows {
            let cells: Vec<String> = cols.iter().map(|c| format!("{c}={}", cell(r, c))).collect();
            writeln!(out, "  {}", cells.join(" "))?;
        }
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            writeln!(out, "{tag} {} {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

/// Union of the keys of object rows, sorted; a non-object row is a single
/// `value` column.
fn columns(rows: &[Value]) -> Vec<String> {
    let mut cols = std::collections::BTreeSet::new();
    for r in rows {
        match r {
            Value::Object(m) => cols.extend(m.keys().cloned()),
            _ => {
                cols.insert("value".to_string());
            }
        }
    }
    cols.into_iter().collect()
}

fn cell(row: &Value, col: &str) -> String {
    match row {
        Value::Object(m) => m.get(col).map(plain).unwrap_or_default(),
        v if col == "value" => plain(v),
        _ => String::new(),
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}
