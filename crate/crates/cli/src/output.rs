//! Report rendering: JSON, aligned text, CSV.

use clap::ValueEnum;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

/// Rows for CSV output when a report is naturally tabular.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub body: Value,
    pub table: Option<Table>,
    /// Exit status on success; `oracle-check` uses 1 for disagreement.
    pub status: i32,
}

impl Report {
    pub fn new(body: Value) -> Self {
        Self {
            body,
            table: None,
            status: 0,
        }
    }

    pub fn with_table(mut self, table: Table) -> Self {
        self.table = Some(table);
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.body).expect("serializable");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut out = String::new();
                text(&self.body, 0, &mut out);
                out
            }
            Format::Csv => match &self.table {
                Some(table) => csv_rows(&table.headers, &table.rows),
                None => {
                    let rows = match &self.body {
                        Value::Object(map) => map
                            .iter()
                            .map(|(k, v)| vec![k.clone(), scalar(v)])
                            .collect(),
                        other => vec![vec!["value".to_string(), scalar(other)]],
                    };
                    csv_rows(&["key", "value"], &rows)
                }
            },
        }
    }
}

fn csv_rows(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(headers).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

/// One-line form: strings unquoted, everything else as compact JSON.
fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        Value::Array(items) if items.iter().all(is_flat) => {
            items.iter().map(scalar).collect::<Vec<_>>().join(", ")
        }
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn is_inline(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(is_flat),
        Value::Object(_) => false,
        _ => true,
    }
}

fn text(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            let width = map.keys().map(String::len).max().unwrap_or(0);
            for (k, v) in map {
                if is_inline(v) {
                    out.push_str(&format!("{pad}{k:<width$}  {}\n", scalar(v)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    text(v, indent + 2, out);
                }
            }
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                if is_inline(item) {
                    out.push_str(&format!("{pad}- {}\n", scalar(item)));
                } else {
                    out.push_str(&format!("{pad}[{i}]\n"));
                    text(item, indent + 2, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}
