//! Output documents.
//!
//! Every command produces a [`Document`]: a table of records plus a summary.
//! JSON renders `{meta: {version, command, params}, records, summary}` with
//! sorted keys; CSV renders the records with a header row; text renders
//! fixed-width columns followed by the summary.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{Map, Value};

use ppbinom_core::{FieldCtx, FieldElem};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" | "table" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::Usage(format!("unknown format `{s}` (text, json, csv)"))),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Table { columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_json(&self) -> Vec<Value> {
        self.rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> =
                    self.columns.iter().zip(row).map(|(c, v)| (c.to_string(), v.clone())).collect();
                Value::Object(obj)
            })
            .collect()
    }

    pub fn render_text(&self) -> String {
        render_grid(
            &self.columns.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            &self.rows.iter().map(|r| r.iter().map(cell_text).collect()).collect::<Vec<_>>(),
        )
    }

    pub fn render_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(cell_text))?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Usage(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

fn render_grid(header: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[String]| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i + 1 == cells.len() {
                s.push_str(cell);
            } else {
                let _ = write!(s, "{cell:<w$}  ");
            }
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(header);
    for row in rows {
        line(row);
    }
    out
}

fn cell_text(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(cell_text).collect::<Vec<_>>().join(";"),
        other => other.to_string(),
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Document {
    pub command: String,
    pub params: Map<String, Value>,
    pub records: Table,
    pub summary: Map<String, Value>,
}

impl Document {
    pub fn new(command: &str, params: Map<String, Value>, records: Table) -> Self {
        Document { command: command.to_string(), params, records, summary: Map::new() }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => {
                let doc = serde_json::json!({
                    "meta": {
                        "version": env!("CARGO_PKG_VERSION"),
                        "command": self.command,
                        "params": self.params,
                    },
                    "records": self.records.to_json(),
                    "summary": self.summary,
                });
                let mut s = serde_json::to_string_pretty(&doc)?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => self.records.render_csv(),
            Format::Text => Ok(self.render_text()),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        if !self.records.columns.is_empty() {
            out.push_str(&self.records.render_text());
        }
        for (key, value) in &self.summary {
            match value {
                Value::Null => {}
                Value::Array(items) if items.iter().all(Value::is_object) && !items.is_empty() => {
                    let _ = writeln!(out, "\n{key}:");
                    out.push_str(&objects_grid(items));
                }
                Value::Array(items) if items.iter().all(Value::is_string) => {
                    let _ = writeln!(out, "{key}:");
                    for item in items {
                        let _ = writeln!(out, "  {}", cell_text(item));
                    }
                }
                _ => {
                    let _ = writeln!(out, "{key}: {}", cell_text(value));
                }
            }
        }
        out
    }
}

fn objects_grid(items: &[Value]) -> String {
    let header: Vec<String> = match &items[0] {
        Value::Object(m) => m.keys().cloned().collect(),
        _ => unreachable!(),
    };
    let rows: Vec<Vec<String>> = items
        .iter()
        .map(|item| header.iter().map(|k| item.get(k).map(cell_text).unwrap_or_default()).collect())
        .collect();
    render_grid(&header, &rows)
}

/// `{index, power, coeffs}` columns for an element, as JSON values.
pub fn elem_values(ctx: &FieldCtx, x: FieldElem) -> [Value; 3] {
    [
        Value::from(x.index()),
        ctx.log(x).map_or(Value::Null, Value::from),
        Value::from(ctx.format_coeffs(x)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Document {
        let mut t = Table::new(&["q", "name", "tags"]);
        t.push(vec![json!(9), json!("a,b"), json!([1, 7])]);
        t.push(vec![json!(128), json!("c"), Value::Null]);
        let mut params = Map::new();
        params.insert("r".into(), json!(5));
        let mut doc = Document::new("search", params, t);
        doc.summary.insert("total".into(), json!(2));
        doc
    }

    #[test]
    fn text_is_fixed_width() {
        let text = sample().render(Format::Text).unwrap();
        assert_eq!(text, "q    name  tags\n9    a,b   1;7\n128  c\ntotal: 2\n");
    }

    #[test]
    fn csv_quotes_and_header() {
        let csv = sample().render(Format::Csv).unwrap();
        assert_eq!(csv, "q,name,tags\n9,\"a,b\",1;7\n128,c,\n");
    }

    #[test]
    fn json_keys_sorted() {
        let s = sample().render(Format::Json).unwrap();
        let v: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["meta"]["command"], "search");
        assert_eq!(v["records"][0]["tags"], json!([1, 7]));
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["meta", "records", "summary"]);
        assert!(s.find("\"name\"").unwrap() < s.find("\"q\"").unwrap());
    }

    #[test]
    fn format_parse() {
        assert_eq!("csv".parse::<Format>().unwrap(), Format::Csv);
        assert!("xml".parse::<Format>().is_err());
    }
}
