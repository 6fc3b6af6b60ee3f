//! Rendering of record streams as JSON lines, CSV or aligned text.

use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::{Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Human,
}

pub type Record = Map<String, Value>;

/// Write one block of records. Blocks after the first are separated by a
/// blank line in CSV and human output.
pub struct Emitter<W: Write> {
    format: Format,
    out: W,
    blocks: usize,
}

impl<W: Write> Emitter<W> {
    pub fn new(format: Format, out: W) -> Self {
        Emitter { format, out, blocks: 0 }
    }

    pub fn block(&mut self, records: &[Record]) -> io::Result<()> {
        if records.is_empty() {
            return Ok(());
        }
        if self.blocks > 0 && self.format != Format::Json {
            writeln!(self.out)?;
        }
        self.blocks += 1;
        match self.format {
            Format::Json => {
                for r in records {
                    writeln!(self.out, "{}", serde_json::to_string(r).map_err(io::Error::other)?)?;
                }
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut self.out);
                let header = columns(records);
                w.write_record(&header)?;
                for r in records {
                    w.write_record(header.iter().map(|k| r.get(k).map(cell).unwrap_or_default()))?;
                }
                w.flush()?;
            }
            Format::Human => self.human(records)?,
        }
        self.out.flush()
    }

    fn human(&mut self, records: &[Record]) -> io::Result<()> {
        let header = columns(records);
        if records.len() == 1 {
            let width = header.iter().map(|h| h.len()).max().unwrap_or(0);
            for k in &header {
                writeln!(self.out, "{k:<width$}  {}", records[0].get(k).map(cell).unwrap_or_default())?;
            }
            return Ok(());
        }
        let rows: Vec<Vec<String>> = records
            .iter()
            .map(|r| header.iter().map(|k| r.get(k).map(cell).unwrap_or_default()).collect())
            .collect();
        let widths: Vec<usize> = header
            .iter()
            .enumerate()
            .map(|(i, h)| rows.iter().map(|r| r[i].len()).max().unwrap_or(0).max(h.len()))
            .collect();
        let line = |cells: &[String]| {
            cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect::<Vec<_>>().join("  ")
        };
        writeln!(self.out, "{}", line(&header).trim_end())?;
        for r in &rows {
            writeln!(self.out, "{}", line(r).trim_end())?;
        }
        Ok(())
    }
}

/// Union of keys in first-appearance order.
fn columns(records: &[Record]) -> Vec<String> {
    let mut cols: Vec<String> = Vec::new();
    for r in records {
        for k in r.keys() {
            if !cols.contains(k) {
                cols.push(k.clone());
            }
        }
    }
    cols
}

/// Flat text for one value: arrays joined by ';', objects as k=v pairs.
pub fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(a) => a.iter().map(cell).collect::<Vec<_>>().join(";"),
        Value::Object(o) => o.iter().map(|(k, v)| format!("{k}={}", cell(v))).collect::<Vec<_>>().join(";"),
        other => other.to_string(),
    }
}

/// Structured error record on standard error.
pub fn error_record(code: &str, message: &str) {
    let mut r = Record::new();
    r.insert("schema_version".into(), SCHEMA_VERSION.into());
    r.insert("error".into(), code.into());
    r.insert("message".into(), message.into());
    eprintln!("{}", Value::Object(r));
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn rec(v: Value) -> Record {
        v.as_object().unwrap().clone()
    }

    #[test]
    fn cells_flatten() {
        assert_eq!(cell(&json!(["a", "b"])), "a;b");
        assert_eq!(cell(&json!({"b": 0.5, "c": 1})), "b=0.5;c=1");
        assert_eq!(cell(&json!(0.1)), "0.1");
        assert_eq!(cell(&Value::Null), "");
    }

    #[test]
    fn csv_and_human_blocks() {
        let rows = [rec(json!({"x": 1, "y": "a"})), rec(json!({"x": 22, "y": "bb"}))];
        let mut buf = Vec::new();
        let mut e = Emitter::new(Format::Csv, &mut buf);
        e.block(&rows).unwrap();
        e.block(&rows[..1]).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "x,y\n1,a\n22,bb\n\nx,y\n1,a\n");
        let mut buf = Vec::new();
        Emitter::new(Format::Human, &mut buf).block(&rows).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "x   y\n1   a\n22  bb\n");
    }

    #[test]
    fn json_keeps_field_order() {
        let mut buf = Vec::new();
        Emitter::new(Format::Json, &mut buf).block(&[rec(json!({"z": 1, "a": 2}))]).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "{\"z\":1,\"a\":2}\n");
    }
}
