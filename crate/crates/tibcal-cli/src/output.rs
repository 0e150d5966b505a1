//! Rendering of result tables as aligned text, CSV or JSON lines.

use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Jsonl,
}

/// One titled table; cells are JSON values so numbers stay numbers in jsonl.
#[derive(Debug, Default)]
pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(title: &str, columns: &[&str]) -> Self {
        Table { title: title.into(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

fn text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn write_text(out: &mut impl Write, t: &Table, titled: bool) -> io::Result<()> {
    if titled {
        writeln!(out, "== {} ==", t.title)?;
    }
    let cells: Vec<Vec<String>> = t.rows.iter().map(|r| r.iter().map(text).collect()).collect();
    let widths: Vec<usize> = (0..t.columns.len())
        .map(|i| cells.iter().map(|r| r[i].chars().count()).chain([t.columns[i].len()]).max().unwrap_or(0))
        .collect();
    let line = |out: &mut dyn Write, row: &[String]| -> io::Result<()> {
        let padded: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        writeln!(out, "{}", padded.join("  ").trim_end())
    };
    line(out, &t.columns)?;
    for r in &cells {
        line(out, r)?;
    }
    Ok(())
}

fn write_csv(out: &mut impl Write, t: &Table) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(&t.columns)?;
    for r in &t.rows {
        w.write_record(r.iter().map(text))?;
    }
    w.flush()
}

fn write_jsonl(out: &mut impl Write, t: &Table, titled: bool) -> io::Result<()> {
    for r in &t.rows {
        let mut obj = Map::new();
        if titled {
            obj.insert("table".into(), Value::String(t.title.clone()));
        }
        for (k, v) in t.columns.iter().zip(r) {
            obj.insert(k.clone(), v.clone());
        }
        writeln!(out, "{}", Value::Object(obj))?;
    }
    Ok(())
}

/// Several tables get titles in text, a blank line between CSV blocks and a `table` field in jsonl.
pub fn render(out: &mut impl Write, tables: &[Table], format: Format) -> io::Result<()> {
    let titled = tables.len() > 1;
    for (i, t) in tables.iter().enumerate() {
        if i > 0 && format != Format::Jsonl {
            writeln!(out)?;
        }
        match format {
            Format::Table => write_text(out, t, titled)?,
            Format::Csv => write_csv(out, t)?,
            Format::Jsonl => write_jsonl(out, t, titled)?,
        }
    }
    Ok(())
}
