use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use anyhow::{Context, Result};
use serde_json::Value;

/// Rows of strings under a header; rendered tab-separated.
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<const N: usize>(header: [&str; N]) -> Self {
        Table { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn row<const N: usize>(mut self, cells: [String; N]) -> Self {
        debug_assert_eq!(N, self.header.len());
        self.rows.push(cells.into());
        self
    }

    fn render(&self) -> String {
        let mut out = String::new();
        for line in std::iter::once(&self.header).chain(&self.rows) {
            out.push_str(&line.join("\t"));
            out.push('\n');
        }
        out
    }
}

/// Where results go: stdout or `--out FILE`, as JSON or TSV.
pub struct Sink {
    path: Option<PathBuf>,
    tsv: bool,
}

impl Sink {
    pub fn new(path: Option<PathBuf>, tsv: bool) -> Self {
        Sink { path, tsv }
    }

    fn writer(&self) -> Result<Box<dyn Write>> {
        Ok(match &self.path {
            Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        })
    }

    pub fn emit(&self, json: &Value, table: &Table) -> Result<()> {
        if self.tsv {
            self.text(&table.render())
        } else {
            let mut text = serde_json::to_string_pretty(json)?;
            text.push('\n');
            self.text(&text)
        }
    }

    pub fn text(&self, text: &str) -> Result<()> {
        let mut w = self.writer()?;
        w.write_all(text.as_bytes())?;
        w.flush()?;
        Ok(())
    }

    pub fn stream(&self, lines: impl Iterator<Item = String>) -> Result<()> {
        let mut w = self.writer()?;
        for line in lines {
            writeln!(w, "{line}")?;
        }
        w.flush()?;
        Ok(())
    }
}
