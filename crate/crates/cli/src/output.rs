use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use brace_forge::report::Report;
use serde::Serialize;
use serde_json::Value;

use crate::args::Format;

/// Rows of text cells printed as aligned columns.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Table { header: header.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn row<S: ToString>(&mut self, cells: impl IntoIterator<Item = S>) {
        self.rows.push(cells.into_iter().map(|c| c.to_string()).collect());
    }

    fn render(&self) -> String {
        let cols = self.header.len();
        let width: Vec<usize> = (0..cols)
            .map(|i| {
                self.rows
                    .iter()
                    .filter_map(|r| r.get(i))
                    .chain(std::iter::once(&self.header[i]))
                    .map(|c| c.chars().count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: &[String]| {
            let mut s = String::new();
            for (i, c) in cells.iter().enumerate() {
                let pad = width.get(i).copied().unwrap_or(0).saturating_sub(c.chars().count());
                s.push_str(c);
                if i + 1 < cells.len() {
                    s.push_str(&" ".repeat(pad + 2));
                }
            }
            s.trim_end().to_owned()
        };
        let mut out = line(&self.header) + "\n";
        for r in &self.rows {
            out += &line(r);
            out.push('\n');
        }
        out
    }
}

/// What a command produces: an optional report (which decides the exit code),
/// a machine-readable result and an optional table for text output.
#[derive(Debug, Default)]
pub struct Output {
    pub report: Option<Report>,
    pub result: Option<Value>,
    pub table: Option<Table>,
}

impl Output {
    pub fn value(v: impl Serialize) -> Self {
        Output { result: Some(serde_json::to_value(v).expect("results serialize")), ..Default::default() }
    }

    pub fn report(r: Report) -> Self {
        Output { report: Some(r), ..Default::default() }
    }

    pub fn with_value(mut self, v: impl Serialize) -> Self {
        self.result = Some(serde_json::to_value(v).expect("results serialize"));
        self
    }

    pub fn with_table(mut self, t: Table) -> Self {
        self.table = Some(t);
        self
    }

    pub fn passed(&self) -> bool {
        self.report.as_ref().is_none_or(Report::passed)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut obj = serde_json::Map::new();
                if let Some(r) = &self.report {
                    obj.insert("passed".into(), Value::Bool(r.passed()));
                    obj.insert("report".into(), serde_json::to_value(r).expect("reports serialize"));
                }
                if let Some(v) = &self.result {
                    obj.insert("result".into(), v.clone());
                }
                // A bare result keeps files loadable by the matching `--in` commands.
                let v = if self.report.is_none() && self.result.is_some() {
                    obj.remove("result").unwrap()
                } else {
                    Value::Object(obj)
                };
                serde_json::to_string_pretty(&v).expect("json renders") + "\n"
            }
            Format::Text => {
                let mut s = String::new();
                if let Some(r) = &self.report {
                    let _ = write!(s, "{r}");
                }
                match (&self.table, &self.result) {
                    (Some(t), _) => s += &t.render(),
                    (None, Some(v)) => {
                        s += &serde_json::to_string_pretty(v).expect("json renders");
                        s.push('\n');
                    }
                    (None, None) => {}
                }
                s
            }
        }
    }
}

pub fn emit(text: &str, out: Option<&Path>) -> std::io::Result<()> {
    match out {
        Some(p) => std::fs::write(p, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}
