use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::Value;

use perturbed_hardy::C64;

use crate::error::CliError;

/// Version of the `summary.json` layout.
pub const SCHEMA_VERSION: u32 = 1;

/// One CSV file: header plus rows of already-formatted cells.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub name: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(name: &str, header: &[&str]) -> Self {
        Self { name: name.into(), header: header.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let idx = self.header.iter().position(|h| h == name)?;
        self.rows.iter().map(|r| r[idx].parse().ok()).collect()
    }

    pub fn file_name(&self) -> String {
        format!("{}.csv", self.name)
    }

    pub fn write(&self, dir: &Path) -> Result<PathBuf, CliError> {
        let path = dir.join(self.file_name());
        let err = |e: csv::Error| CliError::Write { path: path.clone(), source: e.into() };
        let mut w = csv::Writer::from_path(&path).map_err(err)?;
        w.write_record(&self.header).map_err(err)?;
        for row in &self.rows {
            w.write_record(row).map_err(err)?;
        }
        w.flush().map_err(|source| CliError::Write { path: path.clone(), source })?;
        Ok(path)
    }
}

/// Shortest round-trip representation, so that CSV values re-parse exactly.
pub fn real(x: f64) -> String {
    // `+ 0.0` folds negative zero into zero
    format!("{:e}", x + 0.0)
}

/// A complex value as two cells.
pub fn complex(z: C64) -> [String; 2] {
    [real(z.re), real(z.im)]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Comparison {
    #[serde(rename = "<")]
    Below,
    #[serde(rename = ">=")]
    AtLeast,
}

/// A pass/fail check of one reported number against a threshold.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Gate {
    pub study: String,
    pub name: String,
    pub value: f64,
    pub comparison: Comparison,
    pub threshold: f64,
    /// CSV file holding the rows behind `value`.
    pub table: String,
    pub pass: bool,
}

impl Gate {
    pub fn below(study: &str, name: &str, value: f64, threshold: f64, table: &str) -> Self {
        Self::make(study, name, value, Comparison::Below, threshold, table, value < threshold)
    }

    pub fn at_least(study: &str, name: &str, value: f64, threshold: f64, table: &str) -> Self {
        Self::make(study, name, value, Comparison::AtLeast, threshold, table, value >= threshold)
    }

    /// A boolean property, reported as 1/0 against threshold 1.
    pub fn flag(study: &str, name: &str, ok: bool, table: &str) -> Self {
        Self::make(study, name, if ok { 1.0 } else { 0.0 }, Comparison::AtLeast, 1.0, table, ok)
    }

    fn make(study: &str, name: &str, value: f64, comparison: Comparison, threshold: f64, table: &str, pass: bool) -> Self {
        Self { study: study.into(), name: name.into(), value, comparison, threshold, table: table.into(), pass: pass && !value.is_nan() }
    }
}

/// What one study hands back to the runner.
#[derive(Debug, Clone)]
pub struct StudyOutput {
    pub study: String,
    pub tables: Vec<Table>,
    pub summary: Value,
    pub gates: Vec<Gate>,
}

impl StudyOutput {
    pub fn table(&self, name: &str) -> Option<&Table> {
        self.tables.iter().find(|t| t.name == name)
    }

    pub fn gate(&self, name: &str) -> Option<&Gate> {
        self.gates.iter().find(|g| g.name == name)
    }

    pub fn passed(&self) -> bool {
        self.gates.iter().all(|g| g.pass)
    }
}

/// Everything written for one run.
#[derive(Debug, Clone)]
pub struct RunReport {
    pub header: Value,
    pub studies: Vec<StudyOutput>,
    /// Wall-clock seconds per study, written separately from the deterministic outputs.
    pub timings: Vec<(String, f64)>,
}

impl RunReport {
    pub fn gates(&self) -> impl Iterator<Item = &Gate> {
        self.studies.iter().flat_map(|s| s.gates.iter())
    }

    pub fn all_pass(&self) -> bool {
        self.gates().all(|g| g.pass)
    }

    pub fn summary(&self) -> Value {
        let mut studies = serde_json::Map::new();
        for s in &self.studies {
            studies.insert(s.study.clone(), s.summary.clone());
        }
        let tables: Vec<String> = self.studies.iter().flat_map(|s| s.tables.iter().map(Table::file_name)).collect();
        serde_json::json!({
            "schema_version": SCHEMA_VERSION,
            "run": self.header,
            "studies": studies,
            "gates": self.gates().collect::<Vec<_>>(),
            "tables": tables,
            "all_gates_pass": self.all_pass(),
        })
    }

    /// Writes every table, `summary.json` and `timings.json` into `dir`.
    pub fn write(&self, dir: &Path) -> Result<Vec<PathBuf>, CliError> {
        std::fs::create_dir_all(dir).map_err(|source| CliError::Write { path: dir.into(), source })?;
        let mut written = Vec::new();
        for table in self.studies.iter().flat_map(|s| s.tables.iter()) {
            written.push(table.write(dir)?);
        }
        let json = |name: &str, v: &Value| -> Result<PathBuf, CliError> {
            let path = dir.join(name);
            let text = serde_json::to_string_pretty(v).expect("report values serialize") + "\n";
            std::fs::write(&path, text).map_err(|source| CliError::Write { path: path.clone(), source })?;
            Ok(path)
        };
        written.push(json("summary.json", &self.summary())?);
        let timings: serde_json::Map<String, Value> = self.timings.iter().map(|(k, v)| (k.clone(), Value::from(*v))).collect();
        written.push(json("timings.json", &Value::Object(timings))?);
        Ok(written)
    }
}
