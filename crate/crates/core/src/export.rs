//! Plain-text output with fixed float formatting.
//!
//! Floats are written as `{:.16e}`, i.e. 17 significant digits, which
//! round-trips every `f64` and gives byte-identical files across runs.

use std::fmt::Write;

pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// A CSV table with a header row and comma separators.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CsvTable {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl CsvTable {
    pub fn new<S: AsRef<str>>(header: &[S]) -> Self {
        Self {
            header: header.iter().map(|s| s.as_ref().to_owned()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn header(&self) -> &[String] {
        &self.header
    }

    pub fn rows(&self) -> &[Vec<String>] {
        &self.rows
    }

    /// Appends a row of already formatted cells.
    ///
    /// Panics if the row width differs from the header.
    pub fn push_cells(&mut self, cells: Vec<String>) {
        assert_eq!(
            cells.len(),
            self.header.len(),
            "row width must match header"
        );
        self.rows.push(cells);
    }

    pub fn push_floats(&mut self, values: &[f64]) {
        self.push_cells(values.iter().map(|&v| format_float(v)).collect());
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    /// Array of objects keyed by the header. Cells that parse as numbers
    /// are emitted verbatim as JSON numbers, so the digits match the CSV.
    /// Empty cells become `null`.
    pub fn to_json(&self) -> String {
        let mut out = String::from("[\n");
        for (k, row) in self.rows.iter().enumerate() {
            out.push_str("  {");
            for (j, (key, cell)) in self.header.iter().zip(row).enumerate() {
                if j > 0 {
                    out.push_str(", ");
                }
                let value = if cell.is_empty() {
                    "null".to_owned()
                } else if cell.parse::<f64>().is_ok_and(f64::is_finite) {
                    cell.clone()
                } else {
                    serde_json::Value::String(cell.clone()).to_string()
                };
                let _ = write!(out, "{}: {}", serde_json::Value::String(key.clone()), value);
            }
            out.push('}');
            if k + 1 < self.rows.len() {
                out.push(',');
            }
            out.push('\n');
        }
        out.push_str("]\n");
        out
    }
}
