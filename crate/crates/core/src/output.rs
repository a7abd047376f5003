//! Tabular command output, written as CSV or JSON lines.

use std::io::Write;

use num_complex::Complex64 as C64;
use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Float(f64),
    Int(i64),
    Bool(bool),
    Text(String),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Float(x) => format_float(*x),
            Cell::Int(i) => i.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Float(x) => Number::from_f64(*x).map(Value::Number).unwrap_or(Value::Null),
            Cell::Int(i) => Value::from(*i),
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Text(s) => Value::String(s.clone()),
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Float(x)
    }
}

impl From<u64> for Cell {
    fn from(x: u64) -> Self {
        Cell::Int(x as i64)
    }
}

impl From<bool> for Cell {
    fn from(x: bool) -> Self {
        Cell::Bool(x)
    }
}

impl From<&str> for Cell {
    fn from(x: &str) -> Self {
        Cell::Text(x.to_string())
    }
}

/// Floats with 17 significant digits.
pub fn format_float(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string()
    }
}

/// A header plus rows with a fixed column order. Complex values are always
/// stored as `<name>_re`, `<name>_im` column pairs. An optional footer of
/// named summary values is written after the rows.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    columns: Vec<String>,
    rows: Vec<Vec<Cell>>,
    footer: Vec<(String, Cell)>,
}

/// Row under construction; pushes must follow the table's column order.
#[derive(Debug, Default)]
pub struct RowBuilder {
    names: Vec<String>,
    cells: Vec<Cell>,
}

impl RowBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn col(mut self, name: &str, v: impl Into<Cell>) -> Self {
        self.names.push(name.to_string());
        self.cells.push(v.into());
        self
    }

    pub fn complex(self, name: &str, z: C64) -> Self {
        self.col(&format!("{name}_re"), z.re).col(&format!("{name}_im"), z.im)
    }
}

impl Table {
    pub fn new() -> Self {
        Self::default()
    }

    /// Append a row. The first row fixes the header.
    pub fn push(&mut self, row: RowBuilder) {
        if self.columns.is_empty() && self.rows.is_empty() {
            self.columns = row.names;
        } else {
            assert_eq!(self.columns, row.names, "inconsistent column order");
        }
        self.rows.push(row.cells);
    }

    pub fn set_footer(&mut self, name: &str, v: impl Into<Cell>) {
        self.footer.push((name.to_string(), v.into()));
    }

    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    pub fn footer(&self) -> &[(String, Cell)] {
        &self.footer
    }

    /// CSV with header; the footer follows as `# name=value` comment lines.
    pub fn write_csv<W: Write>(&self, out: W) -> std::io::Result<()> {
        let mut w = csv::WriterBuilder::new().from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv))?;
        }
        w.flush()?;
        let mut out = w.into_inner().map_err(|e| e.into_error())?;
        for (k, v) in &self.footer {
            writeln!(out, "# {k}={}", v.csv())?;
        }
        Ok(())
    }

    /// One JSON object per row (and one for the footer, if any).
    pub fn write_json<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for row in &self.rows {
            let obj: Map<String, Value> = self
                .columns
                .iter()
                .cloned()
                .zip(row.iter().map(Cell::json))
                .collect();
            serde_json::to_writer(&mut out, &obj)?;
            writeln!(out)?;
        }
        if !self.footer.is_empty() {
            let obj: Map<String, Value> = self.footer.iter().map(|(k, v)| (k.clone(), v.json())).collect();
            serde_json::to_writer(&mut out, &obj)?;
            writeln!(out)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let mut t = Table::new();
        t.push(RowBuilder::new().col("name", "[a,b]").complex("z", C64::new(1.0, -0.5)));
        t.set_footer("argmax", 4u64);
        let mut buf = Vec::new();
        t.write_csv(&mut buf).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert_eq!(
            s,
            "name,z_re,z_im\n\"[a,b]\",1.0000000000000000e0,-5.0000000000000000e-1\n# argmax=4\n"
        );
    }

    #[test]
    fn json_layout() {
        let mut t = Table::new();
        t.push(RowBuilder::new().col("b", 1.5).col("a", f64::NAN));
        let mut buf = Vec::new();
        t.write_json(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "{\"b\":1.5,\"a\":null}\n");
    }

    #[test]
    fn seventeen_digits_round_trip() {
        for &x in &[0.1, 1.7726372048266521, -9.008527980131600, 1e-300] {
            let s = format_float(x);
            assert_eq!(s.parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    #[should_panic]
    fn column_order_enforced() {
        let mut t = Table::new();
        t.push(RowBuilder::new().col("a", 1.0));
        t.push(RowBuilder::new().col("b", 1.0));
    }
}
