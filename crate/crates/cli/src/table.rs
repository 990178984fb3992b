//! Report tables and their CSV and JSON renderings.
//!
//! Floats are written with 12 significant digits in lowercase exponent form
//! so identical runs give byte-identical files.

use serde_json::{Map, Number, Value};

use crate::args::Format;
use crate::error::CliResult;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(u64),
    /// 12 significant digits, exponent form.
    Float(f64),
    /// Fixed notation with this many significant digits.
    Fixed(f64, usize),
    Bool(bool),
    /// Written as `0`/`1` in CSV.
    Flag(bool),
}

/// `{:.11e}` with `-0` folded into `0`.
pub fn sci(v: f64) -> String {
    if v == 0.0 {
        return format!("{:.11e}", 0.0);
    }
    format!("{v:.11e}")
}

/// Fixed notation with `digits` significant digits.
pub fn fixed(v: f64, digits: usize) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{}", if v == 0.0 { 0.0 } else { v });
    }
    let decimals = |x: f64| digits.saturating_sub(x.abs().log10().floor() as usize + 1);
    let s = format!("{:.*}", decimals(v), v);
    // Rounding can add a digit in front (9.99.. -> 10.0); redo at the new magnitude.
    let rounded: f64 = s.parse().unwrap_or(v);
    if decimals(rounded) != decimals(v) {
        format!("{:.*}", decimals(rounded), v)
    } else {
        s
    }
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(i) => i.to_string(),
            Cell::Float(v) => sci(*v),
            Cell::Fixed(v, d) => fixed(*v, *d),
            Cell::Bool(b) => b.to_string(),
            Cell::Flag(b) => u8::from(*b).to_string(),
        }
    }

    fn json(&self) -> Value {
        // Numbers go through the same text form as CSV, so both files carry
        // the same digits.
        let number = |text: String| {
            text.parse::<f64>()
                .ok()
                .and_then(Number::from_f64)
                .map_or(Value::Null, Value::Number)
        };
        match self {
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Int(i) => Value::Number((*i).into()),
            Cell::Float(v) => number(sci(*v)),
            Cell::Fixed(v, d) => number(fixed(*v, *d)),
            Cell::Bool(b) | Cell::Flag(b) => Value::Bool(*b),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Table { header, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> CliResult<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header).map_err(std::io::Error::from)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv)).map_err(std::io::Error::from)?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("cells are utf-8"))
    }

    /// One flat object per row, keys in header order.
    pub fn to_json(&self) -> CliResult<String> {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .header
                    .iter()
                    .zip(row)
                    .map(|(k, c)| (k.to_string(), c.json()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut s = serde_json::to_string_pretty(&rows).map_err(std::io::Error::from)?;
        s.push('\n');
        Ok(s)
    }

    pub fn render(&self, format: Format) -> CliResult<String> {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}
