//! Output rendering shared by every subcommand.
//!
//! A command produces a flat record of named values; the record renders as a
//! human table, a one-row CSV, or a JSON object. dB-like values carry 4
//! decimal places, watts use scientific notation with 6 significant digits,
//! and the CSV and JSON forms agree numerically at that precision.

use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Csv,
    Json,
}

#[derive(Debug, Clone)]
pub enum Field {
    Text(&'static str, String),
    /// Rendered at 4 decimal places.
    Num(&'static str, f64),
    /// Rendered as scientific notation with 6 significant digits.
    Watts(&'static str, f64),
    Int(&'static str, usize),
}

impl Field {
    fn key(&self) -> &'static str {
        match self {
            Field::Text(k, _) | Field::Num(k, _) | Field::Watts(k, _) | Field::Int(k, _) => k,
        }
    }

    fn text(&self) -> String {
        match self {
            Field::Text(_, v) => v.clone(),
            Field::Num(_, v) => format!("{v:.4}"),
            Field::Watts(_, v) => format!("{v:.5e}"),
            Field::Int(_, v) => v.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Field::Text(_, v) => Value::String(v.clone()),
            Field::Num(_, v) => json_number(round4(*v)),
            Field::Watts(_, v) => {
                let six_digits: f64 = format!("{v:.5e}").parse().expect("own rendering parses");
                json_number(six_digits)
            }
            Field::Int(_, v) => Value::Number((*v).into()),
        }
    }
}

fn round4(x: f64) -> f64 {
    if x.is_finite() {
        (x * 1e4).round() / 1e4
    } else {
        x
    }
}

fn json_number(x: f64) -> Value {
    match Number::from_f64(x) {
        Some(n) => Value::Number(n),
        None => Value::Null, // non-finite, e.g. a zero-power threshold in dBmW
    }
}

/// Renders one record in the requested format, newline-terminated.
pub fn record(title: &str, fields: &[Field], format: Format) -> String {
    match format {
        Format::Human => {
            let width = fields.iter().map(|f| f.key().len()).max().unwrap_or(0);
            let mut out = format!("{title}\n");
            for f in fields {
                out.push_str(&format!("  {:width$}  {}\n", f.key(), f.text()));
            }
            out
        }
        Format::Csv => {
            let header: Vec<&str> = fields.iter().map(|f| f.key()).collect();
            let row: Vec<String> = fields.iter().map(|f| f.text()).collect();
            format!("{}\n{}\n", header.join(","), row.join(","))
        }
        Format::Json => {
            let mut map = Map::new();
            for f in fields {
                map.insert(f.key().to_string(), f.json());
            }
            let mut out = serde_json::to_string_pretty(&Value::Object(map))
                .expect("record always serializes");
            out.push('\n');
            out
        }
    }
}

/// Renders rows of already-formatted cells as an aligned human table.
pub fn table(title: &str, header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = format!("{title}\n");
    let fmt_row = |cells: Vec<String>, widths: &[usize]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        format!("  {}\n", padded.join("  "))
    };
    out.push_str(&fmt_row(
        header.iter().map(|h| h.to_string()).collect(),
        &widths,
    ));
    for row in rows {
        out.push_str(&fmt_row(row.clone(), &widths));
    }
    out
}
