//! Text, CSV and JSON rendering.

use std::io::Write;

use clap::ValueEnum;
use serde_json::{Map, Value};
use sncoef::{BoundReport, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// `x` with `digits` significant digits.
pub fn sig(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = digits as i64 - 1 - magnitude;
    if (0..=15).contains(&decimals) && magnitude < 15 {
        format!("{x:.*}", decimals as usize)
    } else {
        format!("{x:.*e}", digits - 1)
    }
}

pub fn sig6(x: f64) -> String {
    sig(x, 6)
}

/// e^{ln}, or the log itself when the value overflows.
fn from_ln(ln: f64) -> String {
    if ln < 700.0 {
        sig6(ln.exp())
    } else {
        format!("exp({})", sig6(ln))
    }
}

fn json_value(s: &str) -> Value {
    match s.parse::<u64>() {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(s),
    }
}

fn io(e: impl std::fmt::Display) -> Error {
    Error::Io(e.to_string())
}

fn write_json(out: &mut Vec<u8>, value: &impl serde::Serialize) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(io)?;
    writeln!(out).map_err(io)
}

/// Rows of string cells under a fixed header.
pub struct Table {
    headers: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table {
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn write(&self, out: &mut Vec<u8>, format: Format) -> Result<()> {
        match format {
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut *out);
                w.write_record(&self.headers).map_err(io)?;
                for row in &self.rows {
                    w.write_record(row).map_err(io)?;
                }
                w.flush().map_err(io)
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let obj: Map<String, Value> = self
                            .headers
                            .iter()
                            .zip(row)
                            .map(|(h, c)| (h.clone(), json_value(c)))
                            .collect();
                        Value::Object(obj)
                    })
                    .collect();
                write_json(out, &rows)
            }
            Format::Text => {
                let widths: Vec<usize> = (0..self.headers.len())
                    .map(|i| {
                        self.rows
                            .iter()
                            .map(|r| r[i].chars().count())
                            .chain([self.headers[i].chars().count()])
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                for row in std::iter::once(&self.headers).chain(&self.rows) {
                    let cells: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                    writeln!(out, "{}", cells.join("  ").trim_end()).map_err(io)?;
                }
                Ok(())
            }
        }
    }
}

/// One computed value; text prints the bare value.
pub fn scalar(out: &mut Vec<u8>, format: Format, key: &[(&str, String)], name: &str, value: &str) -> Result<()> {
    match format {
        Format::Text => writeln!(out, "{value}").map_err(io),
        _ => {
            let mut headers: Vec<&str> = key.iter().map(|(k, _)| *k).collect();
            headers.push(name);
            let mut t = Table::new(&headers);
            let mut row: Vec<String> = key.iter().map(|(_, v)| v.clone()).collect();
            row.push(value.to_string());
            t.push(row);
            if format == Format::Json {
                let obj: Map<String, Value> =
                    t.headers.iter().cloned().zip(t.rows[0].iter().map(|c| json_value(c))).collect();
                write_json(out, &Value::Object(obj))
            } else {
                t.write(out, format)
            }
        }
    }
}

/// `key value` lines; CSV and JSON split each at the first space.
pub fn lines(out: &mut Vec<u8>, format: Format, title: &str, lines: &[String]) -> Result<()> {
    let split = |l: &String| match l.split_once(' ') {
        Some((k, v)) => (k.to_string(), v.to_string()),
        None => (l.clone(), String::new()),
    };
    match format {
        Format::Text => {
            for l in lines {
                writeln!(out, "{l}").map_err(io)?;
            }
            Ok(())
        }
        Format::Csv => {
            let mut t = Table::new(&["key", "value"]);
            for l in lines {
                let (k, v) = split(l);
                t.push(vec![k, v]);
            }
            t.write(out, format)
        }
        Format::Json => {
            let mut obj = Map::new();
            obj.insert("report".into(), Value::from(title));
            let mut entries = Vec::new();
            for l in lines {
                let (k, v) = split(l);
                entries.push(Value::Array(vec![Value::from(k), json_value(&v)]));
            }
            obj.insert("entries".into(), Value::Array(entries));
            write_json(out, &Value::Object(obj))
        }
    }
}

pub fn bound_report(out: &mut Vec<u8>, format: Format, r: &BoundReport) -> Result<()> {
    match format {
        Format::Json => write_json(out, r),
        Format::Csv => {
            let mut t = Table::new(&["subject", "check", "lhs", "rhs", "pass", "asserted"]);
            for c in &r.checks {
                t.push(vec![
                    r.subject.clone(),
                    c.name.clone(),
                    from_ln(c.lhs_ln),
                    from_ln(c.rhs_ln),
                    c.pass.to_string(),
                    c.asserted.to_string(),
                ]);
            }
            t.write(out, format)
        }
        Format::Text => {
            let exact = r.exact_value.as_ref().map_or("-".to_string(), |v| v.to_string());
            writeln!(out, "subject {}", r.subject).map_err(io)?;
            writeln!(out, "exact {exact}").map_err(io)?;
            writeln!(out, "lower {}", from_ln(r.lower)).map_err(io)?;
            writeln!(out, "upper {}", from_ln(r.upper)).map_err(io)?;
            writeln!(out, "pass {}", r.pass).map_err(io)?;
            for c in &r.checks {
                let tag = match (c.asserted, c.pass) {
                    (false, _) => "info",
                    (true, true) => "ok",
                    (true, false) => "FAIL",
                };
                writeln!(out, "{tag:<4} {}: {} <= {}", c.name, from_ln(c.lhs_ln), from_ln(c.rhs_ln)).map_err(io)?;
            }
            for w in &r.witnesses {
                writeln!(out, "witness {w}").map_err(io)?;
            }
            Ok(())
        }
    }
}
