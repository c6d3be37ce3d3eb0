use std::fmt::Write as _;

use nalgebra::{Matrix3, Matrix4, Vector3, Vector4};
use serde_json::{Map, Value};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Scalar(f64),
    Vector(Vec<f64>),
    Matrix(Vec<Vec<f64>>),
    Integer(u64),
    Flag(bool),
    Text(String),
}

impl From<f64> for Field {
    fn from(x: f64) -> Self {
        Field::Scalar(x)
    }
}

impl From<u64> for Field {
    fn from(x: u64) -> Self {
        Field::Integer(x)
    }
}

impl From<usize> for Field {
    fn from(x: usize) -> Self {
        Field::Integer(x as u64)
    }
}

impl From<bool> for Field {
    fn from(x: bool) -> Self {
        Field::Flag(x)
    }
}

impl From<&str> for Field {
    fn from(x: &str) -> Self {
        Field::Text(x.to_owned())
    }
}

impl From<String> for Field {
    fn from(x: String) -> Self {
        Field::Text(x)
    }
}

impl From<Vec<f64>> for Field {
    fn from(v: Vec<f64>) -> Self {
        Field::Vector(v)
    }
}

impl From<&Vector3<f64>> for Field {
    fn from(v: &Vector3<f64>) -> Self {
        Field::Vector(v.iter().copied().collect())
    }
}

impl From<&Vector4<f64>> for Field {
    fn from(v: &Vector4<f64>) -> Self {
        Field::Vector(v.iter().copied().collect())
    }
}

impl From<&Matrix3<f64>> for Field {
    fn from(m: &Matrix3<f64>) -> Self {
        Field::Matrix(m.row_iter().map(|r| r.iter().copied().collect()).collect())
    }
}

impl From<&Matrix4<f64>> for Field {
    fn from(m: &Matrix4<f64>) -> Self {
        Field::Matrix(m.row_iter().map(|r| r.iter().copied().collect()).collect())
    }
}

impl Field {
    fn numbers(&self) -> Vec<f64> {
        match self {
            Field::Scalar(x) => vec![*x],
            Field::Vector(v) => v.clone(),
            Field::Matrix(m) => m.iter().flatten().copied().collect(),
            _ => Vec::new(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Field::Scalar(x) => Value::from(*x),
            Field::Vector(v) => Value::from(v.clone()),
            Field::Matrix(m) => Value::Array(m.iter().map(|r| Value::from(r.clone())).collect()),
            Field::Integer(i) => Value::from(*i),
            Field::Flag(b) => Value::from(*b),
            Field::Text(s) => Value::from(s.as_str()),
        }
    }

    /// `(suffix, value)` pairs with vectors and matrices flattened by index.
    fn flat(&self, digits: Option<usize>) -> Vec<(String, String)> {
        let num = |x: f64| match digits {
            Some(d) => significant(x, d),
            None => round_trip(x),
        };
        match self {
            Field::Scalar(x) => vec![(String::new(), num(*x))],
            Field::Vector(v) => v
                .iter()
                .enumerate()
                .map(|(i, x)| (format!("[{i}]"), num(*x)))
                .collect(),
            Field::Matrix(m) => m
                .iter()
                .enumerate()
                .flat_map(|(i, r)| {
                    r.iter()
                        .enumerate()
                        .map(move |(j, x)| (format!("[{i}][{j}]"), num(*x)))
                })
                .collect(),
            Field::Integer(i) => vec![(String::new(), i.to_string())],
            Field::Flag(b) => vec![(String::new(), b.to_string())],
            Field::Text(s) => vec![(String::new(), s.clone())],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    Inputs,
    Outputs,
    Residuals,
}

impl Group {
    const ALL: [Group; 3] = [Group::Inputs, Group::Outputs, Group::Residuals];

    fn name(self) -> &'static str {
        match self {
            Group::Inputs => "inputs",
            Group::Outputs => "outputs",
            Group::Residuals => "residuals",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub command: String,
    entries: Vec<(Group, String, Field)>,
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_owned(),
            entries: Vec::new(),
        }
    }

    pub fn input(&mut self, name: &str, value: impl Into<Field>) -> &mut Self {
        self.push(Group::Inputs, name, value.into())
    }

    pub fn output(&mut self, name: &str, value: impl Into<Field>) -> &mut Self {
        self.push(Group::Outputs, name, value.into())
    }

    pub fn residual(&mut self, name: &str, value: f64) -> &mut Self {
        self.push(Group::Residuals, name, Field::Scalar(value))
    }

    /// Radians and degrees under `name_rad` and `name_deg`.
    pub fn angle(&mut self, name: &str, radians: f64) -> &mut Self {
        self.output(&format!("{name}_rad"), radians);
        self.output(&format!("{name}_deg"), radians.to_degrees())
    }

    fn push(&mut self, group: Group, name: &str, value: Field) -> &mut Self {
        self.entries.push((group, name.to_owned(), value));
        self
    }

    /// Fails with the name of the first non-finite number.
    pub fn check_finite(&self) -> Result<(), CliError> {
        for (group, name, field) in &self.entries {
            if field.numbers().iter().any(|x| !x.is_finite()) {
                return Err(CliError::Consistency(format!(
                    "non-finite value in {}.{name}",
                    group.name()
                )));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let mut top = Map::new();
        top.insert("command".into(), Value::from(self.command.as_str()));
        for group in Group::ALL {
            let mut m = Map::new();
            for (g, name, field) in &self.entries {
                if *g == group {
                    m.insert(name.clone(), field.to_json());
                }
            }
            top.insert(group.name().into(), Value::Object(m));
        }
        Value::Object(top)
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("record serialises");
        s.push('\n');
        s
    }

    pub fn render_csv(&self) -> String {
        let mut s = String::from("group,name,value\n");
        s.push_str(&format!("command,command,{}\n", self.command));
        for (group, name, field) in &self.entries {
            for (suffix, value) in field.flat(None) {
                let _ = writeln!(s, "{},{name}{suffix},{value}", group.name());
            }
        }
        s
    }

    pub fn render_text(&self) -> String {
        let mut s = format!("{}\n", self.command);
        for group in Group::ALL {
            let rows: Vec<_> = self.entries.iter().filter(|(g, _, _)| *g == group).collect();
            if rows.is_empty() {
                continue;
            }
            let _ = writeln!(s, "{}:", group.name());
            for (_, name, field) in rows {
                match field {
                    Field::Vector(_) => {
                        let parts: Vec<_> = field.flat(Some(12)).into_iter().map(|(_, v)| v).collect();
                        let _ = writeln!(s, "  {name} = ({})", parts.join(", "));
                    }
                    Field::Matrix(m) => {
                        let _ = writeln!(s, "  {name} =");
                        let cells: Vec<Vec<String>> = m
                            .iter()
                            .map(|r| r.iter().map(|x| significant(*x, 12)).collect())
                            .collect();
                        let width = cells.iter().flatten().map(String::len).max().unwrap_or(0);
                        for r in cells {
                            let parts: Vec<_> = r.iter().map(|c| format!("{c:>width$}")).collect();
                            let _ = writeln!(s, "    {}", parts.join("  "));
                        }
                    }
                    _ => {
                        let (_, v) = field.flat(Some(12)).remove(0);
                        let _ = writeln!(s, "  {name} = {v}");
                    }
                }
            }
        }
        s
    }
}

/// Shortest representation that parses back to the same `f64`.
pub fn round_trip(x: f64) -> String {
    format!("{x:?}")
}

/// `x` with `digits` significant digits, trailing zeros removed.
pub fn significant(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..digits as i32).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        let s = format!("{:.*e}", digits - 1, x);
        let (mantissa, e) = s.split_once('e').expect("scientific format has an exponent");
        format!("{}e{e}", trim_zeros(mantissa.to_owned()))
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_owned()
    } else {
        s
    }
}
