//! Output model and formatters.
//!
//! Every subcommand produces either a flat record, a table, or a record with
//! one attached table. The three formats render deterministically: JSON is
//! compact with keys sorted, CSV quotes per RFC 4180, plain text aligns
//! columns with two-space gutters.

use serde_json::{json, Map, Value as Json};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    U64(u64),
    I64(i64),
    Str(String),
    Bool(bool),
    Null,
}

impl Value {
    fn to_json(&self) -> Json {
        match self {
            Value::U64(v) => json!(v),
            Value::I64(v) => json!(v),
            Value::Str(v) => json!(v),
            Value::Bool(v) => json!(v),
            Value::Null => Json::Null,
        }
    }

    fn to_plain(&self) -> String {
        match self {
            Value::U64(v) => v.to_string(),
            Value::I64(v) => v.to_string(),
            Value::Str(v) => v.clone(),
            Value::Bool(v) => v.to_string(),
            Value::Null => "-".to_string(),
        }
    }

    fn to_csv(&self) -> String {
        match self {
            Value::Null => String::new(),
            other => csv_escape(&other.to_plain()),
        }
    }
}

impl From<u64> for Value {
    fn from(v: u64) -> Self {
        Value::U64(v)
    }
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::I64(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Str(v.to_string())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Str(v)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Output {
    Record(Vec<(&'static str, Value)>),
    Table {
        columns: Vec<&'static str>,
        rows: Vec<Vec<Value>>,
    },
    /// A record with one attached list; CSV denormalizes the record fields
    /// into every row.
    Nested {
        fields: Vec<(&'static str, Value)>,
        key: &'static str,
        columns: Vec<&'static str>,
        rows: Vec<Vec<Value>>,
    },
}

pub fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn json_object(fields: &[(&'static str, Value)]) -> Json {
    let mut map = Map::new();
    for (k, v) in fields {
        map.insert((*k).to_string(), v.to_json());
    }
    Json::Object(map)
}

fn json_rows(columns: &[&'static str], rows: &[Vec<Value>]) -> Json {
    Json::Array(
        rows.iter()
            .map(|row| {
                let mut map = Map::new();
                for (k, v) in columns.iter().zip(row) {
                    map.insert((*k).to_string(), v.to_json());
                }
                Json::Object(map)
            })
            .collect(),
    )
}

fn plain_record(fields: &[(&'static str, Value)]) -> String {
    let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in fields {
        out.push_str(&format!("{k:<width$}  {}\n", v.to_plain()));
    }
    out
}

fn plain_table(columns: &[&'static str], rows: &[Vec<Value>]) -> String {
    let mut widths: Vec<usize> = columns.iter().map(|c| c.len()).collect();
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|row| row.iter().map(Value::to_plain).collect())
        .collect();
    for row in &cells {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let mut push_row = |items: Vec<String>| {
        let line = items
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{c:<w$}", w = widths[i]))
            .collect::<Vec<_>>()
            .join("  ");
        out.push_str(line.trim_end());
        out.push('\n');
    };
    push_row(columns.iter().map(|c| c.to_string()).collect());
    for row in cells {
        push_row(row);
    }
    out
}

fn csv_line(items: Vec<String>) -> String {
    let mut line = items.join(",");
    line.push('\n');
    line
}

pub fn render(output: &Output, format: Format) -> String {
    match (output, format) {
        (Output::Record(fields), Format::Json) => {
            let mut s = json_object(fields).to_string();
            s.push('\n');
            s
        }
        (Output::Record(fields), Format::Csv) => {
            let header = csv_line(fields.iter().map(|(k, _)| csv_escape(k)).collect());
            let row = csv_line(fields.iter().map(|(_, v)| v.to_csv()).collect());
            header + &row
        }
        (Output::Record(fields), Format::Plain) => plain_record(fields),

        (Output::Table { columns, rows }, Format::Json) => {
            let mut s = json_rows(columns, rows).to_string();
            s.push('\n');
            s
        }
        (Output::Table { columns, rows }, Format::Csv) => {
            let mut s = csv_line(columns.iter().map(|c| csv_escape(c)).collect());
            for row in rows {
                s.push_str(&csv_line(row.iter().map(Value::to_csv).collect()));
            }
            s
        }
        (Output::Table { columns, rows }, Format::Plain) => plain_table(columns, rows),

        (
            Output::Nested {
                fields,
                key,
                columns,
                rows,
            },
            Format::Json,
        ) => {
            let mut map = match json_object(fields) {
                Json::Object(m) => m,
                _ => unreachable!(),
            };
            map.insert((*key).to_string(), json_rows(columns, rows));
            let mut s = Json::Object(map).to_string();
            s.push('\n');
            s
        }
        (
            Output::Nested {
                fields,
                columns,
                rows,
                ..
            },
            Format::Csv,
        ) => {
            let mut header: Vec<String> = fields.iter().map(|(k, _)| csv_escape(k)).collect();
            header.extend(columns.iter().map(|c| csv_escape(c)));
            let mut s = csv_line(header);
            let prefix: Vec<String> = fields.iter().map(|(_, v)| v.to_csv()).collect();
            if rows.is_empty() {
                let mut row = prefix;
                row.extend(columns.iter().map(|_| String::new()));
                s.push_str(&csv_line(row));
            } else {
                for row in rows {
                    let mut line = prefix.clone();
                    line.extend(row.iter().map(Value::to_csv));
                    s.push_str(&csv_line(line));
                }
            }
            s
        }
        (
            Output::Nested {
                fields,
                columns,
                rows,
                ..
            },
            Format::Plain,
        ) => {
            let mut s = plain_record(fields);
            if !rows.is_empty() {
                s.push('\n');
                s.push_str(&plain_table(columns, rows));
            }
            s
        }
    }
}
