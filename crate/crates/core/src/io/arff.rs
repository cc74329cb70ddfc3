//! ARFF dataset exchange.
//!
//! Supports the subset used for numeric feature tables: `@RELATION`, numeric
//! `@ATTRIBUTE`s, one trailing nominal class attribute, and a CSV `@DATA`
//! block. Keywords are case-insensitive; `%` comments, blank lines, CRLF
//! endings and quoted names are accepted. Values are written with 17
//! significant digits so doubles survive a write/read round trip bit for bit.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use thiserror::Error;

use crate::ml::{LabeledDataset, MlError};
use crate::num::Real;

/// ARFF serialization failures.
#[derive(Debug, Error)]
pub enum ArffError {
    #[error("line {line}: {message}")]
    MalformedArff { line: usize, message: String },
    /// No trailing nominal attribute to act as the class.
    #[error("missing class attribute: the last attribute must be nominal")]
    MissingClassAttribute,
    #[error("dataset: {0}")]
    Dataset(#[from] MlError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn malformed(line: usize, message: impl Into<String>) -> ArffError {
    ArffError::MalformedArff {
        line,
        message: message.into(),
    }
}

/// Quote a name when it contains ARFF-significant characters.
fn quote(name: &str) -> String {
    let needs = name.is_empty()
        || name
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, ',' | '\'' | '"' | '%' | '{' | '}'));
    if needs {
        let escaped = name.replace('\\', "\\\\").replace('\'', "\\'");
        format!("'{escaped}'")
    } else {
        name.to_string()
    }
}

/// Strip one level of single or double quotes and unescape.
fn dequote(token: &str) -> String {
    let t = token.trim();
    let inner = if (t.starts_with('\'') && t.ends_with('\'') && t.len() >= 2)
        || (t.starts_with('"') && t.ends_with('"') && t.len() >= 2)
    {
        &t[1..t.len() - 1]
    } else {
        return t.to_string();
    };
    let mut out = String::with_capacity(inner.len());
    let mut chars = inner.chars();
    while let Some(c) = chars.next() {
        if c == '\\' {
            if let Some(n) = chars.next() {
                out.push(n);
            }
        } else {
            out.push(c);
        }
    }
    out
}

/// Split a quoted or bare name off the front; returns (name, rest).
fn take_name(s: &str) -> (String, &str) {
    let s = s.trim_start();
    if let Some(q) = s.chars().next().filter(|&c| c == '\'' || c == '"') {
        let mut prev_escape = false;
        for (i, c) in s.char_indices().skip(1) {
            if c == q && !prev_escape {
                return (dequote(&s[..=i]), &s[i + 1..]);
            }
            prev_escape = c == '\\' && !prev_escape;
        }
        (dequote(s), "")
    } else {
        match s.find(char::is_whitespace) {
            Some(i) => (s[..i].to_string(), &s[i..]),
            None => (s.to_string(), ""),
        }
    }
}

/// Serialize a dataset as ARFF.
pub fn write_arff<F: Real, W: Write>(
    mut w: W,
    relation: &str,
    data: &LabeledDataset<F>,
) -> Result<(), ArffError> {
    writeln!(w, "@RELATION {}", quote(relation))?;
    writeln!(w)?;
    for name in data.feature_names() {
        writeln!(w, "@ATTRIBUTE {} NUMERIC", quote(name))?;
    }
    let classes: Vec<String> = data.class_names().iter().map(|c| quote(c)).collect();
    writeln!(w, "@ATTRIBUTE class {{{}}}", classes.join(","))?;
    writeln!(w)?;
    writeln!(w, "@DATA")?;
    for (row, &label) in data.features().iter().zip(data.labels()) {
        for v in row {
            write!(w, "{:.16e},", v.as_f64())?;
        }
        writeln!(w, "{}", quote(&data.class_names()[label]))?;
    }
    Ok(())
}

/// Parse an ARFF table into a dataset. The declared nominal order defines
/// the class indices.
pub fn read_arff<F: Real, R: BufRead>(r: R) -> Result<LabeledDataset<F>, ArffError> {
    let mut feature_names: Vec<String> = Vec::new();
    let mut class_names: Vec<Option<Vec<String>>> = Vec::new(); // per attribute
    let mut in_data = false;
    let mut features: Vec<Vec<F>> = Vec::new();
    let mut labels: Vec<usize> = Vec::new();
    let mut final_classes: Vec<String> = Vec::new();
    let mut seen_relation = false;

    for (idx, line) in r.lines().enumerate() {
        let line_no = idx + 1;
        let raw = line?;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        if !in_data {
            let lower = line.to_ascii_lowercase();
            if lower.starts_with("@relation") {
                seen_relation = true;
                continue;
            }
            if let Some(rest) = strip_keyword(line, "@attribute") {
                let (name, type_part) = take_name(rest);
                let ty = type_part.trim();
                let ty_lower = ty.to_ascii_lowercase();
                if ty_lower == "numeric" || ty_lower == "real" || ty_lower == "integer" {
                    feature_names.push(name);
                    class_names.push(None);
                } else if ty.starts_with('{') && ty.ends_with('}') {
                    // A bare empty token ({a,,b}) is a mistake, but an
                    // explicitly quoted empty name ('') is legitimate.
                    let mut values = Vec::new();
                    for raw in split_data_row(&ty[1..ty.len() - 1]) {
                        if raw.trim().is_empty() {
                            return Err(malformed(line_no, "empty nominal value"));
                        }
                        values.push(dequote(raw));
                    }
                    if values.is_empty() {
                        return Err(malformed(line_no, "empty nominal value"));
                    }
                    feature_names.push(name);
                    class_names.push(Some(values));
                } else {
                    return Err(malformed(
                        line_no,
                        format!("unsupported attribute type `{ty}`"),
                    ));
                }
                continue;
            }
            if lower == "@data" {
                if !seen_relation {
                    return Err(malformed(line_no, "@DATA before @RELATION"));
                }
                match class_names.last() {
                    Some(Some(values)) => {
                        final_classes = values.clone();
                    }
                    _ => return Err(ArffError::MissingClassAttribute),
                }
                if class_names[..class_names.len() - 1]
                    .iter()
                    .any(Option::is_some)
                {
                    return Err(malformed(
                        line_no,
                        "only the final attribute may be nominal",
                    ));
                }
                feature_names.pop();
                in_data = true;
                continue;
            }
            return Err(malformed(line_no, format!("unrecognized header `{line}`")));
        }

        // Data section.
        let fields: Vec<&str> = split_data_row(line);
        if fields.len() != feature_names.len() + 1 {
            return Err(malformed(
                line_no,
                format!(
                    "expected {} fields, found {}",
                    feature_names.len() + 1,
                    fields.len()
                ),
            ));
        }
        let mut row = Vec::with_capacity(feature_names.len());
        for f in &fields[..fields.len() - 1] {
            let v: f64 = f
                .trim()
                .parse()
                .map_err(|_| malformed(line_no, format!("bad numeric value `{f}`")))?;
            row.push(F::of(v));
        }
        let class = dequote(fields[fields.len() - 1]);
        let label = final_classes
            .iter()
            .position(|c| *c == class)
            .ok_or_else(|| malformed(line_no, format!("undeclared class `{class}`")))?;
        features.push(row);
        labels.push(label);
    }
    if !in_data {
        return if class_names.last().is_none_or(Option::is_none) {
            Err(ArffError::MissingClassAttribute)
        } else {
            Err(malformed(0, "missing @DATA section"))
        };
    }
    Ok(LabeledDataset::new(
        features,
        labels,
        final_classes,
        feature_names,
    )?)
}

fn strip_keyword<'a>(line: &'a str, keyword: &str) -> Option<&'a str> {
    if line.len() >= keyword.len() && line[..keyword.len()].eq_ignore_ascii_case(keyword) {
        Some(&line[keyword.len()..])
    } else {
        None
    }
}

/// Split a data row on commas, respecting single/double quotes.
fn split_data_row(line: &str) -> Vec<&str> {
    let mut fields = Vec::new();
    let mut start = 0usize;
    let mut quote_char: Option<char> = None;
    let mut prev_escape = false;
    for (i, c) in line.char_indices() {
        match quote_char {
            Some(q) => {
                if c == q && !prev_escape {
                    quote_char = None;
                }
                prev_escape = c == '\\' && !prev_escape;
            }
            None => {
                if c == '\'' || c == '"' {
                    quote_char = Some(c);
                } else if c == ',' {
                    fields.push(&line[start..i]);
                    start = i + 1;
                }
            }
        }
    }
    fields.push(&line[start..]);
    fields
}

pub fn write_arff_path<F: Real>(
    path: &Path,
    relation: &str,
    data: &LabeledDataset<F>,
) -> Result<(), ArffError> {
    let file = File::create(path)?;
    write_arff(BufWriter::new(file), relation, data)
}

pub fn read_arff_path<F: Real>(path: &Path) -> Result<LabeledDataset<F>, ArffError> {
    let file = File::open(path)?;
    read_arff(BufReader::new(file))
}
