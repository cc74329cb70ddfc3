//! CSV dataset exchange mirroring the ARFF layout: one column per feature,
//! a trailing `class` column, values rendered with 17 significant digits.

use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use thiserror::Error;

use crate::ml::{LabeledDataset, MlError};
use crate::num::Real;

/// CSV serialization failures.
#[derive(Debug, Error)]
pub enum CsvError {
    /// The header's last column is not `class`.
    #[error("missing class column: the last header must be `class`")]
    MissingClassColumn,
    #[error("line {line}: {message}")]
    Malformed { line: u64, message: String },
    #[error("dataset: {0}")]
    Dataset(#[from] MlError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Serialize a dataset as CSV with a header row.
pub fn write_csv<F: Real, W: Write>(w: W, data: &LabeledDataset<F>) -> Result<(), CsvError> {
    let mut out = csv::Writer::from_writer(w);
    let mut header: Vec<&str> = data.feature_names().iter().map(String::as_str).collect();
    header.push("class");
    out.write_record(&header)?;
    for (row, &label) in data.features().iter().zip(data.labels()) {
        let mut record: Vec<String> = row.iter().map(|v| format!("{:.16e}", v.as_f64())).collect();
        record.push(data.class_names()[label].clone());
        out.write_record(&record)?;
    }
    out.flush()?;
    Ok(())
}

/// Parse a CSV table into a dataset. Class indices follow the sorted order
/// of the distinct labels, since CSV has no declaration header.
pub fn read_csv<F: Real, R: Read>(r: R) -> Result<LabeledDataset<F>, CsvError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(false)
        .from_reader(r);
    let headers = reader.headers()?.clone();
    if headers.is_empty() || headers.iter().next_back() != Some("class") {
        return Err(CsvError::MissingClassColumn);
    }
    let feature_names: Vec<String> = headers
        .iter()
        .take(headers.len() - 1)
        .map(str::to_string)
        .collect();

    let mut rows: Vec<Vec<F>> = Vec::new();
    let mut raw_labels: Vec<String> = Vec::new();
    for record in reader.records() {
        let record = record?;
        let line = record.position().map_or(0, |p| p.line());
        let mut row = Vec::with_capacity(feature_names.len());
        for field in record.iter().take(record.len() - 1) {
            let v: f64 = field.trim().parse().map_err(|_| CsvError::Malformed {
                line,
                message: format!("bad numeric value `{field}`"),
            })?;
            row.push(F::of(v));
        }
        // Kept verbatim: labels are identifiers, and trimming would make
        // names with edge whitespace unrepresentable in this format.
        let label = record.get(record.len() - 1).unwrap_or_default().to_string();
        if label.is_empty() {
            return Err(CsvError::Malformed {
                line,
                message: "empty class label".into(),
            });
        }
        rows.push(row);
        raw_labels.push(label);
    }
    let mut class_names: Vec<String> = raw_labels.clone();
    class_names.sort();
    class_names.dedup();
    let labels: Vec<usize> = raw_labels
        .iter()
        .map(|l| class_names.binary_search(l).expect("label in table"))
        .collect();
    Ok(LabeledDataset::new(
        rows,
        labels,
        class_names,
        feature_names,
    )?)
}

pub fn write_csv_path<F: Real>(path: &Path, data: &LabeledDataset<F>) -> Result<(), CsvError> {
    write_csv(File::create(path)?, data)
}

pub fn read_csv_path<F: Real>(path: &Path) -> Result<LabeledDataset<F>, CsvError> {
    read_csv(File::open(path)?)
}
