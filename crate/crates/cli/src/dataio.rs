//! Input resolution: one entry point that accepts an ARFF file, a CSV file
//! or a labeled image directory and yields a dataset plus row provenance.

use std::path::{Path, PathBuf};

use carpo_core::features::CategorySet;
use carpo_core::io::arff::read_arff_path;
use carpo_core::io::csvout::read_csv_path;
use carpo_core::io::ingest::{ingest_directory, IngestConfig, IngestReport};
use carpo_core::ml::LabeledDataset;

use crate::args::FilterArgs;
use crate::error::CliError;

pub fn ingest_config(filter: &FilterArgs, categories: CategorySet) -> IngestConfig {
    IngestConfig {
        min_area: filter.min_area,
        max_area: filter.max_area,
        circ_min: filter.circ_min,
        circ_max: filter.circ_max,
        categories,
        ..IngestConfig::default()
    }
}

/// Print the partial-failure listing every batch run must surface.
pub fn report_ingest_issues(report: &IngestReport<f64>) {
    for skipped in &report.skipped_files {
        eprintln!("skipped {}: {}", skipped.path.display(), skipped.reason);
    }
    for (path, label, reason) in &report.dropped_regions {
        eprintln!("dropped {}#{label}: {reason}", path.display());
    }
}

/// Load any supported input. For files, `categories` selects columns (see
/// [`select_categories`]); for directories it picks what gets extracted.
pub fn load(
    input: &Path,
    categories: CategorySet,
    filter: &FilterArgs,
) -> Result<LabeledDataset<f64>, CliError> {
    if categories.is_empty() {
        return Err(CliError::Usage(
            "at least one feature category must be selected".into(),
        ));
    }
    if input.is_dir() {
        let report = ingest_directory(input, &ingest_config(filter, categories))?;
        report_ingest_issues(&report);
        return Ok(report.dataset);
    }
    select_categories(read_table(input)?, categories)
}

/// Read an ARFF or CSV table, deciding by extension.
pub fn read_table(input: &Path) -> Result<LabeledDataset<f64>, CliError> {
    match extension(input).as_deref() {
        Some("arff") => Ok(read_arff_path(input)?),
        Some("csv") => Ok(read_csv_path(input)?),
        _ => Err(CliError::data(format!(
            "unsupported input {}: expected .arff, .csv or a directory",
            input.display()
        ))),
    }
}

fn extension(path: &Path) -> Option<String> {
    path.extension()
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase)
}

/// Reduce a table to the requested categories.
///
/// `all` keeps the table unchanged, whatever its columns. A proper subset
/// selects the canonical descriptor columns by name; when the table lacks
/// them but is 64 columns wide, the standard column layout (32 shape, 16
/// texture, 16 colour) is assumed instead.
pub fn select_categories(
    dataset: LabeledDataset<f64>,
    categories: CategorySet,
) -> Result<LabeledDataset<f64>, CliError> {
    if categories == CategorySet::ALL {
        return Ok(dataset);
    }
    let wanted = categories.names();
    let have = dataset.feature_names();
    let by_name: Option<Vec<usize>> = wanted
        .iter()
        .map(|w| have.iter().position(|h| h == w))
        .collect();
    let indices = match by_name {
        Some(idx) => idx,
        None if have.len() == CategorySet::ALL.arity() => positional_indices(categories),
        None => {
            return Err(CliError::data(format!(
                "table lacks the {categories} descriptor columns and is not a full 64-column table"
            )));
        }
    };
    let features: Vec<Vec<f64>> = dataset
        .features()
        .iter()
        .map(|row| indices.iter().map(|&i| row[i]).collect())
        .collect();
    let feature_names: Vec<String> = indices
        .iter()
        .map(|&i| dataset.feature_names()[i].clone())
        .collect();
    Ok(LabeledDataset::new(
        features,
        dataset.labels().to_vec(),
        dataset.class_names().to_vec(),
        feature_names,
    )?)
}

/// Column positions of a category subset under the standard 64-wide layout.
fn positional_indices(categories: CategorySet) -> Vec<usize> {
    let mut idx = Vec::new();
    if categories.morph {
        idx.extend(0..32);
    }
    if categories.texture {
        idx.extend(32..48);
    }
    if categories.color {
        idx.extend(48..64);
    }
    idx
}

/// The category set whose canonical columns are exactly `names`, if any.
pub fn set_for_names(names: &[String]) -> Option<CategorySet> {
    CategorySet::all_combinations()
        .into_iter()
        .find(|set| set.names() == names)
}

/// Recursively collect the supported image files under `root`, sorted.
pub fn collect_images(root: &Path) -> Result<Vec<PathBuf>, CliError> {
    fn walk(dir: &Path, out: &mut Vec<PathBuf>) -> std::io::Result<()> {
        let mut entries: Vec<_> = std::fs::read_dir(dir)?.collect::<Result<_, _>>()?;
        entries.sort_by_key(|e| e.file_name());
        for entry in entries {
            let path = entry.path();
            let hidden = path
                .file_name()
                .and_then(|n| n.to_str())
                .is_some_and(|n| n.starts_with('.'));
            if hidden {
                continue;
            }
            if path.is_dir() {
                walk(&path, out)?;
            } else if carpo_core::io::image::is_supported(&path) {
                out.push(path);
            }
        }
        Ok(())
    }
    let mut out = Vec::new();
    walk(root, &mut out)?;
    if out.is_empty() {
        return Err(CliError::data(format!(
            "no PNG or JPEG images under {}",
            root.display()
        )));
    }
    Ok(out)
}
