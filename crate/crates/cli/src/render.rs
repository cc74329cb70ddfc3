//! Deterministic text and CSV rendering of evaluation artifacts.
//!
//! Numbers are printed with fixed precision and no timestamps or host
//! details appear anywhere, so a rerun with the same inputs produces the
//! same bytes.

use std::fmt::Write as _;

use carpo_core::metrics::{compute_metrics, ConfusionMatrix, MetricsReport};
use carpo_core::ml::cv::CvReport;
use carpo_core::ml::ClassifierSpec;

use crate::error::CliError;

/// Fixed four-decimal rendering used for all percentage metrics.
fn pct(v: f64) -> String {
    format!("{v:.4}")
}

fn auc6(v: f64) -> String {
    format!("{v:.6}")
}

/// One short token describing the variable hyper-parameter of a spec.
pub fn spec_label(spec: &ClassifierSpec) -> String {
    use carpo_core::ml::ClassifierKind::*;
    match spec.kind {
        Knn => format!("knn (k={})", spec.k),
        NaiveBayes => "bayes".to_string(),
        RandomForest => format!("forest (trees={})", spec.trees),
        Svm => format!("svm (c={})", spec.cost),
    }
}

const METRIC_HEADER: [&str; 8] = [
    "accuracy",
    "specificity",
    "sensitivity",
    "mavg",
    "mfm",
    "mava",
    "precision",
    "auc",
];

fn metric_cells(m: &MetricsReport<f64>, auc: f64) -> [String; 8] {
    [
        pct(m.accuracy),
        pct(m.specificity),
        pct(m.sensitivity),
        pct(m.mavg),
        pct(m.mfm),
        pct(m.mava),
        pct(m.precision),
        auc6(auc),
    ]
}

/// Render a confusion matrix with class names on both axes.
pub fn confusion_text(cm: &ConfusionMatrix, class_names: &[String]) -> String {
    let name = |i: usize| -> &str { class_names.get(i).map_or("?", |s| s.as_str()) };
    let width = (0..cm.classes())
        .map(|i| name(i).len())
        .chain(std::iter::once(5))
        .max()
        .unwrap_or(5)
        .max(
            (0..cm.classes())
                .flat_map(|i| (0..cm.classes()).map(move |j| (i, j)))
                .map(|(i, j)| cm.get(i, j).to_string().len())
                .max()
                .unwrap_or(1),
        );
    let mut out = String::new();
    let _ = write!(out, "{:>width$} |", "true\\pred");
    for j in 0..cm.classes() {
        let _ = write!(out, " {:>width$}", name(j));
    }
    out.push('\n');
    for i in 0..cm.classes() {
        let _ = write!(out, "{:>width$} |", name(i));
        for j in 0..cm.classes() {
            let _ = write!(out, " {:>width$}", cm.get(i, j));
        }
        out.push('\n');
    }
    out
}

/// The full text report of one cross-validation run.
pub fn evaluate_text(
    report: &CvReport<f64>,
    spec: &ClassifierSpec,
    class_names: &[String],
) -> Result<String, CliError> {
    let mut out = String::new();
    let _ = writeln!(out, "classifier: {} seed={}", spec_label(spec), spec.seed);
    let _ = writeln!(
        out,
        "folds: requested {}, effective {}",
        report.requested_folds, report.effective_folds
    );
    out.push('\n');
    let _ = writeln!(out, "fold  {}", METRIC_HEADER.join("  "));
    for (i, cm) in report.fold_confusions.iter().enumerate() {
        let metrics = compute_metrics::<f64>(cm)
            .map_err(|e| CliError::Internal(format!("fold {i} metrics: {e}")))?;
        let cells = metric_cells(&metrics, report.fold_auc[i]);
        let _ = writeln!(out, "{:<4}  {}", i + 1, cells.join("  "));
    }
    let _ = writeln!(
        out,
        "\nselected fold: {} (highest auc)",
        report.selected_fold + 1
    );
    let _ = writeln!(out, "mean auc: {}", auc6(report.mean_auc));
    out.push('\n');
    out.push_str("pooled confusion matrix:\n");
    out.push_str(&confusion_text(&report.pooled, class_names));
    out.push('\n');
    out.push_str("pooled metrics:\n");
    let cells = metric_cells(&report.pooled_metrics, report.mean_auc);
    for (name, cell) in METRIC_HEADER.iter().zip(&cells) {
        let _ = writeln!(out, "{name:<12} {cell}");
    }
    Ok(out)
}

/// The CSV mirror: one row per fold plus a pooled row.
pub fn evaluate_csv(report: &CvReport<f64>) -> Result<String, CliError> {
    let mut out = String::new();
    let _ = writeln!(out, "fold,{}", METRIC_HEADER.join(","));
    for (i, cm) in report.fold_confusions.iter().enumerate() {
        let metrics = compute_metrics::<f64>(cm)
            .map_err(|e| CliError::Internal(format!("fold {i} metrics: {e}")))?;
        let cells = metric_cells(&metrics, report.fold_auc[i]);
        let _ = writeln!(out, "{},{}", i + 1, cells.join(","));
    }
    let cells = metric_cells(&report.pooled_metrics, report.mean_auc);
    let _ = writeln!(out, "pooled,{}", cells.join(","));
    Ok(out)
}

/// One comparison-grid row: a classifier × category-set cell.
pub struct GridRow {
    pub classifier: String,
    pub features: String,
    pub metrics: MetricsReport<f64>,
    pub mean_auc: f64,
    pub millis: u128,
}

pub fn grid_text(rows: &[GridRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<16} {:<16} {}  {:>8}",
        "classifier",
        "features",
        METRIC_HEADER
            .iter()
            .map(|h| format!("{h:>11}"))
            .collect::<Vec<_>>()
            .join(" "),
        "millis"
    );
    for row in rows {
        let cells = metric_cells(&row.metrics, row.mean_auc);
        let _ = writeln!(
            out,
            "{:<16} {:<16} {}  {:>8}",
            row.classifier,
            row.features,
            cells
                .iter()
                .map(|c| format!("{c:>11}"))
                .collect::<Vec<_>>()
                .join(" "),
            row.millis
        );
    }
    out
}

pub fn grid_csv(rows: &[GridRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "classifier,features,{},millis",
        METRIC_HEADER.join(",")
    );
    for row in rows {
        let cells = metric_cells(&row.metrics, row.mean_auc);
        let _ = writeln!(
            out,
            "{},{},{},{}",
            row.classifier,
            row.features,
            cells.join(","),
            row.millis
        );
    }
    out
}
