//! `predict`: apply a saved model, one output row per input row.

use std::fmt::Write as _;
use std::fs;

use carpo_core::io::image::load_rgb;
use carpo_core::io::ingest::extract_image_features;
use carpo_core::io::model::{ensure_schema, load_model};
use carpo_core::ml::TrainedModel;

use crate::args::PredictArgs;
use crate::dataio::{collect_images, ingest_config, read_table, set_for_names};
use crate::error::CliError;

pub fn run(args: &PredictArgs) -> Result<(), CliError> {
    let model: TrainedModel<f64> = load_model(&args.model)?;
    let (rows, row_ids) = gather_rows(args, &model)?;

    let mut table = String::new();
    let _ = writeln!(
        table,
        "row,predicted,{}",
        model
            .class_names()
            .iter()
            .map(|c| format!("score:{c}"))
            .collect::<Vec<_>>()
            .join(",")
    );
    for (row, id) in rows.iter().zip(&row_ids) {
        let label = model.predict(row)?;
        let scores = model.scores(row)?;
        let _ = writeln!(
            table,
            "{id},{},{}",
            model.class_names()[label],
            scores
                .iter()
                .map(|s| format!("{s:.6}"))
                .collect::<Vec<_>>()
                .join(",")
        );
    }
    match &args.out {
        Some(path) => {
            fs::write(path, &table)?;
            println!("{} prediction(s) written to {}", rows.len(), path.display());
        }
        None => print!("{table}"),
    }
    Ok(())
}

/// Feature rows plus a printable identifier per row.
fn gather_rows(
    args: &PredictArgs,
    model: &TrainedModel<f64>,
) -> Result<(Vec<Vec<f64>>, Vec<String>), CliError> {
    if args.input.is_dir() {
        // Labels are not needed to predict, so unlabeled trees are fine.
        let categories = set_for_names(model.feature_names()).ok_or_else(|| {
            CliError::data(
                "model columns are not a standard descriptor set; predict from a table instead",
            )
        })?;
        let cfg = ingest_config(&args.filter, categories);
        let mut rows = Vec::new();
        let mut ids = Vec::new();
        for path in collect_images(&args.input)? {
            let img = load_rgb(&path)?;
            let extracted = extract_image_features::<f64>(&img, &cfg)?;
            for (label, reason) in &extracted.dropped {
                eprintln!("dropped {}#{label}: {reason}", path.display());
            }
            for seed in extracted.rows {
                ids.push(format!("{}#{}", path.display(), seed.region.label));
                rows.push(seed.values);
            }
        }
        if rows.is_empty() {
            return Err(CliError::data("no seed regions found to predict"));
        }
        return Ok((rows, ids));
    }
    let dataset = read_table(&args.input)?;
    ensure_schema(model, dataset.feature_names())?;
    let ids = (1..=dataset.len()).map(|i| i.to_string()).collect();
    Ok((dataset.features().to_vec(), ids))
}
