//! `train`: fit one classifier and persist it as a model archive.

use carpo_core::io::model::save_model;
use carpo_core::ml::TrainedModel;

use crate::args::{parse_features, TrainArgs};
use crate::dataio::load;
use crate::error::CliError;
use crate::render::spec_label;

pub fn run(args: &TrainArgs) -> Result<(), CliError> {
    let categories = parse_features(&args.features)?;
    let spec = args.learner.spec()?;
    let data = load(&args.input, categories, &args.filter)?;
    let model = TrainedModel::train(&data, &spec)?;
    save_model(&args.out, &model)?;

    // Resubstitution check: cheap signal that the fit is sane.
    let predicted = model.predict_batch(data.features())?;
    let hits = predicted
        .iter()
        .zip(data.labels())
        .filter(|(p, t)| p == t)
        .count();
    println!(
        "trained {} on {} rows × {} features",
        spec_label(&spec),
        data.len(),
        data.dims()
    );
    println!(
        "classes ({}): {}",
        data.classes(),
        data.class_names().join(", ")
    );
    println!(
        "training-set accuracy: {:.4}%",
        100.0 * hits as f64 / data.len() as f64
    );
    println!("wrote {}", args.out.display());
    Ok(())
}
