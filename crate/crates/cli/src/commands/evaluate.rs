//! `evaluate`: stratified cross-validation with a full metrics report.

use std::fs;

use carpo_core::ml::cv::cross_validate;

use crate::args::{parse_features, EvaluateArgs};
use crate::dataio::load;
use crate::error::CliError;
use crate::render::{evaluate_csv, evaluate_text};

pub fn run(args: &EvaluateArgs) -> Result<(), CliError> {
    if args.folds < 2 {
        return Err(CliError::Usage("--folds must be at least 2".into()));
    }
    let categories = parse_features(&args.features)?;
    let spec = args.learner.spec()?;
    let data = load(&args.input, categories, &args.filter)?;
    let report = cross_validate(&data, &spec, args.folds, spec.seed)?;

    let text = evaluate_text(&report, &spec, data.class_names())?;
    print!("{text}");
    if let Some(base) = &args.out {
        let txt_path = base.with_extension("txt");
        let csv_path = base.with_extension("csv");
        fs::write(&txt_path, &text)?;
        fs::write(&csv_path, evaluate_csv(&report)?)?;
        println!("wrote {}", txt_path.display());
        println!("wrote {}", csv_path.display());
    }
    Ok(())
}
