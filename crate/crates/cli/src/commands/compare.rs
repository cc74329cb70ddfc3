//! `compare`: cross-validate every classifier on every descriptor subset.

use std::fs;
use std::time::Instant;

use carpo_core::features::CategorySet;
use carpo_core::ml::cv::cross_validate;
use carpo_core::ml::{ClassifierKind, ClassifierSpec};

use crate::args::CompareArgs;
use crate::dataio::{load, select_categories};
use crate::error::CliError;
use crate::render::{grid_csv, grid_text, GridRow};

pub fn run(args: &CompareArgs) -> Result<(), CliError> {
    if args.folds < 2 {
        return Err(CliError::Usage("--folds must be at least 2".into()));
    }
    let base_spec = args.learner.spec()?;
    let data = load(&args.input, CategorySet::ALL, &args.filter)?;

    let mut rows = Vec::new();
    for kind in ClassifierKind::ALL {
        let spec = ClassifierSpec { kind, ..base_spec };
        for set in CategorySet::all_combinations() {
            let subset = select_categories(data.clone(), set)?;
            let started = Instant::now();
            let report = cross_validate(&subset, &spec, args.folds, spec.seed)?;
            rows.push(GridRow {
                classifier: kind.to_string(),
                features: set.to_string(),
                metrics: report.pooled_metrics.clone(),
                mean_auc: report.mean_auc,
                millis: started.elapsed().as_millis(),
            });
        }
    }

    print!("{}", grid_text(&rows));
    if let Some(path) = &args.out {
        fs::write(path, grid_csv(&rows))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
