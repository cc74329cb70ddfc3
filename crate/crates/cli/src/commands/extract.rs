//! `extract`: labeled image tree → ARFF + CSV descriptor tables.

use carpo_core::io::arff::write_arff_path;
use carpo_core::io::csvout::write_csv_path;
use carpo_core::io::ingest::ingest_directory;

use crate::args::{parse_features, ExtractArgs};
use crate::dataio::{ingest_config, report_ingest_issues};
use crate::error::CliError;

pub fn run(args: &ExtractArgs) -> Result<(), CliError> {
    let categories = parse_features(&args.features)?;
    if categories.is_empty() {
        return Err(CliError::Usage(
            "at least one feature category must be selected".into(),
        ));
    }
    if !args.input.is_dir() {
        return Err(CliError::data(format!(
            "{} is not a directory of labeled images",
            args.input.display()
        )));
    }
    let report = ingest_directory::<f64>(&args.input, &ingest_config(&args.filter, categories))?;
    report_ingest_issues(&report);

    let dataset = &report.dataset;
    // The category arities are a fixed contract of the format.
    let expected = categories.arity();
    if dataset.dims() != expected {
        return Err(CliError::Internal(format!(
            "extraction produced {} columns, expected {expected}",
            dataset.dims()
        )));
    }

    let arff = args.out.with_extension("arff");
    let csv = args.out.with_extension("csv");
    write_arff_path(&arff, "seeds", dataset)?;
    write_csv_path(&csv, dataset)?;
    println!(
        "{} rows × {} features ({categories}), {} classes",
        dataset.len(),
        dataset.dims(),
        dataset.classes()
    );
    println!("wrote {}", arff.display());
    println!("wrote {}", csv.display());
    Ok(())
}
