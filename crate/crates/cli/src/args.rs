//! Command-line surface: one subcommand per pipeline stage.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use carpo_core::features::CategorySet;
use carpo_core::ml::{ClassifierKind, ClassifierSpec};

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "carpo",
    version,
    about = "Seed image analysis: segmentation, 64 descriptors, classical classifiers"
)]
pub struct Cli {
    /// Cap worker threads (0 = one per core). Results never depend on it.
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,

    /// Print per-file progress to stderr.
    #[arg(long, short = 'v', global = true)]
    pub verbose: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find seeds in one scan and write per-seed crops and masks.
    Segment(SegmentArgs),
    /// Turn a labeled image tree into ARFF + CSV descriptor tables.
    Extract(ExtractArgs),
    /// Fit a classifier and save it as a model archive.
    Train(TrainArgs),
    /// Cross-validate a classifier and report all metrics per fold.
    Evaluate(EvaluateArgs),
    /// Apply a saved model to new data.
    Predict(PredictArgs),
    /// Cross-validate every classifier on every feature-category subset.
    Compare(CompareArgs),
}

/// Region filtering knobs shared by the image-reading commands.
#[derive(Debug, Args, Clone)]
pub struct FilterArgs {
    /// Smallest region kept, in pixels.
    #[arg(long)]
    pub min_area: Option<usize>,
    /// Largest region kept, in pixels (default: a quarter of the image).
    #[arg(long)]
    pub max_area: Option<usize>,
    /// Lower circularity bound.
    #[arg(long, default_value_t = 0.0)]
    pub circ_min: f64,
    /// Upper circularity bound.
    #[arg(long, default_value_t = 1.0)]
    pub circ_max: f64,
}

#[derive(Debug, Args)]
pub struct SegmentArgs {
    /// Input scan (PNG or JPEG).
    pub image: PathBuf,
    /// Directory receiving the crops and masks.
    #[arg(long)]
    pub out: PathBuf,
    #[command(flatten)]
    pub filter: FilterArgs,
}

#[derive(Debug, Args)]
pub struct ExtractArgs {
    /// Root of the labeled image tree (class = folder name).
    pub input: PathBuf,
    /// Output base path; `.arff` and `.csv` are appended.
    #[arg(long)]
    pub out: PathBuf,
    /// Feature categories: comma- or plus-joined subset of morph,texture,color, or `all`.
    #[arg(long, default_value = "all")]
    pub features: String,
    #[command(flatten)]
    pub filter: FilterArgs,
}

/// Classifier choice and hyper-parameters.
#[derive(Debug, Args, Clone)]
pub struct LearnerArgs {
    /// One of: knn, bayes, forest, svm.
    #[arg(long, default_value = "knn")]
    pub classifier: String,
    /// Neighbours for kNN.
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    /// Trees in the forest.
    #[arg(long, default_value_t = 100)]
    pub trees: usize,
    /// Soft-margin cost for the SVM.
    #[arg(long, default_value_t = 1.0)]
    pub c: f64,
    /// Seed for randomized learners and fold shuffling.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct TrainArgs {
    /// Dataset: .arff, .csv, or a labeled image directory.
    pub input: PathBuf,
    /// Where to write the model archive.
    #[arg(long)]
    pub out: PathBuf,
    /// Feature categories to keep (see `extract`).
    #[arg(long, default_value = "all")]
    pub features: String,
    #[command(flatten)]
    pub learner: LearnerArgs,
    #[command(flatten)]
    pub filter: FilterArgs,
}

#[derive(Debug, Args)]
pub struct EvaluateArgs {
    /// Dataset: .arff, .csv, or a labeled image directory.
    pub input: PathBuf,
    /// Optional report base path; `.txt` and `.csv` are appended.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Feature categories to keep (see `extract`).
    #[arg(long, default_value = "all")]
    pub features: String,
    /// Cross-validation folds.
    #[arg(long, default_value_t = 10)]
    pub folds: usize,
    #[command(flatten)]
    pub learner: LearnerArgs,
    #[command(flatten)]
    pub filter: FilterArgs,
}

#[derive(Debug, Args)]
pub struct PredictArgs {
    /// Rows to classify: .arff, .csv, or an image directory.
    pub input: PathBuf,
    /// Model archive produced by `train`.
    #[arg(long)]
    pub model: PathBuf,
    /// Optional CSV output path (default: table on stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub filter: FilterArgs,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Dataset with all 64 descriptors: .arff, .csv, or an image directory.
    pub input: PathBuf,
    /// Optional grid CSV output path.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Cross-validation folds.
    #[arg(long, default_value_t = 10)]
    pub folds: usize,
    #[command(flatten)]
    pub learner: LearnerArgs,
    #[command(flatten)]
    pub filter: FilterArgs,
}

/// Parse the comma- or plus-joined category list.
pub fn parse_features(s: &str) -> Result<CategorySet, CliError> {
    let normalized = s.replace(',', "+");
    normalized
        .parse::<CategorySet>()
        .map_err(|e| CliError::Usage(format!("--features: {e}")))
}

impl LearnerArgs {
    pub fn spec(&self) -> Result<ClassifierSpec, CliError> {
        let kind: ClassifierKind = self
            .classifier
            .parse()
            .map_err(|e| CliError::Usage(format!("--classifier: {e}")))?;
        if kind == ClassifierKind::Knn && self.k == 0 {
            return Err(CliError::Usage("--k must be at least 1".into()));
        }
        if kind == ClassifierKind::RandomForest && self.trees == 0 {
            return Err(CliError::Usage("--trees must be at least 1".into()));
        }
        if kind == ClassifierKind::Svm && (self.c.is_nan() || self.c <= 0.0) {
            return Err(CliError::Usage("--c must be positive".into()));
        }
        Ok(ClassifierSpec {
            kind,
            k: self.k,
            trees: self.trees,
            cost: self.c,
            seed: self.seed,
        })
    }
}
