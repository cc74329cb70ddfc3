//! Native classifiers plus the training, scoring and validation scaffolding
//! shared between them.
//!
//! All four learners consume the same [`LabeledDataset`] and produce a
//! [`TrainedModel`] that predicts class indices and per-class scores.
//! Distance-based learners (nearest-neighbour, linear SVM) see standardized
//! features; the standardizer is always fitted on training data only and
//! travels with the model.

pub mod auc;
pub mod cv;
mod forest;
mod knn;
mod naive_bayes;
mod svm;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use forest::ForestModel;
pub use knn::KnnModel;
pub use naive_bayes::NbModel;
pub use svm::SvmModel;

pub(crate) use forest::{Node, Tree};
pub(crate) use naive_bayes::ClassGaussians;
pub(crate) use svm::PairwiseHyperplane;

use crate::num::Real;

/// Training and prediction failures.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum MlError {
    /// No rows.
    #[error("empty dataset")]
    EmptyDataset,
    /// A row's width disagrees with the feature schema.
    #[error("dimension mismatch: expected {expected} features, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    /// NaN or infinity in the feature matrix.
    #[error("non-finite feature value at row {row}, column {col}")]
    NonFiniteFeature { row: usize, col: usize },
    /// A label index points past the class-name table.
    #[error("label {label} out of range for {classes} classes")]
    LabelOutOfRange { label: usize, classes: usize },
    /// Training requires at least two distinct classes.
    #[error("single-class dataset: training requires at least two classes")]
    SingleClassDataset,
    /// Stratification cannot produce two folds for the rarest class.
    #[error("class {class} has only {count} samples; cannot stratify")]
    NotEnoughPerClass { class: usize, count: usize },
    /// No class had both positive and negative samples.
    #[error("AUC undefined: no class has both positives and negatives")]
    UndefinedAuc,
    /// The requested classifier name is unknown.
    #[error("unknown classifier `{name}` (expected knn, bayes, forest or svm)")]
    UnknownClassifier { name: String },
}

/// A feature matrix with integer class labels and naming metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledDataset<F: Real> {
    features: Vec<Vec<F>>,
    labels: Vec<usize>,
    class_names: Vec<String>,
    feature_names: Vec<String>,
}

impl<F: Real> LabeledDataset<F> {
    /// Validate and assemble a dataset. Rows must be rectangular, finite and
    /// as wide as `feature_names`; labels must index `class_names`.
    pub fn new(
        features: Vec<Vec<F>>,
        labels: Vec<usize>,
        class_names: Vec<String>,
        feature_names: Vec<String>,
    ) -> Result<Self, MlError> {
        if features.is_empty() {
            return Err(MlError::EmptyDataset);
        }
        if features.len() != labels.len() {
            return Err(MlError::DimensionMismatch {
                expected: features.len(),
                got: labels.len(),
            });
        }
        let dims = feature_names.len();
        for (r, row) in features.iter().enumerate() {
            if row.len() != dims {
                return Err(MlError::DimensionMismatch {
                    expected: dims,
                    got: row.len(),
                });
            }
            for (c, v) in row.iter().enumerate() {
                if !v.is_finite() {
                    return Err(MlError::NonFiniteFeature { row: r, col: c });
                }
            }
        }
        for &l in &labels {
            if l >= class_names.len() {
                return Err(MlError::LabelOutOfRange {
                    label: l,
                    classes: class_names.len(),
                });
            }
        }
        Ok(Self {
            features,
            labels,
            class_names,
            feature_names,
        })
    }

    pub fn len(&self) -> usize {
        self.features.len()
    }

    pub fn is_empty(&self) -> bool {
        self.features.is_empty()
    }

    pub fn dims(&self) -> usize {
        self.feature_names.len()
    }

    pub fn classes(&self) -> usize {
        self.class_names.len()
    }

    pub fn features(&self) -> &[Vec<F>] {
        &self.features
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn class_names(&self) -> &[String] {
        &self.class_names
    }

    pub fn feature_names(&self) -> &[String] {
        &self.feature_names
    }

    /// Rows per class index.
    pub fn class_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.classes()];
        for &l in &self.labels {
            counts[l] += 1;
        }
        counts
    }

    /// New dataset holding the given rows, in the given order. The class
    /// and feature tables are carried over unchanged.
    pub fn subset(&self, indices: &[usize]) -> Self {
        Self {
            features: indices.iter().map(|&i| self.features[i].clone()).collect(),
            labels: indices.iter().map(|&i| self.labels[i]).collect(),
            class_names: self.class_names.clone(),
            feature_names: self.feature_names.clone(),
        }
    }
}

/// Column-wise z-score transform fitted on training data.
#[derive(Debug, Clone, PartialEq)]
pub struct Standardizer<F: Real> {
    pub(crate) mean: Vec<F>,
    pub(crate) std: Vec<F>,
}

impl<F: Real> Standardizer<F> {
    /// Fit per-column mean and population standard deviation. Constant
    /// columns keep a unit scale so they pass through centered.
    pub fn fit(rows: &[Vec<F>]) -> Self {
        assert!(!rows.is_empty());
        let dims = rows[0].len();
        let n = F::of_usize(rows.len());
        let mut mean = vec![F::zero(); dims];
        for row in rows {
            for (m, v) in mean.iter_mut().zip(row) {
                *m += *v;
            }
        }
        for m in mean.iter_mut() {
            *m /= n;
        }
        let mut std = vec![F::zero(); dims];
        for row in rows {
            for ((s, v), m) in std.iter_mut().zip(row).zip(&mean) {
                let d = *v - *m;
                *s += d * d;
            }
        }
        for s in std.iter_mut() {
            *s = (*s / n).sqrt();
            if *s <= F::zero() {
                *s = F::one();
            }
        }
        Self { mean, std }
    }

    pub(crate) fn from_parts(mean: Vec<F>, std: Vec<F>) -> Self {
        Self { mean, std }
    }

    pub fn mean(&self) -> &[F] {
        &self.mean
    }

    pub fn std(&self) -> &[F] {
        &self.std
    }

    pub fn transform_row(&self, row: &[F]) -> Vec<F> {
        row.iter()
            .zip(&self.mean)
            .zip(&self.std)
            .map(|((&v, &m), &s)| (v - m) / s)
            .collect()
    }

    pub fn transform(&self, rows: &[Vec<F>]) -> Vec<Vec<F>> {
        rows.iter().map(|r| self.transform_row(r)).collect()
    }
}

/// The four supported classifier families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassifierKind {
    Knn,
    NaiveBayes,
    RandomForest,
    Svm,
}

impl ClassifierKind {
    pub const ALL: [Self; 4] = [Self::Knn, Self::NaiveBayes, Self::RandomForest, Self::Svm];
}

impl fmt::Display for ClassifierKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Knn => "knn",
            Self::NaiveBayes => "bayes",
            Self::RandomForest => "forest",
            Self::Svm => "svm",
        })
    }
}

impl FromStr for ClassifierKind {
    type Err = MlError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "knn" | "nn" | "ibk" => Ok(Self::Knn),
            "bayes" | "nb" | "naive-bayes" | "naivebayes" => Ok(Self::NaiveBayes),
            "forest" | "rf" | "random-forest" | "randomforest" => Ok(Self::RandomForest),
            "svm" | "smo" | "linear-svm" => Ok(Self::Svm),
            other => Err(MlError::UnknownClassifier {
                name: other.to_string(),
            }),
        }
    }
}

/// Hyper-parameters for one training run.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassifierSpec {
    pub kind: ClassifierKind,
    /// Neighbours for kNN.
    pub k: usize,
    /// Trees in the forest.
    pub trees: usize,
    /// Soft-margin cost for the SVM.
    pub cost: f64,
    /// Seed for any randomized learner.
    pub seed: u64,
}

impl Default for ClassifierSpec {
    fn default() -> Self {
        Self {
            kind: ClassifierKind::Knn,
            k: 1,
            trees: 100,
            cost: 1.0,
            seed: 0,
        }
    }
}

impl ClassifierSpec {
    pub fn of_kind(kind: ClassifierKind) -> Self {
        Self {
            kind,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum ModelKind<F: Real> {
    Knn(KnnModel<F>),
    NaiveBayes(NbModel<F>),
    Forest(ForestModel<F>),
    Svm(SvmModel<F>),
}

/// A fitted classifier plus everything needed to apply it to raw rows.
#[derive(Debug, Clone, PartialEq)]
pub struct TrainedModel<F: Real> {
    pub(crate) spec: ClassifierSpec,
    pub(crate) class_names: Vec<String>,
    pub(crate) feature_names: Vec<String>,
    pub(crate) standardizer: Standardizer<F>,
    pub(crate) inner: ModelKind<F>,
}

impl<F: Real> TrainedModel<F> {
    /// Fit the classifier described by `spec` on the full dataset.
    pub fn train(data: &LabeledDataset<F>, spec: &ClassifierSpec) -> Result<Self, MlError> {
        let present = data.class_counts().iter().filter(|&&c| c > 0).count();
        if present < 2 {
            return Err(MlError::SingleClassDataset);
        }
        let standardizer = Standardizer::fit(data.features());
        let classes = data.classes();
        let inner = match spec.kind {
            ClassifierKind::Knn => {
                let rows = standardizer.transform(data.features());
                ModelKind::Knn(KnnModel::fit(rows, data.labels().to_vec(), classes, spec.k))
            }
            ClassifierKind::NaiveBayes => {
                ModelKind::NaiveBayes(NbModel::fit(data.features(), data.labels(), classes))
            }
            ClassifierKind::RandomForest => ModelKind::Forest(ForestModel::fit(
                data.features(),
                data.labels(),
                classes,
                spec.trees,
                spec.seed,
            )),
            ClassifierKind::Svm => {
                let rows = standardizer.transform(data.features());
                ModelKind::Svm(SvmModel::fit(
                    &rows,
                    data.labels(),
                    classes,
                    F::of(spec.cost),
                ))
            }
        };
        Ok(Self {
            spec: spec.clone(),
            class_names: data.class_names().to_vec(),
            feature_names: data.feature_names().to_vec(),
            standardizer,
            inner,
        })
    }

    pub fn spec(&self) -> &ClassifierSpec {
        &self.spec
    }

    pub fn class_names(&self) -> &[String] {
        &self.class_names
    }

    pub fn feature_names(&self) -> &[String] {
        &self.feature_names
    }

    fn check_row(&self, row: &[F]) -> Result<(), MlError> {
        if row.len() != self.feature_names.len() {
            return Err(MlError::DimensionMismatch {
                expected: self.feature_names.len(),
                got: row.len(),
            });
        }
        for (c, v) in row.iter().enumerate() {
            if !v.is_finite() {
                return Err(MlError::NonFiniteFeature { row: 0, col: c });
            }
        }
        Ok(())
    }

    /// Predicted class index for one raw feature row.
    pub fn predict(&self, row: &[F]) -> Result<usize, MlError> {
        self.check_row(row)?;
        Ok(match &self.inner {
            ModelKind::Knn(m) => m.predict(&self.standardizer.transform_row(row)),
            ModelKind::NaiveBayes(m) => m.predict(row),
            ModelKind::Forest(m) => m.predict(row),
            ModelKind::Svm(m) => m.predict(&self.standardizer.transform_row(row)),
        })
    }

    /// Per-class scores for one raw feature row. Scores are nonnegative and
    /// sum to 1; higher means more support for the class.
    pub fn scores(&self, row: &[F]) -> Result<Vec<F>, MlError> {
        self.check_row(row)?;
        Ok(match &self.inner {
            ModelKind::Knn(m) => m.scores(&self.standardizer.transform_row(row)),
            ModelKind::NaiveBayes(m) => m.scores(row),
            ModelKind::Forest(m) => m.scores(row),
            ModelKind::Svm(m) => m.scores(&self.standardizer.transform_row(row)),
        })
    }

    /// Predictions for many rows, in input order.
    pub fn predict_batch(&self, rows: &[Vec<F>]) -> Result<Vec<usize>, MlError> {
        rows.iter().map(|r| self.predict(r)).collect()
    }
}

/// Break a score vector's argmax ties toward the lowest class index.
pub(crate) fn argmax_lowest<F: Real>(scores: &[F]) -> usize {
    let mut best = 0;
    for (i, &s) in scores.iter().enumerate().skip(1) {
        if s > scores[best] {
            best = i;
        }
    }
    best
}
