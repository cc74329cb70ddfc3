//! Multi-class classification metrics derived from a confusion matrix.
//!
//! Every reported value is a percentage. Per-class values use the
//! one-vs-rest reduction; aggregate values are macro-averages, plus the
//! geometric mean of sensitivities which punishes neglected classes.

use thiserror::Error;

use crate::num::Real;

/// Metric computation failures.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum MetricsError {
    /// The confusion matrix holds no observations.
    #[error("empty confusion matrix")]
    EmptyMatrix,
    /// Truth and prediction slices differ in length.
    #[error("length mismatch: {truth} truth labels vs {predictions} predictions")]
    LengthMismatch { truth: usize, predictions: usize },
    /// A label index is outside the matrix.
    #[error("class index {index} out of range for {classes} classes")]
    ClassOutOfRange { index: usize, classes: usize },
}

/// Square count matrix; rows are true classes, columns predicted classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfusionMatrix {
    classes: usize,
    counts: Vec<u64>,
}

impl ConfusionMatrix {
    pub fn new(classes: usize) -> Self {
        Self {
            classes,
            counts: vec![0; classes * classes],
        }
    }

    /// Build from raw counts, row-major.
    pub fn from_counts(classes: usize, counts: Vec<u64>) -> Self {
        assert_eq!(counts.len(), classes * classes);
        Self { classes, counts }
    }

    /// Tally paired truth/prediction label indices.
    pub fn from_predictions(
        truth: &[usize],
        predictions: &[usize],
        classes: usize,
    ) -> Result<Self, MetricsError> {
        if truth.len() != predictions.len() {
            return Err(MetricsError::LengthMismatch {
                truth: truth.len(),
                predictions: predictions.len(),
            });
        }
        let mut cm = Self::new(classes);
        for (&t, &p) in truth.iter().zip(predictions) {
            for index in [t, p] {
                if index >= classes {
                    return Err(MetricsError::ClassOutOfRange { index, classes });
                }
            }
            cm.increment(t, p);
        }
        Ok(cm)
    }

    pub fn classes(&self) -> usize {
        self.classes
    }

    pub fn get(&self, true_class: usize, predicted: usize) -> u64 {
        self.counts[true_class * self.classes + predicted]
    }

    pub fn increment(&mut self, true_class: usize, predicted: usize) {
        self.counts[true_class * self.classes + predicted] += 1;
    }

    /// Element-wise sum, used to pool per-fold matrices.
    pub fn add(&mut self, other: &Self) {
        assert_eq!(self.classes, other.classes);
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn row_sum(&self, true_class: usize) -> u64 {
        (0..self.classes).map(|j| self.get(true_class, j)).sum()
    }

    pub fn col_sum(&self, predicted: usize) -> u64 {
        (0..self.classes).map(|i| self.get(i, predicted)).sum()
    }
}

/// One-vs-rest metrics of a single class, in percent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassMetrics<F: Real> {
    pub sensitivity: F,
    pub specificity: F,
    pub precision: F,
    pub f_measure: F,
    /// False when the class never occurs in the truth rows.
    pub sensitivity_defined: bool,
    /// False when everything belongs to this class (no negatives).
    pub specificity_defined: bool,
    /// False when the class is never predicted.
    pub precision_defined: bool,
}

/// Aggregate metrics of a confusion matrix, in percent.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricsReport<F: Real> {
    pub accuracy: F,
    /// Macro-averaged specificity.
    pub specificity: F,
    /// Macro-averaged sensitivity; identical to `mava`.
    pub sensitivity: F,
    /// Geometric mean of per-class sensitivities.
    pub mavg: F,
    /// Arithmetic mean of per-class sensitivities.
    pub mava: F,
    /// Mean per-class F-measure.
    pub mfm: F,
    /// Macro-averaged precision.
    pub precision: F,
    pub per_class: Vec<ClassMetrics<F>>,
}

/// Derive all metrics from a confusion matrix.
pub fn compute_metrics<F: Real>(cm: &ConfusionMatrix) -> Result<MetricsReport<F>, MetricsError> {
    let total = cm.total();
    if total == 0 || cm.classes() == 0 {
        return Err(MetricsError::EmptyMatrix);
    }
    let total_f = F::of(total as f64);
    let j = cm.classes();
    let jf = F::of_usize(j);
    let hundred = F::of(100.0);

    let mut per_class = Vec::with_capacity(j);
    for c in 0..j {
        let tp = F::of(cm.get(c, c) as f64);
        let row = F::of(cm.row_sum(c) as f64);
        let col = F::of(cm.col_sum(c) as f64);
        let fn_ = row - tp;
        let fp = col - tp;
        let tn = total_f - tp - fn_ - fp;

        let sensitivity_defined = row > F::zero();
        let sensitivity = if sensitivity_defined {
            tp / row
        } else {
            F::zero()
        };
        let specificity_defined = tn + fp > F::zero();
        let specificity = if specificity_defined {
            tn / (tn + fp)
        } else {
            F::zero()
        };
        let precision_defined = col > F::zero();
        let precision = if precision_defined {
            tp / col
        } else {
            F::zero()
        };
        let f_measure = if precision + sensitivity > F::zero() {
            F::of(2.0) * precision * sensitivity / (precision + sensitivity)
        } else {
            F::zero()
        };
        per_class.push(ClassMetrics {
            sensitivity: sensitivity * hundred,
            specificity: specificity * hundred,
            precision: precision * hundred,
            f_measure: f_measure * hundred,
            sensitivity_defined,
            specificity_defined,
            precision_defined,
        });
    }

    let trace: u64 = (0..j).map(|c| cm.get(c, c)).sum();
    let accuracy = F::of(trace as f64) / total_f * hundred;
    let mean_of =
        |pick: fn(&ClassMetrics<F>) -> F| -> F { per_class.iter().map(pick).sum::<F>() / jf };
    let mava = mean_of(|m| m.sensitivity);
    let mavg = per_class
        .iter()
        .map(|m| m.sensitivity / hundred)
        .fold(F::one(), |acc, s| acc * s)
        .powf(F::one() / jf)
        * hundred;

    Ok(MetricsReport {
        accuracy,
        specificity: mean_of(|m| m.specificity),
        sensitivity: mava,
        mavg,
        mava,
        mfm: mean_of(|m| m.f_measure),
        precision: mean_of(|m| m.precision),
        per_class,
    })
}
