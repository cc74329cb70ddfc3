//! Classifier, cross-validation and ranking-metric invariants on randomized
//! inputs, including an exact pair-counting oracle for the AUC.

use proptest::prelude::*;

use carpo_core::metrics::{compute_metrics, ConfusionMatrix};
use carpo_core::ml::auc::{binary_auc, macro_ovr_auc};
use carpo_core::ml::cv::{cross_validate, stratified_kfold};
use carpo_core::ml::{ClassifierKind, ClassifierSpec, LabeledDataset, TrainedModel};
use carpo_core::synth::gaussian_blobs;

/// AUC by counting concordant/tied score pairs, in exact integer arithmetic.
fn auc_oracle(scores: &[f64], positive: &[bool]) -> Option<f64> {
    let pos: Vec<f64> = scores
        .iter()
        .zip(positive)
        .filter(|(_, &p)| p)
        .map(|(&s, _)| s)
        .collect();
    let neg: Vec<f64> = scores
        .iter()
        .zip(positive)
        .filter(|(_, &p)| !p)
        .map(|(&s, _)| s)
        .collect();
    if pos.is_empty() || neg.is_empty() {
        return None;
    }
    let mut concordant = 0u64;
    let mut ties = 0u64;
    for &sp in &pos {
        for &sn in &neg {
            if sp > sn {
                concordant += 1;
            } else if sp == sn {
                ties += 1;
            }
        }
    }
    let denom = 2 * (pos.len() as u64) * (neg.len() as u64);
    Some((2 * concordant + ties) as f64 / denom as f64)
}

fn scores_with_ties() -> impl Strategy<Value = (Vec<f64>, Vec<bool>)> {
    (2usize..40).prop_flat_map(|n| {
        (
            prop::collection::vec(0u8..6, n).prop_map(|v| {
                v.into_iter()
                    .map(|x| f64::from(x) / 4.0)
                    .collect::<Vec<f64>>()
            }),
            prop::collection::vec(any::<bool>(), n),
        )
    })
}

proptest! {
    /// Midrank AUC equals concordant-plus-half-ties counting, bit for bit.
    #[test]
    fn auc_equals_pair_counting((scores, positive) in scores_with_ties()) {
        let got = binary_auc(&scores, &positive);
        let want = auc_oracle(&scores, &positive);
        prop_assert_eq!(got, want);
    }

    /// Reversing the score order flips the AUC around one half.
    #[test]
    fn auc_of_negated_scores_is_complement((scores, positive) in scores_with_ties()) {
        let Some(a) = binary_auc(&scores, &positive) else { return Ok(()); };
        let negated: Vec<f64> = scores.iter().map(|s| -s).collect();
        let b = binary_auc(&negated, &positive).unwrap();
        prop_assert!((a + b - 1.0).abs() <= 1e-12);
    }
}

#[test]
fn macro_auc_averages_only_evaluable_classes() {
    // Three classes but class 2 never appears: its column is skipped.
    let scores = vec![
        vec![0.9, 0.1, 0.0],
        vec![0.2, 0.8, 0.0],
        vec![0.7, 0.3, 0.0],
        vec![0.1, 0.9, 0.0],
    ];
    let truth = vec![0, 1, 0, 1];
    let macro_auc = macro_ovr_auc(&scores, &truth, 3).unwrap();
    let c0: Vec<f64> = scores.iter().map(|r| r[0]).collect();
    let c1: Vec<f64> = scores.iter().map(|r| r[1]).collect();
    let p0: Vec<bool> = truth.iter().map(|&t| t == 0).collect();
    let p1: Vec<bool> = truth.iter().map(|&t| t == 1).collect();
    let want = (binary_auc(&c0, &p0).unwrap() + binary_auc(&c1, &p1).unwrap()) / 2.0;
    assert_eq!(macro_auc, want);
}

fn blob_dataset(classes: usize, per_class: usize, seed: u64) -> LabeledDataset<f64> {
    let dims = classes.max(4);
    let (rows, labels) = gaussian_blobs(classes, per_class, dims, 8.0, seed);
    let class_names = (0..classes).map(|c| format!("class{c}")).collect();
    let feature_names = (0..dims).map(|d| format!("f{d}")).collect();
    LabeledDataset::new(rows, labels, class_names, feature_names).unwrap()
}

#[test]
fn knn_k1_resubstitution_is_perfect() {
    for seed in 0..5 {
        let data = blob_dataset(3, 20, seed);
        let spec = ClassifierSpec {
            kind: ClassifierKind::Knn,
            k: 1,
            ..ClassifierSpec::default()
        };
        let model = TrainedModel::train(&data, &spec).unwrap();
        let predicted = model.predict_batch(data.features()).unwrap();
        assert_eq!(predicted, data.labels());
    }
}

#[test]
fn forest_training_is_deterministic() {
    let data = blob_dataset(4, 15, 11);
    let spec = ClassifierSpec {
        kind: ClassifierKind::RandomForest,
        trees: 40,
        seed: 99,
        ..ClassifierSpec::default()
    };
    let a = TrainedModel::train(&data, &spec).unwrap();
    let b = TrainedModel::train(&data, &spec).unwrap();
    let probe = blob_dataset(4, 10, 12);
    for row in probe.features() {
        assert_eq!(a.predict(row).unwrap(), b.predict(row).unwrap());
        assert_eq!(a.scores(row).unwrap(), b.scores(row).unwrap());
    }
}

/// Scaling every feature by a power of two is absorbed exactly by the
/// standardizer, so kNN and SVM predictions cannot move.
#[test]
fn standardized_learners_are_scale_invariant() {
    let data = blob_dataset(3, 15, 21);
    for exp in [-3i32, -1, 1, 4, 9] {
        let factor = (2.0f64).powi(exp);
        let scaled_rows: Vec<Vec<f64>> = data
            .features()
            .iter()
            .map(|r| r.iter().map(|v| v * factor).collect())
            .collect();
        let scaled = LabeledDataset::new(
            scaled_rows,
            data.labels().to_vec(),
            data.class_names().to_vec(),
            data.feature_names().to_vec(),
        )
        .unwrap();
        for kind in [ClassifierKind::Knn, ClassifierKind::Svm] {
            let spec = ClassifierSpec::of_kind(kind);
            let base = TrainedModel::train(&data, &spec).unwrap();
            let other = TrainedModel::train(&scaled, &spec).unwrap();
            for (row, srow) in data.features().iter().zip(scaled.features()) {
                assert_eq!(
                    base.predict(row).unwrap(),
                    other.predict(srow).unwrap(),
                    "kind {kind:?} factor 2^{exp}"
                );
            }
        }
    }
}

fn class_counts_strategy() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(2usize..40, 2..23)
}

proptest! {
    /// Folds partition the rows and balance every class within one row.
    #[test]
    fn stratified_folds_are_balanced(counts in class_counts_strategy(), k in 2usize..10, seed in 0u64..1000) {
        let mut labels = Vec::new();
        for (class, &n) in counts.iter().enumerate() {
            labels.extend(std::iter::repeat_n(class, n));
        }
        let plan = stratified_kfold(&labels, counts.len(), k, seed).unwrap();
        let rarest = counts.iter().copied().min().unwrap();
        prop_assert_eq!(plan.effective, k.min(rarest));
        prop_assert_eq!(plan.folds.len(), plan.effective);

        let mut seen = vec![false; labels.len()];
        for fold in &plan.folds {
            prop_assert!(fold.windows(2).all(|w| w[0] < w[1]), "fold not sorted");
            for &i in fold {
                prop_assert!(!seen[i], "row {} in two folds", i);
                seen[i] = true;
            }
        }
        prop_assert!(seen.iter().all(|&s| s), "some row in no fold");

        for (class, &n) in counts.iter().enumerate() {
            let per_fold: Vec<usize> = plan
                .folds
                .iter()
                .map(|f| f.iter().filter(|&&i| labels[i] == class).count())
                .collect();
            let lo = *per_fold.iter().min().unwrap();
            let hi = *per_fold.iter().max().unwrap();
            prop_assert!(hi - lo <= 1, "class {class} of {n} split {per_fold:?}");
        }
    }

    /// The geometric mean of per-class sensitivities never beats the
    /// arithmetic mean.
    #[test]
    fn mavg_at_most_mava(cells in prop::collection::vec(0u64..50, 9)) {
        let diag_ok = cells[0] + cells[1] + cells[2] > 0
            && cells[3] + cells[4] + cells[5] > 0
            && cells[6] + cells[7] + cells[8] > 0;
        prop_assume!(diag_ok);
        let cm = ConfusionMatrix::from_counts(3, cells);
        let m = compute_metrics::<f64>(&cm).unwrap();
        prop_assert!(m.mavg <= m.mava + 1e-9, "MAvG {} > MAvA {}", m.mavg, m.mava);
    }
}

#[test]
fn cross_validation_is_deterministic() {
    let data = blob_dataset(3, 12, 31);
    let spec = ClassifierSpec::of_kind(ClassifierKind::NaiveBayes);
    let a = cross_validate(&data, &spec, 5, 7).unwrap();
    let b = cross_validate(&data, &spec, 5, 7).unwrap();
    assert_eq!(a, b);
}

#[test]
fn cross_validation_caps_folds_at_rarest_class() {
    let data = blob_dataset(2, 3, 41);
    let spec = ClassifierSpec::of_kind(ClassifierKind::NaiveBayes);
    let report = cross_validate(&data, &spec, 10, 0).unwrap();
    assert_eq!(report.requested_folds, 10);
    assert_eq!(report.effective_folds, 3);
    assert_eq!(report.pooled.total(), 6);
}
