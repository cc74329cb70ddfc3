//! Stratified k-fold cross-validation with AUC-based fold selection.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::metrics::{compute_metrics, ConfusionMatrix, MetricsReport};
use crate::num::Real;

use super::auc::macro_ovr_auc;
use super::{ClassifierSpec, LabeledDataset, MlError, TrainedModel};

/// Fold membership produced by stratification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldPlan {
    /// Row indices per fold, each sorted ascending.
    pub folds: Vec<Vec<usize>>,
    pub requested: usize,
    /// `requested` capped at the rarest class count.
    pub effective: usize,
}

/// Split rows into `k` folds with near-equal class proportions.
///
/// Every class is shuffled once with a single seeded generator (classes in
/// ascending index order) and dealt round-robin starting at fold 0, so each
/// fold receives within-one-of-equal counts of every class. `k` is lowered
/// to the rarest class count when necessary.
pub fn stratified_kfold(
    labels: &[usize],
    classes: usize,
    k: usize,
    seed: u64,
) -> Result<FoldPlan, MlError> {
    assert!(k >= 2, "need at least two folds");
    let mut per_class: Vec<Vec<usize>> = vec![Vec::new(); classes];
    for (i, &l) in labels.iter().enumerate() {
        per_class[l].push(i);
    }
    let mut effective = k;
    for (class, members) in per_class.iter().enumerate() {
        if members.is_empty() {
            continue;
        }
        if members.len() < effective {
            effective = members.len();
        }
        if members.len() < 2 {
            return Err(MlError::NotEnoughPerClass {
                class,
                count: members.len(),
            });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut folds: Vec<Vec<usize>> = vec![Vec::new(); effective];
    for members in per_class.iter_mut() {
        members.shuffle(&mut rng);
        for (i, &idx) in members.iter().enumerate() {
            folds[i % effective].push(idx);
        }
    }
    for fold in folds.iter_mut() {
        fold.sort_unstable();
    }
    Ok(FoldPlan {
        folds,
        requested: k,
        effective,
    })
}

/// Everything measured during one cross-validation run.
#[derive(Debug, Clone, PartialEq)]
pub struct CvReport<F: Real> {
    pub requested_folds: usize,
    pub effective_folds: usize,
    pub fold_confusions: Vec<ConfusionMatrix>,
    /// Macro one-vs-rest AUC of each fold.
    pub fold_auc: Vec<F>,
    pub mean_auc: F,
    /// Fold with the highest AUC; ties go to the lowest index.
    pub selected_fold: usize,
    /// Element-wise sum of the fold confusion matrices.
    pub pooled: ConfusionMatrix,
    pub pooled_metrics: MetricsReport<F>,
}

/// Run stratified k-fold cross-validation of one classifier configuration.
///
/// Each fold's model is fitted (standardizer included) on the other folds
/// only; the held-out rows are scored in ascending row order.
pub fn cross_validate<F: Real>(
    data: &LabeledDataset<F>,
    spec: &ClassifierSpec,
    k: usize,
    seed: u64,
) -> Result<CvReport<F>, MlError> {
    let present = data.class_counts().iter().filter(|&&c| c > 0).count();
    if present < 2 {
        return Err(MlError::SingleClassDataset);
    }
    let plan = stratified_kfold(data.labels(), data.classes(), k, seed)?;
    let kf = plan.effective;

    let per_fold: Result<Vec<(ConfusionMatrix, F)>, MlError> = (0..kf)
        .into_par_iter()
        .map(|fold| {
            let test = &plan.folds[fold];
            let mut in_test = vec![false; data.len()];
            for &i in test {
                in_test[i] = true;
            }
            let train: Vec<usize> = (0..data.len()).filter(|&i| !in_test[i]).collect();
            let model = TrainedModel::train(&data.subset(&train), spec)?;

            let mut cm = ConfusionMatrix::new(data.classes());
            let mut scores = Vec::with_capacity(test.len());
            let mut truths = Vec::with_capacity(test.len());
            for &i in test {
                let row = &data.features()[i];
                let s = model.scores(row)?;
                let p = model.predict(row)?;
                cm.increment(data.labels()[i], p);
                scores.push(s);
                truths.push(data.labels()[i]);
            }
            let auc = macro_ovr_auc::<F>(&scores, &truths, data.classes())?;
            Ok((cm, auc))
        })
        .collect();
    let per_fold = per_fold?;

    let mut pooled = ConfusionMatrix::new(data.classes());
    let mut fold_confusions = Vec::with_capacity(kf);
    let mut fold_auc = Vec::with_capacity(kf);
    for (cm, auc) in per_fold {
        pooled.add(&cm);
        fold_confusions.push(cm);
        fold_auc.push(auc);
    }
    let mut selected_fold = 0;
    for (i, &a) in fold_auc.iter().enumerate().skip(1) {
        if a > fold_auc[selected_fold] {
            selected_fold = i;
        }
    }
    let mean_auc = fold_auc.iter().copied().sum::<F>() / F::of_usize(kf);
    let pooled_metrics = compute_metrics(&pooled).expect("pooled matrix is non-empty");

    Ok(CvReport {
        requested_folds: plan.requested,
        effective_folds: kf,
        fold_confusions,
        fold_auc,
        mean_auc,
        selected_fold,
        pooled,
        pooled_metrics,
    })
}
