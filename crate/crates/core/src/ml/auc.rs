//! Macro-averaged one-vs-rest area under the ROC curve.
//!
//! Each class AUC is the Mann–Whitney statistic with midranks, computed in
//! doubled-integer arithmetic so the result equals exhaustive concordant
//! pair counting exactly: AUC = (concordant + ties/2) / (positives ×
//! negatives).

use crate::num::Real;

use super::MlError;

/// AUC of one score column against binary relevance, or `None` when the
/// class lacks positives or negatives.
pub fn binary_auc<F: Real>(scores: &[F], positive: &[bool]) -> Option<F> {
    assert_eq!(scores.len(), positive.len());
    let np = positive.iter().filter(|&&p| p).count() as u64;
    let nn = scores.len() as u64 - np;
    if np == 0 || nn == 0 {
        return None;
    }
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[a].partial_cmp(&scores[b]).expect("finite scores"));

    // Walk ascending tie groups. Midranks are half-integers, so doubled
    // ranks stay exact integers: a group spanning ranks i+1..=i+g has
    // doubled midrank (i+1)+(i+g) = 2i+g+1.
    let mut pos_rank2: u64 = 0;
    let mut i = 0usize;
    while i < order.len() {
        let mut g = 1usize;
        while i + g < order.len() && scores[order[i + g]] == scores[order[i]] {
            g += 1;
        }
        let rank2 = (2 * i + g + 1) as u64;
        let group_pos = order[i..i + g].iter().filter(|&&k| positive[k]).count() as u64;
        pos_rank2 += rank2 * group_pos;
        i += g;
    }
    // Doubled Mann–Whitney U = doubled rank sum − np(np+1).
    let u2 = pos_rank2 - np * (np + 1);
    Some(F::of(u2 as f64) / F::of((2 * np * nn) as f64))
}

/// Mean one-vs-rest AUC over the classes that have both positives and
/// negatives in `truth`. Errs when no class qualifies.
pub fn macro_ovr_auc<F: Real>(
    scores: &[Vec<F>],
    truth: &[usize],
    classes: usize,
) -> Result<F, MlError> {
    assert_eq!(scores.len(), truth.len());
    let mut total = F::zero();
    let mut evaluable = 0usize;
    for class in 0..classes {
        let column: Vec<F> = scores.iter().map(|s| s[class]).collect();
        let positive: Vec<bool> = truth.iter().map(|&t| t == class).collect();
        if let Some(auc) = binary_auc(&column, &positive) {
            total += auc;
            evaluable += 1;
        }
    }
    if evaluable == 0 {
        return Err(MlError::UndefinedAuc);
    }
    Ok(total / F::of_usize(evaluable))
}
