//! Gaussian naive Bayes with Laplace-smoothed priors and variance flooring.

use crate::num::Real;

use super::argmax_lowest;

/// Per-class feature Gaussians; classes absent from training keep no
/// distribution and score zero.
#[derive(Debug, Clone, PartialEq)]
pub struct NbModel<F: Real> {
    pub(crate) classes: usize,
    pub(crate) log_priors: Vec<F>,
    /// `None` for classes without training rows.
    pub(crate) gaussians: Vec<Option<ClassGaussians<F>>>,
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct ClassGaussians<F: Real> {
    pub(crate) means: Vec<F>,
    pub(crate) vars: Vec<F>,
}

/// Fraction of the squared global feature range used to floor variances.
const VAR_FLOOR_RATIO: f64 = 1e-9;
/// Absolute floor when a feature's global range is itself zero.
const VAR_FLOOR_ABS: f64 = 1e-12;

impl<F: Real> NbModel<F> {
    pub fn fit(rows: &[Vec<F>], labels: &[usize], classes: usize) -> Self {
        assert_eq!(rows.len(), labels.len());
        assert!(!rows.is_empty());
        let dims = rows[0].len();
        let n = rows.len();

        // Global per-feature range, the scale of the variance floor.
        let mut lo = vec![F::infinity(); dims];
        let mut hi = vec![F::neg_infinity(); dims];
        for row in rows {
            for ((l, h), &v) in lo.iter_mut().zip(hi.iter_mut()).zip(row) {
                *l = l.min(v);
                *h = h.max(v);
            }
        }
        let floors: Vec<F> = lo
            .iter()
            .zip(&hi)
            .map(|(&l, &h)| {
                let r = h - l;
                let f = F::of(VAR_FLOOR_RATIO) * r * r;
                if f > F::zero() {
                    f
                } else {
                    F::of(VAR_FLOOR_ABS)
                }
            })
            .collect();

        let mut counts = vec![0usize; classes];
        for &l in labels {
            counts[l] += 1;
        }
        let log_priors: Vec<F> = counts
            .iter()
            .map(|&c| (F::of_usize(c + 1) / F::of_usize(n + classes)).ln())
            .collect();

        let gaussians = (0..classes)
            .map(|class| {
                if counts[class] == 0 {
                    return None;
                }
                let nc = F::of_usize(counts[class]);
                let mut means = vec![F::zero(); dims];
                for (row, &l) in rows.iter().zip(labels) {
                    if l == class {
                        for (m, &v) in means.iter_mut().zip(row) {
                            *m += v;
                        }
                    }
                }
                for m in means.iter_mut() {
                    *m /= nc;
                }
                let mut vars = vec![F::zero(); dims];
                for (row, &l) in rows.iter().zip(labels) {
                    if l == class {
                        for ((s, &v), &m) in vars.iter_mut().zip(row).zip(&means) {
                            let d = v - m;
                            *s += d * d;
                        }
                    }
                }
                for (v, &f) in vars.iter_mut().zip(&floors) {
                    *v = (*v / nc).max(f);
                }
                Some(ClassGaussians { means, vars })
            })
            .collect();

        Self {
            classes,
            log_priors,
            gaussians,
        }
    }

    fn log_posteriors(&self, row: &[F]) -> Vec<F> {
        let half = F::of(0.5);
        let ln_2pi = F::of(std::f64::consts::TAU).ln();
        (0..self.classes)
            .map(|class| match &self.gaussians[class] {
                None => F::neg_infinity(),
                Some(g) => {
                    let mut lp = self.log_priors[class];
                    for ((&x, &m), &v) in row.iter().zip(&g.means).zip(&g.vars) {
                        let d = x - m;
                        lp -= half * (ln_2pi + v.ln()) + d * d / (F::of(2.0) * v);
                    }
                    lp
                }
            })
            .collect()
    }

    /// Posterior class probabilities, normalized in log space for stability.
    pub fn scores(&self, row: &[F]) -> Vec<F> {
        let lp = self.log_posteriors(row);
        let max = lp.iter().copied().fold(F::neg_infinity(), F::max);
        if !max.is_finite() {
            // Every class was absent; spread evenly.
            return vec![F::one() / F::of_usize(self.classes); self.classes];
        }
        let exps: Vec<F> = lp.iter().map(|&l| (l - max).exp()).collect();
        let total: F = exps.iter().copied().sum();
        exps.into_iter().map(|e| e / total).collect()
    }

    pub fn predict(&self, row: &[F]) -> usize {
        argmax_lowest(&self.scores(row))
    }
}
