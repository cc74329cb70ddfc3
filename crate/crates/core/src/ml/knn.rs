//! k-nearest-neighbour classifier over standardized features.

use crate::num::Real;

use super::argmax_lowest;

/// Instance store: prediction scans all training points.
#[derive(Debug, Clone, PartialEq)]
pub struct KnnModel<F: Real> {
    pub(crate) k: usize,
    pub(crate) points: Vec<Vec<F>>,
    pub(crate) labels: Vec<usize>,
    pub(crate) classes: usize,
}

impl<F: Real> KnnModel<F> {
    /// Store the training set. `k` is clamped to the number of points.
    pub fn fit(points: Vec<Vec<F>>, labels: Vec<usize>, classes: usize, k: usize) -> Self {
        assert_eq!(points.len(), labels.len());
        assert!(!points.is_empty());
        Self {
            k: k.clamp(1, points.len()),
            points,
            labels,
            classes,
        }
    }

    /// Votes of the k nearest points, as fractions of k. Neighbour ties at
    /// equal distance resolve toward the lower training index.
    pub fn scores(&self, row: &[F]) -> Vec<F> {
        let mut dist: Vec<(F, usize)> = self
            .points
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let d2 = p
                    .iter()
                    .zip(row)
                    .map(|(&a, &b)| (a - b) * (a - b))
                    .sum::<F>();
                (d2, i)
            })
            .collect();
        dist.sort_by(|a, b| {
            a.0.partial_cmp(&b.0)
                .expect("finite distances")
                .then(a.1.cmp(&b.1))
        });
        let mut votes = vec![F::zero(); self.classes];
        let share = F::one() / F::of_usize(self.k);
        for &(_, i) in dist.iter().take(self.k) {
            votes[self.labels[i]] += share;
        }
        votes
    }

    pub fn predict(&self, row: &[F]) -> usize {
        argmax_lowest(&self.scores(row))
    }
}
