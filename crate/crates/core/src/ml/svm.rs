//! Linear soft-margin SVM trained by dual coordinate descent, combined
//! one-vs-one for multi-class problems.
//!
//! The solver optimizes the L1-hinge dual with a fixed sweep order, so
//! training is deterministic. The bias is absorbed as a constant augmented
//! feature. Inputs are expected to be standardized.

use rayon::prelude::*;

use crate::num::Real;

/// Convergence threshold on the largest projected gradient in a sweep.
const TOLERANCE: f64 = 1e-4;
/// Upper bound on full sweeps over the training pairs.
const MAX_EPOCHS: usize = 1000;

/// One trained class-vs-class hyperplane, bias in the last slot.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct PairwiseHyperplane<F: Real> {
    pub(crate) positive: usize,
    pub(crate) negative: usize,
    pub(crate) weights: Vec<F>,
}

impl<F: Real> PairwiseHyperplane<F> {
    /// Signed margin; nonnegative favours `positive`.
    fn decision(&self, row: &[F]) -> F {
        let d = self.weights.len() - 1;
        let mut f = self.weights[d];
        for (w, x) in self.weights[..d].iter().zip(row) {
            f += *w * *x;
        }
        f
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SvmModel<F: Real> {
    pub(crate) classes: usize,
    pub(crate) planes: Vec<PairwiseHyperplane<F>>,
}

/// Solve one two-class subproblem: rows already standardized, `y` in ±1.
fn solve_pair<F: Real>(rows: &[&[F]], y: &[F], cost: F) -> Vec<F> {
    let n = rows.len();
    let dims = rows[0].len() + 1;
    let bias = dims - 1;
    let mut w = vec![F::zero(); dims];
    let mut alpha = vec![F::zero(); n];
    // Diagonal of the Gram matrix, including the augmented bias feature.
    let q: Vec<F> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v * v).sum::<F>() + F::one())
        .collect();
    let tol = F::of(TOLERANCE);
    let tiny = F::of(1e-12);

    for _ in 0..MAX_EPOCHS {
        let mut worst = F::zero();
        for i in 0..n {
            let xi = rows[i];
            let mut wx = w[bias];
            for (wv, xv) in w[..bias].iter().zip(xi) {
                wx += *wv * *xv;
            }
            let g = y[i] * wx - F::one();
            let pg = if alpha[i] <= F::zero() {
                g.min(F::zero())
            } else if alpha[i] >= cost {
                g.max(F::zero())
            } else {
                g
            };
            worst = worst.max(pg.abs());
            if pg.abs() > tiny {
                let old = alpha[i];
                alpha[i] = (old - g / q[i]).max(F::zero()).min(cost);
                let delta = (alpha[i] - old) * y[i];
                if delta != F::zero() {
                    for (wv, xv) in w[..bias].iter_mut().zip(xi) {
                        *wv += delta * *xv;
                    }
                    w[bias] += delta;
                }
            }
        }
        if worst < tol {
            break;
        }
    }
    w
}

impl<F: Real> SvmModel<F> {
    pub fn fit(rows: &[Vec<F>], labels: &[usize], classes: usize, cost: F) -> Self {
        assert_eq!(rows.len(), labels.len());
        assert!(!rows.is_empty());
        assert!(cost > F::zero());
        let mut present: Vec<usize> = (0..classes).filter(|c| labels.contains(c)).collect();
        present.sort_unstable();
        let mut pairs = Vec::new();
        for (i, &a) in present.iter().enumerate() {
            for &b in &present[i + 1..] {
                pairs.push((a, b));
            }
        }
        let planes = pairs
            .into_par_iter()
            .map(|(a, b)| {
                let mut sub_rows: Vec<&[F]> = Vec::new();
                let mut y: Vec<F> = Vec::new();
                for (row, &l) in rows.iter().zip(labels) {
                    if l == a || l == b {
                        sub_rows.push(row);
                        y.push(if l == a { F::one() } else { -F::one() });
                    }
                }
                PairwiseHyperplane {
                    positive: a,
                    negative: b,
                    weights: solve_pair(&sub_rows, &y, cost),
                }
            })
            .collect();
        Self { classes, planes }
    }

    /// Pairwise votes as fractions of the number of pairs.
    pub fn scores(&self, row: &[F]) -> Vec<F> {
        let mut votes = vec![F::zero(); self.classes];
        if self.planes.is_empty() {
            return votes;
        }
        let share = F::one() / F::of_usize(self.planes.len());
        for p in &self.planes {
            let winner = if p.decision(row) >= F::zero() {
                p.positive
            } else {
                p.negative
            };
            votes[winner] += share;
        }
        votes
    }

    /// Majority of pairwise votes; ties break on the summed signed margins,
    /// then on the lowest class index.
    pub fn predict(&self, row: &[F]) -> usize {
        let mut votes = vec![0usize; self.classes];
        let mut margins = vec![F::zero(); self.classes];
        for p in &self.planes {
            let f = p.decision(row);
            if f >= F::zero() {
                votes[p.positive] += 1;
            } else {
                votes[p.negative] += 1;
            }
            margins[p.positive] += f;
            margins[p.negative] -= f;
        }
        let mut best = 0usize;
        for c in 1..self.classes {
            if votes[c] > votes[best] || (votes[c] == votes[best] && margins[c] > margins[best]) {
                best = c;
            }
        }
        best
    }
}
