//! Random forest of Gini-split decision trees grown on bootstrap samples.
//!
//! Every tree draws from its own counter-based random stream, so a forest
//! is reproducible for a given seed regardless of thread scheduling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::num::Real;

use super::argmax_lowest;

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Node<F: Real> {
    Leaf {
        class: usize,
    },
    Split {
        feature: usize,
        threshold: F,
        left: usize,
        right: usize,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Tree<F: Real> {
    pub(crate) nodes: Vec<Node<F>>,
}

impl<F: Real> Tree<F> {
    fn classify(&self, row: &[F]) -> usize {
        let mut at = 0usize;
        loop {
            match &self.nodes[at] {
                Node::Leaf { class } => return *class,
                Node::Split {
                    feature,
                    threshold,
                    left,
                    right,
                } => {
                    at = if row[*feature] <= *threshold {
                        *left
                    } else {
                        *right
                    };
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ForestModel<F: Real> {
    pub(crate) trees: Vec<Tree<F>>,
    pub(crate) classes: usize,
}

struct TreeBuilder<'a, F: Real> {
    rows: &'a [Vec<F>],
    labels: &'a [usize],
    classes: usize,
    mtry: usize,
    nodes: Vec<Node<F>>,
}

impl<'a, F: Real> TreeBuilder<'a, F> {
    fn majority(&self, samples: &[usize]) -> usize {
        let mut counts = vec![0usize; self.classes];
        for &s in samples {
            counts[self.labels[s]] += 1;
        }
        let mut best = 0;
        for (c, &n) in counts.iter().enumerate().skip(1) {
            if n > counts[best] {
                best = c;
            }
        }
        best
    }

    fn is_pure(&self, samples: &[usize]) -> bool {
        let first = self.labels[samples[0]];
        samples.iter().all(|&s| self.labels[s] == first)
    }

    /// Lowest weighted child Gini over the midpoint thresholds of one
    /// feature, or `None` when the feature is constant on these samples.
    fn best_split_on(&self, samples: &[usize], feature: usize) -> Option<(F, F)> {
        let mut vl: Vec<(F, usize)> = samples
            .iter()
            .map(|&s| (self.rows[s][feature], self.labels[s]))
            .collect();
        vl.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite features"));
        let n = vl.len();
        let mut right = vec![0usize; self.classes];
        for &(_, l) in &vl {
            right[l] += 1;
        }
        let mut left = vec![0usize; self.classes];
        let mut best: Option<(F, F)> = None;
        let total = F::of_usize(n);
        for i in 0..n - 1 {
            left[vl[i].1] += 1;
            right[vl[i].1] -= 1;
            if vl[i].0 == vl[i + 1].0 {
                continue;
            }
            let nl = F::of_usize(i + 1);
            let nr = F::of_usize(n - i - 1);
            let gini = |counts: &[usize], size: F| {
                let mut g = F::one();
                for &c in counts {
                    let p = F::of_usize(c) / size;
                    g -= p * p;
                }
                g
            };
            let weighted = (nl * gini(&left, nl) + nr * gini(&right, nr)) / total;
            // The midpoint of two adjacent floats can round onto the right
            // value (or overflow for huge ones), which would route every
            // sample to one side; clamp so `x <= threshold` always splits.
            let mut threshold = (vl[i].0 + vl[i + 1].0) / F::of(2.0);
            if !(threshold >= vl[i].0 && threshold < vl[i + 1].0) {
                threshold = vl[i].0;
            }
            let better = match best {
                None => true,
                Some((bw, bt)) => weighted < bw || (weighted == bw && threshold < bt),
            };
            if better {
                best = Some((weighted, threshold));
            }
        }
        best
    }

    /// Best (feature, threshold) among the candidates; impurity ties break
    /// toward the lowest feature index, then the lowest threshold.
    fn best_split(&self, samples: &[usize], features: &[usize]) -> Option<(usize, F, F)> {
        let mut best: Option<(F, usize, F)> = None;
        for &f in features {
            if let Some((w, t)) = self.best_split_on(samples, f) {
                let better = match best {
                    None => true,
                    Some((bw, bf, bt)) => w < bw || (w == bw && (f < bf || (f == bf && t < bt))),
                };
                if better {
                    best = Some((w, f, t));
                }
            }
        }
        best.map(|(w, f, t)| (f, t, w))
    }

    fn grow(&mut self, samples: Vec<usize>, rng: &mut ChaCha8Rng) -> usize {
        if self.is_pure(&samples) {
            let class = self.labels[samples[0]];
            self.nodes.push(Node::Leaf { class });
            return self.nodes.len() - 1;
        }
        let dims = self.rows[0].len();
        let sampled: Vec<usize> = rand::seq::index::sample(rng, dims, self.mtry).into_vec();
        let split = self.best_split(&samples, &sampled).or_else(|| {
            // The random candidates were all constant here; scan everything
            // so impure nodes only stop when no feature can separate them.
            let all: Vec<usize> = (0..dims).collect();
            self.best_split(&samples, &all)
        });
        let Some((feature, threshold, _)) = split else {
            let class = self.majority(&samples);
            self.nodes.push(Node::Leaf { class });
            return self.nodes.len() - 1;
        };
        let (ls, rs): (Vec<usize>, Vec<usize>) = samples
            .into_iter()
            .partition(|&s| self.rows[s][feature] <= threshold);
        let at = self.nodes.len();
        self.nodes.push(Node::Leaf { class: 0 }); // placeholder
        let left = self.grow(ls, rng);
        let right = self.grow(rs, rng);
        self.nodes[at] = Node::Split {
            feature,
            threshold,
            left,
            right,
        };
        at
    }
}

impl<F: Real> ForestModel<F> {
    pub fn fit(rows: &[Vec<F>], labels: &[usize], classes: usize, trees: usize, seed: u64) -> Self {
        assert_eq!(rows.len(), labels.len());
        assert!(!rows.is_empty());
        assert!(trees >= 1);
        let n = rows.len();
        let dims = rows[0].len();
        let mtry = ((dims as f64).sqrt().floor() as usize).max(1);
        let trees = (0..trees)
            .into_par_iter()
            .map(|t| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(t as u64);
                let bootstrap: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n)).collect();
                let mut builder = TreeBuilder {
                    rows,
                    labels,
                    classes,
                    mtry,
                    nodes: Vec::new(),
                };
                let root = builder.grow(bootstrap, &mut rng);
                debug_assert_eq!(root, 0);
                Tree {
                    nodes: builder.nodes,
                }
            })
            .collect();
        Self { trees, classes }
    }

    /// Tree votes as fractions of the ensemble size.
    pub fn scores(&self, row: &[F]) -> Vec<F> {
        let mut votes = vec![F::zero(); self.classes];
        let share = F::one() / F::of_usize(self.trees.len());
        for tree in &self.trees {
            votes[tree.classify(row)] += share;
        }
        votes
    }

    pub fn predict(&self, row: &[F]) -> usize {
        argmax_lowest(&self.scores(row))
    }
}
