//! One-dimensional position distributions and the classical reference walk.

use crate::error::{Error, Result};

/// Probabilities over positions `i ∈ [-n_max, n_max]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution1D {
    n_max: usize,
    probs: Vec<f64>,
}

impl Distribution1D {
    /// Builds a distribution from explicit entries, validating that every
    /// entry is nonnegative and the total is 1 within 1e-10.
    pub fn new(n_max: usize, probs: Vec<f64>) -> Result<Self> {
        if probs.len() != 2 * n_max + 1 {
            return Err(Error::ExtentMismatch {
                expected: 2 * n_max + 1,
                found: probs.len(),
            });
        }
        for &p in &probs {
            if p < 0.0 {
                return Err(Error::NegativeProbability { value: p });
            }
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > 1e-10 {
            return Err(Error::NotNormalized { norm_sqr: total });
        }
        Ok(Distribution1D { n_max, probs })
    }

    /// Internal constructor for entries already known to be valid.
    pub(crate) fn from_raw(n_max: usize, probs: Vec<f64>) -> Self {
        debug_assert_eq!(probs.len(), 2 * n_max + 1);
        Distribution1D { n_max, probs }
    }

    #[inline]
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// Probability at position `i`; zero outside the stored range.
    #[inline]
    pub fn probability(&self, i: i64) -> f64 {
        if i.unsigned_abs() as usize > self.n_max {
            return 0.0;
        }
        self.probs[(i + self.n_max as i64) as usize]
    }

    /// Iterates `(position, probability)` pairs from `-n_max` to `n_max`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        let n = self.n_max as i64;
        self.probs
            .iter()
            .enumerate()
            .map(move |(k, &p)| (k as i64 - n, p))
    }

    /// Sum of all entries.
    pub fn total(&self) -> f64 {
        self.probs.iter().sum()
    }

    /// Mean `Σ i·P(i)` and standard deviation `√(Σ i²·P(i) − mean²)`.
    pub fn stats(&self) -> (f64, f64) {
        let mut mean = 0.0;
        let mut second = 0.0;
        for (i, p) in self.iter() {
            let x = i as f64;
            mean += x * p;
            second += x * x * p;
        }
        let variance = (second - mean * mean).max(0.0);
        (mean, variance.sqrt())
    }

    pub fn mean(&self) -> f64 {
        self.stats().0
    }

    pub fn stddev(&self) -> f64 {
        self.stats().1
    }

    /// Largest entry and the position attaining it, ties broken toward the
    /// smallest `|i|` (and toward negative `i` among equal `|i|`).
    pub fn argmax(&self) -> (i64, f64) {
        let mut best_i = -(self.n_max as i64);
        let mut best_p = f64::NEG_INFINITY;
        for (i, p) in self.iter() {
            let better = p > best_p || (p == best_p && i.abs() < best_i.abs());
            if better {
                best_i = i;
                best_p = p;
            }
        }
        (best_i, best_p)
    }

    /// All positions whose entry equals the maximum exactly.
    pub fn argmax_set(&self) -> Vec<i64> {
        let (_, best) = self.argmax();
        self.iter()
            .filter(|&(_, p)| p == best)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Balanced classical random walk after `n` steps, computed analytically:
/// `P(i) = C(n, (n+i)/2) / 2ⁿ` for `(i+n)` even, 0 otherwise.
///
/// Binomial weights come from the iterative recurrence
/// `P(k+1) = P(k)·(n−k)/(k+1)` in probability space, so no coefficient ever
/// overflows; the left half is mirrored onto the right, which keeps the
/// distribution exactly symmetric.
pub fn classical_distribution(n: usize) -> Distribution1D {
    let mut probs = vec![0.0; 2 * n + 1];
    if n == 0 {
        probs[0] = 1.0;
        return Distribution1D::from_raw(0, probs);
    }
    // weight(k) = C(n,k)/2^n at position i = 2k - n
    let mut weight = 0.5f64.powi(n as i32);
    for k in 0..=n / 2 {
        probs[2 * k] = weight;
        probs[2 * (n - k)] = weight;
        weight = weight * (n - k) as f64 / (k + 1) as f64;
    }
    Distribution1D::from_raw(n, probs)
}
