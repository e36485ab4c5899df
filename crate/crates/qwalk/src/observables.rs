//! Joint statistics of the two-walker distribution: marginals, expected
//! distance, correlation, meeting probabilities and the at-least-one
//! distribution.
//!
//! Everything here is computed by exact summation over the probability
//! matrix; nothing is sampled.

use crate::dist::Distribution1D;
use crate::error::{Error, Result};

/// Joint probability matrix `P(i,j)` over `(i,j) ∈ [-n_max, n_max]²`,
/// row-major over `i` then `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct JointDistribution {
    n_max: usize,
    probs: Vec<f64>,
}

impl JointDistribution {
    /// Builds a joint distribution from explicit entries, validating
    /// nonnegativity and a total of 1 within 1e-10.
    pub fn new(n_max: usize, probs: Vec<f64>) -> Result<Self> {
        let sites = 2 * n_max + 1;
        if probs.len() != sites * sites {
            return Err(Error::ExtentMismatch {
                expected: sites * sites,
                found: probs.len(),
            });
        }
        let dist = JointDistribution { n_max, probs };
        dist.check()?;
        Ok(dist)
    }

    pub(crate) fn from_raw(n_max: usize, probs: Vec<f64>) -> Self {
        debug_assert_eq!(probs.len(), (2 * n_max + 1) * (2 * n_max + 1));
        JointDistribution { n_max, probs }
    }

    /// Re-validates the distribution invariants: every entry nonnegative
    /// and the total equal to 1 within 1e-10.
    pub fn check(&self) -> Result<()> {
        for &p in &self.probs {
            if p < 0.0 {
                return Err(Error::NegativeProbability { value: p });
            }
        }
        let total = self.total();
        if (total - 1.0).abs() > 1e-10 {
            return Err(Error::NotNormalized { norm_sqr: total });
        }
        Ok(())
    }

    #[inline]
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    #[inline]
    fn sites(&self) -> usize {
        2 * self.n_max + 1
    }

    /// Probability of walker 1 at `i` and walker 2 at `j`; zero outside
    /// the stored range.
    #[inline]
    pub fn probability(&self, i: i64, j: i64) -> f64 {
        let n = self.n_max as i64;
        if i.abs() > n || j.abs() > n {
            return 0.0;
        }
        self.probs[((i + n) as usize) * self.sites() + (j + n) as usize]
    }

    /// Iterates `(i, j, p)` row-major over `i` then `j`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, i64, f64)> + '_ {
        let n = self.n_max as i64;
        let sites = self.sites();
        self.probs.iter().enumerate().map(move |(k, &p)| {
            let i = (k / sites) as i64 - n;
            let j = (k % sites) as i64 - n;
            (i, j, p)
        })
    }

    pub fn total(&self) -> f64 {
        self.probs.iter().sum()
    }

    /// Marginal of walker 1: `P₁(i) = Σ_j P(i,j)`.
    pub fn marginal1(&self) -> Distribution1D {
        let sites = self.sites();
        let probs = (0..sites)
            .map(|io| self.probs[io * sites..(io + 1) * sites].iter().sum())
            .collect();
        Distribution1D::from_raw(self.n_max, probs)
    }

    /// Marginal of walker 2: `P₂(j) = Σ_i P(i,j)`.
    pub fn marginal2(&self) -> Distribution1D {
        let sites = self.sites();
        let mut probs = vec![0.0; sites];
        for io in 0..sites {
            for (jo, slot) in probs.iter_mut().enumerate() {
                *slot += self.probs[io * sites + jo];
            }
        }
        Distribution1D::from_raw(self.n_max, probs)
    }

    /// Expected distance `⟨|x₁ − x₂|⟩ = Σ_{i,j} |i−j| P(i,j)`.
    pub fn expected_distance(&self) -> f64 {
        let mut sum = 0.0;
        for (i, j, p) in self.iter() {
            sum += (i - j).abs() as f64 * p;
        }
        sum
    }

    /// Correlation `⟨x₁x₂⟩ − ⟨x₁⟩⟨x₂⟩`, all moments over this matrix.
    pub fn correlation(&self) -> f64 {
        let mut mixed = 0.0;
        let mut mean1 = 0.0;
        let mut mean2 = 0.0;
        for (i, j, p) in self.iter() {
            mixed += (i as f64) * (j as f64) * p;
            mean1 += (i as f64) * p;
            mean2 += (j as f64) * p;
        }
        mixed - mean1 * mean2
    }

    /// Probability of finding at least one walker at each position:
    /// `𝒫(i) = P₁(i) + P₂(i) − P(i,i)`.
    pub fn at_least_one(&self) -> PositionValues {
        let m1 = self.marginal1();
        let m2 = self.marginal2();
        let n = self.n_max as i64;
        let values = (-n..=n)
            .map(|i| m1.probability(i) + m2.probability(i) - self.probability(i, i))
            .collect();
        PositionValues {
            n_max: self.n_max,
            values,
        }
    }

    /// The meeting probabilities `P(i,i)` along the diagonal.
    pub fn diagonal(&self) -> PositionValues {
        let n = self.n_max as i64;
        let values = (-n..=n).map(|i| self.probability(i, i)).collect();
        PositionValues {
            n_max: self.n_max,
            values,
        }
    }

    /// Packages the table-row statistics for this distribution.
    pub fn summarize(&self, steps: usize, initial_condition: impl Into<String>) -> SummaryRecord {
        SummaryRecord {
            steps,
            initial_condition: initial_condition.into(),
            expected_distance: self.expected_distance(),
            correlation: self.correlation(),
            mean1: self.marginal1().mean(),
            mean2: self.marginal2().mean(),
        }
    }

    /// A copy with the diagonal forced to zero and the rest renormalized.
    ///
    /// Exists only so the verification report can compare both table
    /// variants against the published numbers; no evolution path ever
    /// zeroes a diagonal.
    pub fn with_zeroed_diagonal(&self) -> JointDistribution {
        let sites = self.sites();
        let mut probs = self.probs.clone();
        for k in 0..sites {
            probs[k * sites + k] = 0.0;
        }
        let total: f64 = probs.iter().sum();
        if total > 0.0 {
            for p in &mut probs {
                *p /= total;
            }
        }
        JointDistribution {
            n_max: self.n_max,
            probs,
        }
    }
}

/// A real value per position `i ∈ [-n_max, n_max]`; not necessarily a
/// probability distribution (the at-least-one array sums to `2 − Σᵢ P(i,i)`).
#[derive(Debug, Clone, PartialEq)]
pub struct PositionValues {
    n_max: usize,
    values: Vec<f64>,
}

impl PositionValues {
    #[inline]
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// Value at position `i`; zero outside the stored range.
    #[inline]
    pub fn value(&self, i: i64) -> f64 {
        if i.unsigned_abs() as usize > self.n_max {
            return 0.0;
        }
        self.values[(i + self.n_max as i64) as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        let n = self.n_max as i64;
        self.values
            .iter()
            .enumerate()
            .map(move |(k, &v)| (k as i64 - n, v))
    }

    pub fn total(&self) -> f64 {
        self.values.iter().sum()
    }
}

/// One row of the distance/correlation tables.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRecord {
    pub steps: usize,
    pub initial_condition: String,
    pub expected_distance: f64,
    pub correlation: f64,
    pub mean1: f64,
    pub mean2: f64,
}
