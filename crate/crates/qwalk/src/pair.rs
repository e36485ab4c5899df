//! Two-walker states in two representations: a sum of weighted product
//! terms, which is the production path, and a dense joint tensor used as
//! the brute-force oracle.
//!
//! Both walkers evolve under the same one-particle step unitary, applied
//! as a tensor product. Because that product operator distributes over
//! product terms, the product form evolves each factor independently; the
//! dense form applies coin⊗coin and the double conditional shift directly
//! to the joint amplitude tensor, with no reference to any product
//! structure. Agreement between the two paths is the strongest correctness
//! check in the crate.

use num_complex::Complex64;

use crate::coin::{Coin, CoinOperator};
use crate::error::{Error, Result};
use crate::observables::JointDistribution;
use crate::walker::WalkerState;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Relative sign of the two terms in a maximally coin-entangled pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// The coefficient factor `±1` carried by the exchanged term.
    #[inline]
    pub fn factor(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// One weighted `walker ⊗ walker` term of a two-particle state.
///
/// Each factor is individually normalized; the coefficient carries all the
/// weight. Both factors share the same half-width.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductTerm {
    coefficient: Complex64,
    walker1: WalkerState,
    walker2: WalkerState,
}

impl ProductTerm {
    pub fn new(coefficient: Complex64, walker1: WalkerState, walker2: WalkerState) -> Result<Self> {
        if walker1.n_max() != walker2.n_max() {
            return Err(Error::ExtentMismatch {
                expected: walker1.n_max(),
                found: walker2.n_max(),
            });
        }
        for walker in [&walker1, &walker2] {
            let norm_sqr = walker.norm_sqr();
            if (norm_sqr - 1.0).abs() > 1e-10 {
                return Err(Error::NotNormalized { norm_sqr });
            }
        }
        Ok(ProductTerm {
            coefficient,
            walker1,
            walker2,
        })
    }

    #[inline]
    pub fn coefficient(&self) -> Complex64 {
        self.coefficient
    }

    #[inline]
    pub fn walker1(&self) -> &WalkerState {
        &self.walker1
    }

    #[inline]
    pub fn walker2(&self) -> &WalkerState {
        &self.walker2
    }
}

/// A two-particle state stored as an ordered sum of product terms.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoParticleState {
    terms: Vec<ProductTerm>,
}

impl TwoParticleState {
    /// Builds a state from explicit terms, validating that the total norm
    /// (cross terms between non-orthogonal factors included) is 1 within
    /// 1e-10 and that every term shares the same half-width.
    pub fn new(terms: Vec<ProductTerm>) -> Result<Self> {
        let Some(first) = terms.first() else {
            return Err(Error::NotNormalized { norm_sqr: 0.0 });
        };
        let n_max = first.walker1.n_max();
        for term in &terms {
            if term.walker1.n_max() != n_max {
                return Err(Error::ExtentMismatch {
                    expected: n_max,
                    found: term.walker1.n_max(),
                });
            }
        }
        let state = TwoParticleState { terms };
        let norm_sqr = state.norm_sqr();
        if (norm_sqr - 1.0).abs() > 1e-10 {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(state)
    }

    /// The separable initial state `|0,↓⟩₁ |0,↑⟩₂`.
    pub fn separable(n_max: usize) -> Self {
        let down = WalkerState::point_source(0, [ZERO, Complex64::new(1.0, 0.0)], n_max)
            .expect("origin fits any extent");
        let up = WalkerState::point_source(0, [Complex64::new(1.0, 0.0), ZERO], n_max)
            .expect("origin fits any extent");
        TwoParticleState {
            terms: vec![ProductTerm {
                coefficient: Complex64::new(1.0, 0.0),
                walker1: down,
                walker2: up,
            }],
        }
    }

    /// The maximally coin-entangled initial states
    /// `(|0,↓⟩₁|0,↑⟩₂ ± |0,↑⟩₁|0,↓⟩₂)/√2`.
    pub fn entangled(sign: Sign, n_max: usize) -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Self::two_term(Complex64::new(sign.factor() * h, 0.0), n_max)
    }

    /// The entangled family `(|0,↓⟩₁|0,↑⟩₂ + e^{iφ}|0,↑⟩₁|0,↓⟩₂)/√2`
    /// interpolating between the `+` (φ = 0) and `−` (φ = π) states.
    pub fn with_phase(phi: f64, n_max: usize) -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Self::two_term(Complex64::from_polar(h, phi), n_max)
    }

    fn two_term(second_coefficient: Complex64, n_max: usize) -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let up = [Complex64::new(1.0, 0.0), ZERO];
        let down = [ZERO, Complex64::new(1.0, 0.0)];
        let w_down = WalkerState::point_source(0, down, n_max).expect("origin fits any extent");
        let w_up = WalkerState::point_source(0, up, n_max).expect("origin fits any extent");
        TwoParticleState {
            terms: vec![
                ProductTerm {
                    coefficient: Complex64::new(h, 0.0),
                    walker1: w_down.clone(),
                    walker2: w_up.clone(),
                },
                ProductTerm {
                    coefficient: second_coefficient,
                    walker1: w_up,
                    walker2: w_down,
                },
            ],
        }
    }

    #[inline]
    pub fn terms(&self) -> &[ProductTerm] {
        &self.terms
    }

    #[inline]
    pub fn n_max(&self) -> usize {
        self.terms[0].walker1.n_max()
    }

    /// Evolves every product term factor-wise by `steps` walk steps.
    ///
    /// Valid because the joint step operator is the tensor product of the
    /// one-particle step with itself, so it distributes over product terms;
    /// coefficients and term count never change.
    pub fn evolve(&self, coin: &CoinOperator, steps: usize) -> Result<TwoParticleState> {
        let terms = self
            .terms
            .iter()
            .map(|term| {
                Ok(ProductTerm {
                    coefficient: term.coefficient,
                    walker1: term.walker1.evolve(coin, steps)?,
                    walker2: term.walker2.evolve(coin, steps)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TwoParticleState { terms })
    }

    /// Coherent amplitude `Σ_t c_t · w1_t(i,c₁) · w2_t(j,c₂)`.
    pub fn amplitude(&self, i: i64, c1: Coin, j: i64, c2: Coin) -> Complex64 {
        self.terms
            .iter()
            .map(|t| t.coefficient * t.walker1.amplitude(i, c1) * t.walker2.amplitude(j, c2))
            .fold(ZERO, |acc, a| acc + a)
    }

    /// Squared norm including cross terms between non-orthogonal terms.
    pub fn norm_sqr(&self) -> f64 {
        let mut sum = ZERO;
        for s in &self.terms {
            for t in &self.terms {
                let overlap1 = s.walker1.inner(&t.walker1).expect("extents checked");
                let overlap2 = s.walker2.inner(&t.walker2).expect("extents checked");
                sum += s.coefficient.conj() * t.coefficient * overlap1 * overlap2;
            }
        }
        sum.re
    }

    /// Expands the product form into the dense joint tensor.
    pub fn to_dense(&self) -> DenseJointState {
        let n_max = self.n_max();
        let sites = 2 * n_max + 1;
        let mut amps = vec![ZERO; sites * sites * 4];
        for term in &self.terms {
            let w1 = term.walker1.amps();
            let w2 = term.walker2.amps();
            for (a, &amp1) in w1.iter().enumerate() {
                let left = term.coefficient * amp1;
                if left == ZERO {
                    continue;
                }
                let row = a * sites * 2;
                for (b, &amp2) in w2.iter().enumerate() {
                    amps[row + b] += left * amp2;
                }
            }
        }
        DenseJointState { n_max, amps }
    }

    /// Joint position distribution
    /// `P(i,j) = Σ_{c₁,c₂} |Σ_t c_t w1_t(i,c₁) w2_t(j,c₂)|²`.
    ///
    /// The coherent sum over terms happens before squaring; interference
    /// between terms is the entire point of the entangled walks.
    pub fn joint_distribution(&self) -> JointDistribution {
        let n_max = self.n_max();
        let sites = 2 * n_max + 1;
        let mut probs = vec![0.0; sites * sites];
        let terms: Vec<(Complex64, &[Complex64], &[Complex64])> = self
            .terms
            .iter()
            .map(|t| (t.coefficient, t.walker1.amps(), t.walker2.amps()))
            .collect();
        for io in 0..sites {
            for jo in 0..sites {
                let mut p = 0.0;
                for c1 in 0..2 {
                    for c2 in 0..2 {
                        let mut amp = ZERO;
                        for (coeff, w1, w2) in &terms {
                            amp += *coeff * w1[io * 2 + c1] * w2[jo * 2 + c2];
                        }
                        p += amp.norm_sqr();
                    }
                }
                probs[io * sites + jo] = p;
            }
        }
        JointDistribution::from_raw(n_max, probs)
    }
}

/// The full joint amplitude tensor over `(i, c₁, j, c₂)`, row-major in that
/// index order with positions offset by `n_max`.
///
/// This is the brute-force oracle representation; its step routine works
/// directly on the tensor.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseJointState {
    n_max: usize,
    /// Length `(2·n_max+1)² × 4`, index `((i_off·2 + c₁)·sites + j_off)·2 + c₂`.
    amps: Vec<Complex64>,
}

impl DenseJointState {
    #[inline]
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    #[inline]
    fn sites(&self) -> usize {
        2 * self.n_max + 1
    }

    #[inline]
    fn index(&self, i_off: usize, c1: usize, j_off: usize, c2: usize) -> usize {
        ((i_off * 2 + c1) * self.sites() + j_off) * 2 + c2
    }

    /// Amplitude at `(i, c₁, j, c₂)`; zero outside the stored range.
    pub fn amplitude(&self, i: i64, c1: Coin, j: i64, c2: Coin) -> Complex64 {
        let n = self.n_max as i64;
        if i.abs() > n || j.abs() > n {
            return ZERO;
        }
        self.amps[self.index((i + n) as usize, c1.index(), (j + n) as usize, c2.index())]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// One joint step: `coin ⊗ coin` on `(c₁, c₂)` at every `(i, j)`, then
    /// the conditional shift on both position indices.
    pub fn step(&self, coin: &CoinOperator) -> Result<DenseJointState> {
        let sites = self.sites();
        let u = coin.entries();
        // 4×4 coin⊗coin acting on the (c₁,c₂) pair, row-major over c₁·2+c₂.
        let mut kron = [[ZERO; 4]; 4];
        for r1 in 0..2 {
            for r2 in 0..2 {
                for k1 in 0..2 {
                    for k2 in 0..2 {
                        kron[r1 * 2 + r2][k1 * 2 + k2] = u[r1][k1] * u[r2][k2];
                    }
                }
            }
        }

        let mut coined = vec![ZERO; self.amps.len()];
        for i_off in 0..sites {
            for j_off in 0..sites {
                let idx = |c1: usize, c2: usize| self.index(i_off, c1, j_off, c2);
                let input = [
                    self.amps[idx(0, 0)],
                    self.amps[idx(0, 1)],
                    self.amps[idx(1, 0)],
                    self.amps[idx(1, 1)],
                ];
                for row in 0..4 {
                    let mut sum = ZERO;
                    for col in 0..4 {
                        sum += kron[row][col] * input[col];
                    }
                    coined[idx(row / 2, row % 2)] = sum;
                }
            }
        }

        // Outward amplitude at either boundary cannot be shifted.
        for k in 0..sites {
            for c in 0..2 {
                let out1_hi = coined[self.index(sites - 1, 0, k, c)];
                let out1_lo = coined[self.index(0, 1, k, c)];
                let out2_hi = coined[self.index(k, c, sites - 1, 0)];
                let out2_lo = coined[self.index(k, c, 0, 1)];
                if out1_hi != ZERO || out1_lo != ZERO || out2_hi != ZERO || out2_lo != ZERO {
                    return Err(Error::Overflow { n_max: self.n_max });
                }
            }
        }

        let mut shifted = vec![ZERO; self.amps.len()];
        for i_off in 0..sites {
            for c1 in 0..2 {
                let i_dst = if c1 == 0 {
                    i_off + 1
                } else {
                    i_off.wrapping_sub(1)
                };
                if i_dst >= sites {
                    continue;
                }
                for j_off in 0..sites {
                    for c2 in 0..2 {
                        let j_dst = if c2 == 0 {
                            j_off + 1
                        } else {
                            j_off.wrapping_sub(1)
                        };
                        if j_dst >= sites {
                            continue;
                        }
                        let amp = coined[self.index(i_off, c1, j_off, c2)];
                        if amp != ZERO {
                            shifted[self.index(i_dst, c1, j_dst, c2)] = amp;
                        }
                    }
                }
            }
        }

        Ok(DenseJointState {
            n_max: self.n_max,
            amps: shifted,
        })
    }

    /// `steps` repeated applications of [`DenseJointState::step`].
    pub fn evolve(&self, coin: &CoinOperator, steps: usize) -> Result<DenseJointState> {
        let mut state = self.clone();
        for _ in 0..steps {
            state = state.step(coin)?;
        }
        Ok(state)
    }

    /// Joint position distribution `P(i,j) = Σ_{c₁,c₂} |amplitude|²`.
    pub fn joint_distribution(&self) -> JointDistribution {
        let sites = self.sites();
        let mut probs = vec![0.0; sites * sites];
        for i_off in 0..sites {
            for j_off in 0..sites {
                let mut p = 0.0;
                for c1 in 0..2 {
                    for c2 in 0..2 {
                        p += self.amps[self.index(i_off, c1, j_off, c2)].norm_sqr();
                    }
                }
                probs[i_off * sites + j_off] = p;
            }
        }
        JointDistribution::from_raw(self.n_max, probs)
    }
}
