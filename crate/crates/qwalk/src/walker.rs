//! Single-walker state on the line and its coin/shift/step evolution.
//!
//! A walk step applies the coin to the internal degree of freedom and then
//! the conditional shift, which moves `Up` amplitude one site right and
//! `Down` amplitude one site left. States are immutable; every operation
//! returns a new state and nothing is ever renormalized — norm drift beyond
//! tolerance is an error signal, not something to repair.

use num_complex::Complex64;

use crate::coin::{Coin, CoinOperator};
use crate::dist::Distribution1D;
use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Amplitudes of one walker over `(position, coin)`.
///
/// Positions run over `[-n_max, n_max]`; position `i` is stored at offset
/// `i + n_max` and each position holds an `(Up, Down)` amplitude pair.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkerState {
    n_max: usize,
    /// Length `(2·n_max + 1) × 2`, indexed by `offset × 2 + coin`.
    amps: Vec<Complex64>,
}

impl WalkerState {
    /// A walker concentrated at `position` with the given `(up, down)`
    /// coin amplitudes.
    ///
    /// The coin pair must be normalized within 1e-12 and the position must
    /// lie within `[-n_max, n_max]`.
    pub fn point_source(position: i64, coin_amps: [Complex64; 2], n_max: usize) -> Result<Self> {
        if position.unsigned_abs() as usize > n_max {
            return Err(Error::OutOfRange { position, n_max });
        }
        let norm_sqr = coin_amps[0].norm_sqr() + coin_amps[1].norm_sqr();
        if (norm_sqr - 1.0).abs() > 1e-12 {
            return Err(Error::NotNormalized { norm_sqr });
        }
        let mut amps = vec![ZERO; (2 * n_max + 1) * 2];
        let offset = (position + n_max as i64) as usize;
        amps[offset * 2] = coin_amps[0];
        amps[offset * 2 + 1] = coin_amps[1];
        Ok(WalkerState { n_max, amps })
    }

    /// Half-width of the position support.
    #[inline]
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// Number of positions, `2·n_max + 1`.
    #[inline]
    pub fn num_sites(&self) -> usize {
        2 * self.n_max + 1
    }

    /// Amplitude at `(position, coin)`; zero outside the stored range.
    #[inline]
    pub fn amplitude(&self, position: i64, coin: Coin) -> Complex64 {
        if position.unsigned_abs() as usize > self.n_max {
            return ZERO;
        }
        let offset = (position + self.n_max as i64) as usize;
        self.amps[offset * 2 + coin.index()]
    }

    /// Raw amplitude slice, `offset × 2 + coin` layout.
    #[inline]
    pub(crate) fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    /// Applies `coin` to the internal degree of freedom at every position.
    pub fn apply_coin(&self, coin: &CoinOperator) -> WalkerState {
        let mut amps = Vec::with_capacity(self.amps.len());
        for pair in self.amps.chunks_exact(2) {
            let [up, down] = coin.apply([pair[0], pair[1]]);
            amps.push(up);
            amps.push(down);
        }
        WalkerState {
            n_max: self.n_max,
            amps,
        }
    }

    /// Applies the conditional shift: `(i, Up) → (i+1, Up)` and
    /// `(i, Down) → (i-1, Down)`.
    ///
    /// Fails with [`Error::Overflow`] when outward-pointing amplitude sits
    /// at the boundary, which means `n_max` was chosen too small for the
    /// requested number of steps.
    pub fn apply_shift(&self) -> Result<WalkerState> {
        let sites = self.num_sites();
        let up_at_right = self.amps[(sites - 1) * 2];
        let down_at_left = self.amps[1];
        if up_at_right != ZERO || down_at_left != ZERO {
            return Err(Error::Overflow { n_max: self.n_max });
        }
        let mut amps = vec![ZERO; self.amps.len()];
        for offset in 0..sites {
            if offset + 1 < sites {
                amps[(offset + 1) * 2] = self.amps[offset * 2];
            }
            if offset > 0 {
                amps[(offset - 1) * 2 + 1] = self.amps[offset * 2 + 1];
            }
        }
        Ok(WalkerState {
            n_max: self.n_max,
            amps,
        })
    }

    /// One walk step: coin first, then shift.
    pub fn step(&self, coin: &CoinOperator) -> Result<WalkerState> {
        self.apply_coin(coin).apply_shift()
    }

    /// `steps` repeated applications of [`WalkerState::step`].
    pub fn evolve(&self, coin: &CoinOperator, steps: usize) -> Result<WalkerState> {
        let mut state = self.clone();
        for _ in 0..steps {
            state = state.step(coin)?;
        }
        Ok(state)
    }

    /// Squared norm `Σ |amplitude|²`.
    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Inner product `⟨self|other⟩`; both states must share `n_max`.
    pub fn inner(&self, other: &WalkerState) -> Result<Complex64> {
        if self.n_max != other.n_max {
            return Err(Error::ExtentMismatch {
                expected: self.n_max,
                found: other.n_max,
            });
        }
        let mut sum = ZERO;
        for (a, b) in self.amps.iter().zip(other.amps.iter()) {
            sum += a.conj() * b;
        }
        Ok(sum)
    }

    /// Position distribution `P(i) = Σ_c |amplitude(i, c)|²`.
    pub fn position_distribution(&self) -> Distribution1D {
        let probs = self
            .amps
            .chunks_exact(2)
            .map(|pair| pair[0].norm_sqr() + pair[1].norm_sqr())
            .collect();
        Distribution1D::from_raw(self.n_max, probs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const H: f64 = std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn up() -> [Complex64; 2] {
        [c(1.0, 0.0), c(0.0, 0.0)]
    }

    fn down() -> [Complex64; 2] {
        [c(0.0, 0.0), c(1.0, 0.0)]
    }

    #[test]
    fn point_source_at_origin() {
        let state = WalkerState::point_source(0, up(), 5).unwrap();
        assert!((state.norm_sqr() - 1.0).abs() < 1e-15);
        assert_eq!(state.amplitude(0, Coin::Up), c(1.0, 0.0));
        assert_eq!(state.amplitude(0, Coin::Down), ZERO);

        let state = WalkerState::point_source(0, down(), 5).unwrap();
        assert_eq!(state.amplitude(0, Coin::Down), c(1.0, 0.0));
    }

    #[test]
    fn point_source_out_of_range() {
        let err = WalkerState::point_source(6, up(), 5).unwrap_err();
        assert_eq!(
            err,
            Error::OutOfRange {
                position: 6,
                n_max: 5
            }
        );
    }

    #[test]
    fn point_source_rejects_unnormalized_coin() {
        let err = WalkerState::point_source(0, [c(1.0, 0.0), c(1.0, 0.0)], 5).unwrap_err();
        assert!(matches!(err, Error::NotNormalized { .. }));
    }

    #[test]
    fn coin_acts_per_position() {
        // |0,↑⟩ with Hadamard → |0⟩ ⊗ (|↑⟩+|↓⟩)/√2
        let state = WalkerState::point_source(0, up(), 3).unwrap();
        let after = state.apply_coin(&CoinOperator::hadamard());
        assert_eq!(after.amplitude(0, Coin::Up), c(H, 0.0));
        assert_eq!(after.amplitude(0, Coin::Down), c(H, 0.0));
        assert!((after.norm_sqr() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn identity_coin_leaves_state_unchanged() {
        let state = WalkerState::point_source(2, [c(0.6, 0.0), c(0.0, 0.8)], 4).unwrap();
        assert_eq!(state.apply_coin(&CoinOperator::identity()), state);
    }

    #[test]
    fn coin_on_two_site_superposition() {
        // (|1,↑⟩ − |−1,↓⟩)/√2 with Hadamard
        //   → ½ [ |1⟩(|↑⟩+|↓⟩) − |−1⟩(|↑⟩−|↓⟩) ]
        let plus = WalkerState::point_source(1, up(), 2).unwrap();
        let minus = WalkerState::point_source(-1, down(), 2).unwrap();
        let mut amps = vec![ZERO; plus.amps.len()];
        for (k, slot) in amps.iter_mut().enumerate() {
            *slot = (plus.amps[k] - minus.amps[k]) * c(H, 0.0);
        }
        let state = WalkerState { n_max: 2, amps };

        let after = state.apply_coin(&CoinOperator::hadamard());
        assert!((after.amplitude(1, Coin::Up) - c(0.5, 0.0)).norm() < 1e-15);
        assert!((after.amplitude(1, Coin::Down) - c(0.5, 0.0)).norm() < 1e-15);
        assert!((after.amplitude(-1, Coin::Up) - c(-0.5, 0.0)).norm() < 1e-15);
        assert!((after.amplitude(-1, Coin::Down) - c(0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn shift_moves_up_right_and_down_left() {
        let state = WalkerState::point_source(0, up(), 2).unwrap();
        let shifted = state.apply_shift().unwrap();
        assert_eq!(shifted.amplitude(1, Coin::Up), c(1.0, 0.0));
        assert_eq!(shifted.amplitude(0, Coin::Up), ZERO);

        // |0⟩⊗(|↑⟩+|↓⟩)/√2 → (|1,↑⟩ + |−1,↓⟩)/√2
        let state = WalkerState::point_source(0, [c(H, 0.0), c(H, 0.0)], 2).unwrap();
        let shifted = state.apply_shift().unwrap();
        assert_eq!(shifted.amplitude(1, Coin::Up), c(H, 0.0));
        assert_eq!(shifted.amplitude(-1, Coin::Down), c(H, 0.0));
        assert!((shifted.norm_sqr() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn shift_overflows_at_boundary() {
        let state = WalkerState::point_source(2, up(), 2).unwrap();
        assert_eq!(
            state.apply_shift().unwrap_err(),
            Error::Overflow { n_max: 2 }
        );
    }

    #[test]
    fn first_hadamard_step_from_up() {
        // Single step from |0,↑⟩: (|1,↑⟩ + |−1,↓⟩)/√2
        let state = WalkerState::point_source(0, up(), 1).unwrap();
        let after = state.step(&CoinOperator::hadamard()).unwrap();
        assert!((after.amplitude(1, Coin::Up) - c(H, 0.0)).norm() < 1e-15);
        assert!((after.amplitude(-1, Coin::Down) - c(H, 0.0)).norm() < 1e-15);
        assert_eq!(after.amplitude(1, Coin::Down), ZERO);
        assert_eq!(after.amplitude(-1, Coin::Up), ZERO);
    }

    #[test]
    fn first_hadamard_step_from_down() {
        // (|1,↑⟩ − |−1,↓⟩)/√2
        let state = WalkerState::point_source(0, down(), 1).unwrap();
        let after = state.step(&CoinOperator::hadamard()).unwrap();
        assert!((after.amplitude(1, Coin::Up) - c(H, 0.0)).norm() < 1e-15);
        assert!((after.amplitude(-1, Coin::Down) - c(-H, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn evolve_zero_steps_is_identity() {
        let state = WalkerState::point_source(0, up(), 4).unwrap();
        assert_eq!(state.evolve(&CoinOperator::hadamard(), 0).unwrap(), state);
    }

    #[test]
    fn two_hadamard_steps_from_down() {
        // ½ (|2,↑⟩ − |0,↑⟩ + |0,↓⟩ + |−2,↓⟩)
        let state = WalkerState::point_source(0, down(), 2).unwrap();
        let after = state.evolve(&CoinOperator::hadamard(), 2).unwrap();
        assert!((after.amplitude(2, Coin::Up) - c(0.5, 0.0)).norm() < 1e-15);
        assert!((after.amplitude(0, Coin::Up) - c(-0.5, 0.0)).norm() < 1e-15);
        assert!((after.amplitude(0, Coin::Down) - c(0.5, 0.0)).norm() < 1e-15);
        assert!((after.amplitude(-2, Coin::Down) - c(0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn distribution_after_one_and_two_steps() {
        let had = CoinOperator::hadamard();

        let one = WalkerState::point_source(0, up(), 1)
            .unwrap()
            .step(&had)
            .unwrap()
            .position_distribution();
        assert!((one.probability(1) - 0.5).abs() < 1e-15);
        assert!((one.probability(-1) - 0.5).abs() < 1e-15);

        let two = WalkerState::point_source(0, down(), 2)
            .unwrap()
            .evolve(&had, 2)
            .unwrap()
            .position_distribution();
        assert!((two.probability(2) - 0.25).abs() < 1e-15);
        assert!((two.probability(0) - 0.5).abs() < 1e-15);
        assert!((two.probability(-2) - 0.25).abs() < 1e-15);
    }

    #[test]
    fn point_distribution_is_concentrated() {
        let dist = WalkerState::point_source(0, up(), 3)
            .unwrap()
            .position_distribution();
        assert_eq!(dist.probability(0), 1.0);
        assert_eq!(dist.probability(1), 0.0);
    }

    #[test]
    fn hadamard_walk_statistics_at_hundred_steps() {
        // Regression constants computed by this implementation: the walk
        // from |0,↑⟩ drifts right and spreads ballistically.
        let dist = WalkerState::point_source(0, up(), 100)
            .unwrap()
            .evolve(&CoinOperator::hadamard(), 100)
            .unwrap()
            .position_distribution();
        let (mean, stddev) = dist.stats();
        assert!(mean > 0.0);
        assert!((mean - 28.975560156372097).abs() < 1e-9);
        assert!((stddev - 45.71475959051382).abs() < 1e-9);
    }

    #[test]
    fn inner_product_requires_matching_extent() {
        let a = WalkerState::point_source(0, up(), 2).unwrap();
        let b = WalkerState::point_source(0, up(), 3).unwrap();
        assert!(matches!(a.inner(&b), Err(Error::ExtentMismatch { .. })));
        assert_eq!(a.inner(&a).unwrap(), c(1.0, 0.0));
    }
}
