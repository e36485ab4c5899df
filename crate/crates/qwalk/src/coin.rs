//! The two-dimensional coin degree of freedom and the 2×2 unitaries that
//! act on it.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerance on the entrywise deviation of `U†U` from the identity.
pub const UNITARITY_TOL: f64 = 1e-12;

/// Basis label for the coin space. `Up` is basis index 0, `Down` is 1;
/// `Up` shifts the walker by +1 and `Down` by -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Coin {
    Up,
    Down,
}

impl Coin {
    /// Both coin values in basis order.
    pub const ALL: [Coin; 2] = [Coin::Up, Coin::Down];

    /// Basis index of this coin value (`Up` → 0, `Down` → 1).
    #[inline]
    pub fn index(self) -> usize {
        match self {
            Coin::Up => 0,
            Coin::Down => 1,
        }
    }

    /// Position displacement caused by the conditional shift.
    #[inline]
    pub fn displacement(self) -> i64 {
        match self {
            Coin::Up => 1,
            Coin::Down => -1,
        }
    }
}

/// A validated 2×2 unitary acting on the coin space.
///
/// Entries are stored row-major in `(Up, Down)` basis order. Any matrix in
/// U(2) is accepted; a global phase never affects a position distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoinOperator {
    entries: [[Complex64; 2]; 2],
}

impl CoinOperator {
    /// Validates `entries` as a coin operator.
    ///
    /// Returns [`Error::NonUnitary`] when the max-entry magnitude of
    /// `U†U - I` exceeds [`UNITARITY_TOL`].
    pub fn new(entries: [[Complex64; 2]; 2]) -> Result<Self> {
        let deviation = unitarity_deviation(&entries);
        if deviation > UNITARITY_TOL {
            return Err(Error::NonUnitary { deviation });
        }
        Ok(CoinOperator { entries })
    }

    /// The balanced Hadamard coin `(1/√2) [[1, 1], [1, -1]]`.
    pub fn hadamard() -> Self {
        let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        CoinOperator {
            entries: [[h, h], [h, -h]],
        }
    }

    /// The identity coin.
    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        CoinOperator {
            entries: [[one, zero], [zero, one]],
        }
    }

    /// Raw matrix entries, row-major in `(Up, Down)` order.
    #[inline]
    pub fn entries(&self) -> &[[Complex64; 2]; 2] {
        &self.entries
    }

    /// Matrix entry `⟨row| U |col⟩`.
    #[inline]
    pub fn entry(&self, row: Coin, col: Coin) -> Complex64 {
        self.entries[row.index()][col.index()]
    }

    /// Applies the coin to a single `(up, down)` amplitude pair.
    #[inline]
    pub fn apply(&self, amps: [Complex64; 2]) -> [Complex64; 2] {
        [
            self.entries[0][0] * amps[0] + self.entries[0][1] * amps[1],
            self.entries[1][0] * amps[0] + self.entries[1][1] * amps[1],
        ]
    }

    /// Max-entry magnitude of `U†U - I` for this operator.
    pub fn unitarity_deviation(&self) -> f64 {
        unitarity_deviation(&self.entries)
    }
}

fn unitarity_deviation(entries: &[[Complex64; 2]; 2]) -> f64 {
    let mut worst = 0.0f64;
    for j in 0..2 {
        for k in 0..2 {
            // (U†U)_{jk} = Σ_m conj(U_{mj}) U_{mk}
            let mut sum = Complex64::new(0.0, 0.0);
            for row in entries {
                sum += row[j].conj() * row[k];
            }
            let target = if j == k { 1.0 } else { 0.0 };
            worst = worst.max((sum - target).norm());
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn identity_is_a_valid_coin() {
        let coin = CoinOperator::new([[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]])
            .expect("identity is unitary");
        assert_eq!(coin.entry(Coin::Up, Coin::Up), c(1.0, 0.0));
    }

    #[test]
    fn hadamard_entries_are_valid() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let coin = CoinOperator::new([[c(h, 0.0), c(h, 0.0)], [c(h, 0.0), c(-h, 0.0)]])
            .expect("Hadamard is unitary");
        assert_eq!(coin, CoinOperator::hadamard());
    }

    #[test]
    fn non_orthogonal_rows_are_rejected() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let err = CoinOperator::new([[c(h, 0.0), c(h, 0.0)], [c(h, 0.0), c(h, 0.0)]])
            .expect_err("rows are not orthogonal");
        assert!(matches!(err, Error::NonUnitary { deviation } if deviation > 0.5));
    }

    #[test]
    fn hadamard_maps_basis_states_to_balanced_superpositions() {
        let had = CoinOperator::hadamard();
        let h = std::f64::consts::FRAC_1_SQRT_2;

        let from_up = had.apply([c(1.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(from_up, [c(h, 0.0), c(h, 0.0)]);

        let from_down = had.apply([c(0.0, 0.0), c(1.0, 0.0)]);
        assert_eq!(from_down, [c(h, 0.0), c(-h, 0.0)]);
    }

    #[test]
    fn hadamard_squares_to_identity() {
        let had = CoinOperator::hadamard();
        for basis in [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]] {
            let twice = had.apply(had.apply(basis));
            for k in 0..2 {
                assert!((twice[k] - basis[k]).norm() <= 1e-15);
            }
        }
    }

    #[test]
    fn global_phase_is_accepted() {
        // U(2), not just SU(2): i·H is still a valid coin.
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let coin = CoinOperator::new([[c(0.0, h), c(0.0, h)], [c(0.0, h), c(0.0, -h)]]);
        assert!(coin.is_ok());
    }
}
