//! Deterministic simulator for discrete-time quantum walks on a line,
//! covering a single walker and a pair of walkers whose coin degrees of
//! freedom may be entangled.
//!
//! A walk step applies a 2×2 coin unitary to the internal degree of
//! freedom and then a conditional shift that moves `Up` amplitude right
//! and `Down` amplitude left. Two-walker states come in two
//! representations: a sum of `walker ⊗ walker` product terms (the fast
//! path) and a dense joint tensor (the brute-force oracle); both must
//! produce identical joint distributions.
//!
//! ```
//! use qwalk::{CoinOperator, Sign, TwoParticleState};
//!
//! let coin = CoinOperator::hadamard();
//! let walk = TwoParticleState::entangled(Sign::Minus, 30)
//!     .evolve(&coin, 30)
//!     .unwrap();
//! let joint = walk.joint_distribution();
//! assert!((joint.expected_distance() - 26.0).abs() < 0.1);
//! ```

pub mod coin;
pub mod dist;
pub mod error;
pub mod observables;
pub mod pair;
pub mod walker;

pub use coin::{Coin, CoinOperator};
pub use dist::{classical_distribution, Distribution1D};
pub use error::{Error, Result};
pub use observables::{JointDistribution, PositionValues, SummaryRecord};
pub use pair::{DenseJointState, ProductTerm, Sign, TwoParticleState};
pub use walker::WalkerState;

pub use num_complex::Complex64;
