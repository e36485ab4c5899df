//! Property-based invariants: unitarity, parity support, mirror symmetry,
//! additivity of evolution, global-phase freedom and product/dense
//! agreement on randomized inputs.

use proptest::prelude::*;
use qwalk::{
    classical_distribution, CoinOperator, Complex64, ProductTerm, Sign, TwoParticleState,
    WalkerState,
};
use std::f64::consts::TAU;

/// An arbitrary U(2) coin built from four angles, unitary by construction.
fn coin_strategy() -> impl Strategy<Value = CoinOperator> {
    (0.0..TAU, 0.0..TAU, 0.0..TAU, 0.0..TAU).prop_map(|(theta, alpha, beta, delta)| {
        let (s, c) = theta.sin_cos();
        let global = Complex64::from_polar(1.0, delta);
        let e_a = Complex64::from_polar(1.0, alpha);
        let e_b = Complex64::from_polar(1.0, beta);
        CoinOperator::new([
            [global * e_a * c, global * e_b * s],
            [-global * e_b.conj() * s, global * e_a.conj() * c],
        ])
        .expect("parametrized matrix is unitary")
    })
}

/// A normalized coin amplitude pair `(cos θ, e^{iφ} sin θ)`.
fn coin_pair_strategy() -> impl Strategy<Value = [Complex64; 2]> {
    (0.0..TAU, 0.0..TAU).prop_map(|(theta, phi)| {
        let (s, c) = theta.sin_cos();
        [Complex64::new(c, 0.0), Complex64::from_polar(s, phi)]
    })
}

proptest! {
    #[test]
    fn step_preserves_norm(
        coin in coin_strategy(),
        pair in coin_pair_strategy(),
        position in -3i64..=3,
        steps in 1usize..=10,
    ) {
        let mut state = WalkerState::point_source(position, pair, 16).unwrap();
        for _ in 0..steps {
            let before = state.norm_sqr().sqrt();
            state = state.step(&coin).unwrap();
            let after = state.norm_sqr().sqrt();
            prop_assert!((after - before).abs() <= 1e-14);
        }
        prop_assert!((state.norm_sqr() - 1.0).abs() <= 1e-13);
    }

    #[test]
    fn evolution_is_additive(
        coin in coin_strategy(),
        pair in coin_pair_strategy(),
        first in 0usize..=6,
        second in 0usize..=6,
    ) {
        let state = WalkerState::point_source(0, pair, 12).unwrap();
        let joined = state.evolve(&coin, first + second).unwrap();
        let split = state.evolve(&coin, first).unwrap().evolve(&coin, second).unwrap();
        prop_assert_eq!(joined, split);
    }

    #[test]
    fn global_coin_phase_never_changes_the_distribution(
        coin in coin_strategy(),
        pair in coin_pair_strategy(),
        phase in 0.0..TAU,
        steps in 1usize..=8,
    ) {
        let rotated = {
            let factor = Complex64::from_polar(1.0, phase);
            let e = coin.entries();
            CoinOperator::new([
                [e[0][0] * factor, e[0][1] * factor],
                [e[1][0] * factor, e[1][1] * factor],
            ])
            .unwrap()
        };
        let state = WalkerState::point_source(0, pair, 8).unwrap();
        let base = state.evolve(&coin, steps).unwrap().position_distribution();
        let shifted = state.evolve(&rotated, steps).unwrap().position_distribution();
        for ((_, p), (_, q)) in base.iter().zip(shifted.iter()) {
            prop_assert!((p - q).abs() <= 1e-13);
        }
    }

    #[test]
    fn parity_support_is_exact(
        coin in coin_strategy(),
        pair in coin_pair_strategy(),
        steps in 1usize..=20,
    ) {
        let state = WalkerState::point_source(0, pair, 20)
            .unwrap()
            .evolve(&coin, steps)
            .unwrap();
        let n = steps as i64;
        for i in -20i64..=20 {
            let forbidden = (i + n).rem_euclid(2) == 1 || i.abs() > n;
            if forbidden {
                for c in qwalk::Coin::ALL {
                    prop_assert_eq!(state.amplitude(i, c), Complex64::new(0.0, 0.0));
                }
            }
        }
    }

    #[test]
    fn hadamard_walk_mirror_symmetry(steps in 1usize..=60) {
        let coin = CoinOperator::hadamard();
        let up = WalkerState::point_source(0, [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)], steps)
            .unwrap()
            .evolve(&coin, steps)
            .unwrap()
            .position_distribution();
        let down = WalkerState::point_source(0, [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)], steps)
            .unwrap()
            .evolve(&coin, steps)
            .unwrap()
            .position_distribution();
        for i in -(steps as i64)..=steps as i64 {
            prop_assert!((up.probability(i) - down.probability(-i)).abs() <= 1e-12);
        }
    }

    #[test]
    fn classical_walk_is_binomial(n in 0usize..=300) {
        let dist = classical_distribution(n);
        prop_assert!((dist.total() - 1.0).abs() <= 1e-10);
        let (mean, stddev) = dist.stats();
        prop_assert!(mean.abs() <= 1e-9);
        prop_assert!((stddev * stddev - n as f64).abs() <= 1e-7 * (n as f64).max(1.0));
        for (i, p) in dist.iter() {
            if (i + n as i64).rem_euclid(2) == 1 {
                prop_assert_eq!(p, 0.0);
            }
        }
    }
}

/// Random product-form states with point-source factors; coefficients are
/// rescaled so the total norm (cross terms included) is exactly 1.
fn two_particle_strategy() -> impl Strategy<Value = TwoParticleState> {
    let term = (
        (-2i64..=2, coin_pair_strategy()),
        (-2i64..=2, coin_pair_strategy()),
        (0.1..1.0f64, 0.0..TAU),
    );
    proptest::collection::vec(term, 1..=3).prop_filter_map(
        "terms must not cancel to zero norm",
        |descriptors| {
            let n_max = 8;
            let terms: Vec<ProductTerm> = descriptors
                .into_iter()
                .map(|((p1, a1), (p2, a2), (mag, arg))| {
                    ProductTerm::new(
                        Complex64::from_polar(mag, arg),
                        WalkerState::point_source(p1, a1, n_max).unwrap(),
                        WalkerState::point_source(p2, a2, n_max).unwrap(),
                    )
                    .unwrap()
                })
                .collect();
            let mut norm_sqr = Complex64::new(0.0, 0.0);
            for s in &terms {
                for t in &terms {
                    norm_sqr += s.coefficient().conj()
                        * t.coefficient()
                        * s.walker1().inner(t.walker1()).unwrap()
                        * s.walker2().inner(t.walker2()).unwrap();
                }
            }
            if norm_sqr.re < 1e-3 {
                return None;
            }
            let scale = 1.0 / norm_sqr.re.sqrt();
            let rescaled = terms
                .into_iter()
                .map(|t| {
                    ProductTerm::new(
                        t.coefficient() * scale,
                        t.walker1().clone(),
                        t.walker2().clone(),
                    )
                    .unwrap()
                })
                .collect();
            TwoParticleState::new(rescaled).ok()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_and_dense_agree_on_random_states(
        state in two_particle_strategy(),
        coin in coin_strategy(),
        steps in 0usize..=4,
    ) {
        let via_product = state.evolve(&coin, steps).unwrap().joint_distribution();
        let via_dense = state.to_dense().evolve(&coin, steps).unwrap().joint_distribution();
        for ((i, j, p), (_, _, q)) in via_product.iter().zip(via_dense.iter()) {
            prop_assert!((p - q).abs() <= 1e-12, "P({},{}) {} vs {}", i, j, p, q);
        }
    }

    #[test]
    fn joint_distribution_invariants_hold(
        state in two_particle_strategy(),
        steps in 0usize..=5,
    ) {
        let coin = CoinOperator::hadamard();
        let joint = state.evolve(&coin, steps).unwrap().joint_distribution();
        prop_assert!(joint.check().is_ok());
        prop_assert!((joint.marginal1().total() - 1.0).abs() <= 1e-10);
        prop_assert!((joint.marginal2().total() - 1.0).abs() <= 1e-10);
        // at-least-one sum rule: Σᵢ 𝒫(i) = 2 − Σᵢ P(i,i)
        let at_least_one = joint.at_least_one();
        let lhs = at_least_one.total();
        let rhs = 2.0 - joint.diagonal().total();
        prop_assert!((lhs - rhs).abs() <= 1e-12);
        // Union probabilities stay inside [0, 1] up to rounding.
        for (_, value) in at_least_one.iter() {
            prop_assert!((-1e-14..=1.0 + 1e-12).contains(&value));
        }
    }

    #[test]
    fn summary_statistics_stay_in_bounds(
        sign_plus in any::<bool>(),
        steps in 1usize..=20,
    ) {
        let sign = if sign_plus { Sign::Plus } else { Sign::Minus };
        let record = TwoParticleState::entangled(sign, steps)
            .evolve(&CoinOperator::hadamard(), steps)
            .unwrap()
            .joint_distribution()
            .summarize(steps, "entangled");
        prop_assert!(record.expected_distance >= 0.0);
        prop_assert!(record.expected_distance <= 2.0 * steps as f64 + 1e-9);
        prop_assert!(record.correlation.abs() <= (steps * steps) as f64 + 1e-9);
    }

    #[test]
    fn evolve_pair_conserves_terms_and_norm(
        state in two_particle_strategy(),
        coin in coin_strategy(),
        steps in 0usize..=5,
    ) {
        let evolved = state.evolve(&coin, steps).unwrap();
        prop_assert_eq!(evolved.terms().len(), state.terms().len());
        prop_assert!((evolved.norm_sqr() - 1.0).abs() <= 1e-10);
    }
}
