//! Cross-checks between the product-form evolution and the dense joint
//! tensor, which evolves by brute force with no knowledge of the product
//! structure. The two paths must agree entrywise on every joint
//! distribution.

use qwalk::{Coin, CoinOperator, Complex64, JointDistribution, Sign, TwoParticleState};

fn max_entry_diff(a: &JointDistribution, b: &JointDistribution) -> f64 {
    assert_eq!(a.n_max(), b.n_max());
    a.iter()
        .zip(b.iter())
        .map(|((_, _, pa), (_, _, pb))| (pa - pb).abs())
        .fold(0.0, f64::max)
}

fn initial_states(n_max: usize) -> Vec<(&'static str, TwoParticleState)> {
    vec![
        ("separable", TwoParticleState::separable(n_max)),
        ("plus", TwoParticleState::entangled(Sign::Plus, n_max)),
        ("minus", TwoParticleState::entangled(Sign::Minus, n_max)),
        (
            "phase(pi/2)",
            TwoParticleState::with_phase(std::f64::consts::FRAC_PI_2, n_max),
        ),
    ]
}

#[test]
fn product_and_dense_paths_agree_through_twelve_steps() {
    let coin = CoinOperator::hadamard();
    let max_steps = 12;
    for (label, initial) in initial_states(max_steps) {
        let mut dense = initial.to_dense();
        for n in 1..=max_steps {
            dense = dense.step(&coin).unwrap();
            let via_product = initial.evolve(&coin, n).unwrap().joint_distribution();
            let via_dense = dense.joint_distribution();
            let diff = max_entry_diff(&via_product, &via_dense);
            assert!(
                diff <= 1e-12,
                "{label} diverged at n={n}: max entry diff {diff:e}"
            );
        }
    }
}

#[test]
fn minus_state_dense_amplitudes_match_product_at_six_steps() {
    let coin = CoinOperator::hadamard();
    let initial = TwoParticleState::entangled(Sign::Minus, 6);
    let dense = initial.to_dense().evolve(&coin, 6).unwrap();
    let product = initial.evolve(&coin, 6).unwrap();
    let mut worst = 0.0f64;
    for i in -6..=6 {
        for j in -6..=6 {
            for c1 in Coin::ALL {
                for c2 in Coin::ALL {
                    let diff =
                        (dense.amplitude(i, c1, j, c2) - product.amplitude(i, c1, j, c2)).norm();
                    worst = worst.max(diff);
                }
            }
        }
    }
    assert!(worst <= 1e-12, "max amplitude deviation {worst:e}");
}

#[test]
fn dense_step_preserves_norm() {
    let coin = CoinOperator::hadamard();
    let mut dense = TwoParticleState::entangled(Sign::Minus, 10).to_dense();
    for _ in 0..10 {
        let before = dense.norm_sqr();
        dense = dense.step(&coin).unwrap();
        assert!((dense.norm_sqr() - before).abs() <= 1e-14);
    }
}

#[test]
fn dense_evolution_respects_parity_support() {
    let coin = CoinOperator::hadamard();
    for (label, initial) in initial_states(8) {
        let mut dense = initial.to_dense();
        for n in 1..=8i64 {
            dense = dense.step(&coin).unwrap();
            for i in -8..=8i64 {
                for j in -8..=8i64 {
                    let allowed =
                        (i + n) % 2 == 0 && (j + n) % 2 == 0 && i.abs() <= n && j.abs() <= n;
                    if allowed {
                        continue;
                    }
                    for c1 in Coin::ALL {
                        for c2 in Coin::ALL {
                            let amp = dense.amplitude(i, c1, j, c2);
                            assert_eq!(
                                amp,
                                Complex64::new(0.0, 0.0),
                                "{label}: nonzero amplitude at forbidden site ({i},{j}) after {n} steps"
                            );
                        }
                    }
                }
            }
        }
    }
}

// Frozen from the dense-tensor evolution: with relative phase π/2 the
// cross terms are imaginary, so after one step the joint distribution is
// flat over the four reachable corners, exactly like the separable case.
#[test]
fn phase_quarter_turn_one_step_regression() {
    let coin = CoinOperator::hadamard();
    let initial = TwoParticleState::with_phase(std::f64::consts::FRAC_PI_2, 1);

    let via_dense = initial.to_dense().step(&coin).unwrap().joint_distribution();
    let via_product = initial.evolve(&coin, 1).unwrap().joint_distribution();

    for joint in [&via_dense, &via_product] {
        for (i, j, p) in joint.iter() {
            let expected = if i.abs() == 1 && j.abs() == 1 {
                0.25
            } else {
                0.0
            };
            assert!(
                (p - expected).abs() <= 1e-15,
                "P({i},{j}) = {p}, expected {expected}"
            );
        }
    }
}

#[test]
fn factorization_of_separable_state_holds_densely() {
    let coin = CoinOperator::hadamard();
    let joint = TwoParticleState::separable(9)
        .to_dense()
        .evolve(&coin, 9)
        .unwrap()
        .joint_distribution();
    let m1 = joint.marginal1();
    let m2 = joint.marginal2();
    for (i, j, p) in joint.iter() {
        let product = m1.probability(i) * m2.probability(j);
        assert!((p - product).abs() <= 1e-12);
    }
}
