//! The invariant suite behind `qwalk verify`: every structural property of
//! the walk machinery is measured and compared against its tolerance, the
//! ψ⁻ meeting probabilities are reported verbatim for each step count, and
//! both table variants (standard dynamics and forcibly zeroed diagonal)
//! are compared against the published numbers.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use qwalk::{
    classical_distribution, CoinOperator, JointDistribution, Sign, TwoParticleState, WalkerState,
};

use crate::output::format_f64;

/// Step counts used by the published tables.
pub const TABLE_STEPS: [usize; 6] = [10, 20, 30, 40, 60, 100];

/// Published expected-distance values, rows ψ⁻ / separable / ψ⁺.
pub const PUBLISHED_DISTANCE: [(&str, [f64; 6]); 3] = [
    ("minus", [8.8, 17.5, 26.0, 34.9, 52.2, 87.0]),
    ("separable", [7.1, 14.7, 21.9, 29.5, 44.3, 73.9]),
    ("plus", [5.5, 11.9, 17.8, 24.1, 36.3, 60.8]),
];

/// Published correlation values, rows ψ⁻ / separable / ψ⁺.
pub const PUBLISHED_CORRELATION: [(&str, [f64; 6]); 3] = [
    ("minus", [-16.8, -69.8, -153.5, -276.2, -619.7, -1718.3]),
    ("separable", [0.0, 0.0, 0.0, 0.0, 0.0, 0.0]),
    ("plus", [4.8, 7.3, 13.7, 15.1, 23.1, 39.1]),
];

/// Absolute tolerance when comparing against the one-decimal tables.
pub const TABLE_TOL: f64 = 0.1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub residual: f64,
    pub tolerance: f64,
    pub detail: String,
}

impl CheckResult {
    fn measured(name: &str, residual: f64, tolerance: f64, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.to_string(),
            passed: residual <= tolerance,
            residual,
            tolerance,
            detail: detail.into(),
        }
    }
}

/// Per-step maximum of the ψ⁻ meeting probability, reported without any
/// pass/fail judgment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagonalEntry {
    pub steps: usize,
    pub max_diagonal: f64,
}

/// Comparison of one table against the published values for both computed
/// variants.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableComparison {
    pub which: String,
    pub standard_max_abs_error: f64,
    pub standard_entries_matching: usize,
    pub zeroed_max_abs_error: f64,
    pub zeroed_entries_matching: usize,
    pub total_entries: usize,
    /// Which computed variant reproduces the published values within ±0.1
    /// on every entry: `standard`, `zeroed`, `both` or `neither`.
    pub matching_variant: String,
    pub mismatches: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub max_steps: usize,
    pub checks: Vec<CheckResult>,
    pub diagonal_minus: Vec<DiagonalEntry>,
    pub tables: Vec<TableComparison>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|check| check.passed)
    }

    pub fn failed_names(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|check| !check.passed)
            .map(|check| check.name.as_str())
            .collect()
    }

    /// Plain-text rendering: one pass/fail line per check, the verbatim
    /// diagonal report and the table verdicts.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("qwalk validation report\n");
        out.push_str("=======================\n");
        out.push_str(&format!("oracle comparison steps: {}\n\n", self.max_steps));

        out.push_str("checks\n------\n");
        for check in &self.checks {
            let status = if check.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{status} {name:<28} residual {residual:>12.3e}  tolerance {tolerance:>8.1e}  {detail}\n",
                name = check.name,
                residual = check.residual,
                tolerance = check.tolerance,
                detail = check.detail,
            ));
        }

        out.push_str(
            "\nmeeting probability of the psi-minus walk (reported verbatim, no judgment)\n\
             ---------------------------------------------------------------------------\n",
        );
        for entry in &self.diagonal_minus {
            out.push_str(&format!(
                "N={:<3} max_i P-(i,i;N) = {}\n",
                entry.steps,
                format_f64(entry.max_diagonal)
            ));
        }

        out.push_str("\npublished table comparison (informational)\n");
        out.push_str("-------------------------------------------\n");
        for table in &self.tables {
            out.push_str(&format!(
                "{}: standard dynamics max |err| = {:.4} ({}/{} entries within {TABLE_TOL}); \
                 zeroed-diagonal variant max |err| = {:.4} ({}/{} within {TABLE_TOL}); \
                 matching variant: {}\n",
                table.which,
                table.standard_max_abs_error,
                table.standard_entries_matching,
                table.total_entries,
                table.zeroed_max_abs_error,
                table.zeroed_entries_matching,
                table.total_entries,
                table.matching_variant,
            ));
            for mismatch in &table.mismatches {
                out.push_str(&format!("    {mismatch}\n"));
            }
        }

        let verdict = if self.all_passed() { "PASS" } else { "FAIL" };
        let passed = self.checks.iter().filter(|c| c.passed).count();
        out.push_str(&format!(
            "\nresult: {verdict} ({passed}/{} checks)\n",
            self.checks.len()
        ));
        out
    }
}

fn up() -> [Complex64; 2] {
    [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]
}

fn down() -> [Complex64; 2] {
    [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)]
}

fn initial_state(label: &str, n_max: usize) -> TwoParticleState {
    match label {
        "minus" => TwoParticleState::entangled(Sign::Minus, n_max),
        "plus" => TwoParticleState::entangled(Sign::Plus, n_max),
        "separable" => TwoParticleState::separable(n_max),
        other => unreachable!("unknown initial label {other}"),
    }
}

/// Evolved joint distribution for a named initial condition.
pub fn joint_after(label: &str, steps: usize) -> JointDistribution {
    initial_state(label, steps)
        .evolve(&CoinOperator::hadamard(), steps)
        .expect("extent sized to the step count")
        .joint_distribution()
}

/// The value a table cell holds for one variant.
pub fn table_value(which: &str, joint: &JointDistribution) -> f64 {
    match which {
        "distance" => joint.expected_distance(),
        "correlation" => joint.correlation(),
        other => unreachable!("unknown table {other}"),
    }
}

struct LoopMeasurements {
    factorization: f64,
    exchange: f64,
    marginal_identity: f64,
    marginal_mean: f64,
    marginal_mirror: f64,
    eq14: f64,
    bilinearity: f64,
    separable_correlation: f64,
    sum_rule: f64,
    diagonal_minus: Vec<DiagonalEntry>,
}

/// One sweep over N = 1..=100 computing every joint-distribution statistic.
fn sweep_to_100() -> LoopMeasurements {
    let coin = CoinOperator::hadamard();
    let mut m = LoopMeasurements {
        factorization: 0.0,
        exchange: 0.0,
        marginal_identity: 0.0,
        marginal_mean: 0.0,
        marginal_mirror: 0.0,
        eq14: 0.0,
        bilinearity: 0.0,
        separable_correlation: 0.0,
        sum_rule: 0.0,
        diagonal_minus: Vec::with_capacity(100),
    };

    for n in 1..=100usize {
        let p_down = WalkerState::point_source(0, down(), n)
            .unwrap()
            .evolve(&coin, n)
            .unwrap()
            .position_distribution();
        let p_up = WalkerState::point_source(0, up(), n)
            .unwrap()
            .evolve(&coin, n)
            .unwrap()
            .position_distribution();

        let sep = joint_after("separable", n);
        let plus = joint_after("plus", n);
        let minus = joint_after("minus", n);

        // Separable joint factorizes into its marginals, which are the
        // one-particle walks from |0,down> and |0,up> respectively.
        let m1 = sep.marginal1();
        let m2 = sep.marginal2();
        for (i, j, p) in sep.iter() {
            m.factorization = m
                .factorization
                .max((p - m1.probability(i) * m2.probability(j)).abs());
        }
        for (i, p) in m1.iter() {
            m.marginal_identity = m.marginal_identity.max((p - p_down.probability(i)).abs());
        }
        for (i, p) in m2.iter() {
            m.marginal_identity = m.marginal_identity.max((p - p_up.probability(i)).abs());
        }

        for joint in [&plus, &minus] {
            // ψ± are symmetric/antisymmetric under particle exchange, so
            // their position distributions are exchange symmetric.
            for (i, j, p) in joint.iter() {
                if i <= j {
                    m.exchange = m.exchange.max((p - joint.probability(j, i)).abs());
                }
            }
            // Marginals are the equal mixture of the two one-particle walks.
            for (which, marginal) in [(1, joint.marginal1()), (2, joint.marginal2())] {
                let _ = which;
                for (i, p) in marginal.iter() {
                    let mixed = 0.5 * (p_down.probability(i) + p_up.probability(i));
                    m.marginal_identity = m.marginal_identity.max((p - mixed).abs());
                    m.marginal_mirror = m.marginal_mirror.max((p - marginal.probability(-i)).abs());
                }
                m.marginal_mean = m.marginal_mean.max(marginal.mean().abs());
            }
        }

        let d_sep = sep.expected_distance();
        let d_plus = plus.expected_distance();
        let d_minus = minus.expected_distance();
        m.eq14 = m.eq14.max(((d_minus - d_sep) - (d_sep - d_plus)).abs());

        let c_sep = sep.correlation();
        let c_plus = plus.correlation();
        let c_minus = minus.correlation();
        m.separable_correlation = m.separable_correlation.max(c_sep.abs());
        let bilinear = c_plus + c_minus - 2.0 * p_down.mean() * p_up.mean();
        m.bilinearity = m.bilinearity.max(bilinear.abs());

        for joint in [&sep, &plus, &minus] {
            let lhs = joint.at_least_one().total();
            let rhs = 2.0 - joint.diagonal().total();
            m.sum_rule = m.sum_rule.max((lhs - rhs).abs());
        }

        let max_diag = minus
            .diagonal()
            .iter()
            .map(|(_, value)| value)
            .fold(0.0f64, f64::max);
        m.diagonal_minus.push(DiagonalEntry {
            steps: n,
            max_diagonal: max_diag,
        });
    }
    m
}

fn check_one_step_anchor() -> CheckResult {
    let coin = CoinOperator::hadamard();
    let state = WalkerState::point_source(0, up(), 1)
        .unwrap()
        .step(&coin)
        .unwrap();
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mut residual = 0.0f64;
    for (i, coin_value, expected) in [
        (1i64, qwalk::Coin::Up, Complex64::new(h, 0.0)),
        (-1, qwalk::Coin::Down, Complex64::new(h, 0.0)),
        (1, qwalk::Coin::Down, Complex64::new(0.0, 0.0)),
        (-1, qwalk::Coin::Up, Complex64::new(0.0, 0.0)),
        (0, qwalk::Coin::Up, Complex64::new(0.0, 0.0)),
    ] {
        residual = residual.max((state.amplitude(i, coin_value) - expected).norm());
    }
    let dist = state.position_distribution();
    residual = residual.max((dist.probability(1) - 0.5).abs());
    residual = residual.max((dist.probability(-1) - 0.5).abs());
    CheckResult::measured(
        "one_step_anchor",
        residual,
        1e-15,
        "U|0,up> = (|1,up> + |-1,down>)/sqrt(2) with P(+-1) = 1/2",
    )
}

fn check_unitarity() -> (CheckResult, CheckResult) {
    let coin = CoinOperator::hadamard();
    let mut state = WalkerState::point_source(0, up(), 100).unwrap();
    let mut per_step = 0.0f64;
    let mut previous = state.norm_sqr().sqrt();
    for _ in 0..100 {
        state = state.step(&coin).unwrap();
        let norm = state.norm_sqr().sqrt();
        per_step = per_step.max((norm - previous).abs());
        previous = norm;
    }
    let drift = (previous - 1.0).abs();
    (
        CheckResult::measured(
            "unitarity_per_step",
            per_step,
            1e-14,
            "norm change per Hadamard step, 100 steps",
        ),
        CheckResult::measured(
            "unitarity_drift_100",
            drift,
            1e-10,
            "total norm drift after 100 steps",
        ),
    )
}

fn check_parity_support() -> CheckResult {
    let coin = CoinOperator::hadamard();
    let mut residual = 0.0f64;
    for start in [up(), down()] {
        let mut state = WalkerState::point_source(0, start, 100).unwrap();
        for n in 1..=100i64 {
            state = state.step(&coin).unwrap();
            for i in -100i64..=100 {
                let forbidden = (i + n).rem_euclid(2) == 1 || i.abs() > n;
                if forbidden {
                    for c in qwalk::Coin::ALL {
                        residual = residual.max(state.amplitude(i, c).norm());
                    }
                }
            }
        }
    }
    CheckResult::measured(
        "parity_support",
        residual,
        0.0,
        "amplitude outside the parity-allowed cone is exactly zero",
    )
}

fn check_mirror_symmetry() -> CheckResult {
    let coin = CoinOperator::hadamard();
    let mut residual = 0.0f64;
    for n in 1..=100usize {
        let from_up = WalkerState::point_source(0, up(), n)
            .unwrap()
            .evolve(&coin, n)
            .unwrap()
            .position_distribution();
        let from_down = WalkerState::point_source(0, down(), n)
            .unwrap()
            .evolve(&coin, n)
            .unwrap()
            .position_distribution();
        for i in -(n as i64)..=n as i64 {
            residual = residual.max((from_up.probability(i) - from_down.probability(-i)).abs());
        }
    }
    CheckResult::measured(
        "mirror_symmetry",
        residual,
        1e-12,
        "P_up(i;N) = P_down(-i;N) for N <= 100",
    )
}

fn check_oracle_equivalence(max_steps: usize) -> CheckResult {
    let coin = CoinOperator::hadamard();
    let mut residual = 0.0f64;
    for label in ["separable", "plus", "minus"] {
        let initial = initial_state(label, max_steps);
        let mut dense = initial.to_dense();
        for n in 1..=max_steps {
            dense = dense.step(&coin).unwrap();
            let product = initial.evolve(&coin, n).unwrap().joint_distribution();
            let brute = dense.joint_distribution();
            for ((_, _, p), (_, _, q)) in product.iter().zip(brute.iter()) {
                residual = residual.max((p - q).abs());
            }
        }
    }
    CheckResult::measured(
        "oracle_equivalence",
        residual,
        1e-12,
        format!("product form vs dense tensor, all initial conditions, n <= {max_steps}"),
    )
}

fn check_maxima_location() -> CheckResult {
    let mut worst = 0.0f64;
    let mut detail = String::new();
    for label in ["plus", "minus"] {
        let marginal = joint_after(label, 30).marginal1();
        let distance = marginal
            .argmax_set()
            .into_iter()
            .map(|i| {
                let magnitude = i.abs();
                if (18..=22).contains(&magnitude) {
                    0.0
                } else {
                    (magnitude - 20).abs() as f64
                }
            })
            .fold(f64::INFINITY, f64::min);
        worst = worst.max(distance);
        let (arg, _) = marginal.argmax();
        detail.push_str(&format!("{label} argmax {arg}; "));
    }
    CheckResult::measured(
        "maxima_location",
        worst,
        0.0,
        format!("{detail}|i| must fall in [18,22] at N=30"),
    )
}

fn check_spreading() -> (CheckResult, CheckResult) {
    let coin = CoinOperator::hadamard();
    let stddev_at = |n: usize| {
        WalkerState::point_source(0, up(), n)
            .unwrap()
            .evolve(&coin, n)
            .unwrap()
            .position_distribution()
            .stddev()
    };
    let quantum_ratio = stddev_at(100) / stddev_at(50);
    let quantum_residual = if (1.8..=2.2).contains(&quantum_ratio) {
        0.0
    } else {
        (quantum_ratio - 2.0).abs() - 0.2
    };
    let classical_ratio =
        classical_distribution(100).stddev() / classical_distribution(50).stddev();
    let classical_residual = (classical_ratio - std::f64::consts::SQRT_2).abs();
    (
        CheckResult::measured(
            "spreading_ratio_quantum",
            quantum_residual,
            0.0,
            format!("stddev(100)/stddev(50) = {quantum_ratio:.6}, ballistic window [1.8, 2.2]"),
        ),
        CheckResult::measured(
            "spreading_ratio_classical",
            classical_residual,
            1e-9,
            format!("classical ratio {classical_ratio:.15} vs sqrt(2)"),
        ),
    )
}

fn compare_table(which: &str, published: &[(&str, [f64; 6]); 3]) -> TableComparison {
    let mut standard_err = 0.0f64;
    let mut zeroed_err = 0.0f64;
    let mut standard_matching = 0usize;
    let mut zeroed_matching = 0usize;
    let mut mismatches = Vec::new();
    let total = published.len() * TABLE_STEPS.len();

    for (label, row) in published {
        for (k, &steps) in TABLE_STEPS.iter().enumerate() {
            let joint = joint_after(label, steps);
            let standard = table_value(which, &joint);
            // Only the psi-minus diagonal is hypothetically zero; the
            // fallback variant zeroes exactly that row.
            let zeroed = if *label == "minus" {
                table_value(which, &joint.with_zeroed_diagonal())
            } else {
                standard
            };
            let expected = row[k];
            let s_err = (standard - expected).abs();
            let z_err = (zeroed - expected).abs();
            standard_err = standard_err.max(s_err);
            zeroed_err = zeroed_err.max(z_err);
            if s_err <= TABLE_TOL {
                standard_matching += 1;
            }
            if z_err <= TABLE_TOL {
                zeroed_matching += 1;
            }
            if s_err > TABLE_TOL || z_err > TABLE_TOL {
                mismatches.push(format!(
                    "{which} {label} N={steps}: published {expected:.1}, standard {standard:.4} \
                     (err {:+.4}), zeroed {zeroed:.4} (err {:+.4})",
                    standard - expected,
                    zeroed - expected,
                ));
            }
        }
    }

    let matching_variant = match (standard_matching == total, zeroed_matching == total) {
        (true, true) => "both",
        (true, false) => "standard",
        (false, true) => "zeroed",
        (false, false) => {
            if standard_matching >= zeroed_matching {
                "neither (standard dynamics is closest)"
            } else {
                "neither (zeroed diagonal is closest)"
            }
        }
    };

    TableComparison {
        which: which.to_string(),
        standard_max_abs_error: standard_err,
        standard_entries_matching: standard_matching,
        zeroed_max_abs_error: zeroed_err,
        zeroed_entries_matching: zeroed_matching,
        total_entries: total,
        matching_variant: matching_variant.to_string(),
        mismatches,
    }
}

/// Runs the full suite. `max_steps` bounds the dense-oracle comparison;
/// the table identities always run to N = 100.
pub fn run_suite(max_steps: usize) -> ValidationReport {
    let sweep = sweep_to_100();

    let mut checks = Vec::new();
    checks.push(check_one_step_anchor());
    let (per_step, drift) = check_unitarity();
    checks.push(per_step);
    checks.push(drift);
    checks.push(check_parity_support());
    checks.push(check_mirror_symmetry());
    checks.push(check_oracle_equivalence(max_steps));
    checks.push(CheckResult::measured(
        "factorization",
        sweep.factorization,
        1e-12,
        "separable P(i,j) = P1(i)P2(j) for N <= 100",
    ));
    checks.push(CheckResult::measured(
        "exchange_symmetry",
        sweep.exchange,
        1e-12,
        "psi+- P(i,j) = P(j,i) for N <= 100",
    ));
    checks.push(CheckResult::measured(
        "marginal_identity",
        sweep.marginal_identity,
        1e-12,
        "psi+- marginals equal (P_down + P_up)/2, separable marginals equal P_down and P_up, N <= 100",
    ));
    checks.push(CheckResult::measured(
        "marginal_mean_zero",
        sweep.marginal_mean,
        1e-9,
        "psi+- marginal means vanish for N <= 100",
    ));
    checks.push(CheckResult::measured(
        "marginal_mirror",
        sweep.marginal_mirror,
        1e-12,
        "psi+- marginals satisfy P(i) = P(-i) for N <= 100",
    ));
    checks.push(CheckResult::measured(
        "distance_identity",
        sweep.eq14,
        1e-9,
        "distance(minus) - distance(sep) = distance(sep) - distance(plus) for N <= 100",
    ));
    checks.push(CheckResult::measured(
        "correlation_bilinearity",
        sweep.bilinearity,
        1e-9,
        "C(plus) + C(minus) = 2 <x>_down <x>_up for N <= 100",
    ));
    checks.push(CheckResult::measured(
        "separable_correlation_zero",
        sweep.separable_correlation,
        1e-10,
        "separable correlation vanishes for N <= 100",
    ));
    checks.push(CheckResult::measured(
        "at_least_one_sum_rule",
        sweep.sum_rule,
        1e-12,
        "sum_i AtLeastOne(i) = 2 - sum_i P(i,i) for N <= 100",
    ));
    checks.push(check_maxima_location());
    let (quantum, classical) = check_spreading();
    checks.push(quantum);
    checks.push(classical);

    let tables = vec![
        compare_table("distance", &PUBLISHED_DISTANCE),
        compare_table("correlation", &PUBLISHED_CORRELATION),
    ];

    ValidationReport {
        max_steps,
        checks,
        diagonal_minus: sweep.diagonal_minus,
        tables,
    }
}

/// Computes one full table (distance or correlation) over `steps_list`
/// with the standard dynamics, rows in the published order ψ⁻ / S / ψ⁺.
pub fn compute_table(which: &str, steps_list: &[usize]) -> Vec<(String, Vec<f64>)> {
    ["minus", "separable", "plus"]
        .into_iter()
        .map(|label| {
            let values = steps_list
                .iter()
                .map(|&steps| table_value(which, &joint_after(label, steps)))
                .collect();
            (label.to_string(), values)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_on_the_real_implementation() {
        let report = run_suite(6);
        assert!(
            report.all_passed(),
            "failed checks: {:?}",
            report.failed_names()
        );
        assert_eq!(report.diagonal_minus.len(), 100);
        assert_eq!(report.tables.len(), 2);
        let text = report.to_text();
        assert!(text.contains("PASS one_step_anchor"));
        assert!(text.contains("result: PASS"));
    }

    #[test]
    fn diagonal_report_matches_hand_computed_values() {
        let report = run_suite(2);
        // N=1: the psi-minus walkers never meet.
        assert_eq!(report.diagonal_minus[0].max_diagonal, 0.0);
        // N=2: hand expansion gives P(0,0) = 1/4 on the diagonal.
        assert!((report.diagonal_minus[1].max_diagonal - 0.25).abs() < 1e-14);
    }

    #[test]
    fn table_rows_are_in_published_order() {
        let table = compute_table("distance", &[1]);
        assert_eq!(table[0].0, "minus");
        assert_eq!(table[1].0, "separable");
        assert_eq!(table[2].0, "plus");
        assert!((table[0].1[0] - 2.0).abs() < 1e-12);
        assert!((table[1].1[0] - 1.0).abs() < 1e-12);
        assert!((table[2].1[0] - 0.0).abs() < 1e-12);
    }
}
