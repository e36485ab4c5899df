//! Experiment configuration: initial conditions, coin selection, output
//! format and the validation that turns bad flags into exit code 1.

use num_complex::Complex64;
use qwalk::{CoinOperator, Sign, TwoParticleState, WalkerState};

use crate::CliError;

/// Default ceiling on `--steps`; raise with `--steps-cap`.
pub const DEFAULT_STEPS_CAP: usize = 500;

/// Single-walker initial coin state at the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InitialCoin {
    Up,
    Down,
}

impl InitialCoin {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        match text.to_ascii_lowercase().as_str() {
            "up" => Ok(InitialCoin::Up),
            "down" => Ok(InitialCoin::Down),
            other => Err(CliError::invalid(format!(
                "unknown initial coin state `{other}` (expected `up` or `down`)"
            ))),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            InitialCoin::Up => "up",
            InitialCoin::Down => "down",
        }
    }

    pub fn point_source(self, n_max: usize) -> WalkerState {
        let amps = match self {
            InitialCoin::Up => [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
            InitialCoin::Down => [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
        };
        WalkerState::point_source(0, amps, n_max).expect("origin point source")
    }
}

/// Two-walker initial condition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InitialCondition {
    Separable,
    Plus,
    Minus,
    Phase(f64),
}

impl InitialCondition {
    /// Resolves `--initial` together with the optional `--phase` flag.
    pub fn parse(text: &str, phase: Option<f64>) -> Result<Self, CliError> {
        let lowered = text.to_ascii_lowercase();
        let condition = match lowered.as_str() {
            "separable" => InitialCondition::Separable,
            "plus" => InitialCondition::Plus,
            "minus" => InitialCondition::Minus,
            "phase" => InitialCondition::Phase(phase.unwrap_or(0.0)),
            other => {
                return Err(CliError::invalid(format!(
                    "unknown initial condition `{other}` \
                     (expected `separable`, `plus`, `minus` or `phase`)"
                )))
            }
        };
        if phase.is_some() && !matches!(condition, InitialCondition::Phase(_)) {
            return Err(CliError::invalid(
                "--phase is only meaningful with --initial phase".to_string(),
            ));
        }
        if let InitialCondition::Phase(value) = condition {
            if !value.is_finite() {
                return Err(CliError::invalid(format!(
                    "phase must be finite, got {value}"
                )));
            }
        }
        Ok(condition)
    }

    pub fn label(self) -> String {
        match self {
            InitialCondition::Separable => "separable".to_string(),
            InitialCondition::Plus => "plus".to_string(),
            InitialCondition::Minus => "minus".to_string(),
            InitialCondition::Phase(value) => format!("phase:{}", crate::output::format_f64(value)),
        }
    }

    pub fn state(self, n_max: usize) -> TwoParticleState {
        match self {
            InitialCondition::Separable => TwoParticleState::separable(n_max),
            InitialCondition::Plus => TwoParticleState::entangled(Sign::Plus, n_max),
            InitialCondition::Minus => TwoParticleState::entangled(Sign::Minus, n_max),
            InitialCondition::Phase(value) => TwoParticleState::with_phase(value, n_max),
        }
    }
}

/// Coin selection: the Hadamard default or a custom 2×2 unitary given as
/// eight comma-separated floats `re,im` per entry, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CoinSpec {
    Hadamard,
    Custom([[Complex64; 2]; 2]),
}

impl CoinSpec {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        if text.eq_ignore_ascii_case("hadamard") {
            return Ok(CoinSpec::Hadamard);
        }
        let values: Vec<f64> = text
            .split(',')
            .map(|part| {
                part.trim().parse::<f64>().map_err(|_| {
                    CliError::invalid(format!("cannot parse `{part}` as a float in --coin"))
                })
            })
            .collect::<Result<_, _>>()?;
        if values.len() != 8 {
            return Err(CliError::invalid(format!(
                "--coin expects `hadamard` or 8 comma-separated floats \
                 (re,im per entry, row-major), got {} values",
                values.len()
            )));
        }
        let entry = |k: usize| Complex64::new(values[2 * k], values[2 * k + 1]);
        Ok(CoinSpec::Custom([
            [entry(0), entry(1)],
            [entry(2), entry(3)],
        ]))
    }

    pub fn label(self) -> String {
        match self {
            CoinSpec::Hadamard => "hadamard".to_string(),
            CoinSpec::Custom(entries) => {
                let parts: Vec<String> = entries
                    .iter()
                    .flatten()
                    .flat_map(|c| {
                        [
                            crate::output::format_f64(c.re),
                            crate::output::format_f64(c.im),
                        ]
                    })
                    .collect();
                parts.join(",")
            }
        }
    }

    /// Builds the validated operator; a non-unitary matrix is invalid input.
    pub fn operator(self) -> Result<CoinOperator, CliError> {
        match self {
            CoinSpec::Hadamard => Ok(CoinOperator::hadamard()),
            CoinSpec::Custom(entries) => CoinOperator::new(entries)
                .map_err(|err| CliError::invalid(format!("invalid --coin matrix: {err}"))),
        }
    }
}

/// Output format for the payload.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        match text.to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(CliError::invalid(format!(
                "unknown format `{other}` (expected `csv` or `json`)"
            ))),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

/// Rejects step counts beyond the cap.
pub fn check_steps(steps: usize, cap: usize) -> Result<(), CliError> {
    if steps > cap {
        return Err(CliError::invalid(format!(
            "steps {steps} exceeds the cap {cap}; raise --steps-cap if intended"
        )));
    }
    Ok(())
}
