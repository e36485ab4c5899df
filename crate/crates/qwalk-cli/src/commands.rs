//! The four subcommand bodies. Each one builds an output record, renders
//! it in the requested format and writes it to the chosen destination.

use std::path::{Path, PathBuf};

use qwalk::classical_distribution;

use crate::config::{check_steps, CoinSpec, InitialCoin, InitialCondition, OutputFormat};
use crate::output::{
    self, DistributionPayload, SummaryPayload, TableRow, TablesConfig, TablesRecord, TablesResults,
    Walk1Config, Walk1Record, Walk2Config, Walk2Record, Walk2Results, SCHEMA_VERSION,
};
use crate::verify::{self, TABLE_STEPS};
use crate::CliError;

pub struct Walk1Options {
    pub steps: usize,
    pub initial: InitialCoin,
    pub coin: CoinSpec,
    pub classical: bool,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub steps_cap: usize,
}

pub fn cmd_walk1(options: Walk1Options) -> Result<(), CliError> {
    check_steps(options.steps, options.steps_cap)?;
    let coin = options.coin.operator()?;

    let distribution = if options.classical {
        classical_distribution(options.steps)
    } else {
        options
            .initial
            .point_source(options.steps)
            .evolve(&coin, options.steps)
            .map_err(|err| CliError::invariant(format!("evolution failed: {err}")))?
            .position_distribution()
    };
    if (distribution.total() - 1.0).abs() > 1e-10 {
        return Err(CliError::invariant(format!(
            "distribution sums to {}, not 1",
            distribution.total()
        )));
    }

    let record = Walk1Record {
        schema_version: SCHEMA_VERSION.to_string(),
        command: "walk1".to_string(),
        config: Walk1Config {
            steps: options.steps,
            initial: options.initial.label().to_string(),
            coin: options.coin.label(),
            classical: options.classical,
            format: options.format.label().to_string(),
        },
        results: DistributionPayload {
            n_max: distribution.n_max(),
            probabilities: distribution.iter().map(|(_, p)| p).collect(),
        },
    };

    let rendered = match options.format {
        OutputFormat::Csv => record.to_csv(),
        OutputFormat::Json => output::to_json(&record),
    };
    output::write_output(options.out.as_deref(), &rendered).map_err(CliError::Io)
}

pub struct Walk2Options {
    pub steps: usize,
    pub initial: InitialCondition,
    pub coin: CoinSpec,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub steps_cap: usize,
}

pub fn cmd_walk2(options: Walk2Options) -> Result<(), CliError> {
    check_steps(options.steps, options.steps_cap)?;
    let coin = options.coin.operator()?;

    let joint = options
        .initial
        .state(options.steps)
        .evolve(&coin, options.steps)
        .map_err(|err| CliError::invariant(format!("evolution failed: {err}")))?
        .joint_distribution();
    joint
        .check()
        .map_err(|err| CliError::invariant(format!("joint distribution invalid: {err}")))?;

    let marginal1 = joint.marginal1();
    let marginal2 = joint.marginal2();
    for marginal in [&marginal1, &marginal2] {
        if (marginal.total() - 1.0).abs() > 1e-10 {
            return Err(CliError::invariant(format!(
                "marginal sums to {}, not 1",
                marginal.total()
            )));
        }
    }
    let label = options.initial.label();
    let summary = joint.summarize(options.steps, label.clone());

    let record = Walk2Record {
        schema_version: SCHEMA_VERSION.to_string(),
        command: "walk2".to_string(),
        config: Walk2Config {
            steps: options.steps,
            initial: label,
            coin: options.coin.label(),
            format: options.format.label().to_string(),
        },
        results: Walk2Results {
            n_max: joint.n_max(),
            joint: joint.iter().map(|(_, _, p)| p).collect(),
            marginal1: marginal1.iter().map(|(_, p)| p).collect(),
            marginal2: marginal2.iter().map(|(_, p)| p).collect(),
            at_least_one: joint.at_least_one().iter().map(|(_, v)| v).collect(),
            summary: SummaryPayload::from(&summary),
        },
    };

    let rendered = match options.format {
        OutputFormat::Csv => record.to_csv(),
        OutputFormat::Json => output::to_json(&record),
    };
    output::write_output(options.out.as_deref(), &rendered).map_err(CliError::Io)
}

pub struct TablesOptions {
    pub which: String,
    pub steps: Option<Vec<usize>>,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub steps_cap: usize,
}

pub fn cmd_tables(options: TablesOptions) -> Result<(), CliError> {
    let which = options.which.to_ascii_lowercase();
    if which != "distance" && which != "correlation" {
        return Err(CliError::invalid(format!(
            "unknown table `{}` (expected `distance` or `correlation`)",
            options.which
        )));
    }
    let steps_list = options.steps.unwrap_or_else(|| TABLE_STEPS.to_vec());
    if steps_list.is_empty() {
        return Err(CliError::invalid(
            "steps list must not be empty".to_string(),
        ));
    }
    for &steps in &steps_list {
        check_steps(steps, options.steps_cap)?;
    }

    let rows = verify::compute_table(&which, &steps_list)
        .into_iter()
        .map(|(initial, values)| TableRow { initial, values })
        .collect::<Vec<_>>();

    // Expected-distance cells are bounded by 2N and correlations by N²;
    // anything outside means a broken distribution upstream.
    for row in &rows {
        for (&steps, &value) in steps_list.iter().zip(&row.values) {
            let bound = match which.as_str() {
                "distance" => 2.0 * steps as f64,
                _ => (steps * steps) as f64,
            };
            if !value.is_finite() || value.abs() > bound + 1e-9 {
                return Err(CliError::invariant(format!(
                    "table cell {which}/{}/{steps} out of range: {value}",
                    row.initial
                )));
            }
        }
    }

    let record = TablesRecord {
        schema_version: SCHEMA_VERSION.to_string(),
        command: "tables".to_string(),
        config: TablesConfig {
            which: which.clone(),
            steps: steps_list.clone(),
            format: options.format.label().to_string(),
        },
        results: TablesResults {
            steps: steps_list,
            rows,
        },
    };

    let rendered = match options.format {
        OutputFormat::Csv => record.to_csv(),
        OutputFormat::Json => output::to_json(&record),
    };
    output::write_output(options.out.as_deref(), &rendered).map_err(CliError::Io)
}

pub struct VerifyOptions {
    pub max_steps: usize,
    pub out: Option<PathBuf>,
    pub steps_cap: usize,
}

#[derive(serde::Serialize, serde::Deserialize)]
struct VerifyRecord {
    schema_version: String,
    command: String,
    config: VerifyConfigEcho,
    results: verify::ValidationReport,
}

#[derive(serde::Serialize, serde::Deserialize)]
struct VerifyConfigEcho {
    max_steps: usize,
}

pub fn cmd_verify(options: VerifyOptions) -> Result<(), CliError> {
    if options.max_steps < 1 {
        return Err(CliError::invalid("--steps must be at least 1".to_string()));
    }
    check_steps(options.max_steps, options.steps_cap)?;

    let report = verify::run_suite(options.max_steps);

    let text_path = options
        .out
        .clone()
        .unwrap_or_else(|| PathBuf::from("validation_report.txt"));
    let json_path = text_path.with_extension("json");

    let text = report.to_text();
    let record = VerifyRecord {
        schema_version: SCHEMA_VERSION.to_string(),
        command: "verify".to_string(),
        config: VerifyConfigEcho {
            max_steps: options.max_steps,
        },
        results: report.clone(),
    };

    std::fs::write(&text_path, &text).map_err(CliError::Io)?;
    std::fs::write(&json_path, output::to_json(&record)).map_err(CliError::Io)?;
    print!("{text}");
    println!(
        "report written to {} and {}",
        display_path(&text_path),
        display_path(&json_path)
    );

    if report.all_passed() {
        Ok(())
    } else {
        Err(CliError::invariant(format!(
            "validation failed: {}",
            report.failed_names().join(", ")
        )))
    }
}

fn display_path(path: &Path) -> String {
    path.display().to_string()
}
