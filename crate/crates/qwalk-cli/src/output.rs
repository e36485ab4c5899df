//! Output records and their CSV/JSON renderings.
//!
//! JSON payloads carry a `schema_version`, the command name, a config echo
//! and the results; every float is serialized with 17 significant digits,
//! which makes re-parsing bit-exact. CSV payloads are fixed-shape tables
//! with zeros included so files diff cleanly; the multi-part `walk2`
//! payload separates its sections with `#` comment lines.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use qwalk::SummaryRecord;

/// Formats a float with 17 significant digits (`d.16e` scientific form),
/// enough to reproduce any f64 exactly on re-parse.
pub fn format_f64(value: f64) -> String {
    format!("{value:.16e}")
}

/// serde_json formatter that routes every float through [`format_f64`].
struct SciFormatter;

impl serde_json::ser::Formatter for SciFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W>(&mut self, writer: &mut W, value: f32) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Serializes any record to the canonical JSON form (single line, floats
/// at 17 significant digits, trailing newline).
pub fn to_json<T: Serialize>(record: &T) -> String {
    let mut buffer = Vec::new();
    let mut serializer = serde_json::Serializer::with_formatter(&mut buffer, SciFormatter);
    record
        .serialize(&mut serializer)
        .expect("records contain no non-serializable values");
    buffer.push(b'\n');
    String::from_utf8(buffer).expect("serializer emits UTF-8")
}

/// Writes `content` to `path`, or to standard output when `path` is `None`.
pub fn write_output(path: Option<&Path>, content: &str) -> io::Result<()> {
    match path {
        Some(path) => fs::write(path, content),
        None => io::stdout().write_all(content.as_bytes()),
    }
}

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Walk1Config {
    pub steps: usize,
    pub initial: String,
    pub coin: String,
    pub classical: bool,
    pub format: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistributionPayload {
    pub n_max: usize,
    pub probabilities: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Walk1Record {
    pub schema_version: String,
    pub command: String,
    pub config: Walk1Config,
    pub results: DistributionPayload,
}

impl Walk1Record {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,p\n");
        let n = self.results.n_max as i64;
        for (k, p) in self.results.probabilities.iter().enumerate() {
            let i = k as i64 - n;
            out.push_str(&format!("{i},{}\n", format_f64(*p)));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Walk2Config {
    pub steps: usize,
    pub initial: String,
    pub coin: String,
    pub format: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryPayload {
    pub steps: usize,
    pub initial_condition: String,
    pub expected_distance: f64,
    pub correlation: f64,
    pub mean1: f64,
    pub mean2: f64,
}

impl From<&SummaryRecord> for SummaryPayload {
    fn from(record: &SummaryRecord) -> Self {
        SummaryPayload {
            steps: record.steps,
            initial_condition: record.initial_condition.clone(),
            expected_distance: record.expected_distance,
            correlation: record.correlation,
            mean1: record.mean1,
            mean2: record.mean2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Walk2Results {
    pub n_max: usize,
    /// Row-major `(2·n_max+1)²` grid over `i` then `j`.
    pub joint: Vec<f64>,
    pub marginal1: Vec<f64>,
    pub marginal2: Vec<f64>,
    pub at_least_one: Vec<f64>,
    pub summary: SummaryPayload,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Walk2Record {
    pub schema_version: String,
    pub command: String,
    pub config: Walk2Config,
    pub results: Walk2Results,
}

impl Walk2Record {
    pub fn to_csv(&self) -> String {
        let n = self.results.n_max as i64;
        let sites = (2 * self.results.n_max + 1) as i64;
        let mut out = String::from("# walk2 joint distribution\ni,j,p\n");
        for (k, p) in self.results.joint.iter().enumerate() {
            let i = k as i64 / sites - n;
            let j = k as i64 % sites - n;
            out.push_str(&format!("{i},{j},{}\n", format_f64(*p)));
        }
        for (section, values) in [
            ("marginal1", &self.results.marginal1),
            ("marginal2", &self.results.marginal2),
            ("at_least_one", &self.results.at_least_one),
        ] {
            out.push_str(&format!("# {section}\ni,p\n"));
            for (k, p) in values.iter().enumerate() {
                out.push_str(&format!("{},{}\n", k as i64 - n, format_f64(*p)));
            }
        }
        let s = &self.results.summary;
        out.push_str("# summary\nsteps,initial,expected_distance,correlation,mean1,mean2\n");
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            s.steps,
            s.initial_condition,
            format_f64(s.expected_distance),
            format_f64(s.correlation),
            format_f64(s.mean1),
            format_f64(s.mean2),
        ));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TablesConfig {
    pub which: String,
    pub steps: Vec<usize>,
    pub format: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub initial: String,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TablesResults {
    pub steps: Vec<usize>,
    pub rows: Vec<TableRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TablesRecord {
    pub schema_version: String,
    pub command: String,
    pub config: TablesConfig,
    pub results: TablesResults,
}

impl TablesRecord {
    /// CSV table with one row per `(initial, N)` cell, values rounded to
    /// one decimal like the published tables.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("initial,N,value\n");
        for row in &self.results.rows {
            for (steps, value) in self.results.steps.iter().zip(&row.values) {
                out.push_str(&format!("{},{steps},{value:.1}\n", row.initial));
            }
        }
        out
    }
}
