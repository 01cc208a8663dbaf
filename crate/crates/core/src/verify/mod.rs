//! Property suites over generated samples, checked against an independent
//! oracle and a set of pinned constants.

pub mod oracle;
mod pins;
mod sample;
mod suites;

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;
use serde_json::Value;

use crate::csequence::CSequence;
use crate::error::{Error, Result};

pub use pins::{compute_pins, pin_constants, PinCheck};
pub use sample::{Generator, SampleSpec, DEFAULT_MAX_COEF, GENERATION_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Facts,
    Weights,
    Oscillation,
    Iso,
    Forcing,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Facts,
        Suite::Weights,
        Suite::Oscillation,
        Suite::Iso,
        Suite::Forcing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Facts => "facts",
            Suite::Weights => "weights",
            Suite::Oscillation => "oscillation",
            Suite::Iso => "iso",
            Suite::Forcing => "forcing",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A suite name as given on the command line; `all` selects every suite.
pub fn parse_suites(name: &str) -> Result<Vec<Suite>> {
    if name == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    Suite::ALL
        .iter()
        .find(|s| s.name() == name)
        .map(|s| vec![*s])
        .ok_or_else(|| Error::UnknownSuite(name.to_string()))
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match parse_suites(s)?.as_slice() {
            [one] => Ok(*one),
            _ => Err(Error::UnknownSuite(s.to_string())),
        }
    }
}

/// One broken law, with enough input to reproduce it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub law: String,
    pub input: Value,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub cases: usize,
    pub failures: Vec<Failure>,
    pub pins: Vec<PinCheck>,
}

impl SuiteReport {
    fn finish(suite: String, cases: usize, failures: Vec<Failure>, pins: Vec<PinCheck>) -> Self {
        let passed = failures.is_empty() && pins.iter().all(|p| p.matched);
        SuiteReport {
            suite,
            passed,
            cases,
            failures,
            pins,
        }
    }
}

/// Runs the named suite (or `all`) over the sample described by `spec`.
/// Pinned constants of the selected suites are checked as well.
pub fn run_suite<P: CSequence>(p: &P, name: &str, spec: &SampleSpec) -> Result<SuiteReport> {
    run_suite_with_pins(p, name, spec, None)
}

/// [`run_suite`] with an optional pin file, written on first use.
pub fn run_suite_with_pins<P: CSequence>(
    p: &P,
    name: &str,
    spec: &SampleSpec,
    pin_file: Option<&Path>,
) -> Result<SuiteReport> {
    let selected = parse_suites(name)?;
    let sample = spec.generate(p)?;
    let mut cases = 0;
    let mut failures = Vec::new();
    for suite in &selected {
        let mut run = suites::Run::new(*suite);
        run.execute(p, &sample, spec.seed)?;
        cases += run.cases;
        failures.extend(run.failures);
    }
    let pins = pin_constants(&selected, pin_file)?;
    Ok(SuiteReport::finish(name.to_string(), cases, failures, pins))
}
