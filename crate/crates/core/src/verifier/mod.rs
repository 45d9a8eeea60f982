//! Named scenarios binding concrete group-theoretic claims to checks that
//! are computed from first principles, plus the FS_p certificate and the
//! involution counting bounds they use.

mod bounds;
mod fsp;
mod report;
mod scenarios;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};

pub use bounds::{bound_instances, counting_bound_check, BoundReport, IndexBound};
pub use fsp::{fsp_certificate, ClassStatus, Condition, FspClassVerdict, FspReport, BAD_FIELD_ORDERS};
pub use report::{emit_report, Format, RunReport, ScenarioReport, SCHEMA_VERSION};
pub use scenarios::{centralizer_cases, CentralizerCase};

/// Runtime class of a scenario.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Budget {
    Fast,
    Medium,
    Slow,
}

impl Budget {
    pub fn limit(self) -> Duration {
        Duration::from_secs(match self {
            Budget::Fast => 10,
            Budget::Medium => 120,
            Budget::Slow => 600,
        })
    }
}

impl fmt::Display for Budget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Budget::Fast => "fast",
            Budget::Medium => "medium",
            Budget::Slow => "slow",
        })
    }
}

impl FromStr for Budget {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Budget::Fast),
            "medium" => Ok(Budget::Medium),
            "slow" => Ok(Budget::Slow),
            _ => Err(Error::Parse(format!("unknown budget '{s}'"))),
        }
    }
}

/// One named assertion with the values it compared.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub expected: String,
    pub computed: String,
    pub witness: Option<String>,
}

impl Check {
    /// Passes when `expected == computed`.
    pub fn equal<T: PartialEq + fmt::Debug>(name: impl Into<String>, expected: T, computed: T) -> Self {
        Check {
            name: name.into(),
            passed: expected == computed,
            expected: format!("{expected:?}"),
            computed: format!("{computed:?}"),
            witness: None,
        }
    }

    /// Passes when `holds`; `computed` describes what was evaluated.
    pub fn holds(name: impl Into<String>, holds: bool, computed: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: holds,
            expected: "true".into(),
            computed: computed.into(),
            witness: None,
        }
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = Some(witness.into());
        self
    }
}

#[derive(Clone, Copy)]
pub struct Scenario {
    pub name: &'static str,
    /// The statement being checked.
    pub claim: &'static str,
    /// Groups the scenario builds, by catalog name.
    pub inputs: &'static [&'static str],
    pub budget: Budget,
    run: fn() -> Result<Vec<Check>>,
}

impl fmt::Debug for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Scenario")
            .field("name", &self.name)
            .field("budget", &self.budget)
            .finish()
    }
}

/// The registry, sorted by name.
pub fn list_scenarios() -> Vec<Scenario> {
    let mut all = scenarios::registry();
    all.sort_by_key(|s| s.name);
    all
}

pub fn find_scenario(name: &str) -> Result<Scenario> {
    list_scenarios()
        .into_iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownScenario(name.to_string()))
}

fn execute(s: &Scenario) -> ScenarioReport {
    let start = Instant::now();
    let outcome = (s.run)();
    let elapsed = start.elapsed();
    let (mut checks, error) = match outcome {
        Ok(c) => (c, None),
        Err(e) => (Vec::new(), Some(e.to_string())),
    };
    if elapsed > s.budget.limit() {
        checks.push(Check::holds(
            "budget",
            false,
            format!("{:.1} s exceeds the {} limit of {} s", elapsed.as_secs_f64(), s.budget, s.budget.limit().as_secs()),
        ));
    }
    ScenarioReport::new(s, checks, error, elapsed)
}

pub fn run_scenario(name: &str) -> Result<ScenarioReport> {
    Ok(execute(&find_scenario(name)?))
}

/// Runs the named scenarios on separate threads; the report lists them by name.
pub fn run_scenarios(names: &[&str]) -> Result<RunReport> {
    let mut chosen: Vec<Scenario> = names.iter().map(|n| find_scenario(n)).collect::<Result<_>>()?;
    chosen.sort_by_key(|s| s.name);
    chosen.dedup_by_key(|s| s.name);
    let reports = std::thread::scope(|scope| {
        let handles: Vec<_> = chosen.iter().map(|s| scope.spawn(move || execute(s))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scenario thread panicked"))
            .collect()
    });
    Ok(RunReport::new(reports))
}

/// Names of the scenarios whose budget is at most `max`.
pub fn scenarios_within(max: Budget) -> Vec<&'static str> {
    list_scenarios().into_iter().filter(|s| s.budget <= max).map(|s| s.name).collect()
}
