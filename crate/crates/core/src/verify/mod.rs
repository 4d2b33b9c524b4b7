//! Equivalence suites that compare two independently computed sides of a
//! stated equality on generated instances, and a search for counterexamples
//! to the open product inequalities.
//!
//! Instances are drawn sequentially from a seeded stream, evaluated in
//! parallel, and merged back in trial order, so a report depends only on
//! the suite name, trial count, seed and size bound.

pub mod conjecture;
pub mod exhaustive;
pub mod random;
mod suites;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::solvers::{SolveOptions, DEFAULT_BUDGET};

pub use conjecture::{conjecture_search, ConjectureProblem, Finding, SearchReport};
pub use suites::SUITES;

/// Theorem suites must never fail; probe suites only collect data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteKind {
    Theorem,
    Probe,
}

impl SuiteKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SuiteKind::Theorem => "theorem",
            SuiteKind::Probe => "probe",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub trials: usize,
    pub seed: u64,
    /// Overrides the suite's default size bound.
    pub size_max: Option<usize>,
    pub budget: u64,
}

impl SuiteConfig {
    pub fn new(trials: usize, seed: u64) -> Self {
        SuiteConfig {
            trials,
            seed,
            size_max: None,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn with_size_max(mut self, size_max: usize) -> Self {
        self.size_max = Some(size_max);
        self
    }

    pub(crate) fn size(&self, default: usize) -> usize {
        self.size_max.unwrap_or(default)
    }

    pub(crate) fn opts(&self) -> SolveOptions {
        SolveOptions::with_budget(self.budget)
    }
}

/// One instance on which the two sides disagreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub trial: usize,
    /// The instance in its file format, lines joined by `; `.
    pub instance: String,
    /// Both computed values.
    pub detail: String,
}

/// Outcome of evaluating one instance.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub(crate) struct Trial {
    /// Hypotheses not met; nothing was compared.
    pub skipped: bool,
    pub failure: Option<(String, String)>,
    /// Probe records and counters.
    pub data: Vec<String>,
    pub tags: Vec<&'static str>,
}

impl Trial {
    pub fn skip() -> Self {
        Trial {
            skipped: true,
            ..Default::default()
        }
    }

    pub fn fail(&mut self, instance: String, detail: String) {
        if self.failure.is_none() {
            self.failure = Some((instance, detail));
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub kind: SuiteKind,
    pub seed: u64,
    /// Instances evaluated.
    pub trials: usize,
    /// Instances that met the hypotheses and were compared.
    pub checked: usize,
    pub failures: Vec<Failure>,
    /// Probe records, one per line.
    pub data: Vec<String>,
    /// Named counters, e.g. how many Helly posets were met.
    pub counters: Vec<(String, usize)>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn counter(&self, name: &str) -> usize {
        self.counters.iter().find(|(n, _)| n == name).map_or(0, |(_, c)| *c)
    }

    /// Human-readable report.
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "suite {} ({}) seed={} trials={} checked={} failures={}\n",
            self.name,
            self.kind.as_str(),
            self.seed,
            self.trials,
            self.checked,
            self.failures.len()
        );
        for (name, c) in &self.counters {
            s.push_str(&format!("  {name} = {c}\n"));
        }
        for f in &self.failures {
            s.push_str(&format!(
                "  FAIL trial {}: {}\n    instance: {}\n",
                f.trial, f.detail, f.instance
            ));
        }
        for d in &self.data {
            s.push_str(&format!("  data: {d}\n"));
        }
        s
    }

    /// Machine-readable `key=value` lines.
    pub fn summary(&self) -> String {
        let mut s = format!(
            "suite={}\nkind={}\nseed={}\ntrials={}\nchecked={}\nfailures={}\npassed={}\n",
            self.name,
            self.kind.as_str(),
            self.seed,
            self.trials,
            self.checked,
            self.failures.len(),
            self.passed()
        );
        for (name, c) in &self.counters {
            s.push_str(&format!("{name}={c}\n"));
        }
        s.push_str(&format!("data_records={}\n", self.data.len()));
        s
    }

    fn merge(&mut self, other: SuiteReport) {
        let offset = self.trials;
        self.trials += other.trials;
        self.checked += other.checked;
        self.failures.extend(other.failures.into_iter().map(|mut f| {
            f.trial += offset;
            f
        }));
        self.data.extend(other.data);
        for (name, c) in other.counters {
            add_counter(&mut self.counters, &name, c);
        }
    }
}

fn add_counter(counters: &mut Vec<(String, usize)>, name: &str, by: usize) {
    match counters.iter_mut().find(|(n, _)| n == name) {
        Some((_, c)) => *c += by,
        None => counters.push((name.to_string(), by)),
    }
}

/// Evaluates `check` on every instance in parallel and merges the results
/// in input order. The first error, by trial index, is returned.
pub(crate) fn evaluate<T, F>(name: &str, kind: SuiteKind, seed: u64, instances: Vec<T>, check: F) -> Result<SuiteReport>
where
    T: Sync,
    F: Fn(&T) -> Result<Trial> + Sync,
{
    let outcomes: Vec<Result<Trial>> = instances.par_iter().map(&check).collect();
    let mut report = SuiteReport {
        name: name.to_string(),
        kind,
        seed,
        trials: 0,
        checked: 0,
        failures: Vec::new(),
        data: Vec::new(),
        counters: Vec::new(),
    };
    for (i, o) in outcomes.into_iter().enumerate() {
        let t = o?;
        report.trials += 1;
        if !t.skipped {
            report.checked += 1;
        }
        if let Some((instance, detail)) = t.failure {
            report.failures.push(Failure {
                trial: i,
                instance,
                detail,
            });
        }
        report.data.extend(t.data);
        for tag in t.tags {
            add_counter(&mut report.counters, tag, 1);
        }
    }
    Ok(report)
}

/// Concatenates reports of parts run under one suite name.
pub(crate) fn combine(name: &str, kind: SuiteKind, seed: u64, parts: Vec<SuiteReport>) -> SuiteReport {
    let mut out = SuiteReport {
        name: name.to_string(),
        kind,
        seed,
        trials: 0,
        checked: 0,
        failures: Vec::new(),
        data: Vec::new(),
        counters: Vec::new(),
    };
    for p in parts {
        out.merge(p);
    }
    out
}

/// Names of all registered suites.
pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.name).collect()
}

/// Runs a registered suite.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let suite = SUITES
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownSuite(name.to_string()))?;
    (suite.run)(cfg)
}

/// One-line rendering of a multi-line file.
pub(crate) fn one_line(text: &str) -> String {
    text.lines().collect::<Vec<_>>().join("; ")
}
