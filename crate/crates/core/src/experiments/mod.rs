//! Reproducible experiments comparing measured automaton sizes and
//! decision results with their predicted values.

mod registry;
mod report;

use std::time::Instant;

pub use registry::{closed_upto, sample_nfa, EXPERIMENT_IDS};
pub use report::{ExperimentReport, Relation, Row, Verdict};

use crate::error::{input, Result};

/// Knobs shared by all experiments; unset fields take per-experiment
/// defaults.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExperimentParams {
    pub seed: u64,
    /// Number of random automata for sampling experiments.
    pub samples: Option<usize>,
    /// Parameter range for family experiments.
    pub range: Option<(usize, usize)>,
    /// State budget for closure constructions; `None` keeps the library
    /// defaults.
    pub budget: Option<usize>,
}

impl Default for ExperimentParams {
    fn default() -> Self {
        Self {
            seed: 2024,
            samples: None,
            range: None,
            budget: None,
        }
    }
}

impl ExperimentParams {
    pub(crate) fn range_or(&self, lo: usize, hi: usize) -> Vec<usize> {
        let (lo, hi) = self.range.unwrap_or((lo, hi));
        (lo..=hi).collect()
    }

    pub(crate) fn samples_or(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }
}

/// Runs a registered experiment.
pub fn run_experiment(id: &str, params: &ExperimentParams) -> Result<ExperimentReport> {
    let Some(run) = registry::lookup(id) else {
        return input(format!(
            "unknown experiment {id:?}; known: {}",
            EXPERIMENT_IDS.join(", ")
        ));
    };
    let start = Instant::now();
    let rows = run(params);
    Ok(ExperimentReport {
        id: id.to_string(),
        seed: params.seed,
        rows,
        runtime: start.elapsed(),
    })
}
