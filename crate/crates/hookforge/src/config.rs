use std::path::PathBuf;

use clap::ValueEnum;

/// Which family of checks to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Selector {
    All,
    Theorem1,
    Theorem1prime,
    Lemma1,
    Prop2,
    Prop3,
    Bijection,
    Egf,
    Substitution,
}

impl Selector {
    pub fn includes(self, other: Selector) -> bool {
        self == Selector::All || self == other
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub selector: Selector,
    /// Upper bound on `n` (partition size, vector length, ...) for sweeps.
    pub max_n: usize,
    /// Truncation order for series checks.
    pub order: usize,
    /// Random sample points per `n` for sampled checks.
    pub trials: usize,
    pub seed: u64,
    pub format: Format,
    pub out: Option<PathBuf>,
    /// Record wall-clock milliseconds per report. Off by default so that
    /// equal configurations give byte-identical output.
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            selector: Selector::All,
            max_n: 10,
            order: 10,
            trials: 5,
            seed: 0,
            format: Format::Text,
            out: None,
            timings: false,
        }
    }
}
