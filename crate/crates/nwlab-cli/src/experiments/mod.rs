//! The experiment registry and shared runner plumbing.
//!
//! Each experiment consumes a parsed configuration, computes its rows and
//! checks with the core library, and returns a [`RunOutcome`]. Sweeps run
//! sequentially, so rows are emitted in a deterministic order; with the
//! seeds fixed in the config, identical configurations produce
//! byte-identical CSV output.

mod antilocality;
mod correlations;
mod cyclicity;
mod entanglement;
mod microcausality;
mod numberops;
mod structure;
mod sweep;

use std::fmt;

use nwlab_core::lattice::LatticeSpec;

use crate::config::{Config, ConfigError};

/// Anything that aborts a run before results exist: a configuration
/// problem or a core-library rejection of the requested parameters. Both
/// are usage errors (exit 1), distinct from failed checks (exit 2).
#[derive(Debug)]
pub enum CliError {
    Config(ConfigError),
    Core(nwlab_core::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(e) => write!(f, "{e}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        CliError::Config(e)
    }
}

/// One named pass/fail assertion inside a run.
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    /// Passes when the value stays strictly below the bound.
    pub fn below(name: impl Into<String>, value: f64, bound: f64) -> Check {
        Check {
            name: name.into(),
            passed: value < bound,
            detail: format!("value {value:.3e}, bound {bound:.3e}"),
        }
    }

    /// Passes when the value exceeds the bound.
    pub fn above(name: impl Into<String>, value: f64, bound: f64) -> Check {
        Check {
            name: name.into(),
            passed: value > bound,
            detail: format!("value {value:.3e}, bound {bound:.3e}"),
        }
    }

    /// Passes on exact integer agreement.
    pub fn equals(name: impl Into<String>, got: usize, want: usize) -> Check {
        Check {
            name: name.into(),
            passed: got == want,
            detail: format!("got {got}, want {want}"),
        }
    }

    /// Passes when the value is exactly the floating-point zero.
    pub fn exactly_zero(name: impl Into<String>, value: f64) -> Check {
        Check {
            name: name.into(),
            passed: value == 0.0,
            detail: format!("value {value:.3e}, want exactly 0"),
        }
    }

    /// A check with a precomputed verdict.
    pub fn verdict(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

/// Everything a finished experiment hands back to the driver.
pub struct RunOutcome {
    /// Base name for the CSV and summary artifacts.
    pub csv_name: String,
    /// CSV column names.
    pub header: Vec<String>,
    /// CSV rows, already in deterministic order.
    pub rows: Vec<Vec<String>>,
    /// Assertions evaluated by the experiment.
    pub checks: Vec<Check>,
    /// Non-fatal observations; failures under --strict.
    pub warnings: Vec<String>,
    /// Headline numbers for the summary.
    pub notes: Vec<String>,
}

/// Registry entry: name, one-line description, and the topic the
/// experiment exercises.
pub struct ExperimentInfo {
    pub name: &'static str,
    pub summary: &'static str,
    pub topic: &'static str,
    pub run: fn(&Config) -> Result<RunOutcome, CliError>,
}

/// All experiments, in stable listing order.
pub const EXPERIMENTS: &[ExperimentInfo] = &[
    ExperimentInfo {
        name: "structure-check",
        summary: "verify the defining identities of the one-particle structure",
        topic: "one-particle structure of the free scalar field",
        run: structure::run,
    },
    ExperimentInfo {
        name: "antilocality",
        summary: "sweep anti-locality defects of fractional Hamiltonian powers",
        topic: "anti-locality of fractional powers of the lattice Hamiltonian",
        run: antilocality::run,
    },
    ExperimentInfo {
        name: "cyclicity",
        summary: "compare standard and Newton-Wigner subspace ranks for one region",
        topic: "cyclicity of local subspaces under the vacuum",
        run: cyclicity::run,
    },
    ExperimentInfo {
        name: "cyclicity-sweep",
        summary: "rank comparison across all region sizes, with time smearing",
        topic: "cyclicity restored by smearing localized modes in time",
        run: sweep::run,
    },
    ExperimentInfo {
        name: "correlations",
        summary: "vacuum two-point correlations and the product-state contrast",
        topic: "vacuum correlations across disjoint regions",
        run: correlations::run,
    },
    ExperimentInfo {
        name: "entanglement",
        summary: "entropy and log-negativity of vacuum restrictions to regions",
        topic: "vacuum entanglement of region mode families",
        run: entanglement::run,
    },
    ExperimentInfo {
        name: "numberops",
        summary: "local number-operator expectations on a coherent state",
        topic: "local number operators and their collapse to the total",
        run: numberops::run,
    },
    ExperimentInfo {
        name: "microcausality",
        summary: "commutator phases at spacelike separation in both schemes",
        topic: "microcausality of fields versus localized wavefunctions",
        run: microcausality::run,
    },
];

/// Looks up an experiment by its registry name.
pub fn find(name: &str) -> Option<&'static ExperimentInfo> {
    EXPERIMENTS.iter().find(|e| e.name == name)
}

/// Converts a core-library result into a driver result.
pub(crate) fn core<T>(result: nwlab_core::Result<T>) -> Result<T, CliError> {
    result.map_err(CliError::Core)
}

/// Reads the lattice keys (`n`, `spacing`, `mass`) with per-experiment
/// defaults and builds the spec.
pub(crate) fn lattice_from(
    cfg: &Config,
    default_n: usize,
    default_mass: f64,
) -> Result<LatticeSpec, CliError> {
    let n = cfg.get_or("n", "a positive integer", default_n)?;
    let spacing = cfg.get_or("spacing", "a positive number", 1.0)?;
    let mass = cfg.get_or("mass", "a positive number", default_mass)?;
    core(LatticeSpec::new(n, spacing, mass))
}

/// The lattice parameter cells every CSV row starts with.
pub(crate) fn lattice_cells(spec: &LatticeSpec) -> Vec<String> {
    vec![
        spec.n_sites().to_string(),
        crate::output::float_cell(spec.spacing()),
        crate::output::float_cell(spec.mass()),
    ]
}
