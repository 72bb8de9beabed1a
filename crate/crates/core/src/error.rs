use crate::scenario::Scenario;
use thiserror::Error;

/// Errors produced by tensor construction, enumeration, mining and I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("setting counts must lie in {min}..={max}, got {0}x{1}x{2}", min = Scenario::MIN_SETTINGS, max = Scenario::MAX_SETTINGS)]
    BadScenario(usize, usize, usize),

    #[error("scenario mismatch: {0} vs {1}")]
    ScenarioMismatch(Scenario, Scenario),

    #[error("scenario {0} exceeds the vertex enumeration budget ({budget} total settings)", budget = crate::polytope::MAX_TOTAL_SETTINGS)]
    ScenarioTooLarge(Scenario),

    #[error("expected {want} coefficients for scenario, got {got}")]
    CoefficientCount { want: usize, got: usize },

    #[error("coefficient magnitude {0} exceeds the supported range")]
    CoefficientRange(i64),

    #[error("angle profile ({0},{1},{2}) does not match scenario {3}")]
    ProfileMismatch(usize, usize, usize, Scenario),

    #[error("angles must be finite")]
    NonFiniteAngle,

    #[error("correlator {0} outside [-1, 1]")]
    CorrelatorRange(f64),

    #[error("symmetrization needs equal setting counts, got {0}")]
    UnequalSettings(Scenario),

    #[error("setting index ({0},{1},{2}) out of range for {3}")]
    SettingOutOfRange(usize, usize, usize, Scenario),

    #[error("claimed local bound {claimed} differs from recomputed bound {actual}")]
    BoundMismatch { claimed: i64, actual: i64 },

    #[error("visibility requires a positive quantum value, got {0}")]
    NonPositiveQuantum(f64),

    #[error("visibility parameter {0} outside [0, 1]")]
    VisibilityRange(f64),

    #[error("restart count must be at least 1")]
    NoRestarts,

    #[error("direction tensor is numerically zero")]
    ZeroDirection,

    #[error("linear program failed: {0}")]
    Lp(String),

    #[error("no rational reconstruction within denominator budget {0}")]
    Integerize(i64),

    #[error("facet verification failed: {0}")]
    FacetVerification(String),

    #[error("party permutation must preserve setting counts")]
    IllegalPartyPermutation,

    #[error("relabeling element malformed: {0}")]
    BadRelabeling(String),

    #[error("canonicalization exceeded the node budget of {0}")]
    CanonBudget(u64),

    #[error("record line {line}: {reason}")]
    Record { line: usize, reason: String },

    #[error("case study assertion failed: {0}")]
    CaseStudy(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
