use crate::lds::SequenceKind;

/// Errors surfaced by the library API.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("dimension {dim} outside supported range 1..={max}")]
    DimensionOutOfRange { dim: usize, max: usize },

    #[error("point sets must contain at least one point")]
    EmptyPointSet,

    #[error("sequence kind {0:?} requires a seed")]
    MissingSeed(SequenceKind),

    #[error("sequence index {requested} exceeds the 2^32 Sobol period")]
    SequenceExhausted { requested: u64 },

    #[error("quantile argument {0} outside the open interval (0, 1)")]
    QuantileOutOfRange(f64),

    #[error("box bounds must satisfy lo < hi componentwise (component {component}: {lo} >= {hi})")]
    InvalidBoxBounds { component: usize, lo: f64, hi: f64 },

    #[error("covariance is not positive definite even after jitter")]
    DegenerateCovariance,

    #[error("weighted sample needs {needed} particles with positive weight, found {found}")]
    InsufficientSample { needed: usize, found: usize },

    #[error("weighted sample has no strictly positive weight")]
    AllWeightsZero,

    #[error("invalid weight scheme: {0}")]
    InvalidScheme(String),

    #[error("mixture fitting failed: {0}")]
    MixtureFit(String),

    #[error("particle-mixture proposals take plain-random streams; a {0:?} point set would destroy the low-discrepancy structure")]
    QmcPointsWithParticleMixture(SequenceKind),

    #[error("point set dimension {points} does not match parameter dimension {theta}")]
    DimensionMismatch { points: usize, theta: usize },

    #[error("sample clouds must have equal cardinality ({0} vs {1})")]
    UnequalCloudSizes(usize, usize),

    #[error("{op} needs a fixed-M scheme with M >= 2")]
    NeedsFixedM { op: &'static str },

    #[error("run is degenerate: {0}")]
    DegenerateRun(String),

    #[error("need at least {needed} repetitions, found {found}")]
    TooFewRepetitions { needed: usize, found: usize },

    #[error("exact star discrepancy limited to d <= 2 and N <= 512 (got d = {dim}, N = {n})")]
    DiscrepancyTooLarge { dim: usize, n: usize },

    #[error("empty distance list")]
    EmptyDistances,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown model {0:?}")]
    UnknownModel(String),

    #[error("proposal deserialization failed: {0}")]
    ProposalJson(String),
}
