use thiserror::Error;

use crate::rules::FeasibilityReport;

/// Errors produced by graph construction, analysis, and simulation.
///
/// `SolveResidual` and `InternalInvariant` indicate that an internal
/// certificate failed to hold; every other variant reports bad input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph is disconnected (vertex {unreached} unreachable from vertex 0)")]
    Disconnected { unreached: usize },

    #[error("invalid {family} parameters: {reason}")]
    InvalidFamilyParams {
        family: &'static str,
        reason: String,
    },

    #[error("random connected sampling failed after {attempts} attempts (n={n}, p={p})")]
    SamplingExhausted { n: usize, p: f64, attempts: usize },

    #[error("edge value length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("edge value at index {index} is {value}, which is not allowed for {role}")]
    BadEdgeValue {
        index: usize,
        value: f64,
        role: &'static str,
    },

    #[error("weight function is not feasible: {0}")]
    Infeasible(FeasibilityReport),

    #[error(
        "resistance {r} on edge ({u}, {v}) exceeds min[d(u), d(v)] = {min_degree}; \
         the tree construction requires r(e) <= min degree"
    )]
    ResistanceAboveMinDegree {
        u: usize,
        v: usize,
        r: f64,
        min_degree: f64,
    },

    #[error("exact cyclic cover requires n <= {max_n}, got n = {n}; use the bounds instead")]
    ExactLimitExceeded { n: usize, max_n: usize },

    #[error("edge set is not a spanning tree: {reason}")]
    NotSpanningTree { reason: String },

    #[error("walk exceeded the step cap of {cap} steps")]
    StepCapExceeded { cap: u64 },

    #[error("need at least {min} {what}, got {got}")]
    TooFew {
        what: &'static str,
        min: usize,
        got: usize,
    },

    #[error("unknown conductance rule '{0}' (expected min-degree, sqrt, max-degree, or unit)")]
    UnknownRule(String),

    #[error("unknown graph family '{0}'")]
    UnknownFamily(String),

    #[error("invalid alpha '{0}': expected a fraction p/q with 0 < p < q")]
    InvalidAlpha(String),

    #[error("graph file is not canonical: {reason}")]
    NonCanonicalGraph { reason: String },

    #[error("linear solve residual {residual:.3e} above tolerance {tol:.1e}")]
    SolveResidual { residual: f64, tol: f64 },

    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

impl Error {
    /// True for failures of internal certificates rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::SolveResidual { .. } | Error::InternalInvariant(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
