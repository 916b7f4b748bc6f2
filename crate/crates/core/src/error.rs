use thiserror::Error;

/// Errors raised by the library. Numerical verdicts (failed monotonicity
/// samples, chain deviations) are report content and never show up here.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("cycle order {0} is below the minimum of 2")]
    CycleOrder(usize),

    #[error("cycle orders {p} + {q} exceed the vertex count {n}")]
    OrdersExceedVertexCount { n: usize, p: usize, q: usize },

    #[error("vertex {vertex} out of range for a digraph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("duplicate arc {from} -> {to}")]
    DuplicateArc { from: usize, to: usize },

    #[error("digraph must have at least one vertex")]
    EmptyDigraph,

    #[error("class enumeration requires n >= 4, got {0}")]
    ClassTooSmall(usize),

    #[error("tolerance {0:e} outside (0, 1e-6]")]
    Tolerance(f64),

    #[error("polynomial must have degree >= 1")]
    ConstantPolynomial,

    #[error("root finder did not converge after {iterations} iterations (max update {max_update:e}, max residual {max_residual:e})")]
    NoConvergence {
        iterations: usize,
        max_update: f64,
        max_residual: f64,
    },

    #[error("argument {value} outside domain {domain}")]
    Domain { value: f64, domain: &'static str },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown chain id `{0}`")]
    UnknownChain(String),

    #[error("chain `{chain_id}` is not admissible at n = {n}: {reason}")]
    Inadmissible {
        chain_id: String,
        n: usize,
        reason: String,
    },

    #[error("category {category} is not defined for n = {n}")]
    CategoryMismatch { category: String, n: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
