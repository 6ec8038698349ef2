use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("matrix is singular (det = {det:e})")]
    SingularMatrix { det: f64 },

    #[error("vertex {vertex} is not outer (Gram entry {gram:e} <= 0); cannot truncate")]
    NotTruncatable { vertex: usize, gram: f64 },

    #[error("degenerate triangle: side length {side:e} below threshold")]
    DegenerateTriangle { side: f64 },

    #[error("no convergence after {iterations} iterations, bracket [{lo}, {hi}]")]
    Convergence { iterations: usize, lo: f64, hi: f64 },
}
