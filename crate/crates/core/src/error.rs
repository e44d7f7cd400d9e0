//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported spatial dimension {0} (expected 1 or 2)")]
    UnsupportedDimension(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("fields live on different grids")]
    GridMismatch,

    #[error("V_infinity({x:?}) = {value} falls below the declared bound {v_bar} at node {node}")]
    PotentialBelowBound {
        node: usize,
        x: [f64; 2],
        value: f64,
        v_bar: f64,
    },

    #[error("diffusion matrix is not positive semidefinite (smallest eigenvalue {0:.3e})")]
    NotPositiveSemidefinite(f64),

    #[error("non-finite value {value} produced at node {node} (x = {x:?})")]
    NonFiniteValue { node: usize, x: [f64; 2], value: f64 },

    #[error("eigensolver did not converge after {iterations} iterations (worst residual {residual:.3e})")]
    EigenNotConverged { iterations: usize, residual: f64 },

    #[error("operation requires a nontrivial kernel (kernel_dim = 0): {0}")]
    NoKernel(String),

    #[error("asymptotic limit functions are not available for this nonlinearity")]
    MissingLimits,

    #[error("solution blow-up guard tripped at t = {t:.6e} (H1 norm {h1_norm:.3e})")]
    BlowUp { t: f64, h1_norm: f64 },

    #[error("time integration failed: {0}")]
    Integration(String),

    #[error("Newton iteration exceeded {max_iterations} steps (last residual {residual:.3e})")]
    MaxNewtonExceeded { max_iterations: usize, residual: f64 },

    #[error("GMRES stagnated (relative residual {residual:.3e} after {iterations} iterations)")]
    GmresStagnation { iterations: usize, residual: f64 },

    #[error("Arnoldi eigenvalue estimation did not converge: {0}")]
    ArnoldiNotConverged(String),

    #[error("map vanishes on the sphere boundary (min |map| = {min_abs:.3e}); degree undefined")]
    BoundaryVanishing { min_abs: f64 },

    #[error("degree computation failed: {0}")]
    Degree(String),

    #[error("continuation requires a nonzero degree certificate: {0}")]
    MissingCertificate(String),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
