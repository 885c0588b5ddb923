use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared by every module of the laboratory.
#[derive(Debug, Error)]
pub enum Error {
    #[error("state {value} outside admissible range [-{bound}, {bound}]")]
    OutOfRange { value: f64, bound: f64 },

    #[error("grid mismatch: expected {expected} cells, got {got}")]
    GridMismatch { expected: usize, got: usize },

    #[error("shift {shift} is not a whole number of cells (dx = {dx})")]
    UnalignedShift { shift: f64, dx: f64 },

    #[error("custom source operator has no pointwise map configured")]
    UnconfiguredSource,

    #[error("quadrature stopped at error {achieved:.3e} (requested {requested:.3e}), value {value:.17e}")]
    Quadrature {
        value: f64,
        achieved: f64,
        requested: f64,
    },

    #[error("derivative requested at the singular point x = {x}")]
    Singularity { x: f64 },

    #[error("reference jump fell to the configured floor at t = {time}")]
    GapViolation { time: f64 },

    #[error("solution left the admissible range at t = {time} (max |u| = {max_abs})")]
    Blowup { time: f64, max_abs: f64 },

    #[error("trace window {width} is narrower than one cell (dx = {dx})")]
    WindowTooNarrow { width: f64, dx: f64 },

    #[error("characteristic left the domain at t = {time}")]
    PathEscape { time: f64 },

    #[error("time grids do not match: {detail}")]
    TimeGridMismatch { detail: String },

    #[error("invalid shock quadruple: {detail}")]
    InvalidQuadruple { detail: String },

    #[error("invalid grid: {detail}")]
    InvalidGrid { detail: String },

    #[error("{path}:{line}: {msg}")]
    Config {
        path: String,
        line: usize,
        msg: String,
    },

    #[error("bad checkpoint: {0}")]
    Checkpoint(String),

    #[error("missing traces: {0}")]
    MissingTraces(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
