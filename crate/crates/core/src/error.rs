use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix {what} is not Hermitian (max violation {violation:e})")]
    NotHermitian { what: String, violation: f64 },

    #[error("matrix is not skew-symmetric (max violation {violation:e})")]
    NotSkew { violation: f64 },

    #[error("matrix side {0} is odd")]
    OddSide(usize),

    #[error("singular at tolerance: smallest |eigenvalue| {gap:e} <= tol {tol:e}")]
    SingularAtTolerance { gap: f64, tol: f64 },

    #[error("symmetry violation: {flag} fails for matrix {matrix} (max violation {violation:e})")]
    Symmetry {
        matrix: usize,
        flag: String,
        violation: f64,
    },

    #[error("signature {0} is odd; half-signature index is undefined")]
    OddSignature(i64),

    #[error("interpolation inconsistent: held-out residual {residual:e} exceeds {tol:e}")]
    Interpolation { residual: f64, tol: f64 },

    #[error("no sign change of f(r) in [0, {r_max}] for angles ({theta}, {phi})")]
    NoBracket { theta: f64, phi: f64, r_max: f64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("unknown example '{0}'")]
    UnknownExample(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
