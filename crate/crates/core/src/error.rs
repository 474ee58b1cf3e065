//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid root datum: {0}")]
    InvalidRootDatum(String),
    #[error("Weyl group enumeration exceeded the bound of {0} elements")]
    EnumerationBound(usize),
    #[error("elements belong to different ambient data")]
    MixedContext,
    #[error("invalid module data: {0}")]
    InvalidModule(String),
    #[error("support certificate violated: {0}")]
    SupportCertificate(String),
    #[error("rewrite into the induced basis failed: {0}")]
    Reduction(String),
    #[error("operation requires {0}")]
    Unsupported(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("config error at {path}: {message}")]
    Config { path: String, message: String },
    #[error("parse error at position {pos}: {message}")]
    Parse { pos: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
