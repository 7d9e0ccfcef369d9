use thiserror::Error;

use crate::units::{Dimension, UnitSystem};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} must be finite")]
    NonFinite(&'static str),

    #[error("{name} out of range: {detail}")]
    OutOfRange { name: &'static str, detail: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch {
        expected: Dimension,
        found: Dimension,
    },

    #[error("{dimension} is not expressible in {system} units")]
    NotExpressible {
        dimension: Dimension,
        system: UnitSystem,
    },

    #[error("unknown constant `{0}`")]
    UnknownConstant(String),

    #[error("integrand returned NaN at x = {0}")]
    NanIntegrand(f64),

    #[error(
        "quadrature did not converge after {evaluations} evaluations \
         (partial estimate {estimate:e} ± {error_estimate:e})"
    )]
    NonConvergence {
        estimate: f64,
        error_estimate: f64,
        evaluations: usize,
    },

    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),

    #[error("invalid density matrix: {0}")]
    InvalidDensityMatrix(String),

    #[error("invalid probability distribution: {0}")]
    InvalidDistribution(String),

    #[error("invalid dispersion relation: {0}")]
    InvalidDispersion(String),

    #[error("no horizon: M² = {mass_sq:e} < a² + Q² = {spin_charge_sq:e}")]
    NakedSingularity { mass_sq: f64, spin_charge_sq: f64 },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn range(name: &'static str, detail: impl Into<String>) -> Self {
        Error::OutOfRange {
            name,
            detail: detail.into(),
        }
    }
}

/// Rejects non-finite values and values that are not strictly positive.
pub(crate) fn positive(name: &'static str, value: f64) -> Result<f64> {
    if !value.is_finite() {
        return Err(Error::NonFinite(name));
    }
    if value <= 0.0 {
        return Err(Error::range(name, format!("must be > 0, got {value}")));
    }
    Ok(value)
}

pub(crate) fn finite(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite(name))
    }
}
