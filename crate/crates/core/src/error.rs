use thiserror::Error;

/// Errors raised by the series, partition and transform routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("series has zero constant term")]
    ZeroConstantTerm,
    #[error("series is not a delta series (nonzero constant term)")]
    NotDeltaSeries,
    #[error("no compositional inverse: linear coefficient is zero")]
    NoCompositionalInverse,
    #[error("series must have constant term 1")]
    NotUnitConstant,
    #[error("{what}: n = {n} outside the supported range {min}..={max}")]
    OutOfBounds {
        what: &'static str,
        n: usize,
        min: usize,
        max: usize,
    },
    #[error("ground sets differ: {left} vs {right}")]
    GroundSetMismatch { left: usize, right: usize },
    #[error("first partition does not refine the second")]
    NotRefinement,
    #[error("partition is crossing")]
    Crossing,
    #[error("not a parking function: {0:?}")]
    NotParking(Vec<usize>),
    #[error("invalid set partition: {0}")]
    InvalidPartition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_bounds(what: &'static str, n: usize, min: usize, max: usize) -> Result<()> {
    if n < min || n > max {
        return Err(Error::OutOfBounds { what, n, min, max });
    }
    Ok(())
}
