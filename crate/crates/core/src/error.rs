use thiserror::Error;

/// Errors raised by the library. Check failures are never errors; they are
/// reported as verdicts with witnesses.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("capacity exceeded: {what} has {got} elements, limit is {limit}")]
    Capacity {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("degenerate shape: {0}")]
    DegenerateShape(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("point ({x}, {y}) is the pole of an inversion")]
    Pole { x: f64, y: f64 },
    #[error("map is not invertible on its domain: {0}")]
    NonInvertible(String),
    #[error("image of closed set {0} is not closed")]
    NotClosedPreserving(String),
    #[error("cover element #{0} is not open")]
    NotOpen(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_capacity(what: &'static str, got: usize, limit: usize) -> Result<()> {
    if got > limit {
        Err(Error::Capacity { what, got, limit })
    } else {
        Ok(())
    }
}
