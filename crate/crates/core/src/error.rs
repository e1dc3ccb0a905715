use thiserror::Error;

/// Errors raised by argument validation.
///
/// Numerical non-convergence is not an error: it is reported through
/// [`EvalResult::converged`](crate::EvalResult) so that partial values stay available.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{name} = {value} is outside the domain {domain}")]
    Domain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },
    #[error("invalid tolerance {0}: must be finite and > 0")]
    Tolerance(f64),
    #[error("invalid grid: {0}")]
    Grid(String),
    #[error("invalid derivative order {0}: expected 1, 2 or 3")]
    Order(u32),
    #[error("invalid truncation order {0}: expected 0..=3")]
    Truncation(u32),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_tol(tol: f64) -> Result<()> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(Error::Tolerance(tol))
    }
}
