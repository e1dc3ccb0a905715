use serde::{Deserialize, Serialize};

use crate::Real;

/// A computed value together with an a-posteriori absolute error estimate.
///
/// `converged == false` means the routine hit an iteration cap or its internal
/// consistency check failed; `value` then holds the best partial result.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult<T> {
    pub value: T,
    pub abs_err_est: T,
    pub converged: bool,
}

impl<T: Real> EvalResult<T> {
    pub fn exact(value: T) -> Self {
        Self {
            value,
            abs_err_est: T::zero(),
            converged: true,
        }
    }

    pub(crate) fn new(value: T, abs_err_est: T, converged: bool) -> Self {
        Self {
            value,
            abs_err_est: abs_err_est.abs(),
            converged,
        }
    }
}
