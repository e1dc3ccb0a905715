//! Legendre functions of the first kind for real degree, their degree-derivatives
//! at `ν = 0` in closed form, and the order-3 Maclaurin approximant in `ν`.
//!
//! Every numeric routine is generic over [`Real`] (`f32` or `f64`); the `*64`
//! and `*32` aliases below name the concrete instantiations.

pub mod cli;
pub mod error;
mod eval;
pub mod fd;
pub mod format;
pub mod legendre;
pub mod polylog;
pub mod quad;
mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use eval::EvalResult;
pub use legendre::{
    d2p_dnu2_0, d3p_dnu3_0, dp_dnu0, legendre_p, maclaurin_p, nu_derivative_at_zero,
    nu_derivative_oracle, Argument, Degree, MaclaurinTruncation,
};
pub use polylog::{dilog, dilog_integral_oracle, trilog, zeta3, PolylogArg};
pub use scalar::{Real, ZETA2, ZETA3};
pub use verify::{GridSpec, IdentityId, IdentityReport, Spacing, Tolerances};

pub type EvalResult64 = EvalResult<f64>;
pub type EvalResult32 = EvalResult<f32>;
pub type Argument64 = Argument<f64>;
pub type Argument32 = Argument<f32>;
pub type Degree64 = Degree<f64>;
pub type Degree32 = Degree<f32>;
pub type PolylogArg64 = PolylogArg<f64>;
pub type PolylogArg32 = PolylogArg<f32>;
pub type GridSpec64 = GridSpec<f64>;
pub type IdentityReport64 = IdentityReport<f64>;
