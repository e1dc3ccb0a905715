//! Scalar abstraction shared by every numeric routine in the crate.

use std::fmt::{Debug, Display, LowerExp};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real floating-point scalar: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + LowerExp + Default + Send + Sync + 'static
{
    /// Converts an `f64` literal into `Self`, rounding to the nearest representable value.
    #[inline]
    fn lit(x: f64) -> Self {
        // f64 -> f32/f64 conversion is total for finite inputs
        Self::from_f64(x).unwrap()
    }

    #[inline]
    fn two() -> Self {
        Self::one() + Self::one()
    }

    #[inline]
    fn half() -> Self {
        Self::lit(0.5)
    }

    /// `π²/6`, the value of `Li₂(1)`.
    #[inline]
    fn zeta2() -> Self {
        Self::lit(ZETA2)
    }

    /// Apéry's constant `ζ(3)`, the value of `Li₃(1)`.
    #[inline]
    fn zeta3() -> Self {
        Self::lit(ZETA3)
    }

    /// Lossy conversion to `f64`, used for diagnostics and serialization.
    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// `π²/6` correctly rounded to binary64.
pub const ZETA2: f64 = 1.644_934_066_848_226_4;

/// `ζ(3) = 1.2020569031595942853997…` correctly rounded to binary64.
pub const ZETA3: f64 = 1.202_056_903_159_594_2;
