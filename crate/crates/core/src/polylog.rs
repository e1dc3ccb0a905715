//! Dilogarithm and trilogarithm on `[0, 1]`.
//!
//! Both functions use the defining power series `Σ xᵏ/kˢ` where it converges
//! geometrically and a reflection identity elsewhere:
//!
//! * `Li₂`: series for `x ≤ 1/2`; otherwise
//!   `Li₂(x) = π²/6 − ln x·ln(1−x) − Li₂(1−x)`.
//! * `Li₃`: series for `x ≤ 2/3`; otherwise the Landen relation
//!   `Li₃(x) = ζ(3) + ln³x/6 + (π²/6) ln x − ½ ln²x·ln(1−x) − Li₃(1−x) − Li₃(1−1/x)`,
//!   whose two polylog arguments satisfy `1−x < 1/3` and `−1/2 ≤ 1−1/x < 0`.
//!
//! The endpoint `x = 1` is short-circuited to `π²/6` and `ζ(3)`.

use crate::error::{check_tol, Error, Result};
use crate::{quad, EvalResult, Real};

/// Series terms beyond this count mark the result as non-converged.
pub const MAX_SERIES_TERMS: usize = 10_000;

/// Validated polylogarithm argument `x ∈ [0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct PolylogArg<T>(T);

impl<T: Real> PolylogArg<T> {
    pub fn new(x: T) -> Result<Self> {
        if x >= T::zero() && x <= T::one() {
            Ok(Self(x))
        } else {
            Err(Error::Domain {
                name: "x",
                value: x.as_f64(),
                domain: "[0, 1]",
            })
        }
    }

    #[inline]
    pub fn get(self) -> T {
        self.0
    }
}

/// Relative accuracy promised for converged polylog values: `1e-13` in binary64,
/// scaled to `450 ε` for other precisions.
pub fn accuracy_contract<T: Real>(value: T) -> T {
    T::lit(450.0) * T::epsilon() * value.abs() + T::min_positive_value()
}

/// `Σ_{k≥1} xᵏ/kˢ` for `|x| < 1`, with a tail bound.
fn power_series<T: Real>(x: T, s: i32) -> EvalResult<T> {
    let mut power = T::one();
    let mut sum = T::zero();
    let ratio = x.abs();
    for k in 1..=MAX_SERIES_TERMS {
        power = power * x;
        let term = power / T::from_usize(k).unwrap().powi(s);
        sum = sum + term;
        if term.abs() <= T::epsilon() * sum.abs() {
            let tail = term.abs() * ratio / (T::one() - ratio);
            return EvalResult::new(sum, tail + T::two() * T::epsilon() * sum.abs(), true);
        }
    }
    EvalResult::new(sum, T::infinity(), false)
}

fn finish<T: Real>(value: T, err: T, converged: bool) -> EvalResult<T> {
    let converged = converged && err <= accuracy_contract(value);
    EvalResult::new(value, err, converged)
}

/// Dilogarithm `Li₂(x) = −∫₀ˣ ln(1−t)/t dt`.
pub fn dilog<T: Real>(x: PolylogArg<T>) -> EvalResult<T> {
    let x = x.get();
    if x == T::zero() {
        return EvalResult::exact(T::zero());
    }
    if x == T::one() {
        return EvalResult::exact(T::zeta2());
    }
    if x <= T::half() {
        let r = power_series(x, 2);
        return finish(r.value, r.abs_err_est, r.converged);
    }
    // exact by Sterbenz for x ∈ [1/2, 1]
    let y = T::one() - x;
    let ln_x = (-y).ln_1p();
    let ln_y = y.ln();
    let r = power_series(y, 2);
    let value = T::zeta2() - ln_x * ln_y - r.value;
    let err = r.abs_err_est + T::lit(4.0) * T::epsilon() * T::zeta2();
    finish(value, err, r.converged)
}

/// Trilogarithm `Li₃(x) = Σ xᵏ/k³`.
pub fn trilog<T: Real>(x: PolylogArg<T>) -> EvalResult<T> {
    let x = x.get();
    if x == T::zero() {
        return EvalResult::exact(T::zero());
    }
    if x == T::one() {
        return EvalResult::exact(T::zeta3());
    }
    if x <= T::lit(2.0 / 3.0) {
        let r = power_series(x, 3);
        return finish(r.value, r.abs_err_est, r.converged);
    }
    let y = T::one() - x;
    let ln_x = (-y).ln_1p();
    let ln_y = y.ln();
    let w = -y / x;
    let r_y = power_series(y, 3);
    let r_w = power_series(w, 3);
    let ln_x2 = ln_x * ln_x;
    let value = T::zeta3() + ln_x2 * ln_x / T::lit(6.0) + T::zeta2() * ln_x
        - T::half() * ln_x2 * ln_y
        - r_y.value
        - r_w.value;
    let err = r_y.abs_err_est + r_w.abs_err_est + T::lit(8.0) * T::epsilon() * T::zeta3();
    finish(value, err, r_y.converged && r_w.converged)
}

/// Independent dilogarithm oracle: the defining integral evaluated by
/// adaptive quadrature to absolute tolerance `tol`. Requires `x < 1`.
pub fn dilog_integral_oracle<T: Real>(x: PolylogArg<T>, tol: T) -> Result<EvalResult<T>> {
    check_tol(tol.as_f64())?;
    let x = x.get();
    if x >= T::one() {
        return Err(Error::Domain {
            name: "x",
            value: x.as_f64(),
            domain: "[0, 1)",
        });
    }
    let integrand = |t: T| {
        if t == T::zero() {
            T::one()
        } else {
            -(-t).ln_1p() / t
        }
    };
    Ok(quad::integrate(integrand, T::zero(), x, tol))
}

/// Apéry's constant `ζ(3)`.
#[inline]
pub fn zeta3<T: Real>() -> T {
    T::zeta3()
}
