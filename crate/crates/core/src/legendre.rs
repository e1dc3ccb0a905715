//! Legendre function of the first kind `P_ν(z)` on `z ∈ (-1, 1]` and its
//! degree-derivatives at `ν = 0`.
//!
//! `P_ν(z)` is summed from the Gauss hypergeometric series
//! `₂F₁(−ν, ν+1; 1; u)` with `u = (1−z)/2`, which converges for `u < 1`.
//! The closed forms for `∂ᵏP_ν/∂νᵏ` at `ν = 0` are
//!
//! ```text
//! k = 1:  ln v
//! k = 2:  −2 Li₂(u)
//! k = 3:  12 Li₃(v) − 6 ln v·Li₂(v) − π² ln v − 12 ζ(3)
//! ```
//!
//! with `v = (z+1)/2`.

use crate::error::{check_tol, Error, Result};
use crate::fd;
use crate::polylog::{dilog, trilog, PolylogArg};
use crate::{EvalResult, Real};

/// Relative tolerance used when callers do not pass one.
pub const DEFAULT_TOL: f64 = 1e-14;

/// Series terms beyond this count mark `legendre_p` as non-converged.
pub const MAX_SERIES_TERMS: usize = 100_000;

/// Largest supported `|ν|`.
pub const DEGREE_ENVELOPE: f64 = 5.0;

/// Validated Legendre argument `z ∈ (-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Argument<T>(T);

impl<T: Real> Argument<T> {
    pub fn new(z: T) -> Result<Self> {
        if z > -T::one() && z <= T::one() {
            Ok(Self(z))
        } else {
            Err(Error::Domain {
                name: "z",
                value: z.as_f64(),
                domain: "(-1, 1]",
            })
        }
    }

    #[inline]
    pub fn get(self) -> T {
        self.0
    }

    /// `(1 − z)/2 ∈ [0, 1)`
    #[inline]
    pub fn u(self) -> T {
        (T::one() - self.0) * T::half()
    }

    /// `(z + 1)/2 ∈ (0, 1]`
    #[inline]
    pub fn v(self) -> T {
        (self.0 + T::one()) * T::half()
    }

    /// `ln((z+1)/2)`, computed as `ln(1 − u)` near `z = 1`.
    pub fn ln_v(self) -> T {
        let v = self.v();
        if v < T::half() {
            v.ln()
        } else {
            (-self.u()).ln_1p()
        }
    }
}

/// Validated degree with `|ν| ≤ 5`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Degree<T>(T);

impl<T: Real> Degree<T> {
    pub fn new(nu: T) -> Result<Self> {
        if nu.abs() <= T::lit(DEGREE_ENVELOPE) {
            Ok(Self(nu))
        } else {
            Err(Error::Domain {
                name: "nu",
                value: nu.as_f64(),
                domain: "[-5, 5]",
            })
        }
    }

    #[inline]
    pub fn get(self) -> T {
        self.0
    }
}

/// Number of retained Maclaurin terms beyond the constant: `order ∈ 0..=3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MaclaurinTruncation(u32);

impl MaclaurinTruncation {
    pub const MAX: u32 = 3;

    pub fn new(order: u32) -> Result<Self> {
        if order <= Self::MAX {
            Ok(Self(order))
        } else {
            Err(Error::Truncation(order))
        }
    }

    #[inline]
    pub fn order(self) -> u32 {
        self.0
    }
}

/// `P_ν(z)` by the hypergeometric series in `u = (1−z)/2`.
///
/// Summation stops once the geometric tail bound `|term|·u/(1−u)` falls below
/// `tol·|sum|` (or below the rounding level of the partial sums). The bound is
/// valid once `k ≥ ν`, after which successive term ratios lie in `[0, u)`.
pub fn legendre_p<T: Real>(nu: Degree<T>, z: Argument<T>, tol: T) -> Result<EvalResult<T>> {
    check_tol(tol.as_f64())?;
    let u = z.u();
    if u == T::zero() {
        return Ok(EvalResult::exact(T::one()));
    }
    // P_ν = P_{−ν−1}; reflecting to ν ≥ −1/2 keeps k + ν + 1 > 0
    let nu = if nu.get() < -T::half() { -nu.get() - T::one() } else { nu.get() };
    let tail_factor = u / (T::one() - u);

    let mut term = T::one();
    let mut sum = T::one();
    let mut abs_sum = T::one();
    for k in 0..MAX_SERIES_TERMS {
        let kf = T::from_usize(k).unwrap();
        let k1 = kf + T::one();
        term = term * (kf - nu) * (k1 + nu) / (k1 * k1) * u;
        if term == T::zero() {
            // integer degree: the series terminates
            return Ok(EvalResult::new(sum, T::epsilon() * abs_sum, true));
        }
        sum = sum + term;
        abs_sum = abs_sum + term.abs();
        if k1 >= nu {
            let tail = term.abs() * tail_factor;
            let rounding = T::epsilon() * abs_sum;
            if tail <= tol * sum.abs() || tail <= rounding {
                return Ok(EvalResult::new(sum, tail + rounding, true));
            }
        }
    }
    Ok(EvalResult::new(sum, T::infinity(), false))
}

/// `∂P_ν(z)/∂ν` at `ν = 0`: `ln((z+1)/2)`.
pub fn dp_dnu0<T: Real>(z: Argument<T>) -> T {
    z.ln_v()
}

/// `∂²P_ν(z)/∂ν²` at `ν = 0`: `−2 Li₂((1−z)/2)`.
pub fn d2p_dnu2_0<T: Real>(z: Argument<T>) -> T {
    let li2 = dilog(PolylogArg::new(z.u()).expect("u ∈ [0, 1)"));
    debug_assert!(li2.converged);
    -T::two() * li2.value
}

/// `∂³P_ν(z)/∂ν³` at `ν = 0`:
/// `12 Li₃(v) − 6 ln v·Li₂(v) − π² ln v − 12 ζ(3)` with `v = (z+1)/2`.
pub fn d3p_dnu3_0<T: Real>(z: Argument<T>) -> T {
    let v = PolylogArg::new(z.v()).expect("v ∈ (0, 1]");
    let li2 = dilog(v);
    let li3 = trilog(v);
    debug_assert!(li2.converged && li3.converged);
    let ln_v = z.ln_v();
    let pi2 = T::lit(6.0) * T::zeta2();
    let twelve = T::lit(12.0);
    twelve * (li3.value - T::zeta3()) - T::lit(6.0) * ln_v * li2.value - pi2 * ln_v
}

/// `[∂ᵏP_ν(z)/∂νᵏ]` at `ν = 0` for `k ∈ 0..=3`.
pub fn nu_derivative_at_zero<T: Real>(z: Argument<T>, k: u32) -> Result<T> {
    match k {
        0 => Ok(T::one()),
        1 => Ok(dp_dnu0(z)),
        2 => Ok(d2p_dnu2_0(z)),
        3 => Ok(d3p_dnu3_0(z)),
        _ => Err(Error::Order(k)),
    }
}

/// Maclaurin approximant `Σ_{k ≤ order} νᵏ/k! · [∂ᵏP_ν/∂νᵏ]₀`.
pub fn maclaurin_p<T: Real>(nu: Degree<T>, z: Argument<T>, trunc: MaclaurinTruncation) -> T {
    let nu = nu.get();
    let mut weight = T::one();
    let mut sum = T::one();
    for k in 1..=trunc.order() {
        weight = weight * nu / T::from_u32(k).unwrap();
        let coef = nu_derivative_at_zero(z, k).expect("k ≤ 3");
        sum = sum + weight * coef;
    }
    sum
}

/// Smallest and largest admissible base step for [`nu_derivative_oracle`].
pub const ORACLE_STEP_RANGE: (f64, f64) = (1e-4, 0.1);

/// Number of step halvings in the oracle's Richardson tableau.
pub const ORACLE_HALVINGS: usize = 3;

/// Independent check of the closed forms: central differences of
/// [`legendre_p`] in `ν` about `ν = 0`, Richardson-extrapolated over steps
/// `h, h/2, h/4, h/8`.
///
/// `abs_err_est` is the larger of the final tableau discrepancy and the
/// propagated rounding floor. `converged` is false when the last tableau level
/// is more than twice as uncertain as the previous one, or when any `P_ν`
/// evaluation failed to converge.
pub fn nu_derivative_oracle<T: Real>(z: Argument<T>, order: u32, h: T) -> Result<EvalResult<T>> {
    if !(1..=3).contains(&order) {
        return Err(Error::Order(order));
    }
    let (h_min, h_max) = ORACLE_STEP_RANGE;
    let hf = h.as_f64();
    if !(hf >= h_min && hf <= h_max) {
        return Err(Error::Domain {
            name: "h",
            value: hf,
            domain: "[1e-4, 0.1]",
        });
    }

    let tol = T::epsilon();
    let all_converged = std::cell::Cell::new(true);
    let max_abs = std::cell::Cell::new(T::zero());
    let p = |nu: T| -> T {
        let r = legendre_p(Degree::new(nu).expect("|ν| ≤ 0.2"), z, tol).expect("tol > 0");
        if !r.converged {
            all_converged.set(false);
        }
        max_abs.set(max_abs.get().max(r.value.abs()));
        r.value
    };

    let mut step = h;
    let mut estimates = Vec::with_capacity(ORACLE_HALVINGS + 1);
    for _ in 0..=ORACLE_HALVINGS {
        estimates.push(fd::central(&p, T::zero(), step, order));
        step = step * T::half();
    }
    let h_last = step * T::two();
    let ext = fd::richardson(&estimates);

    let noise = T::lit(10.0) * T::epsilon() * max_abs.get() * T::lit(fd::central_noise_gain(order))
        / h_last.powi(order as i32);
    let err = ext.err.max(noise);
    let converged = all_converged.get() && err <= T::two() * ext.prev_err.max(noise);
    Ok(EvalResult::new(ext.value, err, converged))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(x: f64) -> Argument<f64> {
        Argument::new(x).unwrap()
    }

    fn nu(x: f64) -> Degree<f64> {
        Degree::new(x).unwrap()
    }

    fn p(n: f64, x: f64) -> f64 {
        let r = legendre_p(nu(n), z(x), DEFAULT_TOL).unwrap();
        assert!(r.converged);
        r.value
    }

    fn bonnet(n: usize, x: f64) -> f64 {
        let (mut p0, mut p1) = (1.0, x);
        if n == 0 {
            return p0;
        }
        for k in 1..n {
            let kf = k as f64;
            let p2 = ((2.0 * kf + 1.0) * x * p1 - kf * p0) / (kf + 1.0);
            p0 = p1;
            p1 = p2;
        }
        p1
    }

    #[test]
    fn domain_checks() {
        assert!(Argument::new(-1.0).is_err());
        assert!(Argument::new(1.0 + 1e-15).is_err());
        assert!(Argument::new(f64::NAN).is_err());
        assert!(Argument::new(1.0).is_ok());
        assert!(Degree::new(5.0).is_ok());
        assert!(Degree::new(-5.0001).is_err());
        assert!(MaclaurinTruncation::new(4).is_err());
        assert!(legendre_p(nu(0.5), z(0.2), -1.0).is_err());
    }

    #[test]
    fn fixed_points() {
        for x in [-0.99, -0.5, 0.0, 0.3, 1.0] {
            assert_eq!(p(0.0, x), 1.0);
        }
        assert_eq!(p(0.7, 1.0), 1.0);
        assert!((p(1.0, 0.3) - 0.3).abs() < 1e-16);
    }

    #[test]
    fn non_integer_reference_values() {
        // mpmath hyp2f1(−ν, ν+1, 1, (1−z)/2) at 40 digits
        let cases = [
            (0.5, 0.3, 0.700_938_530_969_655_1),
            (2.7, -0.6, 0.493_950_162_747_685_8),
            (-0.4, 0.8, 1.025_444_942_766_709_8),
            (0.5, -0.98, -1.059_112_658_057_962_5),
        ];
        for (n, x, want) in cases {
            assert!((p(n, x) - want).abs() < 1e-13 * want.abs(), "P_{n}({x})");
        }
    }

    #[test]
    fn integer_degrees_match_bonnet() {
        for n in 0..=5 {
            for i in 0..100 {
                let x = -0.99 + 1.99 * (i as f64) / 99.0;
                let got = p(n as f64, x);
                assert!((got - bonnet(n, x)).abs() <= 1e-12, "P_{n}({x})");
            }
        }
    }

    #[test]
    fn closed_form_reference_values() {
        // mpmath numerical ν-derivatives of hyp2f1(−ν, ν+1, 1, (1−z)/2)
        let cases = [
            (0.0, [-std::f64::consts::LN_2, -1.164_481_052_930_025, 1.284_434_225_200_237_4]),
            (0.5, [-0.287_682_072_451_780_9, -0.535_305_278_165_465_2, 0.236_663_733_548_885_27]),
            (0.9, [-0.051_293_294_387_550_53, -0.101_278_584_928_992_05, 0.007_825_818_184_829_17]),
            (-0.5, [-1.386_294_361_119_890_6, -1.956_938_785_860_612_2, 4.585_302_905_153_478]),
            (-0.9, [-2.995_732_273_553_991, -2.881_267_593_940_079, 16.656_026_928_440_64]),
        ];
        for (x, want) in cases {
            let got = [dp_dnu0(z(x)), d2p_dnu2_0(z(x)), d3p_dnu3_0(z(x))];
            for k in 0..3 {
                assert!((got[k] - want[k]).abs() <= 1e-13 * want[k].abs().max(1.0), "order {} at {x}", k + 1);
            }
        }
    }

    #[test]
    fn closed_forms_vanish_at_one() {
        assert_eq!(dp_dnu0(z(1.0)), 0.0);
        assert_eq!(d2p_dnu2_0(z(1.0)), 0.0);
        assert!(d3p_dnu3_0(z(1.0)).abs() <= 1e-13);
    }

    #[test]
    fn d2_tends_to_minus_pi2_over_3() {
        let lim = -std::f64::consts::PI.powi(2) / 3.0;
        assert!((d2p_dnu2_0(z(-1.0 + 1e-12)) - lim).abs() < 1e-9);
    }

    #[test]
    fn maclaurin_trivial_cases() {
        let t3 = MaclaurinTruncation::new(3).unwrap();
        let t0 = MaclaurinTruncation::new(0).unwrap();
        for x in [-0.7, 0.0, 0.4, 1.0] {
            assert_eq!(maclaurin_p(nu(0.8), z(x), t0), 1.0);
            assert_eq!(maclaurin_p(nu(0.0), z(x), t3), 1.0);
        }
    }

    #[test]
    fn maclaurin_order_four_convergence() {
        let t3 = MaclaurinTruncation::new(3).unwrap();
        let err = |n: f64| (maclaurin_p(nu(n), z(0.5), t3) - p(n, 0.5)).abs();
        let ratio = err(0.1) / err(0.05);
        assert!((12.0..=20.0).contains(&ratio), "ratio {ratio}");
        assert!(err(0.05) < 1e-5);
    }

    #[test]
    fn oracle_examples() {
        let r = nu_derivative_oracle(z(1.0), 2, 0.01).unwrap();
        assert!(r.value.abs() <= 1e-8);
        let r = nu_derivative_oracle(z(0.0), 1, 0.01).unwrap();
        assert!(r.converged);
        assert!((r.value + std::f64::consts::LN_2).abs() <= 1e-9);
        let r = nu_derivative_oracle(z(0.5), 3, 0.02).unwrap();
        assert!((r.value - d3p_dnu3_0(z(0.5))).abs() <= 1e-5);
        assert!(r.abs_err_est <= 1e-5);
    }

    #[test]
    fn oracle_rejects_bad_inputs() {
        assert_eq!(nu_derivative_oracle(z(0.0), 4, 0.01), Err(Error::Order(4)));
        assert!(nu_derivative_oracle(z(0.0), 2, 0.5).is_err());
        assert!(nu_derivative_oracle(z(0.0), 2, 1e-5).is_err());
    }

    #[test]
    fn single_precision_series() {
        let r = legendre_p(Degree::new(0.5f32).unwrap(), Argument::new(0.3f32).unwrap(), 1e-6).unwrap();
        assert!(r.converged);
        assert!((r.value - 0.700_938_5).abs() < 1e-5);
        let d2 = d2p_dnu2_0(Argument::new(0.0f32).unwrap());
        assert!((d2 + 1.164_481).abs() < 1e-5);
    }

    proptest! {
        #[test]
        fn boundary_normalization(n in -0.9f64..2.0) {
            prop_assert!((p(n, 1.0) - 1.0).abs() <= 1e-13);
        }

        #[test]
        fn degree_reflection(n in -5.0f64..4.0, x in -0.95f64..1.0) {
            let a = p(n, x);
            let b = p(-n - 1.0, x);
            prop_assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0));
        }

        #[test]
        fn d2_is_nonpositive(x in -0.999f64..1.0) {
            prop_assert!(d2p_dnu2_0(z(x)) < 0.0);
        }
    }
}
