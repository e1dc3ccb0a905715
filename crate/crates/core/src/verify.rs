//! Numerical certification of the identities behind the closed forms.
//!
//! Each check samples an identity on a [`GridSpec`] and condenses the pointwise
//! residuals into an [`IdentityReport`]. Residuals are absolute. Points whose
//! underlying evaluation did not converge are left out and counted in
//! [`IdentityReport::excluded`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{check_tol, Error, Result};
use crate::fd::{five_point_first, five_point_second};
use crate::legendre::{d2p_dnu2_0, d3p_dnu3_0, legendre_p, Argument, Degree};
use crate::polylog::{dilog, trilog, PolylogArg};
use crate::{quad, EvalResult, Real};

/// Step of the five-point `z`-derivative stencils used by the ODE checks.
pub const ODE_FD_STEP: f64 = 1e-3;

/// Largest upper integration limit accepted by checks whose antiderivative
/// carries `ln(1−t)` terms.
pub const MAX_LOG_ENDPOINT: f64 = 0.999;

/// Default number of grid points.
pub const DEFAULT_COUNT: usize = 101;

/// Degree used by [`run_all`] for the base ODE check.
pub const DEFAULT_ODE_DEGREE: f64 = 0.5;

/// Fraction of an interval check's tolerance handed to the quadrature engine.
const QUAD_TOL_FRACTION: f64 = 1e-2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum IdentityId {
    /// `[d/dz (1−z²) d/dz + ν(ν+1)] P_ν = 0`
    #[serde(rename = "ode_base")]
    OdeBase,
    /// `d/dz (1−z²) d/dz D₂ = −2 − 2 ln v`
    #[serde(rename = "ode_deriv2")]
    OdeDeriv2,
    /// `d/dz (1−z²) d/dz D₃ = −6 ln v + 6 Li₂(u)`
    #[serde(rename = "ode_deriv3")]
    OdeDeriv3,
    /// `Li₂(x) + Li₂(1−x) = π²/6 − ln x·ln(1−x)`
    #[serde(rename = "euler")]
    Euler,
    /// `∫ Li₂ = t Li₂ t + (t−1) ln(1−t) − t`
    #[serde(rename = "dilog_antiderivative")]
    DilogAntiderivative,
    /// `∫ Li₂(t)/(1−t) = 2 Li₃(1−t) − ln(1−t) Li₂(1−t) − (π²/6) ln(1−t)`
    #[serde(rename = "li2_over_1mz")]
    Li2Over1mz,
    /// `(1−z²) dD₂/dz = −2(z+1) ln v`
    #[serde(rename = "first_integral_deriv2")]
    FirstIntegralDeriv2,
    /// `(1−z²) dD₃/dz = 6(z−1) Li₂(u)`
    #[serde(rename = "first_integral_deriv3")]
    FirstIntegralDeriv3,
    /// `∫ Li₂(t)/(1−t)` in the form carrying `ln t·ln²(1−t)`
    #[serde(rename = "li2_over_1mz_unsimplified")]
    Li2Over1mzUnsimplified,
}

impl IdentityId {
    /// The six identities run by [`run_all`].
    pub const CORE: [IdentityId; 6] = [
        IdentityId::OdeBase,
        IdentityId::OdeDeriv2,
        IdentityId::OdeDeriv3,
        IdentityId::Euler,
        IdentityId::DilogAntiderivative,
        IdentityId::Li2Over1mz,
    ];

    /// Companion checks run in addition by [`run_extended`].
    pub const COMPANIONS: [IdentityId; 3] = [
        IdentityId::FirstIntegralDeriv2,
        IdentityId::FirstIntegralDeriv3,
        IdentityId::Li2Over1mzUnsimplified,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::OdeBase => "ode_base",
            IdentityId::OdeDeriv2 => "ode_deriv2",
            IdentityId::OdeDeriv3 => "ode_deriv3",
            IdentityId::Euler => "euler",
            IdentityId::DilogAntiderivative => "dilog_antiderivative",
            IdentityId::Li2Over1mz => "li2_over_1mz",
            IdentityId::FirstIntegralDeriv2 => "first_integral_deriv2",
            IdentityId::FirstIntegralDeriv3 => "first_integral_deriv3",
            IdentityId::Li2Over1mzUnsimplified => "li2_over_1mz_unsimplified",
        }
    }

    pub fn default_tolerance(self) -> f64 {
        match self {
            IdentityId::OdeBase | IdentityId::OdeDeriv2 | IdentityId::OdeDeriv3 => 1e-6,
            IdentityId::Euler => 1e-12,
            IdentityId::DilogAntiderivative => 1e-10,
            IdentityId::Li2Over1mz => 1e-9,
            IdentityId::FirstIntegralDeriv2 | IdentityId::FirstIntegralDeriv3 => 1e-10,
            IdentityId::Li2Over1mzUnsimplified => 1e-8,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let all = IdentityId::CORE.iter().chain(IdentityId::COMPANIONS.iter());
        if let Some(&id) = all.into_iter().find(|id| id.as_str() == s) {
            return Ok(id);
        }
        match s {
            "euler_reflection" => Ok(IdentityId::Euler),
            _ => Err(Error::UnknownIdentity(s.to_owned())),
        }
    }
}

/// Per-identity tolerance overrides on top of [`IdentityId::default_tolerance`].
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Tolerances {
    overrides: BTreeMap<IdentityId, f64>,
}

impl Tolerances {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, id: IdentityId, tol: f64) -> Result<()> {
        check_tol(tol)?;
        self.overrides.insert(id, tol);
        Ok(())
    }

    pub fn with(mut self, id: IdentityId, tol: f64) -> Result<Self> {
        self.set(id, tol)?;
        Ok(self)
    }

    /// Parses and applies an `<identity>=<value>` override.
    pub fn apply_override(&mut self, spec: &str) -> Result<()> {
        let (name, value) = spec
            .split_once('=')
            .ok_or_else(|| Error::UnknownIdentity(spec.to_owned()))?;
        let id: IdentityId = name.trim().parse()?;
        let tol: f64 = value.trim().parse().map_err(|_| Error::Tolerance(f64::NAN))?;
        self.set(id, tol)
    }

    pub fn get(&self, id: IdentityId) -> f64 {
        self.overrides.get(&id).copied().unwrap_or_else(|| id.default_tolerance())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    #[default]
    Uniform,
    /// Chebyshev–Lobatto points, clustered toward both ends.
    Chebyshev,
}

impl FromStr for Spacing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform" => Ok(Spacing::Uniform),
            "chebyshev" => Ok(Spacing::Chebyshev),
            _ => Err(Error::Grid(format!("unknown spacing `{s}`"))),
        }
    }
}

/// Inclusive sample grid `start..=end` with `count ≥ 2` points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec<T> {
    pub start: T,
    pub end: T,
    pub count: usize,
    pub spacing: Spacing,
}

impl<T: Real> GridSpec<T> {
    pub fn new(start: T, end: T, count: usize, spacing: Spacing) -> Result<Self> {
        if !(start.is_finite() && end.is_finite() && start < end) {
            return Err(Error::Grid(format!("need finite start < end, got [{start}, {end}]")));
        }
        if count < 2 {
            return Err(Error::Grid(format!("need at least 2 points, got {count}")));
        }
        Ok(Self {
            start,
            end,
            count,
            spacing,
        })
    }

    pub fn uniform(start: T, end: T, count: usize) -> Result<Self> {
        Self::new(start, end, count, Spacing::Uniform)
    }

    /// Grid points in ascending order; both endpoints are hit exactly.
    pub fn points(&self) -> Vec<T> {
        let n = self.count - 1;
        let nf = T::from_usize(n).unwrap();
        let mid = (self.start + self.end) * T::half();
        let half = (self.end - self.start) * T::half();
        (0..=n)
            .map(|i| {
                if i == 0 {
                    return self.start;
                }
                if i == n {
                    return self.end;
                }
                let i = T::from_usize(i).unwrap();
                match self.spacing {
                    Spacing::Uniform => self.start + (self.end - self.start) * (i / nf),
                    Spacing::Chebyshev => mid - half * (T::PI() * i / nf).cos(),
                }
            })
            .collect()
    }

    /// Checks `lo ≤ start` and `end ≤ hi`; `open` makes either bound strict.
    pub fn require_within(&self, lo: T, hi: T, open_lo: bool, open_hi: bool) -> Result<()> {
        let lo_ok = if open_lo { self.start > lo } else { self.start >= lo };
        let hi_ok = if open_hi { self.end < hi } else { self.end <= hi };
        if lo_ok && hi_ok {
            Ok(())
        } else {
            let (l, r) = (if open_lo { "(" } else { "[" }, if open_hi { ")" } else { "]" });
            Err(Error::Grid(format!(
                "grid [{}, {}] must lie within {l}{lo}, {hi}{r}",
                self.start, self.end
            )))
        }
    }
}

/// Residual statistics of one identity over a sample grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport<T> {
    pub identity_id: IdentityId,
    pub samples: usize,
    pub max_residual: T,
    pub mean_residual: T,
    pub argmax_location: T,
    pub tolerance: T,
    pub passed: bool,
    /// Points dropped because an evaluation did not converge.
    #[serde(default, skip_serializing_if = "is_zero")]
    pub excluded: usize,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

impl<T: Real> IdentityReport<T> {
    /// Builds a report from `(location, residual)` pairs. A NaN residual counts
    /// as an infinite one so it can never pass.
    pub fn from_residuals(
        identity_id: IdentityId,
        residuals: &[(T, T)],
        excluded: usize,
        tolerance: T,
    ) -> Self {
        let mut max_residual = T::zero();
        let mut argmax_location = T::nan();
        let mut sum = T::zero();
        for &(loc, r) in residuals {
            let r = if r.is_nan() { T::infinity() } else { r.abs() };
            if argmax_location.is_nan() || r > max_residual {
                max_residual = r;
                argmax_location = loc;
            }
            sum = sum + r;
        }
        let samples = residuals.len();
        let mean_residual = if samples == 0 {
            T::nan()
        } else {
            sum / T::from_usize(samples).unwrap()
        };
        if samples == 0 {
            max_residual = T::infinity();
        }
        Self {
            identity_id,
            samples,
            max_residual,
            mean_residual,
            argmax_location,
            tolerance,
            passed: samples > 0 && max_residual <= tolerance,
            excluded,
        }
    }
}

/// Collects residuals, dropping points whose evaluation reports `None`.
fn collect<T: Real>(points: impl IntoIterator<Item = (T, Option<T>)>) -> (Vec<(T, T)>, usize) {
    let mut out = Vec::new();
    let mut excluded = 0;
    for (loc, r) in points {
        match r {
            Some(r) => out.push((loc, r)),
            None => excluded += 1,
        }
    }
    (out, excluded)
}

fn fd_grid_bounds<T: Real>(grid: &GridSpec<T>) -> Result<T> {
    let h = T::lit(ODE_FD_STEP);
    let margin = T::two() * h;
    grid.require_within(-T::one() + margin, T::one() - margin, true, false)?;
    Ok(h)
}

fn arg<T: Real>(z: T) -> Argument<T> {
    Argument::new(z).expect("grid validated inside (-1, 1]")
}

/// `(1−z²) f'' − 2z f'` by five-point stencils at steps `h` and `h/2`,
/// combined by one Richardson step to cancel the `h⁴` error term.
fn legendre_operator<T: Real, F: Fn(T) -> T>(f: &F, z: T, h: T) -> T {
    let at = |h: T| (T::one() - z * z) * five_point_second(f, z, h) - T::two() * z * five_point_first(f, z, h);
    let coarse = at(h);
    let fine = at(h * T::half());
    fine + (fine - coarse) / T::lit(15.0)
}

/// Residual of `[d/dz (1−z²) d/dz + ν(ν+1)] P_ν(z) = 0` with `z`-derivatives
/// of [`legendre_p`] from five-point stencils.
pub fn check_ode_base<T: Real>(nu: Degree<T>, grid: &GridSpec<T>, tolerance: T) -> Result<IdentityReport<T>> {
    let h = fd_grid_bounds(grid)?;
    let lambda = nu.get() * (nu.get() + T::one());
    let (res, excluded) = collect(grid.points().into_iter().map(|z| {
        let ok = std::cell::Cell::new(true);
        let p = |x: T| {
            let r = legendre_p(nu, arg(x), T::epsilon()).expect("tol > 0");
            ok.set(ok.get() && r.converged);
            r.value
        };
        let r = legendre_operator(&p, z, h) + lambda * p(z);
        (z, ok.get().then_some(r))
    }));
    Ok(IdentityReport::from_residuals(IdentityId::OdeBase, &res, excluded, tolerance))
}

/// Residual of `d/dz (1−z²) d/dz D₂(z) = −2 − 2 ln((z+1)/2)` where
/// `D₂ = −2 Li₂((1−z)/2)` is the closed-form second `ν`-derivative.
pub fn check_ode_deriv2<T: Real>(grid: &GridSpec<T>, tolerance: T) -> Result<IdentityReport<T>> {
    let h = fd_grid_bounds(grid)?;
    let f = |x: T| d2p_dnu2_0(arg(x));
    let (res, excluded) = collect(grid.points().into_iter().map(|z| {
        let rhs = -T::two() - T::two() * arg(z).ln_v();
        (z, Some(legendre_operator(&f, z, h) - rhs))
    }));
    Ok(IdentityReport::from_residuals(IdentityId::OdeDeriv2, &res, excluded, tolerance))
}

/// Residual of `d/dz (1−z²) d/dz D₃(z) = −6 ln((z+1)/2) + 6 Li₂((1−z)/2)`.
pub fn check_ode_deriv3<T: Real>(grid: &GridSpec<T>, tolerance: T) -> Result<IdentityReport<T>> {
    let h = fd_grid_bounds(grid)?;
    let f = |x: T| d3p_dnu3_0(arg(x));
    let (res, excluded) = collect(grid.points().into_iter().map(|z| {
        let a = arg(z);
        let li2 = dilog(PolylogArg::new(a.u()).expect("u ∈ [0, 1)"));
        let rhs = T::lit(-6.0) * a.ln_v() + T::lit(6.0) * li2.value;
        (z, li2.converged.then(|| legendre_operator(&f, z, h) - rhs))
    }));
    Ok(IdentityReport::from_residuals(IdentityId::OdeDeriv3, &res, excluded, tolerance))
}

fn open_unit_z<T: Real>(grid: &GridSpec<T>) -> Result<()> {
    grid.require_within(-T::one(), T::one(), true, true)
}

/// `(1−z²)·dD₂/dz + 2(z+1) ln((z+1)/2)` using the analytic derivative
/// `d/dz Li₂((1−z)/2) = ln((z+1)/2)/(1−z)`.
pub fn check_first_integral_deriv2<T: Real>(grid: &GridSpec<T>, tolerance: T) -> Result<IdentityReport<T>> {
    open_unit_z(grid)?;
    let (res, excluded) = collect(grid.points().into_iter().map(|z| {
        let a = arg(z);
        let ln_v = a.ln_v();
        let d_li2 = ln_v / (T::one() - z);
        let lhs = (T::one() - z * z) * (-T::two() * d_li2);
        (z, Some(lhs + T::two() * (z + T::one()) * ln_v))
    }));
    Ok(IdentityReport::from_residuals(IdentityId::FirstIntegralDeriv2, &res, excluded, tolerance))
}

/// `(1−z²)·dD₃/dz − 6(z−1) Li₂((1−z)/2)`, with `dD₃/dz` obtained by the chain
/// rule on the closed form: `[6 Li₂(v) + 6 ln v·ln(1−v) − π²] / (2v)`.
pub fn check_first_integral_deriv3<T: Real>(grid: &GridSpec<T>, tolerance: T) -> Result<IdentityReport<T>> {
    open_unit_z(grid)?;
    let six = T::lit(6.0);
    let pi2 = six * T::zeta2();
    let (res, excluded) = collect(grid.points().into_iter().map(|z| {
        let a = arg(z);
        let (u, v) = (a.u(), a.v());
        let li2_v = dilog(PolylogArg::new(v).expect("v ∈ (0, 1)"));
        let li2_u = dilog(PolylogArg::new(u).expect("u ∈ (0, 1)"));
        let d3 = (six * li2_v.value + six * a.ln_v() * u.ln() - pi2) / (T::two() * v);
        let r = (T::one() - z * z) * d3 - six * (z - T::one()) * li2_u.value;
        (z, (li2_u.converged && li2_v.converged).then_some(r))
    }));
    Ok(IdentityReport::from_residuals(IdentityId::FirstIntegralDeriv3, &res, excluded, tolerance))
}

/// `Li₂(x) + Li₂(1−x) − π²/6 + ln x·ln(1−x)` over a grid inside `(0, 1)`.
pub fn check_euler_reflection<T: Real>(grid: &GridSpec<T>, tolerance: T) -> Result<IdentityReport<T>> {
    grid.require_within(T::zero(), T::one(), true, true)?;
    let (res, excluded) = collect(grid.points().into_iter().map(|x| (x, euler_residual(x).ok())));
    Ok(IdentityReport::from_residuals(IdentityId::Euler, &res, excluded, tolerance))
}

/// Pointwise reflection residual; `Err` when either dilogarithm failed to converge.
pub fn euler_residual<T: Real>(x: T) -> Result<T> {
    let y = T::one() - x;
    let a = dilog(PolylogArg::new(x)?);
    let b = dilog(PolylogArg::new(y)?);
    if !(a.converged && b.converged) {
        return Err(Error::Domain {
            name: "x",
            value: x.as_f64(),
            domain: "dilogarithm convergence region",
        });
    }
    Ok(a.value + b.value - T::zeta2() + x.ln() * y.ln())
}

fn dilog_value<T: Real>(t: T) -> T {
    dilog(PolylogArg::new(t).expect("t ∈ [0, 1]")).value
}

fn interval_residual<T, F, G>(integrand: F, antiderivative: G, a: T, b: T, tol: T) -> Result<EvalResult<T>>
where
    T: Real,
    F: Fn(T) -> T,
    G: Fn(T) -> T,
{
    check_tol(tol.as_f64())?;
    if a == b {
        return Ok(EvalResult::exact(T::zero()));
    }
    let q = quad::integrate(integrand, a, b, tol * T::lit(QUAD_TOL_FRACTION));
    let closed = antiderivative(b) - antiderivative(a);
    Ok(EvalResult::new(q.value - closed, q.abs_err_est, q.converged))
}

fn dilog_antiderivative<T: Real>(t: T) -> T {
    let log_term = if t == T::one() { T::zero() } else { (t - T::one()) * (-t).ln_1p() };
    t * dilog_value(t) + log_term - t
}

/// `∫_a^b Li₂(t) dt − [t Li₂ t + (t−1) ln(1−t) − t]_a^b` with the integral by
/// adaptive quadrature. Requires `0 ≤ a, b ≤ 1`.
pub fn dilog_antiderivative_residual<T: Real>(a: T, b: T, tol: T) -> Result<EvalResult<T>> {
    PolylogArg::new(a)?;
    PolylogArg::new(b)?;
    interval_residual(dilog_value, dilog_antiderivative, a, b, tol)
}

fn li2_over_1mz_antiderivative<T: Real>(t: T) -> T {
    let s = T::one() - t;
    let ln_s = (-t).ln_1p();
    let s_arg = PolylogArg::new(s).expect("1−t ∈ (0, 1]");
    T::two() * trilog(s_arg).value - ln_s * dilog(s_arg).value - T::zeta2() * ln_s
}

fn li2_over_1mz_antiderivative_unsimplified<T: Real>(t: T) -> T {
    let s = T::one() - t;
    let ln_s = (-t).ln_1p();
    let s_arg = PolylogArg::new(s).expect("1−t ∈ (0, 1]");
    T::two() * trilog(s_arg).value - ln_s * dilog_value(t) - T::two() * ln_s * dilog(s_arg).value
        - t.ln() * ln_s * ln_s
}

fn li2_over_1mz_integrand<T: Real>(t: T) -> T {
    dilog_value(t) / (T::one() - t)
}

fn check_log_endpoints<T: Real>(a: T, b: T) -> Result<()> {
    let hi = T::lit(MAX_LOG_ENDPOINT);
    for t in [a, b] {
        if !(t >= T::zero() && t <= hi) {
            return Err(Error::Domain {
                name: "t",
                value: t.as_f64(),
                domain: "[0, 0.999]",
            });
        }
    }
    Ok(())
}

/// `∫_a^b Li₂(t)/(1−t) dt − [2 Li₃(1−t) − ln(1−t) Li₂(1−t) − (π²/6) ln(1−t)]_a^b`.
/// Endpoints beyond `0.999` are rejected.
pub fn li2_over_1mz_residual<T: Real>(a: T, b: T, tol: T) -> Result<EvalResult<T>> {
    check_log_endpoints(a, b)?;
    interval_residual(li2_over_1mz_integrand, li2_over_1mz_antiderivative, a, b, tol)
}

/// Same integral against the antiderivative
/// `2 Li₃(1−t) − ln(1−t) Li₂(t) − 2 ln(1−t) Li₂(1−t) − ln t·ln²(1−t)`;
/// both endpoints must be strictly positive.
pub fn li2_over_1mz_unsimplified_residual<T: Real>(a: T, b: T, tol: T) -> Result<EvalResult<T>> {
    check_log_endpoints(a, b)?;
    if a <= T::zero() || b <= T::zero() {
        return Err(Error::Domain {
            name: "t",
            value: a.min(b).as_f64(),
            domain: "(0, 0.999]",
        });
    }
    interval_residual(li2_over_1mz_integrand, li2_over_1mz_antiderivative_unsimplified, a, b, tol)
}

fn interval_report<T, R>(id: IdentityId, grid: &GridSpec<T>, tolerance: T, residual: R) -> Result<IdentityReport<T>>
where
    T: Real,
    R: Fn(T, T, T) -> Result<EvalResult<T>>,
{
    let points = grid.points();
    let mut out = Vec::with_capacity(points.len() - 1);
    for w in points.windows(2) {
        let r = residual(w[0], w[1], tolerance)?;
        out.push((w[1], r.converged.then_some(r.value)));
    }
    let (res, excluded) = collect(out);
    Ok(IdentityReport::from_residuals(id, &res, excluded, tolerance))
}

/// [`dilog_antiderivative_residual`] on every consecutive grid pair; the
/// reported location of each sample is the interval's right end.
pub fn check_dilog_antiderivative<T: Real>(grid: &GridSpec<T>, tolerance: T) -> Result<IdentityReport<T>> {
    grid.require_within(T::zero(), T::one(), false, true)?;
    interval_report(IdentityId::DilogAntiderivative, grid, tolerance, dilog_antiderivative_residual)
}

/// [`li2_over_1mz_residual`] on every consecutive grid pair.
pub fn check_li2_over_1mz_integral<T: Real>(grid: &GridSpec<T>, tolerance: T) -> Result<IdentityReport<T>> {
    grid.require_within(T::zero(), T::lit(MAX_LOG_ENDPOINT), false, false)?;
    interval_report(IdentityId::Li2Over1mz, grid, tolerance, li2_over_1mz_residual)
}

/// [`li2_over_1mz_unsimplified_residual`] on every consecutive grid pair.
pub fn check_li2_over_1mz_unsimplified<T: Real>(grid: &GridSpec<T>, tolerance: T) -> Result<IdentityReport<T>> {
    grid.require_within(T::zero(), T::lit(MAX_LOG_ENDPOINT), true, false)?;
    interval_report(IdentityId::Li2Over1mzUnsimplified, grid, tolerance, li2_over_1mz_unsimplified_residual)
}

/// Grid used for `id` by [`run_all`] and [`run_extended`].
pub fn default_grid<T: Real>(id: IdentityId) -> GridSpec<T> {
    let (start, end, count) = match id {
        IdentityId::OdeBase | IdentityId::OdeDeriv2 | IdentityId::OdeDeriv3 => (-0.95, 0.95, DEFAULT_COUNT),
        IdentityId::FirstIntegralDeriv2 | IdentityId::FirstIntegralDeriv3 => (-0.99, 0.99, DEFAULT_COUNT),
        IdentityId::Euler => (0.001, 0.999, DEFAULT_COUNT),
        IdentityId::DilogAntiderivative => (0.0, 0.99, DEFAULT_COUNT),
        IdentityId::Li2Over1mz => (0.0, MAX_LOG_ENDPOINT, DEFAULT_COUNT),
        IdentityId::Li2Over1mzUnsimplified => (0.1, 0.85, 4),
    };
    GridSpec::uniform(T::lit(start), T::lit(end), count).expect("static grid")
}

/// Runs one identity on its default grid.
pub fn run_one<T: Real>(id: IdentityId, tolerances: &Tolerances) -> Result<IdentityReport<T>> {
    let grid = default_grid::<T>(id);
    let tol = T::lit(tolerances.get(id));
    match id {
        IdentityId::OdeBase => check_ode_base(Degree::new(T::lit(DEFAULT_ODE_DEGREE))?, &grid, tol),
        IdentityId::OdeDeriv2 => check_ode_deriv2(&grid, tol),
        IdentityId::OdeDeriv3 => check_ode_deriv3(&grid, tol),
        IdentityId::Euler => check_euler_reflection(&grid, tol),
        IdentityId::DilogAntiderivative => check_dilog_antiderivative(&grid, tol),
        IdentityId::Li2Over1mz => check_li2_over_1mz_integral(&grid, tol),
        IdentityId::FirstIntegralDeriv2 => check_first_integral_deriv2(&grid, tol),
        IdentityId::FirstIntegralDeriv3 => check_first_integral_deriv3(&grid, tol),
        IdentityId::Li2Over1mzUnsimplified => check_li2_over_1mz_unsimplified(&grid, tol),
    }
}

fn run_ids<T: Real>(ids: &[IdentityId], tolerances: &Tolerances) -> Vec<IdentityReport<T>> {
    ids.iter()
        .map(|&id| {
            // default grids are valid by construction; a failure here is a bug
            run_one(id, tolerances).unwrap_or_else(|e| panic!("default check {id} failed to run: {e}"))
        })
        .collect()
}

/// The six core checks on default grids, in [`IdentityId::CORE`] order.
pub fn run_all<T: Real>(tolerances: &Tolerances) -> Vec<IdentityReport<T>> {
    run_ids(&IdentityId::CORE, tolerances)
}

/// [`run_all`] followed by the three companion checks.
pub fn run_extended<T: Real>(tolerances: &Tolerances) -> Vec<IdentityReport<T>> {
    let ids: Vec<IdentityId> = IdentityId::CORE.iter().chain(&IdentityId::COMPANIONS).copied().collect();
    run_ids(&ids, tolerances)
}

pub fn all_passed<T>(reports: &[IdentityReport<T>]) -> bool {
    reports.iter().all(|r| r.passed)
}
