//! Central finite-difference stencils and Richardson extrapolation.

use crate::Real;

/// Central stencil for the `order`-th derivative (1, 2 or 3) of `f` at `x`.
///
/// All three stencils have an even error expansion in `h` starting at `h²`,
/// which is what [`richardson`] assumes.
pub fn central<T: Real, F: Fn(T) -> T>(f: &F, x: T, h: T, order: u32) -> T {
    match order {
        1 => (f(x + h) - f(x - h)) / (T::two() * h),
        2 => (f(x + h) - T::two() * f(x) + f(x - h)) / (h * h),
        3 => {
            let two_h = T::two() * h;
            (f(x + two_h) - T::two() * f(x + h) + T::two() * f(x - h) - f(x - two_h))
                / (T::two() * h * h * h)
        }
        _ => panic!("central stencil order {order} not supported"),
    }
}

/// `Σ|wᵢ| / denominator` of [`central`] with unit step; scales function noise
/// into derivative noise as `ε·max|f|·gain / hᵒʳᵈᵉʳ`.
pub fn central_noise_gain(order: u32) -> f64 {
    match order {
        1 => 1.0,
        2 => 4.0,
        3 => 3.0,
        _ => f64::NAN,
    }
}

/// Outcome of a Richardson tableau.
#[derive(Debug, Clone, Copy)]
pub struct Extrapolated<T> {
    pub value: T,
    /// `max(|Aₙₙ − Aₙ,ₙ₋₁|, |Aₙₙ − Aₙ₋₁,ₙ₋₁|)`
    pub err: T,
    /// The same quantity one level earlier (`∞` with fewer than three rows).
    pub prev_err: T,
}

/// Richardson extrapolation of estimates taken at steps `h, h/2, h/4, …`
/// whose error expands in even powers `h², h⁴, …`.
pub fn richardson<T: Real>(estimates: &[T]) -> Extrapolated<T> {
    assert!(!estimates.is_empty());
    let n = estimates.len();
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(n);
    for (i, &e) in estimates.iter().enumerate() {
        let mut row = Vec::with_capacity(i + 1);
        row.push(e);
        let mut factor = T::one();
        for j in 1..=i {
            factor = factor * T::lit(4.0);
            let prev = row[j - 1];
            row.push(prev + (prev - rows[i - 1][j - 1]) / (factor - T::one()));
        }
        rows.push(row);
    }
    let level_err = |i: usize| -> T {
        if i == 0 {
            T::infinity()
        } else {
            let a = rows[i][i];
            (a - rows[i][i - 1]).abs().max((a - rows[i - 1][i - 1]).abs())
        }
    };
    Extrapolated {
        value: rows[n - 1][n - 1],
        err: level_err(n - 1),
        prev_err: if n >= 2 { level_err(n - 2) } else { T::infinity() },
    }
}

/// Five-point central first derivative, error `O(h⁴)`.
pub fn five_point_first<T: Real, F: Fn(T) -> T>(f: &F, x: T, h: T) -> T {
    let two_h = T::two() * h;
    (f(x - two_h) - T::lit(8.0) * f(x - h) + T::lit(8.0) * f(x + h) - f(x + two_h)) / (T::lit(12.0) * h)
}

/// Five-point central second derivative, error `O(h⁴)`.
pub fn five_point_second<T: Real, F: Fn(T) -> T>(f: &F, x: T, h: T) -> T {
    let two_h = T::two() * h;
    (-f(x - two_h) + T::lit(16.0) * f(x - h) - T::lit(30.0) * f(x) + T::lit(16.0) * f(x + h)
        - f(x + two_h))
        / (T::lit(12.0) * h * h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stencils_on_exp() {
        let f = |x: f64| x.exp();
        for order in 1..=3 {
            let d = central(&f, 0.3, 1e-3, order);
            assert!((d - 0.3f64.exp()).abs() < 1e-5, "order {order}: {d}");
        }
    }

    #[test]
    fn richardson_removes_even_powers() {
        // D(h) = 1 + h² + h⁴ is resolved exactly after two eliminations
        let est: Vec<f64> = (0..3).map(|i| 0.1 / 2f64.powi(i)).map(|h| 1.0 + h * h + h.powi(4)).collect();
        let r = richardson(&est);
        assert!((r.value - 1.0).abs() < 1e-15);
    }

    #[test]
    fn richardson_on_third_derivative() {
        let f = |x: f64| x.sin();
        let est: Vec<f64> = (0..4).map(|i| central(&f, 0.4, 0.02 / 2f64.powi(i), 3)).collect();
        let r = richardson(&est);
        assert!((r.value + 0.4f64.cos()).abs() < 1e-6);
        assert!(r.err < 1e-5);
    }

    #[test]
    fn five_point_rules() {
        let f = |x: f64| x.sin();
        assert!((five_point_first(&f, 0.7, 1e-3) - 0.7f64.cos()).abs() < 1e-12);
        assert!((five_point_second(&f, 0.7, 1e-3) + 0.7f64.sin()).abs() < 1e-9);
    }
}
