#![allow(dead_code)]

use irratio::numbers::{Rational, RationalInterval};
use num_traits::ToPrimitive;

/// Adaptive Simpson quadrature with Richardson correction.
pub fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    refine(f, a, b, fa, fm, fb, whole, tol, 60)
}

#[allow(clippy::too_many_arguments)]
fn refine(f: &dyn Fn(f64) -> f64, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: u32) -> f64 {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    refine(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) + refine(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
}

/// `xⁿ(1-x)ⁿ/n!` in floating point.
pub fn niven_f64(n: u32, x: f64) -> f64 {
    let fact: f64 = (1..=n).map(f64::from).product();
    (x * (1.0 - x)).powi(n as i32) / fact
}

/// `∫₀¹ xⁿ(1-x)ⁿ/n! · sin(πx) dx` to roughly 14 significant digits.
pub fn niven_sin_integral(n: u32) -> f64 {
    let f = |x: f64| niven_f64(n, x) * (std::f64::consts::PI * x).sin();
    // scale the tolerance to the integrand's size, max at x = 1/2
    let scale = niven_f64(n, 0.5);
    adaptive_simpson(&f, 0.0, 1.0, scale * 1e-15)
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().expect("finite")
}

pub fn midpoint_f64(iv: &RationalInterval) -> f64 {
    to_f64(&iv.midpoint())
}

pub fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}
