//! Dense univariate polynomials in `x`, and the Niven polynomial
//! `f(x) = xⁿ(1-x)ⁿ/n!` together with its endpoint derivatives.
//!
//! The coefficient type is generic so the same code serves rational
//! polynomials and polynomials whose coefficients are Laurent polynomials in
//! the formal symbol Π (see [`crate::trigpoly::PiRat`]).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::combinatorics::{binomial_closed, factorial, falling_factorial, pascal_rows};
use crate::numbers::{Integer, Rational};

/// Coefficient ring for [`Poly`].
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + Add<Output = Self>
    + Sub<Output = Self>
    + Neg<Output = Self>
    + Mul<Output = Self>
{
    /// Multiplication by a rational scalar.
    fn scale(&self, k: &Rational) -> Self;
    fn from_rational(k: Rational) -> Self;
}

impl Coeff for Rational {
    fn scale(&self, k: &Rational) -> Self {
        self * k
    }

    fn from_rational(k: Rational) -> Self {
        k
    }
}

/// `coeffs[i]` is the coefficient of `xⁱ`. Trailing zeros are never stored,
/// so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C = Rational> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// `c·x^k`
    pub fn monomial(c: C, k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> C {
        if x.is_zero() {
            return self.coeff(0);
        }
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc.scale(x) + c.clone())
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&Rational::from_integer(Integer::from(k))))
            .collect();
        Self::new(coeffs)
    }

    /// ℓ-fold derivative.
    pub fn nth_derivative(&self, l: usize) -> Self {
        let mut p = self.clone();
        for _ in 0..l {
            if p.is_zero() {
                break;
            }
            p = p.derivative();
        }
        p
    }

    /// `q(x) = p(1-x)`, by binomial expansion of each `(1-x)^k`.
    pub fn reflect(&self) -> Self {
        let Some(deg) = self.degree() else {
            return Self::zero();
        };
        let triangle = pascal_rows(deg as u32);
        let mut out = vec![C::zero(); deg + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // (1-x)^k = Σ_j C(k,j)(-1)^j x^j
            for (j, binom) in triangle.rows[k].iter().enumerate() {
                let mut s = Rational::from_integer(binom.clone());
                if j % 2 == 1 {
                    s = -s;
                }
                out[j] = out[j].clone() + c.scale(&s);
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, k: &C) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    pub fn scale_rational(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.scale(k)).collect())
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<C: Coeff> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Add for &Poly<C> {
    type Output = Poly<C>;

    fn add(self, rhs: Self) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<C: Coeff> Sub for &Poly<C> {
    type Output = Poly<C>;

    fn sub(self, rhs: Self) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<C: Coeff> Mul for &Poly<C> {
    type Output = Poly<C>;

    fn mul(self, rhs: Self) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<C: Coeff> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c:?})")?,
                1 => write!(f, "({c:?})x")?,
                _ => write!(f, "({c:?})x^{k}")?,
            }
        }
        Ok(())
    }
}

/// `xⁿ·(1-x)ⁿ/n!`, built from its coefficient formula: the coefficient of
/// `xʲ` is `(-1)^{j-n} / ((j-n)!(2n-j)!)` for `n ≤ j ≤ 2n`.
///
/// Panics if `n == 0`. Asserts agreement with the direct product expansion.
pub fn niven_poly(n: u32) -> Poly {
    assert!(n >= 1, "the Niven polynomial needs n ≥ 1");
    let n_us = n as usize;
    let mut coeffs = vec![Rational::zero(); 2 * n_us + 1];
    for j in n..=2 * n {
        let den = factorial(j - n) * factorial(2 * n - j);
        let sign = if (j - n) % 2 == 0 { 1 } else { -1 };
        coeffs[j as usize] = Rational::new(Integer::from(sign), den);
    }
    let f = Poly::new(coeffs);
    debug_assert_eq!(f, niven_poly_by_product(n));
    f
}

/// Direct route: multiply out `x^n` and `(1-x)^n` and divide by `n!`.
pub(crate) fn niven_poly_by_product(n: u32) -> Poly {
    let one_minus_x = Poly::new(vec![Rational::one(), -Rational::one()]);
    let mut prod = Poly::monomial(Rational::one(), n as usize);
    for _ in 0..n {
        prod = &prod * &one_minus_x;
    }
    prod.scale_rational(&Rational::new(Integer::one(), factorial(n)))
}

/// Exact values `f^{(ℓ)}(0)` and `f^{(ℓ)}(1)` for `ℓ = 0..=2n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndpointDerivatives {
    pub at0: Vec<Integer>,
    pub at1: Vec<Integer>,
}

/// `C(n, ℓ-n)·(-1)^{n-ℓ}·ℓ!/n!` for `n ≤ ℓ ≤ 2n`, zero otherwise.
pub fn niven_derivative_at_zero_closed_form(n: u32, l: u32) -> Integer {
    if l < n || l > 2 * n {
        return Integer::zero();
    }
    let c = binomial_closed(n, l - n).expect("l - n ≤ n");
    // ℓ!/n! is the falling factorial of length ℓ-n
    let v = c * falling_factorial(l, l - n);
    if (l - n) % 2 == 0 {
        v
    } else {
        -v
    }
}

fn to_integer(v: Rational, what: &str) -> Integer {
    assert!(v.is_integer(), "non-integral {what}: {v}");
    v.to_integer()
}

/// `q(1-x)` for an integer polynomial, expanded with Pascal rows.
fn reflect_integer(coeffs: &[Integer]) -> Vec<Integer> {
    let Some(deg) = coeffs.len().checked_sub(1) else {
        return Vec::new();
    };
    let triangle = pascal_rows(deg as u32);
    let mut out = vec![Integer::zero(); deg + 1];
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (j, binom) in triangle.rows[k].iter().enumerate() {
            let term = c * binom;
            if j % 2 == 1 {
                out[j] -= term;
            } else {
                out[j] += term;
            }
        }
    }
    out
}

/// Endpoint derivative table of the Niven polynomial. `f^{(ℓ)}(0)` is `ℓ!`
/// times the coefficient of `x^ℓ`; `f^{(ℓ)}(1)` is `(-1)^ℓ ℓ!` times the
/// coefficient of `x^ℓ` in the reflected polynomial `f(1-x)`. Both are
/// computed on `n!·f`, which has integer coefficients, and divided back
/// exactly. Values at 0 are checked against the closed form and, for small
/// `n`, both columns against repeated differentiation.
pub fn niven_endpoint_derivatives(n: u32) -> EndpointDerivatives {
    let f = niven_poly(n);
    let n_fact = factorial(n);
    let n_fact_rat = Rational::from_integer(n_fact.clone());
    let scaled: Vec<Integer> = f
        .coeffs()
        .iter()
        .map(|c| to_integer(c * &n_fact_rat, "n!·f coefficient"))
        .collect();
    let reflected = reflect_integer(&scaled);

    let exact_div = |v: Integer, what: &str| {
        assert!((&v % &n_fact).is_zero(), "non-integral {what}");
        v / &n_fact
    };
    let len = 2 * n as usize + 1;
    let mut at0 = Vec::with_capacity(len);
    let mut at1 = Vec::with_capacity(len);
    let mut l_fact = Integer::one();
    for l in 0..len {
        if l > 0 {
            l_fact *= l;
        }
        let v0 = exact_div(&scaled[l] * &l_fact, "f^(l)(0)");
        assert_eq!(
            v0,
            niven_derivative_at_zero_closed_form(n, l as u32),
            "closed form mismatch at n={n}, l={l}"
        );
        // d^ℓ/dx^ℓ [f(1-x)] = (-1)^ℓ f^{(ℓ)}(1-x); evaluate at x = 0
        let mut v1 = exact_div(&reflected[l] * &l_fact, "f^(l)(1)");
        if l % 2 == 1 {
            v1 = -v1;
        }
        at0.push(v0);
        at1.push(v1);
    }
    if n <= 12 {
        debug_assert_eq!((at0.clone(), at1.clone()), endpoint_derivatives_by_differentiation(&f));
    }
    EndpointDerivatives { at0, at1 }
}

fn endpoint_derivatives_by_differentiation(f: &Poly) -> (Vec<Integer>, Vec<Integer>) {
    let zero = Rational::zero();
    let one = Rational::one();
    let mut d = f.clone();
    let (mut at0, mut at1) = (Vec::new(), Vec::new());
    for _ in 0..=f.degree().unwrap_or(0) {
        at0.push(to_integer(d.eval(&zero), "f^(l)(0)"));
        at1.push(to_integer(d.eval(&one), "f^(l)(1)"));
        d = d.derivative();
    }
    (at0, at1)
}
