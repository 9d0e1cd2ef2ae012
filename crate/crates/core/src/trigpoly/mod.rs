//! Exact symbolic calculus on `P(x)·sin(Πx) + Q(x)·cos(Πx) + c`, where `P`
//! and `Q` have coefficients in the Laurent ring `ℚ[Π, Π⁻¹]`.
//!
//! Π is purely formal here. The only facts about it that enter are the
//! endpoint values `sin(0) = sin(Π) = 0`, `cos(0) = 1`, `cos(Π) = -1`.
//! Numeric values appear only through [`pirat_eval_interval`].

mod pirat;

pub use pirat::PiRat;

use std::fmt;

use num_traits::{One, Zero};

use crate::error::Result;
use crate::numbers::{Rational, RationalInterval};
use crate::polynomials::{Coeff, Poly};

pub type PiPoly = Poly<PiRat>;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct TrigPoly {
    /// Coefficient polynomial of `sin(Πx)`.
    pub sin: PiPoly,
    /// Coefficient polynomial of `cos(Πx)`.
    pub cos: PiPoly,
    /// Additive constant of integration.
    pub constant: PiRat,
}

impl TrigPoly {
    pub fn new(sin: PiPoly, cos: PiPoly) -> Self {
        Self {
            sin,
            cos,
            constant: PiRat::zero(),
        }
    }

    pub fn with_constant(mut self, c: PiRat) -> Self {
        self.constant = c;
        self
    }

    pub fn scale(&self, k: &PiRat) -> Self {
        Self {
            sin: self.sin.scale(k),
            cos: self.cos.scale(k),
            constant: self.constant.clone() * k.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            sin: &self.sin + &other.sin,
            cos: &self.cos + &other.cos,
            constant: self.constant.clone() + other.constant.clone(),
        }
    }

    /// Largest `|k|` over all `Π^k` appearing anywhere.
    pub fn max_abs_exponent(&self) -> u32 {
        self.sin
            .coeffs()
            .iter()
            .chain(self.cos.coeffs())
            .chain(std::iter::once(&self.constant))
            .map(PiRat::max_abs_exponent)
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Debug for TrigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}]·sin(Πx) + [{:?}]·cos(Πx)", self.sin, self.cos)?;
        if !self.constant.is_zero() {
            write!(f, " + {:?}", self.constant)?;
        }
        Ok(())
    }
}

fn pi_times(p: &PiPoly) -> PiPoly {
    p.map(|c| c.shift(1))
}

/// `(P sin + Q cos + c)' = (P' - ΠQ) sin + (Q' + ΠP) cos`.
pub fn trig_derivative(t: &TrigPoly) -> TrigPoly {
    TrigPoly::new(
        &t.sin.derivative() - &pi_times(&t.cos),
        &t.cos.derivative() + &pi_times(&t.sin),
    )
}

/// Antiderivative of `p(x)·sin(Πx)` by repeated integration by parts:
/// sin-part `p'/Π² - p'''/Π⁴ + …`, cos-part `-p/Π + p''/Π³ - …`.
///
/// The result is differentiated back and compared with the integrand.
pub fn antiderivative_p_sin(p: &PiPoly) -> TrigPoly {
    let mut sin = PiPoly::zero();
    let mut cos = PiPoly::zero();
    let mut d = p.clone();
    let mut k: i32 = 0;
    while !d.is_zero() {
        // d = p^{(k)}
        let sign = if (k / 2) % 2 == 0 { Rational::one() } else { -Rational::one() };
        if k % 2 == 0 {
            // -(-1)^{k/2} p^{(k)} / Π^{k+1}
            cos = &cos + &d.map(|c| c.shift(-(k + 1)).scale(&-sign.clone()));
        } else {
            // (-1)^{(k-1)/2} p^{(k)} / Π^{k+1}
            sin = &sin + &d.map(|c| c.shift(-(k + 1)).scale(&sign));
        }
        d = d.derivative();
        k += 1;
    }
    let t = TrigPoly::new(sin, cos);
    assert_eq!(
        trig_derivative(&t),
        TrigPoly::new(p.clone(), PiPoly::zero()),
        "antiderivative failed to differentiate back"
    );
    t
}

/// `T(1) - T(0)` using `sin(0) = sin(Π) = 0`, `cos(0) = 1`, `cos(Π) = -1`,
/// i.e. `-Q(1) - Q(0)`. The constant of integration cancels.
pub fn definite_01(t: &TrigPoly) -> PiRat {
    let q1 = t.cos.eval(&Rational::one());
    let q0 = t.cos.eval(&Rational::zero());
    let at1 = -q1 + t.constant.clone();
    let at0 = q0 + t.constant.clone();
    at1 - at0
}

/// `Π^{2k} ↦ t^k`.
pub fn pirat_substitute_pi2(l: &PiRat, t: &Rational) -> Result<Rational> {
    l.substitute_pi2(t)
}

/// Interval containing `l(π)` for every `π` in `pi`.
pub fn pirat_eval_interval(l: &PiRat, pi: &RationalInterval) -> Result<RationalInterval> {
    l.eval_interval(pi)
}

/// Lifts a rational polynomial to Π-valued coefficients.
pub fn lift(p: &Poly) -> PiPoly {
    p.map(|c| PiRat::from_rational(c.clone()))
}
