use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numbers::{format_rational, parse_rational, Rational, RationalInterval};
use crate::polynomials::Coeff;

/// A Laurent polynomial `Σ c_k Π^k` in the formal symbol Π with rational
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "BTreeMap<i32, String>", try_from = "BTreeMap<i32, String>")]
pub struct PiRat {
    terms: BTreeMap<i32, Rational>,
}

impl PiRat {
    pub fn from_rational(c: Rational) -> Self {
        Self::term(c, 0)
    }

    /// `c·Π^k`
    pub fn term(c: Rational, k: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    /// `Π^k`
    pub fn pi_pow(k: i32) -> Self {
        Self::term(Rational::one(), k)
    }

    pub fn coeff(&self, k: i32) -> Rational {
        self.terms.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_abs_exponent(&self) -> u32 {
        self.terms.keys().map(|k| k.unsigned_abs()).max().unwrap_or(0)
    }

    pub fn has_only_even_powers(&self) -> bool {
        self.terms.keys().all(|k| k % 2 == 0)
    }

    /// Multiplies by `Π^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    fn accumulate(&mut self, k: i32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    /// Replaces `Π^{2k}` by `t^k`. Fails if an odd power is present.
    pub fn substitute_pi2(&self, t: &Rational) -> Result<Rational> {
        if let Some(k) = self.terms.keys().find(|k| *k % 2 != 0) {
            return Err(Error::OddPiPower(*k));
        }
        let mut sum = Rational::zero();
        for (k, c) in &self.terms {
            let half = k / 2;
            let p = if half >= 0 {
                num_traits::pow(t.clone(), half as usize)
            } else {
                if t.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                num_traits::pow(t.recip(), half.unsigned_abs() as usize)
            };
            sum += c * p;
        }
        Ok(sum)
    }

    /// Interval containing the value at every `π ∈ pi`.
    ///
    /// Positive and negative powers are each evaluated by Horner's rule,
    /// rounding outward after every step to a precision a few bits finer
    /// than the width of `pi` can resolve.
    pub fn eval_interval(&self, pi: &RationalInterval) -> Result<RationalInterval> {
        if self.terms.is_empty() {
            return Ok(RationalInterval::point(Rational::zero()));
        }
        let bits = working_bits(pi, self.max_abs_exponent());
        let top = self.terms.keys().next_back().copied().unwrap_or(0).max(0) as u32;
        let bottom = self.terms.keys().next().copied().unwrap_or(0).min(0).unsigned_abs();

        let mut acc = horner(|j| self.coeff(j as i32), top, pi, bits);
        if bottom > 0 {
            let inv = pi.recip()?;
            let tail = horner(|j| if j == 0 { Rational::zero() } else { self.coeff(-(j as i32)) }, bottom, &inv, bits);
            acc = acc.add(&tail);
        }
        Ok(acc)
    }

    /// Termwise evaluation `Σ c_k·pi^k` with exact interval powers.
    pub fn eval_interval_termwise(&self, pi: &RationalInterval) -> Result<RationalInterval> {
        let mut acc = RationalInterval::point(Rational::zero());
        for (k, c) in &self.terms {
            acc = acc.add(&pi.powi(*k)?.scale(c));
        }
        Ok(acc)
    }
}

/// `None` means exact arithmetic.
fn working_bits(pi: &RationalInterval, max_exp: u32) -> Option<u32> {
    if pi.is_point() {
        return None;
    }
    let w = pi.width();
    let resolved = (w.denom().bits() as i64 - w.numer().bits() as i64).max(0) as u32;
    // |pi|^j can amplify rounding by up to 2^{j·log2|pi|}
    let magnitude = pi.lo().abs().max(pi.hi().abs());
    let growth = (magnitude.numer().bits() as i64 - magnitude.denom().bits() as i64 + 1).max(0) as u32;
    Some(resolved + growth * max_exp + 32)
}

/// `Σ_{j=0}^{top} coeff(j)·x^j`.
fn horner(coeff: impl Fn(u32) -> Rational, top: u32, x: &RationalInterval, bits: Option<u32>) -> RationalInterval {
    let mut acc = RationalInterval::point(Rational::zero());
    for j in (0..=top).rev() {
        acc = acc.mul(x).add_rational(&coeff(j));
        if let Some(bits) = bits {
            acc = acc.simplify(bits);
        }
    }
    acc
}

impl From<Rational> for PiRat {
    fn from(c: Rational) -> Self {
        Self::from_rational(c)
    }
}

impl Zero for PiRat {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl Add for PiRat {
    type Output = PiRat;

    fn add(mut self, rhs: PiRat) -> PiRat {
        for (k, c) in rhs.terms {
            self.accumulate(k, c);
        }
        self
    }
}

impl Sub for PiRat {
    type Output = PiRat;

    fn sub(self, rhs: PiRat) -> PiRat {
        self + (-rhs)
    }
}

impl Neg for PiRat {
    type Output = PiRat;

    fn neg(self) -> PiRat {
        PiRat {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl Mul for PiRat {
    type Output = PiRat;

    fn mul(self, rhs: PiRat) -> PiRat {
        &self * &rhs
    }
}

impl Mul for &PiRat {
    type Output = PiRat;

    fn mul(self, rhs: &PiRat) -> PiRat {
        let mut out = PiRat::zero();
        for (i, a) in &self.terms {
            for (j, b) in &rhs.terms {
                out.accumulate(i + j, a * b);
            }
        }
        out
    }
}

impl Coeff for PiRat {
    fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    fn from_rational(k: Rational) -> Self {
        PiRat::from_rational(k)
    }
}

impl From<PiRat> for BTreeMap<i32, String> {
    fn from(p: PiRat) -> Self {
        p.terms.iter().map(|(k, c)| (*k, format_rational(c))).collect()
    }
}

impl TryFrom<BTreeMap<i32, String>> for PiRat {
    type Error = Error;

    fn try_from(m: BTreeMap<i32, String>) -> Result<Self> {
        let mut out = PiRat::zero();
        for (k, v) in m {
            out.accumulate(k, parse_rational(&v)?);
        }
        Ok(out)
    }
}

impl fmt::Debug for PiRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let c = if i == 0 {
                c.clone()
            } else if c.is_negative() {
                f.write_str(" - ")?;
                -c
            } else {
                f.write_str(" + ")?;
                c.clone()
            };
            match k {
                0 => write!(f, "{}", format_rational(&c))?,
                1 => write!(f, "{}·Π", format_rational(&c))?,
                _ => write!(f, "{}·Π^{k}", format_rational(&c))?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for PiRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
