use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{ceil_scaled, dyadic, floor_scaled, format_rational, ArithOp, Integer, Rational};
use crate::error::{Error, Result};

/// A closed interval `[lo, hi]` with exact rational endpoints.
///
/// Every operation returns an interval that contains the exact image of its
/// inputs. Endpoints are only ever moved outward, either by the arithmetic
/// itself or by [`RationalInterval::simplify`].
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalInterval {
    #[serde(with = "super::serde_str::rational")]
    lo: Rational,
    #[serde(with = "super::serde_str::rational")]
    hi: Rational,
}

impl RationalInterval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInput(format!(
                "interval endpoints out of order: {} > {}",
                format_rational(&lo),
                format_rational(&hi)
            )));
        }
        Ok(Self { lo, hi })
    }

    pub fn point(x: Rational) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
        }
    }

    /// Smallest interval containing both `a` and `b`.
    pub fn hull_of(a: Rational, b: Rational) -> Self {
        if a <= b {
            Self { lo: a, hi: b }
        } else {
            Self { lo: b, hi: a }
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn into_bounds(self) -> (Rational, Rational) {
        (self.lo, self.hi)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Integer::from(2)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// `true` if the interval lies strictly inside the open interval `(lo, hi)`.
    pub fn is_inside_open(&self, lo: &Rational, hi: &Rational) -> bool {
        lo < &self.lo && &self.hi < hi
    }

    /// Every point is strictly positive.
    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    /// Every point is strictly negative.
    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = (&self.lo).max(&other.lo).clone();
        let hi = (&self.hi).min(&other.hi).clone();
        (lo <= hi).then_some(Self { lo, hi })
    }

    pub fn hull(&self, other: &Self) -> Self {
        Self {
            lo: (&self.lo).min(&other.lo).clone(),
            hi: (&self.hi).max(&other.hi).clone(),
        }
    }

    /// Widens the interval symmetrically by `r ≥ 0`.
    pub fn widen(&self, r: &Rational) -> Self {
        debug_assert!(!r.is_negative());
        Self {
            lo: &self.lo - r,
            hi: &self.hi + r,
        }
    }

    pub fn arith(&self, other: &Self, op: ArithOp) -> Result<Self> {
        Ok(match op {
            ArithOp::Add => self.add(other),
            ArithOp::Sub => self.sub(other),
            ArithOp::Mul => self.mul(other),
            ArithOp::Div => self.div(other)?,
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.lo.is_negative() || other.lo.is_negative() {
            let products = [
                &self.lo * &other.lo,
                &self.lo * &other.hi,
                &self.hi * &other.lo,
                &self.hi * &other.hi,
            ];
            let lo = products.iter().min().unwrap().clone();
            let hi = products.iter().max().unwrap().clone();
            Self { lo, hi }
        } else {
            Self {
                lo: &self.lo * &other.lo,
                hi: &self.hi * &other.hi,
            }
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::hull_of(&self.lo * k, &self.hi * k)
    }

    pub fn add_rational(&self, k: &Rational) -> Self {
        Self {
            lo: &self.lo + k,
            hi: &self.hi + k,
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.contains_zero() {
            return Err(Error::DivisorContainsZero);
        }
        Ok(Self {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.recip()?))
    }

    pub fn square(&self) -> Self {
        self.powi(2).expect("non-negative power")
    }

    /// Integer power. Even powers of an interval straddling zero start at 0;
    /// negative powers require `0 ∉ self`.
    pub fn powi(&self, e: i32) -> Result<Self> {
        if e < 0 {
            return self.recip()?.powi(-e);
        }
        let e = e as usize;
        if e == 0 {
            return Ok(Self::point(Rational::one()));
        }
        let lo_p = num_traits::pow(self.lo.clone(), e);
        let hi_p = num_traits::pow(self.hi.clone(), e);
        Ok(if e % 2 == 1 || !self.lo.is_negative() {
            // monotone on this domain
            Self { lo: lo_p, hi: hi_p }
        } else if !self.hi.is_positive() {
            Self { lo: hi_p, hi: lo_p }
        } else {
            Self {
                lo: Rational::zero(),
                hi: lo_p.max(hi_p),
            }
        })
    }

    /// Enclosure of the square root. Each endpoint is rounded outward to a
    /// multiple of `2^-precision` using the exact integer square root, so the
    /// result is never wider than `width(√x) + 2^{1-precision}`.
    pub fn sqrt(&self, precision: u32) -> Result<Self> {
        if self.lo.is_negative() {
            return Err(Error::NegativeSqrt);
        }
        let two_p = 2 * precision;
        // floor(√(lo·4^p)) ≤ √lo · 2^p
        let lo_floor = floor_scaled(&self.lo, two_p).sqrt();
        let hi_scaled = ceil_scaled(&self.hi, two_p);
        let mut hi_root = hi_scaled.sqrt();
        if &hi_root * &hi_root < hi_scaled {
            hi_root += 1;
        }
        Ok(Self {
            lo: dyadic(lo_floor, precision),
            hi: dyadic(hi_root, precision),
        })
    }

    /// Rounds endpoints outward to multiples of `2^-bits` when their
    /// denominators exceed `bits` bits. The result always contains `self`.
    pub fn simplify(&self, bits: u32) -> Self {
        let lo = if self.lo.denom().bits() > bits as u64 {
            dyadic(floor_scaled(&self.lo, bits), bits)
        } else {
            self.lo.clone()
        };
        let hi = if self.hi.denom().bits() > bits as u64 {
            dyadic(ceil_scaled(&self.hi, bits), bits)
        } else {
            self.hi.clone()
        };
        Self { lo, hi }
    }
}

impl From<Rational> for RationalInterval {
    fn from(x: Rational) -> Self {
        Self::point(x)
    }
}

impl fmt::Debug for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", format_rational(&self.lo), format_rational(&self.hi))
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
