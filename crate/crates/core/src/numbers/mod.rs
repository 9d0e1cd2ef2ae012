//! Exact integers and rationals, rational-endpoint intervals and certified
//! decimal rendering.
//!
//! `Integer` and `Rational` are the `num` crate's arbitrary-precision types.
//! Everything else in the crate is built on them; no floating-point value
//! ever enters a computation whose result is reported as certified.

mod decimal;
mod interval;

pub use decimal::{lower_decimal, to_decimal, upper_decimal, Decimal};
pub use interval::RationalInterval;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// Binary operation selector for [`rat_arith`] and [`RationalInterval::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

pub fn rat_int(v: impl Into<Integer>) -> Rational {
    Rational::from_integer(v.into())
}

/// Exact rational arithmetic; the result is always in lowest terms with a
/// positive denominator.
pub fn rat_arith(x: &Rational, y: &Rational, op: ArithOp) -> Result<Rational> {
    Ok(match op {
        ArithOp::Add => x + y,
        ArithOp::Sub => x - y,
        ArithOp::Mul => x * y,
        ArithOp::Div => {
            if y.is_zero() {
                return Err(Error::DivisionByZero);
            }
            x / y
        }
    })
}

/// Parses `A/B` or a bare integer `A`. Only decimal integers are accepted.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("expected a fraction A/B, got {s:?}"));
    let parse_int = |t: &str| -> Result<Integer> {
        let t = t.trim();
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<Integer>().map_err(|_| bad())
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let (n, d) = (parse_int(n)?, parse_int(d)?);
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

/// Renders `p/q`, or just `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `x·2^k` rounded toward negative infinity.
pub(crate) fn floor_scaled(x: &Rational, k: u32) -> Integer {
    let scaled = x.numer() << k as usize;
    scaled.div_floor(x.denom())
}

/// `x·2^k` rounded toward positive infinity.
pub(crate) fn ceil_scaled(x: &Rational, k: u32) -> Integer {
    let scaled = x.numer() << k as usize;
    let (q, r) = scaled.div_mod_floor(x.denom());
    if r.is_zero() {
        q
    } else {
        q + 1
    }
}

pub(crate) fn dyadic(m: Integer, k: u32) -> Rational {
    Rational::new(m, Integer::one() << k as usize)
}

pub fn pow10(d: u32) -> Integer {
    num_traits::pow(int(10), d as usize)
}

/// `10^-d` as a rational.
pub fn ten_to_minus(d: u32) -> Rational {
    Rational::new(Integer::one(), pow10(d))
}

/// Bits needed so that `2^-bits < 10^-digits`, plus `guard`.
pub fn digits_to_bits(digits: u32, guard: u32) -> u32 {
    // log2(10) < 3.3219281
    ((digits as u64 * 33_219_281).div_ceil(10_000_000)) as u32 + guard
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

pub(crate) mod serde_str {
    //! Serde adapters that write arbitrary-precision numbers as decimal strings.
    use super::{format_rational, parse_rational, Integer, Rational};
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub mod integer {
        use super::*;
        pub fn serialize<S: Serializer>(v: &Integer, s: S) -> Result<S::Ok, S::Error> {
            s.serialize_str(&v.to_string())
        }
        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Integer, D::Error> {
            let s = String::deserialize(d)?;
            s.parse().map_err(D::Error::custom)
        }
    }

    pub mod rational {
        use super::*;
        pub fn serialize<S: Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
            s.serialize_str(&format_rational(v))
        }
        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
            let s = String::deserialize(d)?;
            parse_rational(&s).map_err(D::Error::custom)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes() {
        let r = rat_arith(&rat(4, 6), &rat(0, 1), ArithOp::Add).unwrap();
        assert_eq!(r, rat(2, 3));
        assert_eq!(*r.numer(), int(2));
        assert_eq!(*r.denom(), int(3));
    }

    #[test]
    fn rhind_square() {
        let r = rat_arith(&rat(16, 9), &rat(16, 9), ArithOp::Mul).unwrap();
        assert_eq!(r, rat(256, 81));
    }

    #[test]
    fn difference_of_approximations() {
        // long hand: 22·100 - 314·7 = 2, over 700
        let r = rat_arith(&rat(22, 7), &rat(314, 100), ArithOp::Sub).unwrap();
        assert_eq!(r, rat(1, 350));
    }

    #[test]
    fn divide_by_zero() {
        assert_eq!(
            rat_arith(&rat(1, 2), &rat(0, 1), ArithOp::Div),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn parses_fractions() {
        assert_eq!(parse_rational("19/7").unwrap(), rat(19, 7));
        assert_eq!(parse_rational("-4/6").unwrap(), rat(-2, 3));
        assert_eq!(parse_rational("12").unwrap(), rat(12, 1));
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("1/").is_err());
        assert!(parse_rational("a/b").is_err());
        assert_eq!(parse_rational("1/0"), Err(Error::DivisionByZero));
    }

    #[test]
    fn scaled_rounding() {
        let x = rat(1, 3);
        assert_eq!(floor_scaled(&x, 2), int(1));
        assert_eq!(ceil_scaled(&x, 2), int(2));
        assert_eq!(floor_scaled(&-x.clone(), 2), int(-2));
        assert_eq!(ceil_scaled(&rat(1, 2), 1), int(1));
    }
}
