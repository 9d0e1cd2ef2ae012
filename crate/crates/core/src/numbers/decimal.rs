use std::fmt;

use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use super::{pow10, Integer, Rational, RationalInterval};

/// A decimal string whose every printed digit is certified by an enclosure.
///
/// `exact` is set only when the printed text is the full, terminating value
/// of a point interval. Otherwise the `Display` form carries a trailing `…`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decimal {
    pub text: String,
    pub exact: bool,
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)?;
        if !self.exact {
            f.write_str("…")?;
        }
        Ok(())
    }
}

/// Truncated expansion of a non-negative rational with `digits` fractional
/// digits. Returns the text and whether the expansion terminated.
fn truncated(x: &Rational, digits: u32) -> (String, bool) {
    debug_assert!(!x.is_negative());
    let scaled = x.numer() * pow10(digits);
    let (q, r) = scaled.div_rem(x.denom());
    let mut s = q.to_string();
    let width = digits as usize + 1;
    if s.len() < width {
        s = format!("{}{}", "0".repeat(width - s.len()), s);
    }
    let split = s.len() - digits as usize;
    let (int_part, frac_part) = s.split_at(split);
    let text = if digits == 0 {
        int_part.to_string()
    } else {
        format!("{int_part}.{frac_part}")
    };
    (text, r.is_zero())
}

fn trim_exact(text: String) -> String {
    if !text.contains('.') {
        return text;
    }
    text.trim_end_matches('0').trim_end_matches('.').to_string()
}

/// Renders the digits shared by every real in `x`, truncating toward zero at
/// `max_digits` fractional digits.
pub fn to_decimal(x: &RationalInterval, max_digits: u32) -> Decimal {
    let max_digits = max_digits.max(1);
    let (negative, lo, hi) = if x.hi().is_positive() || x.hi().is_zero() {
        if x.lo().is_negative() {
            // straddles zero: not even the sign is certified
            return Decimal {
                text: String::new(),
                exact: false,
            };
        }
        (false, x.lo().clone(), x.hi().clone())
    } else {
        (true, -x.hi(), -x.lo())
    };
    let sign = if negative { "-" } else { "" };

    if lo == hi {
        let (text, terminated) = truncated(&lo, max_digits);
        let text = if terminated { trim_exact(text) } else { text };
        return Decimal {
            text: format!("{sign}{text}"),
            exact: terminated,
        };
    }

    let (lo_text, _) = truncated(&lo, max_digits);
    let (hi_text, _) = truncated(&hi, max_digits);
    let lo_int = lo_text.split('.').next().unwrap_or("");
    let hi_int = hi_text.split('.').next().unwrap_or("");
    if lo_int != hi_int {
        return Decimal {
            text: String::new(),
            exact: false,
        };
    }
    let common: String = lo_text
        .chars()
        .zip(hi_text.chars())
        .take_while(|(a, b)| a == b)
        .map(|(a, _)| a)
        .collect();
    let common = common.trim_end_matches('.').to_string();
    Decimal {
        text: format!("{sign}{common}"),
        exact: false,
    }
}

fn fixed_point(m: Integer, digits: u32) -> String {
    let sign = if m.is_negative() { "-" } else { "" };
    let mut s = m.abs().to_string();
    let width = digits as usize + 1;
    if s.len() < width {
        s = format!("{}{}", "0".repeat(width - s.len()), s);
    }
    if digits == 0 {
        return format!("{sign}{s}");
    }
    let (int_part, frac_part) = s.split_at(s.len() - digits as usize);
    format!("{sign}{int_part}.{frac_part}")
}

/// Largest `digits`-place decimal not above `x`.
pub fn lower_decimal(x: &Rational, digits: u32) -> String {
    fixed_point((x.numer() * pow10(digits)).div_floor(x.denom()), digits)
}

/// Smallest `digits`-place decimal not below `x`.
pub fn upper_decimal(x: &Rational, digits: u32) -> String {
    fixed_point((x.numer() * pow10(digits)).div_ceil(x.denom()), digits)
}
