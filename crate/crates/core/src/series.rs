//! Rigorous enclosures of e, exp, sin and cos from truncated power series
//! with explicit tail bounds, plus exact checks of the compound-interest
//! sandwich and the sin/cos squeeze inequalities.
//!
//! Precision is given in decimal digits: an enclosure for `digits = d` has
//! width strictly below `10^-d`. Term counts are chosen a priori from the
//! tail bound with one guard digit and the width is re-checked afterwards.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::factorial;
use crate::error::{Error, Result};
use crate::numbers::{ceil_scaled, digits_to_bits, dyadic, floor_scaled, pow10, rat, ten_to_minus, Integer, Rational, RationalInterval};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enclosure {
    pub value: RationalInterval,
    pub terms_used: u32,
    /// Bound on the magnitude of the neglected tail.
    pub tail_bound: Rational,
}

/// Enclosure of `e` using `e - Σ_{k≤n} 1/k! < 1/(n!·n)`.
pub fn e_enclosure(precision_digits: u32) -> Enclosure {
    let d = precision_digits.max(1);
    let target = pow10(d + 1);
    // smallest n with n!·n > 10^{d+1}
    let mut n: u32 = 1;
    let mut fact = Integer::one();
    while &fact * n <= target {
        n += 1;
        fact *= n;
    }
    e_enclosure_with_terms(n)
}

/// `[Σ_{k=0}^{n} 1/k!, Σ_{k=0}^{n} 1/k! + 1/(n!·n)]` for `n ≥ 1`.
pub fn e_enclosure_with_terms(n: u32) -> Enclosure {
    assert!(n >= 1);
    let fact = factorial(n);
    // Σ n!/k! accumulated from k = n downwards
    let mut numer = Integer::zero();
    let mut running = Integer::one();
    for k in (0..=n).rev() {
        numer += &running;
        running *= k.max(1);
    }
    let lower = Rational::new(numer, fact.clone());
    let tail = Rational::new(Integer::one(), fact * n);
    let upper = &lower + &tail;
    Enclosure {
        value: RationalInterval::new(lower, upper).expect("tail is positive"),
        terms_used: n + 1,
        tail_bound: tail,
    }
}

/// Enclosure of `e^x` for `0 < x ≤ 1`, with the geometric tail bound
/// `Σ_{k≥n} x^k/k! ≤ x^n/n! · (n+1)/(n+1-x)`.
pub fn exp_enclosure(x: &Rational, precision_digits: u32) -> Result<Enclosure> {
    if !x.is_positive() || x > &Rational::one() {
        return Err(Error::UnsupportedDomain(format!("exp needs 0 < x ≤ 1, got {x}")));
    }
    let target = ten_to_minus(precision_digits.max(1) + 1);
    let mut sum = Rational::zero();
    let mut term = Rational::one(); // x^n/n!
    let mut n: u32 = 0;
    loop {
        let n1 = Rational::from_integer(Integer::from(n + 1));
        // for n = 0 and x = 1 the bound degenerates; start at n = 1
        let tail = if n == 0 { None } else { Some(&term * &n1 / (&n1 - x)) };
        if let Some(tail) = tail.filter(|t| t < &target) {
            let value = RationalInterval::new(sum.clone(), &sum + &tail).expect("tail ≥ 0");
            let bits = digits_to_bits(precision_digits + 2, 8);
            return Ok(Enclosure {
                value: value.simplify(bits),
                terms_used: n,
                tail_bound: tail,
            });
        }
        sum += &term;
        n += 1;
        term = term * x / Rational::from_integer(Integer::from(n));
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Trig {
    Sin,
    Cos,
}

const TRIG_DOMAIN: i64 = 8;

/// Alternating series for sin or cos in fixed point with scale `2^bits`,
/// stopping once the first omitted term is below `2^-target_bits` and every
/// later term is smaller still.
///
/// Term magnitudes `|x|^{2k+o}/(2k+o)!` are carried as integer lower and
/// upper bounds rounded in opposite directions; the partial sum is bounded
/// the same way, so the returned interval is rigorous.
fn trig_series(x: &Rational, kind: Trig, target_bits: u32, bits: u32) -> Enclosure {
    let x_abs = x.abs();
    let x2 = &x_abs * &x_abs;
    let x2_lo = floor_scaled(&x2, bits);
    let x2_hi = ceil_scaled(&x2, bits);
    let (mut m_lo, mut m_hi, offset) = match kind {
        Trig::Sin => (floor_scaled(&x_abs, bits), ceil_scaled(&x_abs, bits), 1u64),
        Trig::Cos => {
            let one = Integer::one() << bits as usize;
            (one.clone(), one, 0u64)
        }
    };
    let threshold = Integer::one() << bits.saturating_sub(target_bits) as usize;
    let (mut s_lo, mut s_hi) = (Integer::zero(), Integer::zero());
    let mut k: u64 = 0;
    loop {
        let a = 2 * k + 1 + offset;
        let b = 2 * k + 2 + offset;
        let den = Integer::from(a) * Integer::from(b);
        let decreasing = x2 < Rational::from_integer(den.clone());
        let negative = k % 2 == 1;
        if decreasing && m_hi < threshold && k > 0 {
            // remainder has the sign of the first omitted term and is bounded by it
            if negative {
                s_lo -= &m_hi;
            } else {
                s_hi += &m_hi;
            }
            let (mut lo, mut hi) = (dyadic(s_lo, bits), dyadic(s_hi, bits));
            if kind == Trig::Sin && x.is_negative() {
                (lo, hi) = (-hi, -lo);
            }
            return Enclosure {
                value: RationalInterval::new(lo, hi).expect("bounds are ordered"),
                terms_used: k as u32,
                tail_bound: dyadic(m_hi, bits),
            };
        }
        if negative {
            s_lo -= &m_hi;
            s_hi -= &m_lo;
        } else {
            s_lo += &m_lo;
            s_hi += &m_hi;
        }
        let scale_den = &den << bits as usize;
        m_lo = (&m_lo * &x2_lo).div_floor(&scale_den);
        m_hi = (&m_hi * &x2_hi).div_ceil(&scale_den);
        k += 1;
    }
}

fn trig_enclosure(x: &Rational, kind: Trig, precision_digits: u32) -> Result<Enclosure> {
    if x.abs() > rat(TRIG_DOMAIN, 1) {
        return Err(Error::UnsupportedDomain(format!(
            "sin/cos are evaluated without argument reduction; need |x| ≤ {TRIG_DOMAIN}"
        )));
    }
    if x.is_zero() {
        let v = match kind {
            Trig::Sin => Rational::zero(),
            Trig::Cos => Rational::one(),
        };
        return Ok(Enclosure {
            value: RationalInterval::point(v),
            terms_used: 1,
            tail_bound: Rational::zero(),
        });
    }
    let d = precision_digits.max(1);
    let limit = ten_to_minus(d);
    let target_bits = digits_to_bits(d + 1, 2);
    let mut bits = target_bits + 24;
    loop {
        let enc = trig_series(x, kind, target_bits, bits);
        if enc.value.width() < limit {
            return Ok(enc);
        }
        bits += 32;
    }
}

/// Enclosure of `sin x` for `|x| ≤ 8`.
pub fn sin_enclosure(x: &Rational, precision_digits: u32) -> Result<Enclosure> {
    trig_enclosure(x, Trig::Sin, precision_digits)
}

/// Enclosure of `cos x` for `|x| ≤ 8`.
pub fn cos_enclosure(x: &Rational, precision_digits: u32) -> Result<Enclosure> {
    trig_enclosure(x, Trig::Cos, precision_digits)
}

/// Enclosure of `cos x` with width below roughly `2^-bits`; used where the
/// caller tracks precision in bits.
pub(crate) fn cos_enclosure_bits(x: &Rational, bits: u32) -> Enclosure {
    debug_assert!(x.abs() <= rat(TRIG_DOMAIN, 1));
    trig_series(x, Trig::Cos, bits + 2, bits + 24)
}

/// Compound-interest enclosure `(1+1/n)^n < e < (1+1/n)^{n+1}`, independent of
/// the factorial series.
pub fn e_by_compound_interest(n: u32) -> RationalInterval {
    assert!(n >= 1);
    let base = Rational::one() + Rational::new(Integer::one(), Integer::from(n));
    let lower = num_traits::pow(base.clone(), n as usize);
    let upper = &lower * &base;
    RationalInterval::new(lower, upper).expect("base > 1")
}

/// Both sides of `(1+x/n)^n < Σ_{k≤n} x^k/k!`, evaluated exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SandwichReport {
    #[serde(with = "crate::numbers::serde_str::rational")]
    pub x: Rational,
    pub n: u32,
    #[serde(with = "crate::numbers::serde_str::rational")]
    pub compound: Rational,
    #[serde(with = "crate::numbers::serde_str::rational")]
    pub partial_sum: Rational,
    /// `compound < partial_sum`
    pub strict: bool,
    /// Both sides coincide; happens exactly for `n = 1`.
    pub equal: bool,
}

pub fn sandwich_check(x: &Rational, n: u32) -> Result<SandwichReport> {
    if !x.is_positive() || n == 0 {
        return Err(Error::InvalidInput("sandwich check needs x > 0 and n ≥ 1".into()));
    }
    let nr = Rational::from_integer(Integer::from(n));
    let compound = num_traits::pow(Rational::one() + x / &nr, n as usize);
    let mut partial_sum = Rational::zero();
    let mut term = Rational::one();
    for k in 0..=n {
        if k > 0 {
            term = term * x / Rational::from_integer(Integer::from(k));
        }
        partial_sum += &term;
    }
    Ok(SandwichReport {
        x: x.clone(),
        n,
        strict: compound < partial_sum,
        equal: compound == partial_sum,
        compound,
        partial_sum,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CheckStatus {
    Certified,
    /// Enclosures too wide to decide at this precision.
    Undecided,
    Refuted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SqueezeReport {
    #[serde(with = "crate::numbers::serde_str::rational")]
    pub h: Rational,
    pub cos: RationalInterval,
    pub sin_over_h: RationalInterval,
    pub one_minus_cos_over_h: RationalInterval,
    /// `cos h < sin h / h < 1`
    pub ratio_chain: CheckStatus,
    /// `0 ≤ (1 - cos h)/h ≤ h/2`
    pub chord_chain: CheckStatus,
}

impl SqueezeReport {
    pub fn certified(&self) -> bool {
        self.ratio_chain == CheckStatus::Certified && self.chord_chain == CheckStatus::Certified
    }
}

/// Decides `cos < ratio < 1` from enclosures of both sides.
fn classify_ratio_chain(cos: &RationalInterval, ratio: &RationalInterval) -> CheckStatus {
    let one = Rational::one();
    if cos.hi() < ratio.lo() && ratio.hi() < &one {
        CheckStatus::Certified
    } else if cos.lo() >= ratio.hi() || ratio.lo() >= &one {
        CheckStatus::Refuted
    } else {
        CheckStatus::Undecided
    }
}

/// Decides `0 ≤ chord ≤ half_h`.
fn classify_chord_chain(chord: &RationalInterval, half_h: &Rational) -> CheckStatus {
    if !chord.lo().is_negative() && chord.hi() <= half_h {
        CheckStatus::Certified
    } else if chord.hi().is_negative() || chord.lo() > half_h {
        CheckStatus::Refuted
    } else {
        CheckStatus::Undecided
    }
}

pub fn squeeze_check(h: &Rational, precision_digits: u32) -> Result<SqueezeReport> {
    if !h.is_positive() || h > &rat(3, 2) {
        return Err(Error::UnsupportedDomain("squeeze check needs 0 < h ≤ 3/2".into()));
    }
    let sin = sin_enclosure(h, precision_digits)?.value;
    let cos = cos_enclosure(h, precision_digits)?.value;
    let inv_h = h.recip();
    let sin_over_h = sin.scale(&inv_h);
    let one_minus_cos_over_h = cos.neg().add_rational(&Rational::one()).scale(&inv_h);
    let half_h = h / Rational::from_integer(Integer::from(2));

    let ratio_chain = classify_ratio_chain(&cos, &sin_over_h);
    let chord_chain = classify_chord_chain(&one_minus_cos_over_h, &half_h);
    Ok(SqueezeReport {
        h: h.clone(),
        cos,
        sin_over_h,
        one_minus_cos_over_h,
        ratio_chain,
        chord_chain,
    })
}
