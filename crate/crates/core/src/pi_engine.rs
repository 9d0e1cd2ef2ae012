//! Certified enclosures of π by two unrelated routes, historical rational
//! approximations, and continued-fraction expansion of enclosures.

use num_integer::Integer as _;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numbers::{digits_to_bits, int, rat, ten_to_minus, Integer, Rational, RationalInterval};
use crate::series::cos_enclosure_bits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PiMethod {
    CosRoot,
    Archimedes,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiEnclosure {
    pub value: RationalInterval,
    pub method: PiMethod,
    /// Bisection steps or polygon doublings.
    pub effort: u32,
}

/// Sign of `cos m`, raising the working precision until the enclosure
/// excludes zero. `None` if `max_bits` is exceeded.
fn cos_sign(m: &Rational, start_bits: u32, max_bits: u32) -> Option<bool> {
    let mut bits = start_bits;
    while bits <= max_bits {
        let c = cos_enclosure_bits(m, bits).value;
        if c.is_positive() {
            return Some(true);
        }
        if c.is_negative() {
            return Some(false);
        }
        bits *= 2;
    }
    None
}

/// π as twice the smallest positive zero of cosine: bisect `[1, 2]` keeping
/// `cos(lo) > 0 > cos(hi)`, then double the bracket.
pub fn pi_by_cos_root(precision_digits: u32) -> Result<PiEnclosure> {
    let d = precision_digits.max(1);
    // doubled bracket width 2^{1-steps} must be below 10^-d
    let steps = digits_to_bits(d, 2);
    let max_bits = 4 * steps + 256;
    let exhausted = || Error::PrecisionExhausted {
        cap: d,
        what: "cosine enclosure cannot separate the sign near π/2".into(),
    };

    let mut lo = Rational::one();
    let mut hi: Rational = int(2).into();
    if cos_sign(&lo, 32, max_bits) != Some(true) || cos_sign(&hi, 32, max_bits) != Some(false) {
        return Err(exhausted());
    }
    for step in 1..=steps {
        let mid = (&lo + &hi) / int(2);
        match cos_sign(&mid, step + 16, max_bits) {
            Some(true) => lo = mid,
            Some(false) => hi = mid,
            None => return Err(exhausted()),
        }
    }
    let two: Rational = int(2).into();
    let value = RationalInterval::new(&lo * &two, &hi * &two)?;
    debug_assert!(value.width() < ten_to_minus(d));
    Ok(PiEnclosure {
        value,
        method: PiMethod::CosRoot,
        effort: steps,
    })
}

/// Semiperimeter bounds of one regular polygon in the doubling sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonStep {
    pub sides: u64,
    pub inscribed: RationalInterval,
    pub circumscribed: RationalInterval,
}

pub const MAX_DOUBLINGS: u32 = 60;

/// All polygons from the hexagon through `6·2^doublings` sides.
///
/// Semiperimeters of the unit circle's inscribed (`i`) and circumscribed
/// (`c`) polygons satisfy `c' = 2ic/(i+c)` and `i' = √(i·c')` on doubling.
pub fn archimedes_table(doublings: u32, precision_digits: u32) -> Result<Vec<PolygonStep>> {
    if doublings > MAX_DOUBLINGS {
        return Err(Error::InvalidInput(format!(
            "at most {MAX_DOUBLINGS} doublings are supported, got {doublings}"
        )));
    }
    let bits = digits_to_bits(precision_digits.max(1), 24) + 2 * doublings;
    let two = RationalInterval::point(int(2).into());
    let mut inscribed = RationalInterval::point(int(3).into());
    let mut circumscribed = RationalInterval::point(int(3).into()).sqrt(bits)?.mul(&two);
    let mut sides: u64 = 6;
    let mut table = vec![PolygonStep {
        sides,
        inscribed: inscribed.clone(),
        circumscribed: circumscribed.clone(),
    }];
    for _ in 0..doublings {
        // harmonic mean written with a single occurrence of each variable
        let recip_sum = circumscribed.recip()?.add(&inscribed.recip()?);
        circumscribed = two.div(&recip_sum)?.simplify(bits);
        inscribed = inscribed.mul(&circumscribed).sqrt(bits)?;
        sides *= 2;
        table.push(PolygonStep {
            sides,
            inscribed: inscribed.clone(),
            circumscribed: circumscribed.clone(),
        });
    }
    Ok(table)
}

/// `[inscribed, circumscribed]` for the `6·2^doublings`-gon.
pub fn archimedes_bounds(doublings: u32, precision_digits: u32) -> Result<PiEnclosure> {
    let last = archimedes_table(doublings, precision_digits)?
        .pop()
        .expect("table has the hexagon at least");
    let value = RationalInterval::new(last.inscribed.lo().clone(), last.circumscribed.hi().clone())?;
    Ok(PiEnclosure {
        value,
        method: PiMethod::Archimedes,
        effort: doublings,
    })
}

/// The Rhind papyrus value `(16/9)²`.
pub fn rhind_value() -> Rational {
    let r = rat(16, 9);
    &r * &r
}

/// Continued-fraction expansion certified for every real in an interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfExpansion {
    pub partial_quotients: Vec<Integer>,
    pub convergents: Vec<Rational>,
    pub certified_depth: usize,
}

/// Expands `x` by running the Gauss map on both endpoints in lockstep,
/// stopping at the first quotient on which they disagree.
pub fn continued_fraction(x: &RationalInterval, max_depth: usize) -> CfExpansion {
    let mut lo = x.lo().clone();
    let mut hi = x.hi().clone();
    let mut quotients = Vec::new();
    while quotients.len() < max_depth {
        let a = lo.floor();
        if a != hi.floor() {
            break;
        }
        quotients.push(a.to_integer());
        let flo = &lo - &a;
        let fhi = &hi - &a;
        if flo.is_zero() {
            // lo is an integer: either the expansion terminates for the whole
            // interval (a point) or points diverge at the next quotient
            break;
        }
        let next_lo = fhi.recip();
        hi = flo.recip();
        lo = next_lo;
    }
    let convergents = convergents(&quotients);
    CfExpansion {
        certified_depth: quotients.len(),
        partial_quotients: quotients,
        convergents,
    }
}

/// `p_k/q_k` from the standard recurrence.
pub fn convergents(quotients: &[Integer]) -> Vec<Rational> {
    let (mut p_prev, mut p) = (Integer::zero(), Integer::one());
    let (mut q_prev, mut q) = (Integer::one(), Integer::zero());
    let mut out = Vec::with_capacity(quotients.len());
    for a in quotients {
        let p_next = a * &p + &p_prev;
        let q_next = a * &q + &q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
        debug_assert!(p.gcd(&q).is_one() || q.is_zero());
        out.push(Rational::new(p.clone(), q.clone()));
    }
    out
}

/// Checks that `bound` is certified as an upper bound of π: it lies above
/// the whole of an enclosure computed at `precision_digits`.
pub fn certify_upper_bound(bound: &Rational, precision_digits: u32) -> Result<bool> {
    let pi = pi_by_cos_root(precision_digits)?;
    Ok(pi.value.hi() < bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::{parse_rational, to_decimal};
    use num_traits::Signed;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn iv(a: &str, b: &str) -> RationalInterval {
        RationalInterval::new(q(a), q(b)).unwrap()
    }

    #[test]
    fn cos_root_six_digits() {
        let p = pi_by_cos_root(6).unwrap();
        assert!(p.value.is_subset_of(&iv("3141592/1000000", "3141593/1000000")));
        assert_eq!(p.method, PiMethod::CosRoot);
    }

    #[test]
    fn cos_root_one_digit() {
        let p = pi_by_cos_root(1).unwrap();
        assert!(p.value.is_subset_of(&iv("31/10", "32/10")));
    }

    #[test]
    fn classic_approximations_bracket_pi() {
        for d in [3, 5, 10] {
            let p = pi_by_cos_root(d).unwrap().value;
            assert!(q("314/100") < *p.lo());
            assert!(*p.hi() < q("22/7"));
        }
        assert!(certify_upper_bound(&q("22/7"), 10).unwrap());
        assert!(!certify_upper_bound(&q("314/100"), 10).unwrap());
    }

    #[test]
    fn archimedes_96_gon() {
        let p = archimedes_bounds(4, 12).unwrap();
        assert!(p.value.is_subset_of(&iv("31408450/10000000", "31428572/10000000")));
        // Archimedes' own rational bounds
        assert!(p.value.is_subset_of(&iv("223/71", "22/7")));
    }

    #[test]
    fn hexagon() {
        let p = archimedes_bounds(0, 10).unwrap().value;
        assert_eq!(*p.lo(), q("3"));
        // 2√3 = 3.46410161513...
        assert!(p.hi() > &q("346410161513/100000000000"));
        assert!(p.hi() < &q("346410161515/100000000000"));
    }

    #[test]
    fn archimedes_ten_doublings_agrees_with_cos_root() {
        let a = archimedes_bounds(10, 20).unwrap().value;
        assert!(a.width() < ten_to_minus(5));
        let c = pi_by_cos_root(12).unwrap().value;
        assert!(c.is_subset_of(&a));
    }

    #[test]
    fn archimedes_monotone() {
        let t = archimedes_table(20, 30).unwrap();
        for w in t.windows(2) {
            let slack = w[1].inscribed.width() + w[1].circumscribed.width();
            assert!(w[1].inscribed.lo() + &slack >= *w[0].inscribed.lo());
            assert!(w[1].circumscribed.hi() <= &(w[0].circumscribed.hi() + &slack));
            assert_eq!(w[1].sides, 2 * w[0].sides);
        }
    }

    #[test]
    fn archimedes_limit() {
        assert!(archimedes_bounds(61, 10).is_err());
    }

    #[test]
    fn rhind() {
        assert_eq!(rhind_value(), q("256/81"));
        assert_eq!(to_decimal(&RationalInterval::point(rhind_value()), 6).text, "3.160493");
        let arch = archimedes_bounds(4, 12).unwrap().value;
        assert!(rhind_value() > *arch.hi());
    }

    #[test]
    fn cf_of_22_over_7() {
        let cf = continued_fraction(&RationalInterval::point(q("22/7")), 10);
        assert_eq!(cf.partial_quotients, vec![int(3), int(7)]);
        assert_eq!(cf.convergents, vec![q("3"), q("22/7")]);
    }

    #[test]
    fn cf_of_integer() {
        let cf = continued_fraction(&RationalInterval::point(q("2")), 10);
        assert_eq!(cf.partial_quotients, vec![int(2)]);
        assert_eq!(cf.certified_depth, 1);
    }

    #[test]
    fn cf_euclid_oracle() {
        // Euclidean algorithm on 415/93: 415 = 4·93 + 43, 93 = 2·43 + 7, 43 = 6·7 + 1, 7 = 7·1
        let cf = continued_fraction(&RationalInterval::point(q("415/93")), 10);
        assert_eq!(cf.partial_quotients, vec![int(4), int(2), int(6), int(7)]);
        assert_eq!(*cf.convergents.last().unwrap(), q("415/93"));
        let neg = continued_fraction(&RationalInterval::point(q("-1/2")), 10);
        assert_eq!(neg.partial_quotients, vec![int(-1), int(2)]);
    }

    #[test]
    fn cf_stops_at_ambiguity() {
        let cf = continued_fraction(&iv("3", "7/2"), 10);
        assert_eq!(cf.partial_quotients, vec![int(3)]);
        let cf = continued_fraction(&iv("29/10", "31/10"), 10);
        assert!(cf.partial_quotients.is_empty());
        assert!(continued_fraction(&iv("3", "3"), 0).partial_quotients.is_empty());
    }

    #[test]
    fn cf_of_pi() {
        let p = pi_by_cos_root(15).unwrap().value;
        let cf = continued_fraction(&p, 40);
        let expect: Vec<Integer> = [3, 7, 15, 1, 292].iter().map(|&v| int(v)).collect();
        assert_eq!(&cf.partial_quotients[..5], &expect[..]);
        assert!(cf.convergents.contains(&q("22/7")));
        assert!(cf.convergents.contains(&q("355/113")));
        let mid = p.midpoint();
        for c in &cf.convergents {
            let den = Rational::from_integer(c.denom().clone());
            assert!((&mid - c).abs() < (&den * &den).recip());
        }
    }
}
