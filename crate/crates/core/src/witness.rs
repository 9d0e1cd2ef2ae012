//! Contradiction certificates for rational candidates `π² = a/b` and
//! `e = a/b`.
//!
//! For `π² = a/b` the certificate carries the integer `N` that the Niven
//! argument produces under the hypothesis, computed twice (substitution into
//! the exact integral, and `g(0) + g(1)`), and a rigorous enclosure of the
//! true integral showing it lies strictly between 0 and 1. For `e = a/b` it
//! carries `M = n!·a/b - Σ n!/k!` together with an enclosure of
//! `n!·(e - Σ_{k≤n} 1/k!)` inside `(0, 1/n)`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{dominance_index, factorial};
use crate::error::{Error, Result};
use crate::numbers::{format_rational, rat, serde_str, Integer, Rational, RationalInterval};
use crate::pi_engine::{certify_upper_bound, pi_by_cos_root};
use crate::polynomials::{niven_endpoint_derivatives, niven_poly, Poly};
use crate::series::e_enclosure;
use crate::trigpoly::{antiderivative_p_sin, definite_01, lift, trig_derivative, PiPoly, PiRat, TrigPoly};

/// Default cap on π / e precision, in decimal digits.
pub const DEFAULT_MAX_DIGITS: u32 = 4096;
/// Default cap on the Niven degree parameter `n` (and on `n = b` for e).
pub const DEFAULT_MAX_N: u32 = 1000;

/// Resource caps for certificate construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_digits: u32,
    pub max_n: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_digits: DEFAULT_MAX_DIGITS,
            max_n: DEFAULT_MAX_N,
        }
    }
}

/// Rational upper bound of π used to choose `n`.
pub fn pi_upper_bound() -> Rational {
    rat(22, 7)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// The integer the proof constructs cannot lie in the certified
    /// enclosure, so the candidate is refuted.
    Contradiction,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Contradiction => f.write_str("CONTRADICTION"),
        }
    }
}

fn check_candidate(a: &Integer, b: &Integer) -> Result<()> {
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::InvalidInput(format!("candidate needs a, b ≥ 1, got {a}/{b}")));
    }
    Ok(())
}

fn niven_bound(a: &Integer, n: u32) -> Rational {
    pi_upper_bound() * Rational::from_integer(num_traits::pow(a.clone(), n as usize))
        / Rational::from_integer(factorial(n))
}

/// Minimal `n` with `(22/7)·aⁿ/n! < 1`. Independent of `b`.
pub fn choose_niven_n(a: &Integer, b: &Integer) -> Result<u32> {
    check_candidate(a, b)?;
    dominance_index(&Rational::from_integer(a.clone()), &pi_upper_bound())
}

/// `g(x) = bⁿ Σ_{k=0}^{n} (-1)^k Π^{2n-2k} f^{(2k)}(x)` for the Niven
/// polynomial `f` of degree `2n`.
pub fn build_g(b: &Integer, n: u32) -> PiPoly {
    let f = niven_poly(n);
    build_g_from(&f, b, n, n)
}

/// `g` with its last term `(-1)ⁿ bⁿ f^{(2n)}` left out. It no longer
/// satisfies the identities and serves as a negative control.
pub fn build_g_truncated(b: &Integer, n: u32) -> PiPoly {
    let f = niven_poly(n);
    build_g_from(&f, b, n, n - 1)
}

fn build_g_from(f: &Poly, b: &Integer, n: u32, last_k: u32) -> PiPoly {
    let bn = Rational::from_integer(num_traits::pow(b.clone(), n as usize));
    let mut g = PiPoly::zero();
    let mut d = f.clone();
    for k in 0..=last_k as i32 {
        let mut c = bn.clone();
        if k % 2 == 1 {
            c = -c;
        }
        let exp = 2 * n as i32 - 2 * k;
        g = &g + &d.map(|v| PiRat::term(v * &c, exp));
        d = d.derivative().derivative();
    }
    g
}

/// Location of the first coefficient where two sides of an identity differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub identity: &'static str,
    /// `"poly"`, `"sin"` or `"cos"`.
    pub part: &'static str,
    pub x_power: usize,
    pub pi_power: i32,
    pub expected: Rational,
    pub found: Rational,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} part, coefficient of x^{}·Π^{}: expected {}, found {}",
            self.identity,
            self.part,
            self.x_power,
            self.pi_power,
            format_rational(&self.expected),
            format_rational(&self.found)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub n: u32,
    pub first_mismatch: Option<Mismatch>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

fn first_difference(
    identity: &'static str,
    part: &'static str,
    found: &PiPoly,
    expected: &PiPoly,
) -> Option<Mismatch> {
    let len = found.coeffs().len().max(expected.coeffs().len());
    for x_power in 0..len {
        let (lhs, rhs) = (found.coeff(x_power), expected.coeff(x_power));
        if lhs == rhs {
            continue;
        }
        let mut exps: Vec<i32> = lhs.terms().map(|(k, _)| k).chain(rhs.terms().map(|(k, _)| k)).collect();
        exps.sort_unstable();
        exps.dedup();
        let pi_power = exps
            .into_iter()
            .find(|k| lhs.coeff(*k) != rhs.coeff(*k))
            .expect("unequal Laurent polynomials differ somewhere");
        return Some(Mismatch {
            identity,
            part,
            x_power,
            pi_power,
            expected: rhs.coeff(pi_power),
            found: lhs.coeff(pi_power),
        });
    }
    None
}

/// Checks, as exact identities in `ℚ[Π, Π⁻¹][x]`,
///
/// * `g'' + Π²g = bⁿ Π^{2n+2} f`, and
/// * `(g' sin(Πx) - Π g cos(Πx))' = bⁿ Π^{2n+2} f sin(Πx)`,
///
/// for a caller-supplied `g`.
pub fn check_ode_identity(g: &PiPoly, f: &Poly, b: &Integer, n: u32) -> IdentityCheck {
    let bn = Rational::from_integer(num_traits::pow(b.clone(), n as usize));
    let rhs = lift(f).map(|c| c.shift(2 * n as i32 + 2).scale_by(&bn));

    let g1 = g.derivative();
    let lhs = &g1.derivative() + &g.map(|c| c.shift(2));
    if let Some(m) = first_difference("g'' + Π²g = bⁿΠ^(2n+2)f", "poly", &lhs, &rhs) {
        return IdentityCheck {
            n,
            first_mismatch: Some(m),
        };
    }

    let t = TrigPoly::new(g1, g.map(|c| -c.shift(1)));
    let dt = trig_derivative(&t);
    let identity = "(g' sin - Πg cos)' = bⁿΠ^(2n+2)f sin";
    let mismatch = first_difference(identity, "sin", &dt.sin, &rhs)
        .or_else(|| first_difference(identity, "cos", &dt.cos, &PiPoly::zero()));
    IdentityCheck {
        n,
        first_mismatch: mismatch,
    }
}

/// Both identities for the `g` built from `(b, n)`. They hold formally in
/// Π because `f^{(2n+2)} = 0`; `a` plays no role.
pub fn verify_ode_identity(_a: &Integer, b: &Integer, n: u32) -> IdentityCheck {
    let f = niven_poly(n);
    let g = build_g_from(&f, b, n, n);
    check_ode_identity(&g, &f, b, n)
}

trait ScaleBy {
    fn scale_by(&self, k: &Rational) -> Self;
}

impl ScaleBy for PiRat {
    fn scale_by(&self, k: &Rational) -> Self {
        crate::polynomials::Coeff::scale(self, k)
    }
}

/// Largest `n` for which the endpoint-table results are also rebuilt from
/// the full symbolic antiderivative and from `g` itself.
pub const SYMBOLIC_CROSS_CHECK_MAX_N: u32 = 40;

/// `I = Π·aⁿ·∫₀¹ f(x) sin(Πx) dx` through the symbolic antiderivative.
pub fn niven_integral_symbolic(a: &Integer, n: u32) -> PiRat {
    let f = lift(&niven_poly(n));
    let t = antiderivative_p_sin(&f);
    assert!(
        t.max_abs_exponent() <= 4 * n + 4,
        "Laurent exponent out of range for n = {n}"
    );
    let an = Rational::from_integer(num_traits::pow(a.clone(), n as usize));
    definite_01(&t).shift(1).scale_by(&an)
}

/// `I = aⁿ Σ_k (-1)^k (f^{(2k)}(0) + f^{(2k)}(1)) Π^{-2k}`, the value of
/// [`niven_integral_symbolic`] read off the endpoint derivative table.
pub fn niven_integral_exact(a: &Integer, n: u32) -> PiRat {
    let ends = niven_endpoint_derivatives(n);
    let an = num_traits::pow(a.clone(), n as usize);
    let mut out = PiRat::zero();
    for k in 0..=n as usize {
        let mut v = (&ends.at0[2 * k] + &ends.at1[2 * k]) * &an;
        if k % 2 == 1 {
            v = -v;
        }
        out = out + PiRat::term(Rational::from_integer(v), -2 * k as i32);
    }
    if n <= SYMBOLIC_CROSS_CHECK_MAX_N {
        assert_eq!(out, niven_integral_symbolic(a, n), "endpoint route disagrees at n = {n}");
    }
    out
}

/// The integer `N` computed by both routes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralEquality {
    pub i_exact: PiRat,
    /// `I_exact` with `Π² ↦ a/b`.
    pub by_substitution: Integer,
    pub g0: Integer,
    pub g1: Integer,
}

impl CentralEquality {
    pub fn holds(&self) -> bool {
        self.by_substitution == &self.g0 + &self.g1
    }
}

fn as_integer(v: Rational, what: &str) -> Integer {
    assert!(v.is_integer(), "{what} is not an integer: {v}");
    v.to_integer()
}

/// `g(x)` at an endpoint with `Π² = t`: `bⁿ Σ_k (-1)^k t^{n-k} f^{(2k)}(x)`.
fn g_at(values: &[Integer], b: &Integer, t: &Rational, n: u32) -> Rational {
    let bn = Rational::from_integer(num_traits::pow(b.clone(), n as usize));
    let mut sum = Rational::zero();
    let mut t_pow = Rational::one();
    for k in (0..=n as usize).rev() {
        // t_pow = t^{n-k}
        let term = Rational::from_integer(values[2 * k].clone()) * &t_pow;
        if k % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        t_pow *= t;
    }
    sum * bn
}

/// Substitutes `Π² = a/b` into the exact integral and, separately, into
/// `g(0)` and `g(1)`. Asserts even powers and integrality along the way.
pub fn central_equality(a: &Integer, b: &Integer, n: u32) -> Result<CentralEquality> {
    check_candidate(a, b)?;
    let t = Rational::new(a.clone(), b.clone());
    let i_exact = niven_integral_exact(a, n);
    assert!(i_exact.has_only_even_powers(), "I contains an odd power of Π");
    let by_substitution = as_integer(i_exact.substitute_pi2(&t)?, "I under Π² = a/b");

    let ends = niven_endpoint_derivatives(n);
    let g0 = g_at(&ends.at0, b, &t, n);
    let g1 = g_at(&ends.at1, b, &t, n);
    if n <= SYMBOLIC_CROSS_CHECK_MAX_N {
        let g = build_g(b, n);
        assert_eq!(g.eval(&Rational::zero()).substitute_pi2(&t)?, g0);
        assert_eq!(g.eval(&Rational::one()).substitute_pi2(&t)?, g1);
    }
    Ok(CentralEquality {
        i_exact,
        by_substitution,
        g0: as_integer(g0, "g(0)"),
        g1: as_integer(g1, "g(1)"),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiWitnessReport {
    #[serde(with = "serde_str::integer")]
    pub a: Integer,
    #[serde(with = "serde_str::integer")]
    pub b: Integer,
    pub n: u32,
    /// `g(0) + g(1)`, the integer the integral would equal if `π² = a/b`.
    #[serde(rename = "N", with = "serde_str::integer")]
    pub proof_integer: Integer,
    #[serde(rename = "I_exact")]
    pub i_exact: PiRat,
    #[serde(rename = "I_enclosure")]
    pub i_enclosure: RationalInterval,
    /// Certified upper bound `(22/7)·aⁿ/n!` of `π·aⁿ/n!`.
    #[serde(with = "serde_str::rational")]
    pub upper_bound: Rational,
    pub verdict: Verdict,
}

/// Builds the π² certificate. `n_override` must itself satisfy
/// `(22/7)·aⁿ/n! < 1`.
pub fn pi_witness(a: &Integer, b: &Integer, n_override: Option<u32>, limits: &Limits) -> Result<PiWitnessReport> {
    check_candidate(a, b)?;
    let n = match n_override {
        Some(n) => {
            if n == 0 || niven_bound(a, n) >= Rational::one() {
                return Err(Error::InvalidInput(format!(
                    "n = {n} does not satisfy (22/7)·aⁿ/n! < 1 for a = {a}"
                )));
            }
            n
        }
        None => choose_niven_n(a, b)?,
    };
    if n > limits.max_n {
        return Err(Error::ResourceCap(format!("n = {n} exceeds the cap {}", limits.max_n)));
    }
    if !certify_upper_bound(&pi_upper_bound(), 10)? {
        unreachable!("22/7 is an upper bound of π");
    }
    let upper_bound = niven_bound(a, n);
    assert!(upper_bound < Rational::one());

    let central = central_equality(a, b, n)?;
    assert!(
        central.holds(),
        "I under substitution ({}) differs from g(0) + g(1) ({})",
        central.by_substitution,
        &central.g0 + &central.g1
    );

    let i_enclosure = enclose_integral(&central.i_exact, &upper_bound, n, limits)?;
    let proof_integer = central.by_substitution;
    let zero = Rational::zero();
    let one = Rational::one();
    let n_rat = Rational::from_integer(proof_integer.clone());
    assert!(i_enclosure.is_inside_open(&zero, &one));
    assert!(!i_enclosure.contains(&n_rat));
    Ok(PiWitnessReport {
        a: a.clone(),
        b: b.clone(),
        n,
        proof_integer,
        i_exact: central.i_exact,
        i_enclosure,
        upper_bound,
        verdict: Verdict::Contradiction,
    })
}

/// Evaluates `I` at π enclosures of `10 + n`, `2(10 + n)`, … digits until
/// the result lies strictly inside `(0, upper_bound)`.
fn enclose_integral(i_exact: &PiRat, upper_bound: &Rational, n: u32, limits: &Limits) -> Result<RationalInterval> {
    let zero = Rational::zero();
    let mut digits = 10 + n;
    loop {
        if digits > limits.max_digits {
            return Err(Error::PrecisionExhausted {
                cap: limits.max_digits,
                what: format!("enclosure of the Niven integral for n = {n}"),
            });
        }
        let pi = pi_by_cos_root(digits)?;
        let enc = i_exact.eval_interval(&pi.value)?;
        if enc.is_inside_open(&zero, upper_bound) {
            return Ok(enc);
        }
        if digits == limits.max_digits {
            digits += 1;
        } else {
            digits = (digits * 2).min(limits.max_digits);
        }
    }
}

/// A candidate `π = p/q` is refuted through `π² = p²/q²`.
pub fn pi_candidate_to_pi2(p: &Integer, q: &Integer) -> (Integer, Integer) {
    (p * p, q * q)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EWitnessReport {
    #[serde(with = "serde_str::integer")]
    pub a: Integer,
    #[serde(with = "serde_str::integer")]
    pub b: Integer,
    pub n: u32,
    /// `n!·a/b - Σ_{k≤n} n!/k!`
    #[serde(rename = "M", with = "serde_str::integer")]
    pub m: Integer,
    /// Enclosure of `n!·(e - Σ_{k≤n} 1/k!)`.
    pub tail_enclosure: RationalInterval,
    pub verdict: Verdict,
}

/// `Σ_{k=0}^{n} n!/k!`
fn scaled_partial_sum(n: u32) -> Integer {
    let mut sum = Integer::zero();
    let mut running = Integer::one();
    for k in (0..=n).rev() {
        sum += &running;
        running *= k.max(1);
    }
    sum
}

/// Builds the e certificate with `n = b`, so that `n!·a/b` is an integer.
pub fn e_witness(a: &Integer, b: &Integer, limits: &Limits) -> Result<EWitnessReport> {
    check_candidate(a, b)?;
    let n: u32 = match u32::try_from(b) {
        Ok(n) if n <= limits.max_n => n,
        _ => return Err(Error::ResourceCap(format!("n = b = {b} exceeds the cap {}", limits.max_n))),
    };
    let fact = factorial(n);
    let scaled_candidate = &fact * a;
    assert!((&scaled_candidate % b).is_zero());
    let partial = scaled_partial_sum(n);
    let m = &scaled_candidate / b - &partial;

    let n_rat = Rational::from_integer(Integer::from(n));
    let bound = n_rat.recip();
    let fact_rat = Rational::from_integer(fact.clone());
    let partial_rat = Rational::new(partial, fact);
    // the tail is about 1/(n+1); resolve the gap 1/(n(n+1)) to it
    let mut digits = fact_rat.numer().to_string().len() as u32 + 2 * (n.to_string().len() as u32) + 6;
    let tail_enclosure = loop {
        if digits > limits.max_digits {
            return Err(Error::PrecisionExhausted {
                cap: limits.max_digits,
                what: format!("enclosure of n!(e - Σ 1/k!) for n = {n}"),
            });
        }
        let e = e_enclosure(digits).value;
        let tail = e.add_rational(&-&partial_rat).scale(&fact_rat);
        if tail.is_inside_open(&Rational::zero(), &bound) {
            break tail;
        }
        digits *= 2;
    };
    assert!(!tail_enclosure.contains(&Rational::from_integer(m.clone())));
    Ok(EWitnessReport {
        a: a.clone(),
        b: b.clone(),
        n,
        m,
        tail_enclosure,
        verdict: Verdict::Contradiction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::int;

    #[test]
    fn niven_n_choice() {
        assert_eq!(choose_niven_n(&int(10), &int(1)).unwrap(), 26);
        assert_eq!(choose_niven_n(&int(1), &int(1)).unwrap(), 3);
        assert!(choose_niven_n(&int(2), &int(1)).unwrap() >= choose_niven_n(&int(1), &int(1)).unwrap());
        // oracle: (22/7)·10²⁵/25! > 1 and (22/7)·10²⁶/26! < 1
        assert!(niven_bound(&int(10), 25) > Rational::one());
        assert!(niven_bound(&int(10), 26) < Rational::one());
        assert!(choose_niven_n(&int(0), &int(1)).is_err());
    }

    #[test]
    fn g_for_n_equal_one() {
        // f = x - x², f'' = -2: g = b(Π²(x - x²) + 2)
        let g = build_g(&int(3), 1);
        let expect = PiPoly::new(vec![
            PiRat::from_rational(rat(6, 1)),
            PiRat::term(rat(3, 1), 2),
            PiRat::term(rat(-3, 1), 2),
        ]);
        assert_eq!(g, expect);
        let g0 = build_g(&int(1), 1).eval(&Rational::zero()).substitute_pi2(&rat(10, 1)).unwrap();
        assert_eq!(g0, rat(2, 1));
    }

    #[test]
    fn g_top_power() {
        for n in 1..6 {
            let b = int(7);
            let g = build_g(&b, n);
            let f = niven_poly(n);
            let bn = Rational::from_integer(num_traits::pow(b.clone(), n as usize));
            for (j, c) in g.coeffs().iter().enumerate() {
                assert_eq!(c.coeff(2 * n as i32), f.coeff(j) * &bn);
                assert!(c.has_only_even_powers());
                assert!(c.terms().all(|(k, _)| (0..=2 * n as i32).contains(&k)));
            }
        }
    }

    #[test]
    fn identities_hold() {
        for n in 1..=10 {
            let check = verify_ode_identity(&int(1), &int(1), n);
            assert!(check.passed(), "n={n}: {:?}", check.first_mismatch);
        }
        assert!(verify_ode_identity(&int(5), &int(3), 4).passed());
    }

    #[test]
    fn perturbed_g_fails() {
        let n = 1;
        let b = int(1);
        let f = niven_poly(n);
        // drop the k = n term, the constant (-1)^n bⁿ f^{(2n)}
        let g = build_g(&b, n);
        let mut coeffs = g.coeffs().to_vec();
        coeffs[0] = PiRat::zero();
        let bad = PiPoly::new(coeffs);
        assert_eq!(bad, build_g_truncated(&b, n));
        for m in 1..=10 {
            let f = niven_poly(m);
            assert!(!check_ode_identity(&build_g_truncated(&int(3), m), &f, &int(3), m).passed());
        }
        let check = check_ode_identity(&bad, &f, &b, n);
        let m = check.first_mismatch.expect("perturbed g must fail");
        assert_eq!((m.part, m.x_power, m.pi_power), ("poly", 0, 2));
        assert_eq!(m.expected, Rational::zero());
        assert_eq!(m.found, rat(-2, 1));
    }

    #[test]
    fn identity_at_zero() {
        // g''(0) + Π²g(0) = bⁿΠ^{2n+2} f(0) = 0
        for n in 1..5 {
            let g = build_g(&int(2), n);
            let lhs = g.derivative().derivative().eval(&Rational::zero())
                + g.eval(&Rational::zero()).shift(2);
            assert!(lhs.is_zero());
        }
    }

    #[test]
    fn integral_has_even_powers() {
        for n in 1..=12 {
            assert!(niven_integral_exact(&int(3), n).has_only_even_powers());
            assert!(niven_integral_symbolic(&int(3), n).has_only_even_powers());
        }
    }

    #[test]
    fn integral_for_n_equal_one() {
        // ∫ (x - x²) sin(πx) = 4/π³, so I = a·4/π²
        assert_eq!(niven_integral_exact(&int(5), 1), PiRat::term(rat(20, 1), -2));
    }

    #[test]
    fn central_equality_small() {
        for (a, b) in [(1, 1), (10, 1), (89, 9), (2, 3)] {
            for n in 1..=12 {
                let c = central_equality(&int(a), &int(b), n).unwrap();
                assert!(c.holds(), "a={a} b={b} n={n}");
            }
        }
    }

    #[test]
    fn witness_for_one() {
        let r = pi_witness(&int(1), &int(1), None, &Limits::default()).unwrap();
        assert_eq!(r.n, 3);
        assert_eq!(r.verdict, Verdict::Contradiction);
        assert!(r.i_enclosure.is_inside_open(&Rational::zero(), &Rational::one()));
    }

    #[test]
    fn witness_override() {
        assert!(pi_witness(&int(10), &int(1), Some(25), &Limits::default()).is_err());
        let r = pi_witness(&int(10), &int(1), Some(27), &Limits::default()).unwrap();
        assert_eq!(r.n, 27);
        let tight = Limits { max_digits: 4096, max_n: 20 };
        assert!(pi_witness(&int(10), &int(1), None, &tight).unwrap_err().is_resource());
        let tiny = Limits { max_digits: 20, max_n: 1000 };
        assert!(pi_witness(&int(10), &int(1), None, &tiny).unwrap_err().is_resource());
    }

    #[test]
    fn e_witness_examples() {
        let r = e_witness(&int(19), &int(7), &Limits::default()).unwrap();
        assert_eq!(r.n, 7);
        assert_eq!(scaled_partial_sum(7), int(13700));
        assert_eq!(r.m, int(-20));
        assert!(r.tail_enclosure.is_inside_open(&rat(140, 1000), &rat(141, 1000)));

        let r = e_witness(&int(3), &int(1), &Limits::default()).unwrap();
        assert_eq!(r.n, 1);
        assert_eq!(r.m, int(1));
        assert!(r.tail_enclosure.is_inside_open(&rat(718, 1000), &rat(719, 1000)));
    }

    #[test]
    fn e_tail_below_one_over_n() {
        for b in 1..=50u32 {
            let r = e_witness(&int(3), &Integer::from(b), &Limits::default()).unwrap();
            assert!(r.tail_enclosure.hi() < &Rational::new(int(1), Integer::from(b)));
            assert!(r.tail_enclosure.lo().is_positive());
        }
    }

    #[test]
    fn rejects_bad_candidates() {
        assert!(pi_witness(&int(0), &int(1), None, &Limits::default()).is_err());
        assert!(e_witness(&int(-3), &int(1), &Limits::default()).is_err());
        assert!(e_witness(&int(3), &int(5000), &Limits::default()).unwrap_err().is_resource());
    }

    #[test]
    fn pi_candidate_squares() {
        assert_eq!(pi_candidate_to_pi2(&int(22), &int(7)), (int(484), int(49)));
    }
}
