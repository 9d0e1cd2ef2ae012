//! Factorials, binomial coefficients, Pascal's triangle, the factorial
//! dominance index and the rational-square test.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numbers::{serde_str, Integer, Rational};

pub fn factorial(n: u32) -> Integer {
    (1..=n).fold(Integer::one(), |acc, k| acc * k)
}

/// `n!/(n-k)!`, the falling factorial.
pub fn falling_factorial(n: u32, k: u32) -> Integer {
    debug_assert!(k <= n);
    ((n - k + 1)..=n).fold(Integer::one(), |acc, j| acc * j)
}

/// Closed form `n!/((n-k)!k!)`.
pub fn binomial_closed(n: u32, k: u32) -> Result<Integer> {
    if k > n {
        return Err(Error::InvalidInput(format!("binomial({n}, {k}) needs k ≤ n")));
    }
    let num = factorial(n);
    let den = factorial(n - k) * factorial(k);
    debug_assert!((&num % &den).is_zero());
    Ok(num / den)
}

/// Binomial coefficient via the closed form, cross-checked against the
/// additive recursion `C(n,k) = C(n-1,k-1) + C(n-1,k)`.
pub fn binomial(n: u32, k: u32) -> Result<Integer> {
    let closed = binomial_closed(n, k)?;
    let row = pascal_rows(n).rows.pop().expect("row n exists");
    assert_eq!(closed, row[k as usize], "closed form and recursion disagree at ({n},{k})");
    Ok(closed)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PascalTriangle {
    pub rows: Vec<Vec<Integer>>,
}

impl PascalTriangle {
    pub fn row(&self, n: usize) -> Option<&[Integer]> {
        self.rows.get(n).map(Vec::as_slice)
    }
}

/// Rows `0..=m`, built only from the additive recursion.
pub fn pascal_rows(m: u32) -> PascalTriangle {
    let mut rows: Vec<Vec<Integer>> = vec![vec![Integer::one()]];
    for n in 1..=m as usize {
        let prev = &rows[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        row.push(Integer::one());
        for k in 1..n {
            row.push(&prev[k - 1] + &prev[k]);
        }
        row.push(Integer::one());
        rows.push(row);
    }
    PascalTriangle { rows }
}

/// `Σ C(n,k) a^{n-k} b^k`, asserted equal to `(a+b)^n` computed directly.
pub fn binomial_expand(a: &Rational, b: &Rational, n: u32) -> Rational {
    let triangle = pascal_rows(n);
    let row = &triangle.rows[n as usize];
    let mut sum = Rational::zero();
    for (k, c) in row.iter().enumerate() {
        let term = num_traits::pow(a.clone(), n as usize - k)
            * num_traits::pow(b.clone(), k)
            * Rational::from_integer(c.clone());
        sum += term;
    }
    let direct = num_traits::pow(a + b, n as usize);
    assert_eq!(sum, direct, "binomial theorem failed for n={n}");
    sum
}

/// Minimal `n ≥ 1` with `c·a^n < n!`. Factorials outgrow every geometric
/// sequence, so the search terminates.
pub fn dominance_index(a: &Rational, c: &Rational) -> Result<u32> {
    if !a.is_positive() || !c.is_positive() {
        return Err(Error::InvalidInput("dominance index needs a > 0 and c > 0".into()));
    }
    let mut lhs = c.clone();
    let mut fact = Integer::one();
    let mut n: u32 = 0;
    loop {
        n += 1;
        lhs *= a;
        fact *= n;
        if lhs < Rational::from_integer(fact.clone()) {
            return Ok(n);
        }
    }
}

/// Outcome of the rational-square test for `√m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SqrtRationality {
    PerfectSquare {
        #[serde(with = "serde_str::integer")]
        m: Integer,
        #[serde(with = "serde_str::integer")]
        root: Integer,
    },
    /// `floor² < m < (floor+1)²`: no integer squares to `m`, and a rational
    /// square root of an integer would have to be an integer.
    Irrational {
        #[serde(with = "serde_str::integer")]
        m: Integer,
        #[serde(with = "serde_str::integer")]
        floor: Integer,
    },
}

pub fn sqrt_rationality(m: &Integer) -> Result<SqrtRationality> {
    if !m.is_positive() {
        return Err(Error::InvalidInput(format!("sqrt test needs a positive integer, got {m}")));
    }
    let root = m.sqrt();
    let sq = &root * &root;
    if &sq == m {
        return Ok(SqrtRationality::PerfectSquare { m: m.clone(), root });
    }
    let next = &root + 1u32;
    assert!(&sq < m && m < &(&next * &next));
    Ok(SqrtRationality::Irrational {
        m: m.clone(),
        floor: root,
    })
}

/// One row of the growth comparison table: `(n, n², n³, 2ⁿ, n!)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthRow {
    pub n: u32,
    pub square: Integer,
    pub cube: Integer,
    pub power_of_two: Integer,
    pub factorial: Integer,
}

pub fn growth_table(max_n: u32) -> Vec<GrowthRow> {
    (0..=max_n)
        .map(|n| GrowthRow {
            n,
            square: Integer::from(n).pow(2),
            cube: Integer::from(n).pow(3),
            power_of_two: Integer::one() << n as usize,
            factorial: factorial(n),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn factorials() {
        assert_eq!(factorial(7), int(5040));
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(5), int(120));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2).unwrap(), int(10));
        assert_eq!(binomial(4, 2).unwrap(), int(6));
        for n in 0..10 {
            assert_eq!(binomial(n, 0).unwrap(), int(1));
        }
        assert!(binomial(3, 4).is_err());
    }

    #[test]
    fn closed_form_matches_recursion_up_to_30() {
        let t = pascal_rows(30);
        for n in 0..=30u32 {
            for k in 0..=n {
                assert_eq!(binomial_closed(n, k).unwrap(), t.rows[n as usize][k as usize]);
            }
        }
    }

    #[test]
    fn pascal() {
        let t = pascal_rows(5);
        let ints = |v: &[i64]| v.iter().map(|&x| int(x)).collect::<Vec<_>>();
        assert_eq!(t.rows[5], ints(&[1, 5, 10, 10, 5, 1]));
        assert_eq!(t.rows[4], ints(&[1, 4, 6, 4, 1]));
        assert_eq!(pascal_rows(0).rows, vec![vec![int(1)]]);
        for (n, row) in pascal_rows(20).rows.iter().enumerate() {
            assert_eq!(row.len(), n + 1);
            let sum: Integer = row.iter().sum();
            assert_eq!(sum, Integer::one() << n);
        }
    }

    #[test]
    fn expansion() {
        assert_eq!(binomial_expand(&rat(1, 1), &rat(1, 1), 4), rat(16, 1));
        assert_eq!(binomial_expand(&rat(1, 1), &rat(1, 2), 2), rat(9, 4));
        assert_eq!(binomial_expand(&rat(3, 7), &rat(0, 1), 5), rat(243, 16807));
    }

    fn brute_dominance(a: &Rational, c: &Rational) -> u32 {
        (1..)
            .find(|&n| {
                c * num_traits::pow(a.clone(), n as usize)
                    < Rational::from_integer(factorial(n))
            })
            .unwrap()
    }

    #[test]
    fn dominance() {
        assert_eq!(dominance_index(&rat(2, 1), &rat(1, 1)).unwrap(), 4);
        assert_eq!(dominance_index(&rat(1, 1), &rat(1, 1)).unwrap(), 2);
        assert_eq!(dominance_index(&rat(1, 2), &rat(1, 1)).unwrap(), 1);
        assert!(dominance_index(&rat(0, 1), &rat(1, 1)).is_err());
        for (a, c) in [((3, 1), (1, 1)), ((10, 1), (22, 7)), ((7, 3), (100, 1))] {
            let (a, c) = (rat(a.0, a.1), rat(c.0, c.1));
            assert_eq!(dominance_index(&a, &c).unwrap(), brute_dominance(&a, &c));
        }
    }

    #[test]
    fn sqrt_test() {
        assert_eq!(
            sqrt_rationality(&int(4)).unwrap(),
            SqrtRationality::PerfectSquare { m: int(4), root: int(2) }
        );
        assert_eq!(
            sqrt_rationality(&int(2)).unwrap(),
            SqrtRationality::Irrational { m: int(2), floor: int(1) }
        );
        assert_eq!(
            sqrt_rationality(&int(144)).unwrap(),
            SqrtRationality::PerfectSquare { m: int(144), root: int(12) }
        );
        assert!(sqrt_rationality(&int(0)).is_err());
    }

    #[test]
    fn growth_rows() {
        let t = growth_table(7);
        let last = &t[7];
        assert_eq!(
            (last.square.clone(), last.cube.clone(), last.power_of_two.clone(), last.factorial.clone()),
            (int(49), int(343), int(128), int(5040))
        );
        assert_eq!(t[0].factorial, int(1));
        assert_eq!(t[0].power_of_two, int(1));
    }

    proptest! {
        #[test]
        fn dominance_is_minimal(an in 1i64..40, ad in 1i64..10, cn in 1i64..50, cd in 1i64..10) {
            let a = rat(an, ad);
            let c = rat(cn, cd);
            let n = dominance_index(&a, &c).unwrap();
            let holds = |k: u32| c.clone() * num_traits::pow(a.clone(), k as usize)
                < Rational::from_integer(factorial(k));
            prop_assert!(holds(n));
            prop_assert!(n == 1 || !holds(n - 1));
        }
    }
}
