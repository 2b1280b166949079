//! Exact arbitrary-precision integers and rationals.
//!
//! `BigRational` already maintains the invariants we need (lowest terms,
//! positive denominator), so these are thin aliases plus a few constructors
//! and combinatorial helpers used throughout the crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Int = BigInt;
pub type Rational = BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(Int::from(n))
}

/// Rational `num/den`; panics on zero denominator.
pub fn rat_frac(num: i64, den: i64) -> Rational {
    Rational::new(Int::from(num), Int::from(den))
}

pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// Exact binomial coefficient; `r > n` yields 0.
pub fn binomial(n: u64, r: u64) -> Int {
    if r > n {
        return Int::zero();
    }
    num_integer::binomial(Int::from(n), Int::from(r))
}

pub fn factorial(n: u64) -> Int {
    let mut acc = Int::one();
    for i in 2..=n {
        acc *= Int::from(i);
    }
    acc
}

/// Renders a rational as `num` or `num/den`, always in lowest terms.
pub fn rational_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the output of [`rational_string`].
pub fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: Int = n.parse().ok()?;
            let d: Int = d.parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}
