//! Truncated Laurent series in one deformation parameter `t`.
//!
//! A series tracks exact rational coefficients for the exponent window
//! `min_exp .. min_exp + len`.  Everything below the window is exactly zero;
//! everything above is unknown.  Products and sums keep the longest window
//! that remains exact, so precision management is the caller's duty: the
//! caller chooses window lengths large enough that `t^0` stays tracked.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{rational_string, Int, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedLaurentSeries {
    min_exp: i64,
    coeffs: Vec<Rational>,
}

impl TruncatedLaurentSeries {
    /// Series with the given lowest tracked exponent and coefficients.
    pub fn new(min_exp: i64, coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "series window must be nonempty");
        let mut s = TruncatedLaurentSeries { min_exp, coeffs };
        s.trim();
        s
    }

    pub fn constant(c: Rational, window: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); window];
        coeffs[0] = c;
        TruncatedLaurentSeries::new(0, coeffs)
    }

    pub fn one(window: usize) -> Self {
        TruncatedLaurentSeries::constant(Rational::one(), window)
    }

    /// Binomial expansion of `(1+t)^e` for any integer `e`, truncated to
    /// `window` coefficients.
    pub fn one_plus_t_pow(e: i64, window: usize) -> Self {
        let mut coeffs = Vec::with_capacity(window);
        let mut c = Rational::one();
        for j in 0..window as i64 {
            coeffs.push(c.clone());
            c *= Rational::new(Int::from(e - j), Int::from(j + 1));
        }
        TruncatedLaurentSeries::new(0, coeffs)
    }

    /// Lowest tracked exponent.
    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// One past the highest tracked exponent.
    pub fn end_exp(&self) -> i64 {
        self.min_exp + self.coeffs.len() as i64
    }

    pub fn window_len(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `t^e`; exactly zero below the window.
    /// Panics if `e` is above the tracked window.
    pub fn coeff(&self, e: i64) -> Rational {
        assert!(
            e < self.end_exp(),
            "coefficient t^{e} is outside the window"
        );
        if e < self.min_exp {
            Rational::zero()
        } else {
            self.coeffs[(e - self.min_exp) as usize].clone()
        }
    }

    // Leading zeros carry no information: raise min_exp, keep end_exp fixed.
    fn trim(&mut self) {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        let lead = lead.min(self.coeffs.len() - 1);
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_exp += lead as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let lo = self.min_exp.min(other.min_exp);
        let hi = self.end_exp().min(other.end_exp());
        assert!(hi > lo, "series windows do not overlap");
        let mut coeffs = Vec::with_capacity((hi - lo) as usize);
        for e in lo..hi {
            coeffs.push(self.coeff(e) + other.coeff(e));
        }
        TruncatedLaurentSeries::new(lo, coeffs)
    }

    pub fn neg(&self) -> Self {
        TruncatedLaurentSeries {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedLaurentSeries::new(self.min_exp, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Product; the result window is the shorter of the operand windows,
    /// measured from the result's valuation.
    pub fn mul(&self, other: &Self) -> Self {
        let len = self.coeffs.len().min(other.coeffs.len());
        let mut coeffs = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().take(len).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(len - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncatedLaurentSeries::new(self.min_exp + other.min_exp, coeffs)
    }

    /// Multiplicative inverse.  Defined iff some tracked coefficient is
    /// nonzero; the inverse's valuation is the negation of the operand's.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible);
        }
        // After trim the leading coefficient is the valuation coefficient.
        debug_assert!(!self.coeffs[0].is_zero());
        let u0_inv = Rational::one() / &self.coeffs[0];
        let mut inv = vec![Rational::zero(); self.coeffs.len()];
        inv[0] = u0_inv.clone();
        for n in 1..self.coeffs.len() {
            let mut acc = Rational::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &inv[n - i];
                }
            }
            inv[n] = -acc * &u0_inv;
        }
        Ok(TruncatedLaurentSeries::new(-self.min_exp, inv))
    }

    /// The value at `t = 0`, i.e. the coefficient of `t^0`.  Errors if any
    /// tracked negative-exponent coefficient is nonzero (a residual pole) or
    /// if the window does not reach `t^0`.
    pub fn limit_t0(&self) -> Result<Rational> {
        if self.end_exp() <= 0 {
            return Err(Error::WindowTooShort {
                min_exp: self.min_exp,
                max_exp: self.end_exp() - 1,
            });
        }
        for e in self.min_exp..0 {
            let c = self.coeff(e);
            if !c.is_zero() {
                return Err(Error::ResidualPole {
                    exponent: e,
                    coeff: rational_string(&c),
                });
            }
        }
        Ok(self.coeff(0))
    }
}

impl std::fmt::Display for TruncatedLaurentSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({})*t^{}", rational_string(c), self.min_exp + i as i64)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.end_exp())
    }
}
