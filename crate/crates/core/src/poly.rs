//! Dense univariate polynomials in `N` over exact rationals, with Newton
//! divided-difference interpolation.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{rational_string, Int, Rational};

/// A polynomial stored by ascending power of `N`; trailing zeros trimmed.
/// The zero polynomial has an empty coefficient list and no degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// The monomial `N`.
    pub fn variable() -> Self {
        UniPoly::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `N^i` (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, n: i64) -> Rational {
        self.eval(&Rational::from_integer(Int::from(n)))
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        UniPoly::new(out)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    /// Multiplies by the linear factor `N + shift`.
    pub fn mul_linear(&self, shift: i64) -> UniPoly {
        self.mul(&UniPoly::new(vec![
            Rational::from_integer(Int::from(shift)),
            Rational::one(),
        ]))
    }

    /// Exact division by `N + shift`; `None` when the remainder is nonzero.
    pub fn div_linear(&self, shift: i64) -> Option<UniPoly> {
        if self.is_zero() {
            return Some(UniPoly::zero());
        }
        let s = Rational::from_integer(Int::from(shift));
        let mut quot = vec![Rational::zero(); self.coeffs.len() - 1];
        let mut carry = Rational::zero();
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i] - &s * &carry;
            if i == 0 {
                let rem = self.coeffs[0].clone() - &s * &carry;
                if !rem.is_zero() {
                    return None;
                }
            } else {
                quot[i - 1] = c.clone();
                carry = c;
            }
        }
        Some(UniPoly::new(quot))
    }

    /// True iff every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }
}

impl std::fmt::Display for UniPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{}", rational_string(&mag))?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}N", if show_coeff { " " } else { "" })?,
                _ => write!(f, "{}N^{}", if show_coeff { " " } else { "" }, i)?,
            }
        }
        Ok(())
    }
}

/// Unique polynomial of degree `< samples.len()` through the given
/// `(abscissa, value)` pairs.  Newton divided differences; exact.
pub fn interpolate(samples: &[(Rational, Rational)]) -> Result<UniPoly> {
    if samples.is_empty() {
        return Err(Error::InvalidArgument(
            "interpolation needs at least one sample".into(),
        ));
    }
    for (i, (xi, _)) in samples.iter().enumerate() {
        for (xj, _) in &samples[..i] {
            if xi == xj {
                return Err(Error::DuplicateAbscissa(rational_string(xi)));
            }
        }
    }
    let xs: Vec<&Rational> = samples.iter().map(|(x, _)| x).collect();
    let mut dd: Vec<Rational> = samples.iter().map(|(_, y)| y.clone()).collect();
    for j in 1..dd.len() {
        for i in (j..dd.len()).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (xs[i] - xs[i - j]);
        }
    }
    let mut poly = UniPoly::zero();
    let mut basis = UniPoly::one();
    for (j, c) in dd.iter().enumerate() {
        poly = poly.add(&basis.scale(c));
        if j + 1 < dd.len() {
            basis = basis.mul(&UniPoly::new(vec![-xs[j].clone(), Rational::one()]));
        }
    }
    Ok(poly)
}
