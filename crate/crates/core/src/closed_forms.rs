//! Closed formulas: the k = 1 moment polynomial, its leading coefficient,
//! the degree law, and the deterministic N = 1 value.

use num_traits::Pow;

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rational::{binomial, factorial, Int, Rational};

const MAX_BETA: u32 = 8;

/// Report bundling the closed-form facts for one `(k, beta)`.
#[derive(Debug, Clone)]
pub struct ClosedFormReport {
    pub k: u32,
    pub beta: u32,
    /// Present only for k = 1, where the full polynomial is known in closed form.
    pub polynomial: Option<UniPoly>,
    pub leading_coefficient: Option<Rational>,
    pub degree: u32,
}

pub fn closed_form_report(k: u32, beta: u32) -> Result<ClosedFormReport> {
    let polynomial = if k == 1 {
        Some(keating_snaith_poly(beta)?)
    } else {
        None
    };
    let leading_coefficient = if k == 1 {
        Some(ks_leading_coeff(beta)?)
    } else {
        None
    };
    Ok(ClosedFormReport {
        k,
        beta,
        polynomial,
        leading_coefficient,
        degree: degree_of(k, beta),
    })
}

/// `MoM_N(1, beta) = prod_{0 <= i,j <= beta-1} (1 + N/(i+j+1))`, expanded
/// exactly: a degree `beta^2` polynomial with positive rational coefficients.
pub fn keating_snaith_poly(beta: u32) -> Result<UniPoly> {
    if beta == 0 || beta > MAX_BETA {
        return Err(Error::SizeLimit {
            what: "beta",
            got: beta as u64,
            limit: MAX_BETA as u64,
        });
    }
    let mut p = UniPoly::one();
    for i in 0..beta as i64 {
        for j in 0..beta as i64 {
            let d = i + j + 1;
            p = p
                .mul_linear(d)
                .scale(&Rational::new(Int::from(1), Int::from(d)));
        }
    }
    Ok(p)
}

/// Leading coefficient of the k = 1 polynomial: `prod_{j=0}^{beta-1} j!/(j+beta)!`.
pub fn ks_leading_coeff(beta: u32) -> Result<Rational> {
    if beta == 0 || beta > MAX_BETA {
        return Err(Error::SizeLimit {
            what: "beta",
            got: beta as u64,
            limit: MAX_BETA as u64,
        });
    }
    let mut acc = Rational::from_integer(Int::from(1));
    for j in 0..beta as u64 {
        acc *= Rational::new(factorial(j), factorial(j + beta as u64));
    }
    Ok(acc)
}

/// Degree of `MoM_N(k, beta)` in `N`: `k^2 beta^2 - k + 1`.
pub fn degree_of(k: u32, beta: u32) -> u32 {
    k * k * beta * beta - k + 1
}

/// `MoM_1(k, beta) = C(2*beta, beta)^k`: at N = 1 the inner average is
/// deterministic, so the k-th moment is the k-th power.
pub fn n1_value(k: u32, beta: u32) -> Int {
    binomial(2 * beta as u64, beta as u64).pow(k)
}
