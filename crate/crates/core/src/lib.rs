//! Exact computation of the moments of moments of characteristic polynomials
//! of random unitary matrices.
//!
//! For `k, beta, N` positive integers, `MoM_N(k, beta)` is the `k`-th moment
//! over the circular unitary ensemble of the `2beta`-th absolute moment of the
//! characteristic polynomial over the unit circle.  It is a polynomial in `N`
//! of degree `k^2 beta^2 - k + 1`.  This crate evaluates it exactly by two
//! independent routes:
//!
//! * [`rssyt`] counts restricted semistandard Young tableaux with a column
//!   transfer-matrix dynamic program (plus a backtracking oracle);
//! * [`cfkrs`] sums a combinatorial ratio formula over split permutations,
//!   resolving repeated-variable poles with truncated Laurent series, and
//!   extracts the constant term by exact interpolation.
//!
//! [`reconstructor`] interpolates the integer values into the full polynomial,
//! asserts the degree law, and checks everything against an embedded table of
//! known polynomials.  All arithmetic is exact rational; no floating point.

pub mod cfkrs;
pub mod closed_forms;
pub mod error;
pub mod poly;
pub mod rational;
pub mod reconstructor;
pub mod rssyt;
pub mod series;
pub mod vandermonde;

pub use error::{Error, Result};
pub use poly::UniPoly;
pub use rational::{Int, Rational};
pub use series::TruncatedLaurentSeries;

/// Identifies a computation target: the pair `(k, beta)` plus an optional `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MomentSpec {
    pub k: u32,
    pub beta: u32,
    pub n: Option<u32>,
}

impl MomentSpec {
    pub fn new(k: u32, beta: u32) -> Self {
        MomentSpec { k, beta, n: None }
    }

    pub fn at(k: u32, beta: u32, n: u32) -> Self {
        MomentSpec {
            k,
            beta,
            n: Some(n),
        }
    }
}

impl std::fmt::Display for MomentSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.n {
            Some(n) => write!(f, "(k={}, beta={}, N={})", self.k, self.beta, n),
            None => write!(f, "(k={}, beta={})", self.k, self.beta),
        }
    }
}
