//! Central coefficient of the squared Vandermonde determinant, by explicit
//! multivariate expansion.

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{Int, Rational};

const MAX_VARS: u32 = 6;

/// Coefficient of `(x_1 ... x_n)^{n-1}` in `(prod_{i<j} (x_j - x_i))^2`,
/// extracted by brute-force expansion of the `2*C(n,2)` linear factors.
/// Equals `(-1)^{floor(n/2)} * n!`.
pub fn vandermonde_sq_central_coeff(n: u32) -> Result<Rational> {
    if !(1..=MAX_VARS).contains(&n) {
        return Err(Error::SizeLimit {
            what: "vandermonde variable count",
            got: n as u64,
            limit: MAX_VARS as u64,
        });
    }
    let n = n as usize;
    // Monomials keyed by exponent vector.
    let mut acc: HashMap<Vec<u8>, Int> = HashMap::new();
    acc.insert(vec![0u8; n], Int::from(1));
    for _pass in 0..2 {
        for i in 0..n {
            for j in (i + 1)..n {
                // Multiply by (x_j - x_i).
                let mut next: HashMap<Vec<u8>, Int> = HashMap::new();
                for (expo, c) in &acc {
                    let mut ej = expo.clone();
                    ej[j] += 1;
                    *next.entry(ej).or_insert_with(Int::zero) += c;
                    let mut ei = expo.clone();
                    ei[i] += 1;
                    *next.entry(ei).or_insert_with(Int::zero) -= c;
                }
                next.retain(|_, c| !c.is_zero());
                acc = next;
            }
        }
    }
    let central = vec![(n - 1) as u8; n];
    let coeff = acc.remove(&central).unwrap_or_else(Int::zero);
    Ok(Rational::from_integer(coeff))
}
