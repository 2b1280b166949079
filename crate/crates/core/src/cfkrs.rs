//! Independent evaluation of `MoM_N(k, beta)` via the combinatorial ratio
//! sum over split permutations.
//!
//! The unitary-group average `I_{k,beta}` is, after multiplying by
//! `prod_{j > k*beta} w_j^N`, a sum over the `C(2*k*beta, k*beta)` split
//! permutations of `{1, ..., 2*k*beta}` of products of factors
//! `1/(1 - w_l / w_q)`.  The variable vector `w` repeats each of the `k` base
//! values `beta` times in each half, so individual summands are singular.  We
//! deform `w_m = q_{b(m)} * (1+t)^{c_m}` with pairwise-distinct integer
//! exponents `c_m`; every summand becomes a truncated Laurent series in `t`,
//! the poles cancel in the sum, and the value is the coefficient of `t^0`.
//!
//! The moment itself is the joint constant term of `I_{k,beta}` in the `k`
//! base variables, recovered by exact univariate interpolation one variable
//! at a time.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly;
use crate::rational::{rat, Int, Rational};
use crate::series::TruncatedLaurentSeries;

const MAX_HALF: u32 = 6;

/// Default cap on the number of `eval_i` calls a constant-term extraction
/// may issue: `(2*beta*N + 1)^k`.
pub const DEFAULT_MAX_EVALS: u64 = 200_000;

/// One of the `C(2*half, half)` permutations increasing on each half,
/// stored as the ordered set of positions mapped to the first half.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPermutation {
    first_half: Vec<u8>, // 0-based positions, increasing
}

impl SplitPermutation {
    /// Positions (0-based) mapped to the first half, increasing.
    pub fn first_half(&self) -> &[u8] {
        &self.first_half
    }

    /// The complementary positions, increasing.
    pub fn second_half(&self, total: usize) -> Vec<u8> {
        (0..total as u8)
            .filter(|p| !self.first_half.contains(p))
            .collect()
    }
}

/// All split permutations for the given half size, lexicographic in the
/// first half.
pub fn enumerate_xi(half: u32) -> Result<Vec<SplitPermutation>> {
    if half == 0 || half > MAX_HALF {
        return Err(Error::SizeLimit {
            what: "k*beta",
            got: half as u64,
            limit: MAX_HALF as u64,
        });
    }
    let total = 2 * half as usize;
    let m = half as usize;
    let mut out = Vec::new();
    let mut current: Vec<u8> = (0..m as u8).collect();
    loop {
        out.push(SplitPermutation {
            first_half: current.clone(),
        });
        let mut i = m;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if (current[i] as usize) < total - (m - i) {
                current[i] += 1;
                for j in i + 1..m {
                    current[j] = current[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn validate_q(k: u32, q: &[Rational]) -> Result<()> {
    if q.len() != k as usize {
        return Err(Error::InvalidArgument(format!(
            "expected {k} base values, got {}",
            q.len()
        )));
    }
    for (i, qi) in q.iter().enumerate() {
        if qi.is_zero() {
            return Err(Error::InvalidArgument("base values must be nonzero".into()));
        }
        for qj in &q[..i] {
            if qi == qj {
                return Err(Error::InvalidArgument(
                    "base values must be pairwise distinct".into(),
                ));
            }
        }
    }
    Ok(())
}

/// Block index (0-based) of position `pos` (0-based) in the repeated layout
/// `(q_1^beta, ..., q_k^beta, q_1^beta, ..., q_k^beta)`.
fn block_of(pos: usize, k: u32, beta: u32) -> usize {
    (pos / beta as usize) % k as usize
}

/// Value of `I_{k,beta}` at `e^{i theta_j} -> q_j`, with the default
/// deformation exponents `c_m = m + 1`.
pub fn eval_i(k: u32, beta: u32, n: u32, q: &[Rational]) -> Result<Rational> {
    let total = (2 * k * beta) as usize;
    let exponents: Vec<i64> = (1..=total as i64).collect();
    eval_i_with_exponents(k, beta, n, q, &exponents)
}

/// As [`eval_i`] with explicit deformation exponents.  The result is
/// independent of the exponent assignment as long as the `c_m` are pairwise
/// distinct; a residual-pole error signals a violated assumption.
pub fn eval_i_with_exponents(
    k: u32,
    beta: u32,
    n: u32,
    q: &[Rational],
    exponents: &[i64],
) -> Result<Rational> {
    if k == 0 || beta == 0 {
        return Err(Error::InvalidArgument("k and beta must be positive".into()));
    }
    let half = k * beta;
    if half > MAX_HALF {
        return Err(Error::SizeLimit {
            what: "k*beta",
            got: half as u64,
            limit: MAX_HALF as u64,
        });
    }
    validate_q(k, q)?;
    let total = 2 * half as usize;
    if exponents.len() != total {
        return Err(Error::InvalidArgument(format!(
            "expected {total} deformation exponents, got {}",
            exponents.len()
        )));
    }
    for (i, ci) in exponents.iter().enumerate() {
        if exponents[..i].contains(ci) {
            return Err(Error::InvalidArgument(
                "deformation exponents must be pairwise distinct".into(),
            ));
        }
    }

    // Same-block denominator pairs contribute at most beta^2 per block, so
    // the pole order of a summand is at most k*beta^2 and a window of
    // k*beta^2 + 1 keeps t^0 tracked.  One extra slot compensates for the
    // exact zero at t^0 in each same-block factor 1 - (1+t)^d.
    let window = (k * beta * beta + 2) as usize;
    let block = |pos: usize| block_of(pos, k, beta);

    // 1/(1 - w_a / w_b) for every ordered pair of positions, reused across
    // all split permutations.
    let mut inv_factor = vec![vec![None; total]; total];
    for a in 0..total {
        for b in 0..total {
            if a == b {
                continue;
            }
            let rho = &q[block(a)] / &q[block(b)];
            let ratio = TruncatedLaurentSeries::one_plus_t_pow(exponents[a] - exponents[b], window)
                .scale(&rho);
            let factor = TruncatedLaurentSeries::one(window).sub(&ratio);
            inv_factor[a][b] = Some(factor.inverse()?);
        }
    }

    let mut sum: Option<TruncatedLaurentSeries> = None;
    for sigma in enumerate_xi(half)? {
        let second = sigma.second_half(total);
        let mut num_scalar = Rational::one();
        let mut num_exp: i64 = 0;
        for &p in &second {
            num_scalar *= pow_rational(&q[block(p as usize)], n as i64);
            num_exp += n as i64 * exponents[p as usize];
        }
        let mut term = TruncatedLaurentSeries::one_plus_t_pow(num_exp, window).scale(&num_scalar);
        for &l in sigma.first_half() {
            for &p in &second {
                term = term.mul(inv_factor[l as usize][p as usize].as_ref().unwrap());
            }
        }
        sum = Some(match sum {
            Some(acc) => acc.add(&term),
            None => term,
        });
    }
    let sum = sum.expect("at least one split permutation");

    // Divide by prod_{j > k*beta} w_j^N.
    let mut pre_scalar = Rational::one();
    let mut pre_exp: i64 = 0;
    for pos in half as usize..total {
        pre_scalar *= pow_rational(&q[block(pos)], -(n as i64));
        pre_exp -= n as i64 * exponents[pos];
    }
    let result = sum
        .mul(&TruncatedLaurentSeries::one_plus_t_pow(pre_exp, window))
        .scale(&pre_scalar);
    result.limit_t0()
}

fn pow_rational(q: &Rational, e: i64) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= q;
    }
    if e < 0 {
        acc = Rational::one() / acc;
    }
    acc
}

/// The exact constant term of `I_{k,beta}` over the `k` base variables;
/// equals the restricted tableau count.
pub fn ct_extract(k: u32, beta: u32, n: u32) -> Result<Int> {
    ct_extract_with_budget(k, beta, n, DEFAULT_MAX_EVALS)
}

pub fn ct_extract_with_budget(k: u32, beta: u32, n: u32, max_evals: u64) -> Result<Int> {
    if k == 0 || beta == 0 {
        return Err(Error::InvalidArgument("k and beta must be positive".into()));
    }
    let nodes_per_var = (2 * beta * n + 1) as u64;
    let evals = nodes_per_var.checked_pow(k).ok_or(Error::SizeLimit {
        what: "grid evaluations",
        got: u64::MAX,
        limit: max_evals,
    })?;
    if evals > max_evals {
        return Err(Error::SizeLimit {
            what: "grid evaluations",
            got: evals,
            limit: max_evals,
        });
    }
    let value = ct_recurse(k, beta, n, &mut Vec::new())?;
    if !value.denom().is_one() {
        return Err(Error::InvalidArgument(format!(
            "constant term is not an integer: {value}"
        )));
    }
    Ok(value.to_integer())
}

/// Nodes for variable `var` (0-based): small positive integers, disjoint
/// across variables so every grid tuple has pairwise-distinct coordinates.
fn nodes_for(var: usize, beta: u32, n: u32) -> Vec<Rational> {
    let count = (2 * beta * n + 1) as i64;
    let offset = var as i64 * (count + 1);
    (1..=count).map(|i| rat(offset + i)).collect()
}

/// Per-variable Laurent exponents of `I` lie in `[-beta*N, beta*N]`, so the
/// constant term in one variable is the coefficient of index `beta*N` after
/// an index shift, read off from `2*beta*N + 1` exact samples.
fn ct_recurse(k: u32, beta: u32, n: u32, fixed: &mut Vec<Rational>) -> Result<Rational> {
    let var = fixed.len();
    if var == k as usize {
        return eval_i(k, beta, n, fixed);
    }
    let shift = (beta * n) as usize;
    let mut samples = Vec::new();
    for x in nodes_for(var, beta, n) {
        fixed.push(x.clone());
        let value = ct_recurse(k, beta, n, fixed)?;
        fixed.pop();
        samples.push((x.clone(), pow_rational(&x, shift as i64) * value));
    }
    let p = poly::interpolate(&samples)?;
    Ok(p.coeff(shift))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat_frac};
    use crate::rssyt;

    #[test]
    fn xi_sizes() {
        assert_eq!(enumerate_xi(1).unwrap().len(), 2);
        assert_eq!(enumerate_xi(2).unwrap().len(), 6);
        assert_eq!(enumerate_xi(3).unwrap().len(), 20);
        assert!(enumerate_xi(7).is_err());
    }

    #[test]
    fn xi_halves_are_increasing_and_lexicographic() {
        let xs = enumerate_xi(3).unwrap();
        for s in &xs {
            assert!(s.first_half().windows(2).all(|w| w[0] < w[1]));
            assert!(s.second_half(6).windows(2).all(|w| w[0] < w[1]));
        }
        assert_eq!(xs[0].first_half(), &[0, 1, 2]);
        assert_eq!(xs[19].first_half(), &[3, 4, 5]);
    }

    #[test]
    fn eval_i_k1_matches_keating_snaith_values() {
        // For k = 1 the average is independent of theta: N + 1 at beta = 1.
        assert_eq!(eval_i(1, 1, 3, &[rat(2)]).unwrap(), rat(4));
        // MoM_N(1,2) = (N+1)(N+2)^2(N+3)/12 at N = 2 is 3*16*5/12 = 20.
        assert_eq!(eval_i(1, 2, 2, &[rat_frac(3, 2)]).unwrap(), rat(20));
    }

    /// Independent oracle from the Schur-polynomial representation:
    /// I = s_{(1,1)}(q1, q2, q1, q2) / (q1 q2) = e_2(1,2,1,2) / 2 = 13/2.
    #[test]
    fn eval_i_matches_elementary_symmetric_oracle() {
        let vals = [rat(1), rat(2), rat(1), rat(2)];
        let mut e2 = Rational::zero();
        for i in 0..4 {
            for j in i + 1..4 {
                e2 += &vals[i] * &vals[j];
            }
        }
        let expected = e2 / rat(2);
        assert_eq!(expected, rat_frac(13, 2));
        assert_eq!(eval_i(2, 1, 1, &[rat(1), rat(2)]).unwrap(), expected);
    }

    /// Brute-force Schur evaluation: sum over all SSYT of rectangular shape
    /// `(k*beta) x N` with entries in `1..=2*k*beta` of the content monomial.
    fn schur_rectangular(values: &[Rational], rows: usize, cols: usize) -> Rational {
        #[allow(clippy::too_many_arguments)]
        fn fill(
            col: usize,
            row: usize,
            rows: usize,
            cols: usize,
            grid: &mut Vec<Vec<u8>>,
            values: &[Rational],
            acc: &mut Rational,
            monomial: Rational,
        ) {
            if col == cols {
                *acc += monomial;
                return;
            }
            let (ncol, nrow) = if row + 1 == rows {
                (col + 1, 0)
            } else {
                (col, row + 1)
            };
            let above = if row > 0 { grid[col][row - 1] } else { 0 };
            let left = if col > 0 { grid[col - 1][row] } else { 1 };
            for v in (above + 1).max(left)..=values.len() as u8 {
                grid[col][row] = v;
                let m = monomial.clone() * &values[(v - 1) as usize];
                fill(ncol, nrow, rows, cols, grid, values, acc, m);
            }
        }
        let mut grid = vec![vec![0u8; rows]; cols];
        let mut acc = Rational::zero();
        fill(
            0,
            0,
            rows,
            cols,
            &mut grid,
            values,
            &mut acc,
            Rational::one(),
        );
        acc
    }

    #[test]
    fn eval_i_matches_schur_oracle() {
        for (k, beta, n, q) in [
            (2u32, 1u32, 2u32, vec![rat(2), rat(3)]),
            (2, 1, 1, vec![rat_frac(1, 2), rat(3)]),
            (1, 2, 2, vec![rat(2)]),
            (3, 1, 1, vec![rat(1), rat(2), rat(5)]),
        ] {
            let rows = (k * beta) as usize;
            let mut omega = Vec::new();
            for _ in 0..2 {
                for qj in &q[..k as usize] {
                    for _ in 0..beta {
                        omega.push(qj.clone());
                    }
                }
            }
            let schur = schur_rectangular(&omega, rows, n as usize);
            let mut denom = Rational::one();
            for qj in &q {
                denom *= pow_rational(qj, (n * beta) as i64);
            }
            let expected = schur / denom;
            assert_eq!(
                eval_i(k, beta, n, &q).unwrap(),
                expected,
                "(k, beta, N) = ({k}, {beta}, {n})"
            );
        }
    }

    #[test]
    fn eval_i_at_n0_is_one() {
        assert_eq!(eval_i(2, 1, 0, &[rat(1), rat(2)]).unwrap(), Rational::one());
        assert_eq!(eval_i(1, 2, 0, &[rat(5)]).unwrap(), Rational::one());
        assert_eq!(eval_i(2, 2, 0, &[rat(2), rat(7)]).unwrap(), Rational::one());
    }

    #[test]
    fn eval_i_is_exponent_assignment_invariant() {
        let q = [rat(2), rat(5)];
        let a = eval_i(2, 1, 2, &q).unwrap();
        let shuffled = [7i64, -3, 2, 11];
        let b = eval_i_with_exponents(2, 1, 2, &q, &shuffled).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn eval_i_is_symmetric_in_blocks() {
        let a = eval_i(2, 1, 2, &[rat(2), rat(5)]).unwrap();
        let b = eval_i(2, 1, 2, &[rat(5), rat(2)]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn coincident_or_zero_q_is_rejected() {
        assert!(eval_i(2, 1, 1, &[rat(3), rat(3)]).is_err());
        assert!(eval_i(2, 1, 1, &[rat(0), rat(3)]).is_err());
        assert!(eval_i(2, 1, 1, &[rat(3)]).is_err());
    }

    #[test]
    fn ct_examples() {
        for n in 0..=4 {
            assert_eq!(ct_extract(1, 1, n).unwrap(), int(n as i64 + 1));
        }
        assert_eq!(ct_extract(2, 1, 1).unwrap(), int(4));
        assert_eq!(ct_extract(2, 1, 2).unwrap(), int(10));
        assert_eq!(ct_extract(3, 1, 1).unwrap(), int(8));
    }

    #[test]
    fn ct_matches_tableau_count() {
        for (k, beta) in [(1u32, 1u32), (1, 2), (2, 1), (2, 2)] {
            for n in 0..=2 {
                assert_eq!(
                    ct_extract(k, beta, n).unwrap(),
                    rssyt::count_rssyt(k, beta, n).unwrap(),
                    "(k, beta, N) = ({k}, {beta}, {n})"
                );
            }
        }
    }

    /// A (2*beta*N + 2)-th node is a consistency guard: the interpolated
    /// polynomial in the outermost variable must predict it exactly.
    #[test]
    fn extra_node_is_consistent() {
        let (k, beta, n) = (2u32, 1u32, 1u32);
        let shift = (beta * n) as i64;
        let mut samples = Vec::new();
        for i in 1..=(2 * beta * n + 2) as i64 {
            let x = rat(100 + i); // clear of the inner variable's node range
            let value = {
                let mut fixed = vec![x.clone()];
                ct_recurse(k, beta, n, &mut fixed).unwrap()
            };
            samples.push((x.clone(), pow_rational(&x, shift) * value));
        }
        let p = poly::interpolate(&samples[..samples.len() - 1]).unwrap();
        let (ref gx, ref gy) = samples[samples.len() - 1];
        assert_eq!(p.eval(gx), gy.clone());
        assert_eq!(p.coeff(shift as usize), rat(4));
    }

    #[test]
    fn ct_budget_is_enforced() {
        assert!(matches!(
            ct_extract_with_budget(2, 1, 3, 10).unwrap_err(),
            Error::SizeLimit { .. }
        ));
    }
}
