//! Exact evaluation of `MoM_N(k, beta)` as a count of restricted semistandard
//! Young tableaux of rectangular shape `k*beta` rows by `N` columns with
//! entries in `1..=2*k*beta`.  The restriction: exactly `N*beta` entries fall
//! in each label block `{2*beta*(j-1)+1, ..., 2*j*beta}`.
//!
//! The main counter is a column transfer-matrix dynamic program; columns are
//! processed left to right and the state is the last column together with the
//! per-block entry counts so far.  A direct cell-by-cell backtracking
//! enumerator serves as a small-scale oracle.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{Int, Rational};

/// Maximum number of tracked block counts (`k - 1`) in a DP key.
const TAU_SLOTS: usize = 12;

/// Resource limits for the tableau counters.  Exceeding a budget is an
/// error, never silent truncation.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    /// Upper bound on `k * beta` (number of tableau rows).
    pub max_half: u32,
    /// Upper bound on `N` (number of tableau columns).
    pub max_n: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_half: 8,
            max_n: 64,
        }
    }
}

/// One column of the tableau: a strictly increasing `k*beta`-tuple over
/// `{1, ..., 2*k*beta}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColumnState {
    entries: Vec<u8>,
}

impl ColumnState {
    pub fn entries(&self) -> &[u8] {
        &self.entries
    }
}

fn check_params(k: u32, beta: u32) -> Result<()> {
    if k == 0 || beta == 0 {
        return Err(Error::InvalidArgument("k and beta must be positive".into()));
    }
    Ok(())
}

/// All `C(2*k*beta, k*beta)` column states in lexicographic order.
pub fn enumerate_column_states(k: u32, beta: u32) -> Result<Vec<ColumnState>> {
    enumerate_column_states_with_budget(k, beta, &Budget::default())
}

pub fn enumerate_column_states_with_budget(
    k: u32,
    beta: u32,
    budget: &Budget,
) -> Result<Vec<ColumnState>> {
    check_params(k, beta)?;
    let half = k * beta;
    if half > budget.max_half {
        return Err(Error::SizeLimit {
            what: "k*beta",
            got: half as u64,
            limit: budget.max_half as u64,
        });
    }
    let alphabet = 2 * half as u8;
    let rows = half as usize;
    let mut states = Vec::new();
    let mut current: Vec<u8> = (1..=rows as u8).collect();
    loop {
        states.push(ColumnState {
            entries: current.clone(),
        });
        // Next lexicographic combination.
        let mut i = rows;
        loop {
            if i == 0 {
                return Ok(states);
            }
            i -= 1;
            if current[i] < alphabet - (rows - 1 - i) as u8 {
                current[i] += 1;
                for j in i + 1..rows {
                    current[j] = current[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// True iff `left` may stand immediately left of `right`: rows weakly
/// increase, so `left[r] <= right[r]` for every row.
pub fn column_succ(left: &ColumnState, right: &ColumnState) -> bool {
    debug_assert_eq!(left.entries.len(), right.entries.len());
    left.entries.iter().zip(&right.entries).all(|(l, r)| l <= r)
}

/// Per-block entry counts of a column; block `j` holds labels
/// `2*beta*j + 1 ..= 2*beta*(j+1)` (0-based `j`).
fn block_counts(state: &ColumnState, k: u32, beta: u32) -> Vec<u16> {
    let mut counts = vec![0u16; k as usize];
    for &v in &state.entries {
        counts[((v as u32 - 1) / (2 * beta)) as usize] += 1;
    }
    counts
}

type TauKey = [u16; TAU_SLOTS];

/// Exact count of restricted SSYT; equals `MoM_N(k, beta)` at integer `N`.
pub fn count_rssyt(k: u32, beta: u32, n: u32) -> Result<Int> {
    count_rssyt_with_budget(k, beta, n, &Budget::default())
}

pub fn count_rssyt_with_budget(k: u32, beta: u32, n: u32, budget: &Budget) -> Result<Int> {
    check_params(k, beta)?;
    if n > budget.max_n {
        return Err(Error::SizeLimit {
            what: "N",
            got: n as u64,
            limit: budget.max_n as u64,
        });
    }
    if n == 0 {
        return Ok(Int::one()); // the empty tableau
    }
    let states = enumerate_column_states_with_budget(k, beta, budget)?;
    // Successor lists are only needed once there is a second column.
    let succ = if n >= 2 {
        successor_lists(&states)
    } else {
        Vec::new()
    };
    let counts: Vec<Vec<u16>> = states.iter().map(|s| block_counts(s, k, beta)).collect();
    let tracked = (k - 1) as usize;
    let target = (n * beta) as u16;

    // A partial tau survives after column c iff every block can still reach
    // exactly `target` given at most 2*beta entries per block per column.
    let per_column_max = (2 * beta) as u16;
    let bounds = |c: u32| -> (u16, u16) {
        let remaining = (n - c) as u16 * per_column_max;
        let lo = target.saturating_sub(remaining);
        let hi = target.min(per_column_max * c as u16);
        (lo, hi)
    };
    let within = |tau: &TauKey, c: u32| -> bool {
        let (lo, hi) = bounds(c);
        tau[..tracked].iter().all(|&t| t >= lo && t <= hi)
    };

    let mut layer: HashMap<(u32, TauKey), Int> = HashMap::new();
    for (s, cnt) in counts.iter().enumerate() {
        let mut tau = [0u16; TAU_SLOTS];
        tau[..tracked].copy_from_slice(&cnt[..tracked]);
        if within(&tau, 1) {
            layer.insert((s as u32, tau), Int::one());
        }
    }
    for c in 2..=n {
        let mut next: HashMap<(u32, TauKey), Int> = HashMap::new();
        for ((s, tau), count) in &layer {
            for &t in &succ[*s as usize] {
                let mut tau2 = *tau;
                for (slot, add) in tau2[..tracked].iter_mut().zip(&counts[t as usize]) {
                    *slot += add;
                }
                if within(&tau2, c) {
                    *next.entry((t, tau2)).or_insert_with(Int::zero) += count;
                }
            }
        }
        layer = next;
    }

    let mut goal = [0u16; TAU_SLOTS];
    goal[..tracked].fill(target);
    let mut total = Int::zero();
    for ((_, tau), count) in &layer {
        if *tau == goal {
            total += count;
        }
    }
    Ok(total)
}

fn successor_lists(states: &[ColumnState]) -> Vec<Vec<u32>> {
    states
        .iter()
        .map(|left| {
            states
                .iter()
                .enumerate()
                .filter(|(_, right)| column_succ(left, right))
                .map(|(i, _)| i as u32)
                .collect()
        })
        .collect()
}

/// Number of unconstrained SSYT prefixes after each column, i.e. the DP layer
/// sums with the block restriction ignored.  After column `c` this equals
/// `weyl_dimension(k*beta, c, 2*k*beta)`.
pub fn unconstrained_layer_sums(k: u32, beta: u32, n: u32) -> Result<Vec<Int>> {
    let states = enumerate_column_states(k, beta)?;
    let succ = successor_lists(&states);
    let mut layer = vec![Int::one(); states.len()];
    let mut sums = Vec::with_capacity(n as usize);
    sums.push(layer.iter().sum());
    for _ in 2..=n {
        let mut next = vec![Int::zero(); states.len()];
        for (s, count) in layer.iter().enumerate() {
            for &t in &succ[s] {
                next[t as usize] += count;
            }
        }
        layer = next;
        sums.push(layer.iter().sum());
    }
    Ok(sums)
}

/// Independent oracle: explicit cell-by-cell backtracking over all fillings.
/// Restricted to tiny shapes.
pub fn brute_force_count(k: u32, beta: u32, n: u32) -> Result<Int> {
    check_params(k, beta)?;
    let half = k * beta;
    if half > 3 {
        return Err(Error::SizeLimit {
            what: "k*beta",
            got: half as u64,
            limit: 3,
        });
    }
    if n > 4 {
        return Err(Error::SizeLimit {
            what: "N",
            got: n as u64,
            limit: 4,
        });
    }
    let rows = half as usize;
    let cols = n as usize;
    let alphabet = (2 * half) as u8;
    let target = (n * beta) as u16;
    let mut grid = vec![0u8; rows * cols];
    let mut block = vec![0u16; k as usize];
    let mut total = Int::zero();

    // Column-major fill; index p = col * rows + row.
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        p: usize,
        rows: usize,
        cols: usize,
        alphabet: u8,
        beta: u32,
        target: u16,
        grid: &mut [u8],
        block: &mut [u16],
        total: &mut Int,
    ) {
        if p == rows * cols {
            if block.iter().all(|&b| b == target) {
                *total += 1;
            }
            return;
        }
        let (col, row) = (p / rows, p % rows);
        let above = if row > 0 { grid[p - 1] } else { 0 };
        let left = if col > 0 { grid[p - rows] } else { 1 };
        let lower = (above + 1).max(left);
        for v in lower..=alphabet {
            let b = ((v as u32 - 1) / (2 * beta)) as usize;
            if block[b] >= target {
                continue;
            }
            grid[p] = v;
            block[b] += 1;
            recurse(
                p + 1,
                rows,
                cols,
                alphabet,
                beta,
                target,
                grid,
                block,
                total,
            );
            block[b] -= 1;
        }
    }
    recurse(
        0, rows, cols, alphabet, beta, target, &mut grid, &mut block, &mut total,
    );
    Ok(total)
}

/// Number of SSYT of rectangular shape `col_count^row_count` with entries in
/// `1..=n_vars`, by the product formula for the Schur polynomial at all-ones
/// arguments (the shape is padded with zeros to length `n_vars`).
pub fn weyl_dimension(row_count: u32, col_count: u32, n_vars: u32) -> Int {
    if row_count > n_vars {
        return if col_count == 0 {
            Int::one()
        } else {
            Int::zero()
        };
    }
    let lambda = |i: u32| -> i64 {
        if i < row_count {
            col_count as i64
        } else {
            0
        }
    };
    let mut acc = Rational::one();
    for i in 0..n_vars {
        for j in i + 1..n_vars {
            let num = lambda(i) - lambda(j) + j as i64 - i as i64;
            acc *= Rational::new(Int::from(num), Int::from(j as i64 - i as i64));
        }
    }
    debug_assert!(acc.denom().is_one());
    acc.to_integer()
}
