//! Exact integer linear algebra: rank and maximal-minor analysis of
//! incidence matrices. Fraction-free (Bareiss) elimination throughout; a
//! fixed-width fast path with checked arithmetic falls back to big integers
//! on overflow, so results are exact unconditionally. No floating point.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::IncidenceMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("exhaustive minor scan required but the report was sampled")]
    ExhaustiveRequired,
    #[error("minor enumeration size {0} exceeds the configured limit {1}")]
    SizeLimitExceeded(u128, u128),
    #[error("maxOrder {0} exceeds min(rows, cols) = {1}")]
    OrderTooLarge(usize, usize),
}

/// Outcome of a maximal-minor scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorReport {
    /// Exact rank `d` over the rationals.
    pub rank: usize,
    /// Absolute values of the nonzero d×d minors encountered.
    pub distinct_abs_values: BTreeSet<BigInt>,
    pub minors_evaluated: u64,
    /// True when only a uniform sample of the minors was evaluated.
    pub sampled: bool,
}

impl MinorReport {
    /// Unimodularity verdict: all nonzero maximal minors share one absolute
    /// value. Only an exhaustive scan may confirm; a sampled scan can at
    /// most refute, so it is refused here.
    pub fn unimodular_verdict(&self) -> Result<bool, LinalgError> {
        if self.sampled {
            if self.distinct_abs_values.len() >= 2 {
                return Ok(false);
            }
            return Err(LinalgError::ExhaustiveRequired);
        }
        Ok(self.distinct_abs_values.len() == 1)
    }
}

fn to_rows(m: &IncidenceMatrix) -> Vec<Vec<i64>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(|&x| x as i64).collect())
        .collect()
}

/// Exact rank over the rationals by fraction-free elimination.
pub fn exact_rank(m: &IncidenceMatrix) -> usize {
    rank_of(&to_rows(m))
}

pub(crate) fn rank_of(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let n = a.len();
    if n == 0 {
        return 0;
    }
    let m = a[0].len();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    let mut row = 0;
    for col in 0..m {
        if row == n {
            break;
        }
        let pivot = (row..n).find(|&i| !a[i][col].is_zero());
        let Some(p) = pivot else { continue };
        a.swap(row, p);
        for i in row + 1..n {
            for j in col + 1..m {
                let t = &a[row][col] * &a[i][j] - &a[i][col] * &a[row][j];
                a[i][j] = t / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[row][col].clone();
        row += 1;
        rank += 1;
    }
    rank
}

/// Exact determinant of a square integer matrix.
pub fn det_exact(rows: &[Vec<i64>]) -> BigInt {
    if let Some(d) = det_bareiss_i128(rows) {
        return BigInt::from(d);
    }
    det_bareiss_big(rows)
}

fn det_bareiss_i128(rows: &[Vec<i64>]) -> Option<i128> {
    let n = rows.len();
    if n == 0 {
        return Some(1);
    }
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        let pivot = (k..n).find(|&i| a[i][k] != 0);
        let Some(p) = pivot else { return Some(0) };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[k][k]
                    .checked_mul(a[i][j])?
                    .checked_sub(a[i][k].checked_mul(a[k][j])?)?;
                a[i][j] = t / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Some(sign * a[n - 1][n - 1])
}

fn det_bareiss_big(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = 1i32;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        let pivot = (k..n).find(|&i| !a[i][k].is_zero());
        let Some(p) = pivot else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

fn binomial_count(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// The `rank`-th size-`k` subset of `0..n` in lexicographic order.
fn unrank_combination(n: usize, k: usize, mut rank: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut next = 0;
    let mut remaining = k;
    while remaining > 0 {
        let c = binomial_count(n - next - 1, remaining - 1);
        if rank < c {
            out.push(next);
            remaining -= 1;
        } else {
            rank -= c;
        }
        next += 1;
    }
    out
}

struct Combinations {
    n: usize,
    idx: Vec<usize>,
    started: bool,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Combinations {
        Combinations {
            n,
            idx: (0..k).collect(),
            started: false,
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.idx.clone());
        }
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                return None;
            }
            i -= 1;
            if self.idx[i] < self.n - (k - i) {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return Some(self.idx.clone());
            }
        }
    }
}

fn submatrix(m: &IncidenceMatrix, rows: &[usize], cols: &[usize]) -> Vec<Vec<i64>> {
    rows.iter()
        .map(|&r| cols.iter().map(|&c| m.entry(r, c) as i64).collect())
        .collect()
}

/// Evaluate d×d minors of `m`, exhaustively when their count fits under
/// `sample_limit`, otherwise sampling `sample_limit` of them uniformly with
/// the given seed.
pub fn minor_scan(
    m: &IncidenceMatrix,
    sample_limit: Option<u64>,
    rng_seed: Option<u64>,
) -> MinorReport {
    let d = exact_rank(m);
    let total = binomial_count(m.rows(), d) * binomial_count(m.cols(), d);
    let mut report = MinorReport {
        rank: d,
        distinct_abs_values: BTreeSet::new(),
        minors_evaluated: 0,
        sampled: false,
    };
    let exhaustive = match sample_limit {
        None => true,
        Some(limit) => total <= limit as u128,
    };
    if exhaustive {
        for rows in Combinations::new(m.rows(), d) {
            for cols in Combinations::new(m.cols(), d) {
                let det = det_exact(&submatrix(m, &rows, &cols));
                report.minors_evaluated += 1;
                if !det.is_zero() {
                    report.distinct_abs_values.insert(det.abs());
                }
            }
        }
    } else {
        report.sampled = true;
        let limit = sample_limit.unwrap();
        let col_total = binomial_count(m.cols(), d);
        let mut rng = ChaCha8Rng::seed_from_u64(rng_seed.unwrap_or(0));
        for _ in 0..limit {
            let idx = rng.gen_range(0..total);
            let rows = unrank_combination(m.rows(), d, idx / col_total);
            let cols = unrank_combination(m.cols(), d, idx % col_total);
            let det = det_exact(&submatrix(m, &rows, &cols));
            report.minors_evaluated += 1;
            if !det.is_zero() {
                report.distinct_abs_values.insert(det.abs());
            }
        }
    }
    report
}

/// Default ceiling on exhaustively enumerated minors / submatrices.
pub const DEFAULT_MINOR_LIMIT: u128 = 50_000_000;

/// Definitional unimodularity test: all nonzero d×d minors share one
/// absolute value. Exhaustive by construction; stops early once two distinct
/// values are seen.
pub fn is_unimodular_matrix(m: &IncidenceMatrix) -> Result<bool, LinalgError> {
    is_unimodular_matrix_with_limit(m, DEFAULT_MINOR_LIMIT)
}

pub fn is_unimodular_matrix_with_limit(
    m: &IncidenceMatrix,
    limit: u128,
) -> Result<bool, LinalgError> {
    let d = exact_rank(m);
    let total = binomial_count(m.rows(), d) * binomial_count(m.cols(), d);
    if total > limit {
        return Err(LinalgError::SizeLimitExceeded(total, limit));
    }
    let mut seen: Option<BigInt> = None;
    for rows in Combinations::new(m.rows(), d) {
        for cols in Combinations::new(m.cols(), d) {
            let det = det_exact(&submatrix(m, &rows, &cols));
            if det.is_zero() {
                continue;
            }
            let a = det.abs();
            match &seen {
                None => seen = Some(a),
                Some(v) if *v != a => return Ok(false),
                Some(_) => {}
            }
        }
    }
    // rank d > 0 guarantees at least one nonzero minor; the empty matrix
    // (d = 0) is vacuously unimodular
    Ok(true)
}

/// Brute-force total unimodularity: every k×k submatrix with k ≤ `max_order`
/// has determinant in {−1, 0, 1}.
pub fn is_totally_unimodular_bruteforce(
    m: &IncidenceMatrix,
    max_order: usize,
) -> Result<bool, LinalgError> {
    is_totally_unimodular_with_limit(m, max_order, DEFAULT_MINOR_LIMIT)
}

pub fn is_totally_unimodular_with_limit(
    m: &IncidenceMatrix,
    max_order: usize,
    limit: u128,
) -> Result<bool, LinalgError> {
    let cap = m.rows().min(m.cols());
    if max_order > cap {
        return Err(LinalgError::OrderTooLarge(max_order, cap));
    }
    let total: u128 = (1..=max_order)
        .map(|k| binomial_count(m.rows(), k) * binomial_count(m.cols(), k))
        .sum();
    if total > limit {
        return Err(LinalgError::SizeLimitExceeded(total, limit));
    }
    let one = BigInt::from(1);
    for k in 1..=max_order {
        for rows in Combinations::new(m.rows(), k) {
            for cols in Combinations::new(m.cols(), k) {
                let det = det_exact(&submatrix(m, &rows, &cols));
                if det.abs() > one {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
