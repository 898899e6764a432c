//! Stirling numbers of both kinds.
//!
//! The primary tables come from generating functions: `S1(n, m)` is the
//! coefficient of `x^m` in the falling factorial `(x)_n`, and `S2(n, m)` is
//! `n!/m! [t^n] (e^t - 1)^m`. The two-term recurrences are kept separately as
//! cross-checks.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{binomial, factorial, Rational};

/// Rows `0..CACHED_ROWS` of both triangles are built once and shared read-only.
pub const CACHED_ROWS: usize = 48;

type Triangle = Vec<Vec<Rational>>;

fn first_kind_rows(rows: usize) -> Triangle {
    let mut out = Vec::with_capacity(rows);
    let mut falling = Polynomial::one();
    for n in 0..rows {
        out.push((0..=n).map(|m| falling.coeff(m)).collect());
        falling = &falling * &Polynomial::new(vec![-Rational::from(n), Rational::one()]);
    }
    out
}

fn second_kind_rows(rows: usize) -> Triangle {
    // egf[n] = n! [t^n] (e^t - 1)^m, advanced one power of m at a time by the
    // binomial convolution with e^t - 1 (whose scaled coefficients are all 1 past t^0).
    let mut out: Triangle = (0..rows).map(|n| vec![Rational::zero(); n + 1]).collect();
    let mut egf: Vec<BigInt> = vec![BigInt::zero(); rows];
    if rows > 0 {
        egf[0] = BigInt::one();
    }
    for m in 0..rows {
        let m_fact = factorial(m);
        for (n, row) in out.iter_mut().enumerate().skip(m) {
            row[m] = Rational::from_big(egf[n].clone(), m_fact.clone()).expect("m! > 0");
        }
        egf = (0..rows)
            .map(|n| (1..=n).map(|i| binomial(n, i) * &egf[n - i]).sum())
            .collect();
    }
    out
}

fn first_kind_table() -> &'static Triangle {
    static TABLE: OnceLock<Triangle> = OnceLock::new();
    TABLE.get_or_init(|| first_kind_rows(CACHED_ROWS))
}

fn second_kind_table() -> &'static Triangle {
    static TABLE: OnceLock<Triangle> = OnceLock::new();
    TABLE.get_or_init(|| second_kind_rows(CACHED_ROWS))
}

fn lookup(
    table: &'static Triangle,
    build: fn(usize) -> Triangle,
    n: i64,
    m: i64,
) -> Result<Rational> {
    if n < 0 || m < 0 {
        return Err(Error::Domain(format!("negative Stirling index ({n}, {m})")));
    }
    if m > n {
        return Err(Error::Domain(format!(
            "Stirling index m = {m} exceeds n = {n}"
        )));
    }
    let (n, m) = (n as usize, m as usize);
    if n < table.len() {
        Ok(table[n][m].clone())
    } else {
        Ok(build(n + 1)[n][m].clone())
    }
}

/// Signed Stirling number of the first kind, `0 <= m <= n`.
pub fn stirling1(n: i64, m: i64) -> Result<Rational> {
    lookup(first_kind_table(), first_kind_rows, n, m)
}

/// Stirling number of the second kind, `0 <= m <= n`.
pub fn stirling2(n: i64, m: i64) -> Result<Rational> {
    lookup(second_kind_table(), second_kind_rows, n, m)
}

/// `S1(n, m)` extended by zero outside the triangle, as the summation identities need.
pub fn s1(n: i64, m: i64) -> Rational {
    stirling1(n, m).unwrap_or_else(|_| Rational::zero())
}

/// `S2(n, m)` extended by zero outside the triangle.
pub fn s2(n: i64, m: i64) -> Rational {
    stirling2(n, m).unwrap_or_else(|_| Rational::zero())
}

/// Rows `0..=n_max` of `S1` from `S1(n+1, m) = S1(n, m-1) - n S1(n, m)`.
pub fn stirling1_by_recurrence(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 0..n_max {
        let prev = &rows[n];
        let next = (0..=n + 1)
            .map(|m| {
                let left = if m >= 1 {
                    prev[m - 1].clone()
                } else {
                    BigInt::zero()
                };
                let here = prev.get(m).cloned().unwrap_or_default();
                left - BigInt::from(n) * here
            })
            .collect();
        rows.push(next);
    }
    rows
}

/// Rows `0..=n_max` of `S2` from `S2(n+1, m) = m S2(n, m) + S2(n, m-1)`.
pub fn stirling2_by_recurrence(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 0..n_max {
        let prev = &rows[n];
        let next = (0..=n + 1)
            .map(|m| {
                let left = if m >= 1 {
                    prev[m - 1].clone()
                } else {
                    BigInt::zero()
                };
                let here = prev.get(m).cloned().unwrap_or_default();
                BigInt::from(m) * here + left
            })
            .collect();
        rows.push(next);
    }
    rows
}
