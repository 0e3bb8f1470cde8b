//! Exact linear algebra over rationals: determinant and inverse by
//! Gauss-Jordan elimination with exact pivoting.

use crate::error::{Error, Result};
use crate::ring::Rational;

pub fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero());
        let Some(p) = pivot else {
            return Rational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pv = a[col][col].clone();
        det = &det * &pv;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].checked_div(&pv).expect("pivot nonzero");
            for c in col..n {
                let sub = &a[col][c] * &f;
                a[r][c] = &a[r][c] - &sub;
            }
        }
    }
    det
}

pub fn invert(m: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::SingularMetric)?;
        a.swap(pivot, col);
        inv.swap(pivot, col);
        let pv = a[col][col].clone();
        let pv_inv = pv.recip().expect("pivot nonzero");
        for c in 0..n {
            a[col][c] = &a[col][c] * &pv_inv;
            inv[col][c] = &inv[col][c] * &pv_inv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in 0..n {
                let s1 = &a[col][c] * &f;
                a[r][c] = &a[r][c] - &s1;
                let s2 = &inv[col][c] * &f;
                inv[r][c] = &inv[r][c] - &s2;
            }
        }
    }
    Ok(inv)
}

/// Rank of a rational matrix.
pub fn rank(m: &[Vec<Rational>]) -> usize {
    if m.is_empty() {
        return 0;
    }
    let rows = m.len();
    let cols = m[0].len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let pv = a[r][c].clone();
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].checked_div(&pv).expect("pivot nonzero");
            for j in 0..cols {
                let s = &a[r][j] * &f;
                a[i][j] = &a[i][j] - &s;
            }
        }
        r += 1;
    }
    r
}
