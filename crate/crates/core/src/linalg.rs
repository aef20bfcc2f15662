//! Exact linear algebra on small integer matrices.

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Determinant by fraction-free (Bareiss) elimination.
///
/// Every intermediate entry is a minor of the input, so the only source of
/// overflow is an `i128` minor, which is reported as [`Error::Overflow`].
pub fn determinant(rows: &[Vec<i64>]) -> Result<i64> {
    let n = rows.len();
    if n == 0 {
        return Ok(1);
    }
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch);
    }
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut negate = false;
    let mut prev: i128 = 1;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[i][j].checked_mul(m[k][k]).ok_or(Error::Overflow)?;
                let b = m[i][k].checked_mul(m[k][j]).ok_or(Error::Overflow)?;
                m[i][j] = a.checked_sub(b).ok_or(Error::Overflow)? / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    let det = if negate {
        -m[n - 1][n - 1]
    } else {
        m[n - 1][n - 1]
    };
    i64::try_from(det).map_err(|_| Error::Overflow)
}

/// Row-reduces `rows` in place over the rationals; returns the pivot columns.
fn row_reduce(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let factor = rows[i][col].clone();
                for j in col..width {
                    let delta = &factor * &rows[r][j];
                    rows[i][j] = &rows[i][j] - &delta;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

fn to_rational(rows: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
        .collect()
}

/// Rank over the rationals.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    row_reduce(&mut to_rational(rows)).len()
}

/// A spanning vector of the kernel of `rows`, when that kernel is one-dimensional.
pub fn kernel_vector(rows: &[Vec<i64>]) -> Option<Vec<Rational>> {
    let width = rows.first().map_or(0, Vec::len);
    let mut m = to_rational(rows);
    let pivots = row_reduce(&mut m);
    if width - pivots.len() != 1 {
        return None;
    }
    let free = (0..width).find(|c| !pivots.contains(c)).unwrap();
    let mut v = vec![Rational::zero(); width];
    v[free] = Rational::one();
    for (r, &p) in pivots.iter().enumerate() {
        v[p] = -m[r][free].clone();
    }
    Some(v)
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    num_integer::gcd(a, b)
}
