//! Exact rational linear algebra on small dense matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn to_rational_rows(rows: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
}

/// Reduced row echelon form in place; returns the pivot column of each
/// non-zero row.
pub fn rref(m: &mut Vec<Vec<Rational>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row >= m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let f = other[col].clone();
            for (x, p) in other.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(row);
    pivots
}

pub fn rank(rows: &[Vec<Rational>], cols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, cols).len()
}

/// Basis of `{x : rows · x = 0}` as column vectors.
pub fn null_space(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Multipliers `λ` with `Σ λ_j rows[j] = target`, if the target lies in the
/// rational row span.
pub fn row_span_coefficients(rows: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let s = rows.len();
    let k = target.len();
    // solve rowsᵀ λ = target via the augmented system
    let mut aug: Vec<Vec<Rational>> = (0..k)
        .map(|i| {
            let mut r: Vec<Rational> = rows.iter().map(|row| row[i].clone()).collect();
            r.push(target[i].clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, s + 1);
    if pivots.last() == Some(&s) {
        return None;
    }
    let mut lambda = vec![Rational::zero(); s];
    for (r, &p) in pivots.iter().enumerate() {
        lambda[p] = aug[r][s].clone();
    }
    Some(lambda)
}

/// Least common multiple of the denominators.
pub fn common_denominator(values: &[Rational]) -> BigInt {
    values.iter().fold(BigInt::one(), |acc, v| {
        num_integer::Integer::lcm(&acc, v.denom())
    })
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_nonnegative(x: &Rational) -> bool {
    !x.is_negative()
}
