//! Small dense exact linear algebra over integers and rationals.

use num_traits::{One, Zero};

use crate::error::{check_dim, Result};
use crate::rational::Rational;

pub type IntMatrix = Vec<Vec<i64>>;
pub type RationalMatrix = Vec<Vec<Rational>>;

pub fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn transpose<T: Clone>(matrix: &[Vec<T>]) -> Vec<Vec<T>> {
    let Some(first) = matrix.first() else {
        return Vec::new();
    };
    (0..first.len())
        .map(|j| matrix.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn int_mat_mul(left: &[Vec<i64>], right: &[Vec<i64>]) -> Result<IntMatrix> {
    let inner = right.len();
    let cols = right.first().map_or(0, Vec::len);
    left.iter()
        .map(|row| {
            check_dim(inner, row.len())?;
            Ok((0..cols).map(|j| (0..inner).map(|k| row[k] * right[k][j]).sum()).collect())
        })
        .collect()
}

pub fn to_rational_matrix(matrix: &[Vec<i64>]) -> RationalMatrix {
    matrix
        .iter()
        .map(|row| row.iter().map(|&x| crate::rational::from_int(x)).collect())
        .collect()
}

pub fn mat_vec(matrix: &[Vec<Rational>], vector: &[Rational]) -> Result<Vec<Rational>> {
    matrix
        .iter()
        .map(|row| {
            check_dim(row.len(), vector.len())?;
            Ok(row.iter().zip(vector).map(|(a, b)| a * b).fold(Rational::zero(), |acc, x| acc + x))
        })
        .collect()
}

pub fn dot(left: &[Rational], right: &[Rational]) -> Rational {
    left.iter().zip(right).map(|(a, b)| a * b).fold(Rational::zero(), |acc, x| acc + x)
}

/// Solves `matrix * x = rhs` for a square matrix by Gauss-Jordan elimination.
/// Returns `None` when the matrix is singular.
pub fn solve(matrix: &[Vec<Rational>], rhs: &[Rational]) -> Result<Option<Vec<Rational>>> {
    let n = matrix.len();
    check_dim(n, rhs.len())?;
    let mut aug: RationalMatrix = Vec::with_capacity(n);
    for (row, b) in matrix.iter().zip(rhs) {
        check_dim(n, row.len())?;
        let mut r = row.clone();
        r.push(b.clone());
        aug.push(r);
    }
    if !eliminate(&mut aug, n) {
        return Ok(None);
    }
    Ok(Some(aug.into_iter().map(|mut row| row.pop().unwrap_or_default()).collect()))
}

pub fn inverse(matrix: &[Vec<Rational>]) -> Result<Option<RationalMatrix>> {
    let n = matrix.len();
    let mut aug: RationalMatrix = Vec::with_capacity(n);
    for (i, row) in matrix.iter().enumerate() {
        check_dim(n, row.len())?;
        let mut r = row.clone();
        r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
        aug.push(r);
    }
    if !eliminate(&mut aug, n) {
        return Ok(None);
    }
    Ok(Some(aug.into_iter().map(|row| row[n..].to_vec()).collect()))
}

/// Reduces the leading `n` columns of `aug` to the identity. Returns false if singular.
fn eliminate(aug: &mut RationalMatrix, n: usize) -> bool {
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !aug[r][col].is_zero()) else {
            return false;
        };
        aug.swap(col, pivot);
        let inv = aug[col][col].recip();
        for x in aug[col].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = &*x - &factor * p;
            }
        }
    }
    true
}
