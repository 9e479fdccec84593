//! Exact phase-one simplex for small systems `A x >= b, x >= 0`.
//!
//! Pivoting follows Bland's rule, so the method terminates without
//! tolerances or perturbation.

use num_traits::{One, Signed, Zero};

use crate::error::{check_dim, Result};
use crate::rational::Rational;

/// Returns a feasible point of `{ x >= 0 : rows[i] . x >= rhs[i] }`, or `None`.
pub fn find_feasible(rows: &[Vec<Rational>], rhs: &[Rational], n: usize) -> Result<Option<Vec<Rational>>> {
    check_dim(rows.len(), rhs.len())?;
    for row in rows {
        check_dim(n, row.len())?;
    }
    let m = rows.len();
    let needs_artificial: Vec<bool> = rhs.iter().map(|b| !b.is_negative()).collect();
    let artificial_count = needs_artificial.iter().filter(|&&a| a).count();
    // columns: x (n), surplus (m), artificial, rhs
    let width = n + m + artificial_count;
    let mut tableau: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut next_artificial = n + m;
    for i in 0..m {
        let mut row = vec![Rational::zero(); width + 1];
        let flip = !needs_artificial[i];
        for j in 0..n {
            row[j] = if flip { -rows[i][j].clone() } else { rows[i][j].clone() };
        }
        row[n + i] = if flip { Rational::one() } else { -Rational::one() };
        row[width] = if flip { -rhs[i].clone() } else { rhs[i].clone() };
        if flip {
            basis.push(n + i);
        } else {
            row[next_artificial] = Rational::one();
            basis.push(next_artificial);
            next_artificial += 1;
        }
        tableau.push(row);
    }
    let is_artificial = |j: usize| j >= n + m;

    loop {
        // reduced costs of the phase-one objective (sum of artificials)
        let entering = (0..width).find(|&j| {
            if basis.contains(&j) {
                return false;
            }
            let mut d = if is_artificial(j) { Rational::one() } else { Rational::zero() };
            for (i, &b) in basis.iter().enumerate() {
                if is_artificial(b) {
                    d -= &tableau[i][j];
                }
            }
            d.is_negative()
        });
        let Some(col) = entering else { break };
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if !tableau[i][col].is_positive() {
                continue;
            }
            let ratio = &tableau[i][width] / &tableau[i][col];
            let better = match &leave {
                None => true,
                Some((r, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*r]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let Some((row, _)) = leave else {
            // unbounded direction cannot occur for a bounded-below objective
            break;
        };
        pivot(&mut tableau, row, col);
        basis[row] = col;
    }

    let infeasible = basis
        .iter()
        .enumerate()
        .any(|(i, &b)| is_artificial(b) && !tableau[i][width].is_zero());
    if infeasible {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            x[b] = tableau[i][width].clone();
        }
    }
    Ok(Some(x))
}

fn pivot(tableau: &mut [Vec<Rational>], row: usize, col: usize) {
    let inv = tableau[row][col].recip();
    for x in tableau[row].iter_mut() {
        *x = &*x * &inv;
    }
    let pivot_row = tableau[row].clone();
    for (i, r) in tableau.iter_mut().enumerate() {
        if i == row || r[col].is_zero() {
            continue;
        }
        let factor = r[col].clone();
        for (x, p) in r.iter_mut().zip(&pivot_row) {
            *x = &*x - &factor * p;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::dot;
    use crate::rational::from_int;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| from_int(x)).collect()
    }

    #[test]
    fn feasible_system() {
        // x + y >= 2, x - y >= 0
        let rows = vec![q(&[1, 1]), q(&[1, -1])];
        let rhs = q(&[2, 0]);
        let x = find_feasible(&rows, &rhs, 2).unwrap().unwrap();
        for (row, b) in rows.iter().zip(&rhs) {
            assert!(dot(row, &x) >= *b);
        }
    }

    #[test]
    fn infeasible_system() {
        // x >= 1 and -x >= 0
        let rows = vec![q(&[1]), q(&[-1])];
        assert!(find_feasible(&rows, &q(&[1, 0]), 1).unwrap().is_none());
    }

    #[test]
    fn trivially_feasible_at_origin() {
        let rows = vec![q(&[1, 2])];
        assert_eq!(find_feasible(&rows, &q(&[-3]), 2).unwrap(), Some(q(&[0, 0])));
    }
}
