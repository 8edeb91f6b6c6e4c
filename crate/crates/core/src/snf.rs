//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::ops::Range;

/// Non-zero invariant factors `d₁ | d₂ | …` of an integer matrix, all positive.
///
/// The number of factors is the rank of the matrix over ℚ.
pub fn invariant_factors(matrix: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut m = matrix.to_vec();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = smallest_nonzero(&m, t..rows, t..cols) else { break };
        move_pivot(&mut m, t, pi, pj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !m[i][t].is_zero() {
                    let q = &m[i][t] / &m[t][t];
                    let pivot_row = m[t].clone();
                    for (x, p) in m[i].iter_mut().zip(&pivot_row) {
                        *x -= &q * p;
                    }
                    clean &= m[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !m[t][j].is_zero() {
                    let q = &m[t][j] / &m[t][t];
                    for row in m.iter_mut() {
                        let p = row[t].clone();
                        row[j] -= &q * p;
                    }
                    clean &= m[t][j].is_zero();
                }
            }
            if !clean {
                // a remainder smaller than the pivot is left in row or column t
                let (pi, pj) = smallest_in_cross(&m, t, rows, cols);
                move_pivot(&mut m, t, pi, pj);
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !m[i][j].is_multiple_of(&m[t][t])));
            match bad {
                Some(i) => {
                    let row = m[i].clone();
                    for (x, r) in m[t].iter_mut().zip(&row) {
                        *x += r;
                    }
                }
                None => break,
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}

fn smallest_nonzero(m: &[Vec<BigInt>], rows: Range<usize>, cols: Range<usize>) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            if !m[i][j].is_zero() && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn smallest_in_cross(m: &[Vec<BigInt>], t: usize, rows: usize, cols: usize) -> (usize, usize) {
    let column = (t..rows).map(|i| (i, t));
    let row = (t + 1..cols).map(|j| (t, j));
    column
        .chain(row)
        .filter(|&(i, j)| !m[i][j].is_zero())
        .min_by(|&(a, b), &(c, d)| m[a][b].abs().cmp(&m[c][d].abs()))
        .expect("pivot cross has a non-zero entry")
}

fn move_pivot(m: &mut [Vec<BigInt>], t: usize, i: usize, j: usize) {
    m.swap(t, i);
    for row in m.iter_mut() {
        row.swap(t, j);
    }
}
