//! Dense linear algebra over the rationals.

use alloc::vec;
use alloc::vec::Vec;

use crate::rat::Rat;

/// Row-reduce in place; returns the pivot columns.
fn echelon(m: &mut [Vec<Rat>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(row, p);
        let inv = m[row][c].recip();
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                let pr = m[row].clone();
                for (x, y) in m[r].iter_mut().zip(&pr) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut m = rows.to_vec();
    echelon(&mut m, cols).len()
}

/// A solution of `A x = b` with free variables set to zero.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut r = r.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let pivots = echelon(&mut m, cols + 1);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rat::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| Rat::from_int(x)).collect()
    }

    #[test]
    fn rank_and_solve() {
        assert_eq!(rank(&[q(&[1, 2]), q(&[2, 4])]), 1);
        assert_eq!(rank(&[q(&[0, 0])]), 0);
        assert_eq!(rank(&[q(&[0, 1]), q(&[1, 0]), q(&[1, 1])]), 2);
        assert_eq!(solve(&[q(&[1, 1]), q(&[1, -1])], &q(&[2, 0])), Some(q(&[1, 1])));
        assert_eq!(solve(&[q(&[1, 1]), q(&[1, 1])], &q(&[2, 0])), None);
        assert_eq!(solve(&[q(&[0, 2])], &q(&[4])), Some(q(&[0, 2])));
    }
}
