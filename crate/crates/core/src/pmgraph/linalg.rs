//! Exact dense linear algebra over the rationals, just enough to invert
//! reduced Laplacians.

use crate::ratio::Rat;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

/// Gauss-Jordan inverse. Returns `None` for a singular matrix; reduced
/// Laplacians of connected graphs are always invertible.
pub(crate) fn invert(a: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            debug_assert_eq!(row.len(), n);
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = {
            let p = m[col][col].clone();
            Rat::one() / p
        };
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[col].clone();
        for (row, r) in m.iter_mut().enumerate() {
            if row == col || r[col].is_zero() {
                continue;
            }
            let f = r[col].clone();
            for (x, p) in r.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[allow(dead_code)]
pub(crate) fn identity(n: usize) -> Vec<Vec<Rat>> {
    (0..n)
        .map(|i| {
            let mut row = vec![Rat::zero(); n];
            row[i] = Rat::one();
            row
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::{rat, rat_i};

    fn mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
        let n = a.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn inverts_two_by_two() {
        let a = vec![vec![rat_i(2), rat_i(1)], vec![rat_i(1), rat_i(1)]];
        let inv = invert(&a).unwrap();
        assert_eq!(inv[0][0], rat_i(1));
        assert_eq!(inv[0][1], rat_i(-1));
        assert_eq!(mul(&a, &inv), identity(2));
    }

    #[test]
    fn inverse_round_trip() {
        let a = vec![
            vec![rat(3, 2), rat_i(1), rat_i(0)],
            vec![rat_i(1), rat_i(4), rat(1, 3)],
            vec![rat_i(0), rat(1, 3), rat_i(2)],
        ];
        let inv = invert(&a).unwrap();
        assert_eq!(mul(&a, &inv), identity(3));
    }

    #[test]
    fn singular_detected() {
        let a = vec![vec![rat_i(1), rat_i(2)], vec![rat_i(2), rat_i(4)]];
        assert!(invert(&a).is_none());
    }
}
